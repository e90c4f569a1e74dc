#pragma once
// Homogeneous forms in n variables over F_p: monomial enumeration,
// evaluation at points and at power-series points.

#include <cstdint>
#include <vector>

#include "syzygy/polyfp.hpp"

namespace syzygy::forms {

using Exponent = std::vector<int>;

/// Monomials of degree d in n variables, lexicographically descending.
std::vector<Exponent> monomials(int n, int d);

/// Values of every monomial of degree d at a point.
std::vector<std::uint32_t> eval_monomials(const std::vector<std::uint32_t>& pt, int d, std::uint32_t p);

/// Series of every monomial of degree d along a parametrized point, mod t^len.
std::vector<poly::Poly> series_monomials(const std::vector<poly::Poly>& pt, int d, std::size_t len,
                                         std::uint32_t p);

std::uint32_t eval_form(const std::vector<std::uint32_t>& coeffs, const std::vector<std::uint32_t>& pt,
                        int d, std::uint32_t p);

poly::Poly series_form(const std::vector<std::uint32_t>& coeffs, const std::vector<poly::Poly>& pt, int d,
                       std::size_t len, std::uint32_t p);

/// Partial derivative coefficients with respect to variable k (degree d-1).
std::vector<std::uint32_t> derivative(const std::vector<std::uint32_t>& coeffs, int n, int d, int k,
                                      std::uint32_t p);

/// Scale so that the last nonzero coordinate is 1.
std::vector<std::uint32_t> normalize(std::vector<std::uint32_t> pt, std::uint32_t p);

}  // namespace syzygy::forms
