#pragma once
// Univariate polynomials and truncated power series over F_p.
// Coefficients are stored low degree first; the zero polynomial is empty.

#include <cstdint>
#include <vector>

namespace syzygy::poly {

using Poly = std::vector<std::uint32_t>;

void trim(Poly& a);
long deg(const Poly& a);  // -1 for zero
Poly add(const Poly& a, const Poly& b, std::uint32_t p);
Poly sub(const Poly& a, const Poly& b, std::uint32_t p);
Poly mul(const Poly& a, const Poly& b, std::uint32_t p);
Poly scale(const Poly& a, std::uint32_t s, std::uint32_t p);
/// a = q*b + r with deg r < deg b; b nonzero.
void divmod(const Poly& a, const Poly& b, std::uint32_t p, Poly& q, Poly& r);
Poly gcd(Poly a, Poly b, std::uint32_t p);
Poly derivative(const Poly& a, std::uint32_t p);
std::uint32_t eval(const Poly& a, std::uint32_t x, std::uint32_t p);
bool squarefree(const Poly& a, std::uint32_t p);
/// Roots in F_p by exhaustive evaluation, ascending.
std::vector<std::uint32_t> roots(const Poly& a, std::uint32_t p);
Poly linear(std::uint32_t root, std::uint32_t p);  // x - root
Poly pow(const Poly& a, unsigned e, std::uint32_t p);
/// Coefficients of a(x0 + t) in t.
Poly taylor_shift(const Poly& a, std::uint32_t x0, std::uint32_t p);

// Truncated power series: arithmetic modulo t^n.
namespace series {
Poly mul(const Poly& a, const Poly& b, std::size_t n, std::uint32_t p);
/// a(s(t)) mod t^n for a polynomial a and series s with s(0) = 0.
Poly compose(const Poly& a, const Poly& s, std::size_t n, std::uint32_t p);
/// Valuation (index of first nonzero coefficient), or n if zero mod t^n.
std::size_t valuation(const Poly& a, std::size_t n);
}  // namespace series

}  // namespace syzygy::poly
