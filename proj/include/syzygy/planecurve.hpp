#pragma once
// Smooth plane quartics over F_p (genus 3).

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "syzygy/exactla.hpp"

namespace syzygy::curve {

using ProjPoint = std::vector<std::uint32_t>;  // normalized, last nonzero coordinate 1

struct PlaneQuartic {
    std::uint32_t p = 0;
    std::vector<std::uint32_t> F;  // coefficients over forms::monomials(3, 4)
    bool smooth = false;           // no rational singular point
    std::uint64_t seed = 0;
    std::vector<ProjPoint> points; // all rational points, sorted

    std::string id() const;
};

PlaneQuartic make_quartic(std::uint32_t p, std::vector<std::uint32_t> F);
/// x^4 + y^4 + z^4.
PlaneQuartic fermat_quartic(std::uint32_t p);
/// Random coefficients, resampled until smooth with at least 40 rational points.
PlaneQuartic plane_quartic_sample(std::uint32_t p, std::uint64_t seed);

/// |#C(F_p) - (p+1)| <= 2g sqrt(p) with g = 3.
bool within_weil_bound(const PlaneQuartic& q);

/// Local parametrization of C at a smooth rational point, mod t^len.
std::vector<std::vector<std::uint32_t>> local_branch(const PlaneQuartic& q, const ProjPoint& P, std::size_t len);

/// Forms of degree `deg` vanishing to order >= `order` along C at every point
/// of E, evaluated at `samples`. Rows span the image of H^0(O_C(deg H - order E))
/// in F_p^{#samples}, possibly with repetitions.
std::vector<FpVector> quartic_sections(const PlaneQuartic& q, int deg, const std::vector<ProjPoint>& E, int order,
                                       const std::vector<ProjPoint>& samples);

/// h0(O_C(2H - E)) = number of conics through E (restriction is injective).
long conics_through(const PlaneQuartic& q, const std::vector<ProjPoint>& E);

/// Four distinct rational points of C on one line, or empty after `tries`.
std::vector<ProjPoint> split_line(const PlaneQuartic& q, std::mt19937_64& rng, int tries = 200);

}  // namespace syzygy::curve
