#pragma once
// Genus-4 canonical curves: the smooth quadric x0 x3 = x1 x2 in P^3, written
// as P^1 x P^1 via (s0 t0, s0 t1, s1 t0, s1 t1), cut by a cubic. The two
// trigonal pencils are A = O(1,0) and A' = O(0,1) restricted to C.

#include <cstdint>
#include <string>
#include <vector>

#include "syzygy/exactla.hpp"

namespace syzygy::curve {

struct Genus4Point {
    std::vector<std::uint32_t> x;  // P^3, normalized
    std::uint32_t s0 = 0, s1 = 1;  // normalized (last nonzero = 1)
    std::uint32_t t0 = 0, t1 = 1;
    bool operator==(const Genus4Point& o) const { return x == o.x; }
};

struct Genus4Curve {
    std::uint32_t p = 0;
    std::vector<std::uint32_t> cubic;  // coefficients over forms::monomials(4, 3)
    bool smooth = false;               // no rational singular point
    std::uint64_t seed = 0;
    std::vector<Genus4Point> points;   // all rational points

    std::string id() const;
};

Genus4Curve make_genus4(std::uint32_t p, std::vector<std::uint32_t> cubic);
/// Random cubic, resampled until smooth with enough rational points.
Genus4Curve genus4_sample(std::uint32_t p, std::uint64_t seed);

/// h0(O_C(a,b) - sum of the given distinct points), a, b <= 2.
long h0_bidegree(const Genus4Curve& c, int a, int b, const std::vector<Genus4Point>& pts);

/// Degree-q forms on P^3 evaluated at samples.
std::vector<FpVector> genus4_sections(const Genus4Curve& c, int q, const std::vector<Genus4Point>& samples);

/// Rational points sharing the A-fibre (same s) of P, P included.
std::vector<Genus4Point> a_fibre(const Genus4Curve& c, const Genus4Point& P);

struct DiffconReport {
    bool degenerate_quadric = false;
    long deg_L = 0;
    long sampled = 0;
    long plus_x_members = 0;     // x with some y, h0(L + x + y) >= 1
    long witness_in_fibre = 0;   // ... and y in the A-fibre of x
    long points_checked = 0;
    long single_point_hits = 0;  // y with h0(L + y) >= 1
    long mixed_plus_x_members = 0;
    long mixed_single_point_hits = 0;
    bool pass = false;           // all sampled x members and no single-point hits
};

/// L = K - 2A and the mixed L' = K - A - A'. x is drawn from fully split A-fibres.
DiffconReport diffcon_g4_check(const Genus4Curve& c, long samples, std::uint64_t seed);

}  // namespace syzygy::curve
