#pragma once
// Hyperelliptic curves y^2 = f(x) over F_p in the odd-degree model: one
// point at infinity, the hyperelliptic pencil A = 2*inf, K = (g-1)A.
// f is taken split (all Weierstrass points rational) so that 2-torsion
// classes are supported on rational places.

#include <compare>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "syzygy/polyfp.hpp"

namespace syzygy::curve {

struct Place {
    enum class Kind { Affine, Weierstrass, Infinity };
    Kind kind = Kind::Infinity;
    std::uint32_t x = 0;
    std::uint32_t y = 0;

    static Place infinity() { return {}; }
    static Place affine(std::uint32_t x, std::uint32_t y) { return {Kind::Affine, x, y}; }
    static Place weierstrass(std::uint32_t x) { return {Kind::Weierstrass, x, 0}; }
    auto operator<=>(const Place&) const = default;
    std::string str() const;
};

/// Finite support, zero multiplicities never stored.
using Divisor = std::map<Place, long>;

long degree(const Divisor& d);
Divisor operator+(const Divisor& a, const Divisor& b);
Divisor operator-(const Divisor& a, const Divisor& b);
Divisor operator*(long k, const Divisor& a);
Divisor point(const Place& P, long n = 1);
std::string to_string(const Divisor& d);

struct HyperellipticCurve {
    std::uint32_t p = 0;
    poly::Poly f;
    int g = 0;
    std::vector<std::uint32_t> roots;  // Weierstrass x-coordinates, ascending
    std::uint64_t seed = 0;

    Place weierstrass(std::size_t i) const { return Place::weierstrass(roots.at(i)); }
    bool on_curve(const Place& P) const;
    Place conjugate(const Place& P) const;
    /// Non-Weierstrass affine rational points, sorted.
    std::vector<Place> affine_points() const;
    /// All rational places: affine, Weierstrass, infinity.
    std::vector<Place> rational_places() const;
    Divisor pencil(long n = 1) const { return point(Place::infinity(), 2 * n); }
    Divisor canonical() const { return pencil(g - 1); }
    std::string id() const;
};

/// f must be monic of odd degree 2g+1 >= 3, squarefree and split over F_p.
HyperellipticCurve make_hyperelliptic(std::uint32_t p, poly::Poly f);
/// Random split f with distinct roots.
HyperellipticCurve hyperelliptic_sample(std::uint32_t p, int g, std::uint64_t seed);

/// Functions (a + b y)/h.
struct RRBasis {
    poly::Poly h;
    std::vector<std::pair<poly::Poly, poly::Poly>> funcs;
    std::size_t dim() const noexcept { return funcs.size(); }
};

RRBasis rr_basis(const HyperellipticCurve& c, const Divisor& d);
long h0(const HyperellipticCurve& c, const Divisor& d);

/// Value of (a + b y)/h at P; P must not be a pole of 1/h and not infinity.
std::uint32_t evaluate(const HyperellipticCurve& c, const poly::Poly& a, const poly::Poly& b,
                       const poly::Poly& h, const Place& P);

/// Order of vanishing of a + b y at P (a, b not both zero).
long order_at(const HyperellipticCurve& c, const poly::Poly& a, const poly::Poly& b, const Place& P);

struct PrincipalDivisor {
    Divisor div;
    bool complete = false;  // all zeros and poles are rational places
};
PrincipalDivisor divisor_of(const HyperellipticCurve& c, const poly::Poly& a, const poly::Poly& b,
                            const poly::Poly& h);

bool linearly_equivalent(const HyperellipticCurve& c, const Divisor& d, const Divisor& e);

struct TwoTorsion {
    Divisor eta;          // sum_S w_i - (|S|/2) A
    poly::Poly witness;   // prod_S (x - x_i), div = 2 eta
};
/// S indexes the 2g+1 finite Weierstrass points.
TwoTorsion two_torsion(const HyperellipticCurve& c, const std::vector<std::size_t>& S);
TwoTorsion two_torsion_mask(const HyperellipticCurve& c, std::uint64_t mask);

struct GrdDecomposition {
    long r = -1;
    Divisor base;           // rational part of B
    bool rational = false;  // B fully supported on rational places
    bool verified = false;  // r A + B ~ d re-checked
};
/// Requires 0 <= deg d <= 2g-2.
GrdDecomposition grd_decompose(const HyperellipticCurve& c, const Divisor& d);

/// L in C_a - C_b, decided by h0(L + bA) >= 1.
bool diff_variety_member(const HyperellipticCurve& c, const Divisor& L, long a, long b);

struct Witness {
    bool found = false;
    Divisor E;
    std::string source;  // "decomposition" or "search"
    long trials = 0;
};
inline constexpr long kDefaultTrialBudget = 200;
/// Definition-level search for effective E_b with h0(L + E_b) >= 1.
Witness diff_variety_witness(const HyperellipticCurve& c, const Divisor& L, long a, long b,
                             std::mt19937_64& rng, long budget = kDefaultTrialBudget);

/// xi in Theta: h0((g-1-j)A - xi) >= 1; requires deg xi = g - 2j - 1.
bool theta_Q_member(const HyperellipticCurve& c, const Divisor& xi, long j);

/// V^{p+1}_{p+2}(L) nonempty, via membership of L - K in C_{p+2} - C_{2g-d+p}.
bool secant_nonempty(const HyperellipticCurve& c, const Divisor& L, long p);

struct TwistedCohomology {
    long h0 = 0;
    long h1 = 0;
};
TwistedCohomology twisted_wedge_cohomology(const HyperellipticCurve& c, const Divisor& eta, long m);

struct TorsionScanRow {
    std::uint64_t mask = 0;   // even subset of Weierstrass indices
    std::vector<long> h1;     // h1(eta + (2p+2-j)A), j = 0..p
    bool vanishing = false;   // all zero
};
/// All 2^{2g} classes; requires g = 2p+3. Rows ordered by mask.
std::vector<TorsionScanRow> torsion_scan(const HyperellipticCurve& c, long p);

Divisor random_effective(const HyperellipticCurve& c, long deg, std::mt19937_64& rng);

}  // namespace syzygy::curve
