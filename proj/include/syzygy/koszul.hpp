#pragma once
// Koszul cohomology of section rings given as point-evaluation models.
//
// A section ring stores each graded piece R_q = H^0(L^q) as a row space of
// F_p^N: sections evaluated at N sample points of the curve, N larger than
// deg L^q so that evaluation is injective. Multiplication is pointwise.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "syzygy/exactla.hpp"
#include "syzygy/genus4.hpp"
#include "syzygy/hyperelliptic.hpp"
#include "syzygy/planecurve.hpp"

namespace syzygy::koszul {

struct SectionRing {
    std::string id;
    std::uint32_t p = 0;
    long g = 0;
    long d = 0;
    std::uint64_t seed = 0;
    bool nonspecial = true;
    std::size_t npoints = 0;
    std::vector<Echelon> R;          // R[0] = constants
    std::vector<FpVector> V;         // basis of H^0(L) used for the exterior algebra
    // mult[q][i * dim R_q + m] = coordinates of V[i] * R_q[m] in R_{q+1}
    std::vector<std::vector<FpVector>> mult;

    long qmax() const noexcept { return static_cast<long>(R.size()) - 1; }
    std::size_t dimV() const noexcept { return V.size(); }
    std::size_t dim(long q) const { return q < 0 ? 0 : R.at(static_cast<std::size_t>(q)).dim(); }
};

/// evals[q-1] spans R_q for q = 1..qmax. Checks that V R_q lies in R_{q+1}
/// and, where expected_dims is given, that dim R_q matches it.
SectionRing make_section_ring(std::string id, std::uint32_t p, long g, long d, std::uint64_t seed, bool nonspecial,
                              std::size_t npoints, std::vector<std::vector<FpVector>> evals,
                              const std::vector<long>& expected_dims = {});

/// Same ring with V replaced by a random invertible recombination.
SectionRing change_basis(const SectionRing& r, std::uint64_t seed);

/// Riemann-Roch dims h0(qL), q = 0..qmax, for a curve of genus g and L of degree d.
std::vector<long> riemann_roch_dims(long g, long d, bool canonical, long qmax);

// Model builders. Sample points number 3 (qmax d + 1).
SectionRing rational_normal_curve(long d, std::uint32_t p, std::uint64_t seed, long qmax);
SectionRing hyperelliptic_ring(const curve::HyperellipticCurve& c, const curve::Divisor& L, long qmax,
                               std::uint64_t seed);
/// L = m H - E on a plane quartic, E reduced.
SectionRing quartic_ring(const curve::PlaneQuartic& q, int m, const std::vector<curve::ProjPoint>& E, long qmax,
                         std::uint64_t seed);
SectionRing genus4_canonical_ring(const curve::Genus4Curve& c, long qmax, std::uint64_t seed);

/// Parses "rnc d=4 seed=1", "hyp g=5 seed=7", "prym g=7 seed=1",
/// "quartic seed=3", "genus4 seed=2". Unknown keys or kinds throw
/// std::invalid_argument.
SectionRing model_from_spec(const std::string& spec, std::uint32_t p, long qmax);

inline constexpr std::uint64_t kMaxWedgeBasis = 1000000;

/// Strand differential d_{p,q}: wedge^p V (x) R_q -> wedge^{p-1} V (x) R_{q+1}.
/// Rows index the domain basis (I, m), I lexicographic.
FieldMatrix koszul_differential(const SectionRing& r, long p, long q);

/// dim K_{p,q}. Throws std::out_of_range when the strand leaves the model.
std::size_t koszul_dim(const SectionRing& r, long p, long q);

struct BettiTable {
    std::map<std::pair<long, long>, long> entries;  // (p, q) -> b
    long pmax = 0;
    long qmax = 0;
    long g = 0;
    long d = 0;
    std::uint32_t prime = 0;
    std::uint64_t seed = 0;
    std::string model;

    long at(long p, long q) const;
};

BettiTable betti_table(const SectionRing& r, long pmax, long qmax);

bool naturality_check(const BettiTable& t);
/// Columns p with b_{p,1} > 0 and b_{p,2} > 0.
std::vector<long> mixed_columns(const BettiTable& t);
/// b_{p+1,1} - b_{p,2} against the closed diagonal formula for every p in range.
bool euler_diagonal_check(const BettiTable& t, long g, long d, std::vector<std::string>* failures = nullptr);
/// Right-hand side of the diagonal formula, exact.
BigRational euler_diagonal_rhs(long g, long d, long p);

/// g = 2i+5 odd, i >= 1.
BettiTable prym_green_predicted(long g);

std::string pretty(const BettiTable& t);
nlohmann::json to_json(const BettiTable& t);

struct ScrollSyzygies {
    long i = 0;
    std::size_t nvars = 0;                // 2i + 2
    std::vector<FpVector> quadrics;       // over forms::monomials(nvars, 2)
    long quadric_rank = 0;
    bool quadrics_vanish = false;         // on every sample point
    std::vector<FpVector> gammas;         // over wedge^{i-1} V (x) S_2, lexicographic
    bool cycles_verified = false;         // full differential kills every gamma
    long koszul_i1 = -1;
    bool pass = false;
};

/// g = 2i+1 hyperelliptic, L of degree 2g nonspecial.
ScrollSyzygies scroll_syzygies(const curve::HyperellipticCurve& c, const curve::Divisor& L, std::uint64_t seed);

struct SecantComparison {
    bool lhs = false;  // K_{0,2}(C, L) != 0
    bool rhs = false;
};
/// L = 3H - E on a smooth quartic, |E| = 6.
SecantComparison gl_secant_divisorial_check(const curve::PlaneQuartic& q, const std::vector<curve::ProjPoint>& E,
                                            std::uint64_t seed);
/// Hyperelliptic genus 3, L of degree 6.
SecantComparison gl_secant_divisorial_check(const curve::HyperellipticCurve& c, const curve::Divisor& L,
                                            std::uint64_t seed);

/// Plane quartic, L = 3H - E6 (nonspecial, degree 6): h0(L - K) >= 1.
bool secant_nonempty(const curve::PlaneQuartic& q, const std::vector<curve::ProjPoint>& E);

}  // namespace syzygy::koszul
