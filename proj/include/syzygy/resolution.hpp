#pragma once
// Minimal graded free resolutions, computed degree by degree from kernels of
// presentation maps. Used as an oracle for the Koszul strand computation.
//
// The section ring of a curve is Cohen-Macaulay of dimension 2, so two general
// linear forms form a regular sequence and the quotient M' has the same graded
// Betti numbers over the polynomial ring in the remaining r-1 variables. M' has
// finite length, which bounds every degree the resolution needs.

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "syzygy/koszul.hpp"

namespace syzygy::koszul {

struct OracleBetti {
    std::map<std::pair<long, long>, long> b;  // (p, q) -> b_{p,q}
    long steps = 0;                           // homological degrees 0..steps computed
    long top_degree = -1;                     // last nonzero degree of M'
    std::vector<long> quotient_dims;          // dim M'_q, q = 0..qmax of the ring
    long attempts = 0;                        // linear-form draws until a regular sequence

    long at(long p, long q) const;
};

/// Needs the ring's graded range to reach the vanishing of M' (predicted by
/// Riemann-Roch and checked). Throws std::runtime_error otherwise.
OracleBetti minimal_resolution_oracle(const SectionRing& r, long steps, std::uint64_t seed);

/// Free resolution of a finite-length graded module over k[y_1..y_m] given by
/// its graded pieces and the action of each variable:
/// action[q][k] is the dim M_{q+1} x dim M_q matrix of y_k (row-major).
std::map<std::pair<long, long>, long> resolve_finite_length(
    std::uint32_t p, std::size_t m, const std::vector<std::size_t>& dims,
    const std::vector<std::vector<std::vector<std::uint32_t>>>& action, long steps);

/// Entries (p, q) present in both, with mismatches listed as (p, q).
std::vector<std::pair<long, long>> compare(const BettiTable& t, const OracleBetti& o);

}  // namespace syzygy::koszul
