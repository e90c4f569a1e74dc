#pragma once
// Picard lattices of the K3 surfaces used in the odd/even genus and Nikulin
// constructions, with exact pairing arithmetic and bounded class enumeration.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace syzygy::lattice {

enum class Kind { theta, theta_hat, xi, xi_hat, nikulin_lambda, nikulin_t_hat };

Kind parse_kind(const std::string& s);
std::string kind_name(Kind k);

using LatticeClass = std::vector<std::int64_t>;

struct GramLattice {
    std::string name;
    Kind kind;
    long g = 0;
    long p = 0;
    int rank = 0;
    std::vector<std::vector<std::int64_t>> gram;
    std::vector<std::string> basis_labels;

    /// Basis vector with the given label (e.g. "H", "eta", "E", "L", "N3", "e").
    LatticeClass unit(const std::string& label) const;
    LatticeClass zero() const { return LatticeClass(static_cast<std::size_t>(rank), 0); }
};

GramLattice make_lattice(Kind kind, long g, long p = 0);
/// Arbitrary symmetric Gram matrix; accepted by pairing/enumerate only.
GramLattice make_custom(std::string name, std::vector<std::vector<std::int64_t>> gram);

std::int64_t pairing(const GramLattice& lat, const LatticeClass& x, const LatticeClass& y);
inline std::int64_t self(const GramLattice& lat, const LatticeClass& x) { return pairing(lat, x, x); }

LatticeClass add(const LatticeClass& x, const LatticeClass& y);
LatticeClass scale(std::int64_t s, const LatticeClass& x);

bool div4_criterion(const GramLattice& lat);

/// (positive, negative, zero) eigenvalue counts by exact congruence
/// diagonalization over Q.
struct Signature {
    int pos = 0, neg = 0, zero = 0;
    bool operator==(const Signature&) const = default;
};
Signature signature(const GramLattice& lat);

enum class Cmp { lt, le, eq, ge, gt, ne };

struct LinearConstraint {
    LatticeClass cls;
    Cmp cmp;
    std::int64_t bound;
};

/// Coordinate box lo[k] <= x_k <= hi[k]; this is what makes a search finite.
struct Box {
    std::vector<std::int64_t> lo, hi;
    static Box cube(int rank, std::int64_t r);
    std::uint64_t size() const;
};

inline constexpr std::uint64_t kMaxBoxSize = 50'000'000;

/// All integral classes x in the box with x^2 = self_int and every
/// constraint pairing(x, cls) cmp bound. Throws if the box is missing,
/// malformed or larger than kMaxBoxSize.
std::vector<LatticeClass> enumerate_classes(const GramLattice& lat, std::int64_t self_int,
                                            const std::vector<LinearConstraint>& constraints,
                                            const std::optional<Box>& box,
                                            std::uint64_t* visited = nullptr);

struct HodgeBound {
    std::int64_t lhs;   // ample^2 * target^2
    std::int64_t rhs;   // (ample . target)^2
    bool holds;         // lhs <= rhs
    bool strict;        // lhs < rhs
};
HodgeBound hodge_index_bound(const GramLattice& lat, const LatticeClass& ample,
                             const LatticeClass& target);

// Nikulin half-integer view. For nikulin_lambda the basis is
// {L, N1..N7, e}; for nikulin_t_hat it is {L, E, N1..N7, e}, with
// e = (N1+...+N8)/2.
struct NikulinView {
    std::int64_t a = 0;                 // L
    std::int64_t b = 0;                 // E
    std::array<std::int64_t, 8> c2{};   // 2 c_j

    bool parity_ok() const;
    bool operator==(const NikulinView&) const = default;
};

NikulinView to_view(const GramLattice& lat, const LatticeClass& x);
LatticeClass from_view(const GramLattice& lat, const NikulinView& v);
/// Pairing evaluated directly in half-integer coordinates on T_g + N.
std::int64_t view_pairing(long g, const NikulinView& x, const NikulinView& y);

/// Admissible c-vectors with sum (2c_j)^2 <= bound4, found by enumerating the
/// Nikulin sublattice classes of square >= -bound4/2.
std::vector<std::array<std::int64_t, 8>> nikulin_small_c(long g, std::int64_t bound4);

}  // namespace syzygy::lattice
