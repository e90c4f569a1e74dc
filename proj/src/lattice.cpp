#include "syzygy/lattice.hpp"

#include <cmath>
#include <stdexcept>

#include "syzygy/exactla.hpp"

namespace syzygy::lattice {

Kind parse_kind(const std::string& s) {
    static const std::map<std::string, Kind> names = {
        {"theta", Kind::theta},         {"theta_hat", Kind::theta_hat},
        {"xi", Kind::xi},               {"xi_hat", Kind::xi_hat},
        {"nikulin_lambda", Kind::nikulin_lambda}, {"nikulin_t_hat", Kind::nikulin_t_hat}};
    auto it = names.find(s);
    if (it == names.end()) throw std::invalid_argument("unknown lattice kind: " + s);
    return it->second;
}

std::string kind_name(Kind k) {
    switch (k) {
        case Kind::theta: return "theta";
        case Kind::theta_hat: return "theta_hat";
        case Kind::xi: return "xi";
        case Kind::xi_hat: return "xi_hat";
        case Kind::nikulin_lambda: return "nikulin_lambda";
        case Kind::nikulin_t_hat: return "nikulin_t_hat";
    }
    return "?";
}

LatticeClass GramLattice::unit(const std::string& label) const {
    for (int k = 0; k < rank; ++k)
        if (basis_labels[static_cast<std::size_t>(k)] == label) {
            LatticeClass v = zero();
            v[static_cast<std::size_t>(k)] = 1;
            return v;
        }
    throw std::invalid_argument("lattice " + name + " has no basis element " + label);
}

namespace {

void fill_nikulin(std::vector<std::vector<std::int64_t>>& G, std::size_t off) {
    for (std::size_t a = 0; a < 7; ++a) {
        G[off + a][off + a] = -2;
        G[off + a][off + 7] = G[off + 7][off + a] = -1;
    }
    G[off + 7][off + 7] = -4;
}

std::vector<std::string> nikulin_labels() {
    std::vector<std::string> v;
    for (int j = 1; j <= 7; ++j) v.push_back("N" + std::to_string(j));
    v.push_back("e");
    return v;
}

}  // namespace

GramLattice make_lattice(Kind kind, long g, long p) {
    GramLattice lat;
    lat.kind = kind;
    lat.g = g;
    lat.p = p;
    lat.name = kind_name(kind) + "(g=" + std::to_string(g) + ",p=" + std::to_string(p) + ")";
    switch (kind) {
        case Kind::theta:
        case Kind::theta_hat: {
            if (g < 3 || g % 2 == 0) throw std::invalid_argument("theta lattices need odd g >= 3");
            const long i = (g - 1) / 2;
            if (p < 1 || p < i - 1) throw std::invalid_argument("theta lattices need p >= max(1, i-1)");
            const std::int64_t h2 = 4 * p + 4, he = 2 * p - 2 * i;
            if (kind == Kind::theta) {
                lat.gram = {{h2, he}, {he, -4}};
                lat.basis_labels = {"H", "eta"};
            } else {
                lat.gram = {{h2, he, 2}, {he, -4, 0}, {2, 0, 0}};
                lat.basis_labels = {"H", "eta", "E"};
            }
            break;
        }
        case Kind::xi:
        case Kind::xi_hat: {
            if (g < 4 || g % 2 != 0) throw std::invalid_argument("xi lattices need even g >= 4");
            const long i = g / 2;
            if (p < i - 1) throw std::invalid_argument("xi lattices need p >= i-1");
            const std::int64_t h2 = 4 * p + 4, he = 2 * p - 2 * i + 1;
            if (kind == Kind::xi) {
                lat.gram = {{h2, he}, {he, -4}};
                lat.basis_labels = {"H", "eta"};
            } else {
                lat.gram = {{h2, he, 2}, {he, -4, 0}, {2, 0, 0}};
                lat.basis_labels = {"H", "eta", "E"};
            }
            break;
        }
        case Kind::nikulin_lambda: {
            if (g < 2 || g % 2 == 0) throw std::invalid_argument("Nikulin lattices need odd g >= 3");
            lat.gram.assign(9, std::vector<std::int64_t>(9, 0));
            lat.gram[0][0] = 2 * g - 2;
            fill_nikulin(lat.gram, 1);
            lat.basis_labels = {"L"};
            for (auto& s : nikulin_labels()) lat.basis_labels.push_back(s);
            lat.name = kind_name(kind) + "(g=" + std::to_string(g) + ")";
            break;
        }
        case Kind::nikulin_t_hat: {
            if (g < 2 || g % 2 == 0) throw std::invalid_argument("Nikulin lattices need odd g >= 3");
            lat.gram.assign(10, std::vector<std::int64_t>(10, 0));
            lat.gram[0][0] = 2 * g - 2;
            lat.gram[0][1] = lat.gram[1][0] = 2;
            fill_nikulin(lat.gram, 2);
            lat.basis_labels = {"L", "E"};
            for (auto& s : nikulin_labels()) lat.basis_labels.push_back(s);
            lat.name = kind_name(kind) + "(g=" + std::to_string(g) + ")";
            break;
        }
    }
    lat.rank = static_cast<int>(lat.gram.size());
    return lat;
}

GramLattice make_custom(std::string name, std::vector<std::vector<std::int64_t>> gram) {
    const std::size_t n = gram.size();
    for (std::size_t a = 0; a < n; ++a) {
        if (gram[a].size() != n) throw std::invalid_argument("gram matrix not square");
        for (std::size_t b = 0; b < a; ++b)
            if (gram[a][b] != gram[b][a]) throw std::invalid_argument("gram matrix not symmetric");
    }
    GramLattice lat;
    lat.name = std::move(name);
    lat.kind = Kind::theta;  // unused for custom lattices
    lat.rank = static_cast<int>(n);
    lat.gram = std::move(gram);
    for (std::size_t k = 0; k < n; ++k) lat.basis_labels.push_back("b" + std::to_string(k));
    return lat;
}

std::int64_t pairing(const GramLattice& lat, const LatticeClass& x, const LatticeClass& y) {
    const auto n = static_cast<std::size_t>(lat.rank);
    if (x.size() != n || y.size() != n) throw std::invalid_argument("pairing: dimension mismatch");
    std::int64_t s = 0;
    for (std::size_t a = 0; a < n; ++a) {
        if (!x[a]) continue;
        std::int64_t row = 0;
        for (std::size_t b = 0; b < n; ++b) row += lat.gram[a][b] * y[b];
        s += x[a] * row;
    }
    return s;
}

LatticeClass add(const LatticeClass& x, const LatticeClass& y) {
    if (x.size() != y.size()) throw std::invalid_argument("add: dimension mismatch");
    LatticeClass z(x.size());
    for (std::size_t k = 0; k < x.size(); ++k) z[k] = x[k] + y[k];
    return z;
}

LatticeClass scale(std::int64_t s, const LatticeClass& x) {
    LatticeClass z(x);
    for (auto& v : z) v *= s;
    return z;
}

bool div4_criterion(const GramLattice& lat) {
    for (int a = 0; a < lat.rank; ++a)
        for (int b = 0; b < lat.rank; ++b) {
            const auto v = lat.gram[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
            if (a == b ? v % 4 != 0 : v % 2 != 0) return false;
        }
    return true;
}

Signature signature(const GramLattice& lat) {
    const auto n = static_cast<std::size_t>(lat.rank);
    std::vector<std::vector<BigRational>> A(n, std::vector<BigRational>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) A[a][b] = BigRational(static_cast<long>(lat.gram[a][b]));

    Signature s;
    std::size_t k = 0;
    while (k < n) {
        // Bring a nonzero diagonal entry to position k by symmetric swaps, or
        // create one via e_k -> e_k + e_j when only off-diagonals survive.
        std::size_t piv = n;
        for (std::size_t t = k; t < n; ++t)
            if (A[t][t] != 0) {
                piv = t;
                break;
            }
        if (piv == n) {
            std::size_t r = n, c = n;
            for (std::size_t t = k; t < n && r == n; ++t)
                for (std::size_t u = t + 1; u < n; ++u)
                    if (A[t][u] != 0) {
                        r = t;
                        c = u;
                        break;
                    }
            if (r == n) {
                s.zero += static_cast<int>(n - k);
                break;
            }
            for (std::size_t t = 0; t < n; ++t) A[r][t] += A[c][t];
            for (std::size_t t = 0; t < n; ++t) A[t][r] += A[t][c];
            piv = r;
        }
        if (piv != k) {
            std::swap(A[piv], A[k]);
            for (auto& row : A) std::swap(row[piv], row[k]);
        }
        const BigRational d = A[k][k];
        (d > 0 ? s.pos : s.neg) += 1;
        for (std::size_t t = k + 1; t < n; ++t) {
            if (A[t][k] == 0) continue;
            const BigRational f = A[t][k] / d;
            for (std::size_t u = k; u < n; ++u) A[t][u] -= f * A[k][u];
        }
        for (std::size_t t = k + 1; t < n; ++t) A[k][t] = 0;
        for (std::size_t t = k + 1; t < n; ++t) A[t][k] = 0;
        ++k;
    }
    return s;
}

Box Box::cube(int rank, std::int64_t r) {
    return Box{std::vector<std::int64_t>(static_cast<std::size_t>(rank), -r),
               std::vector<std::int64_t>(static_cast<std::size_t>(rank), r)};
}

std::uint64_t Box::size() const {
    std::uint64_t s = 1;
    for (std::size_t k = 0; k < lo.size(); ++k) {
        if (hi[k] < lo[k]) return 0;
        const auto w = static_cast<std::uint64_t>(hi[k] - lo[k] + 1);
        if (s > kMaxBoxSize * 4 / w) return kMaxBoxSize * 4;
        s *= w;
    }
    return s;
}

namespace {

bool compare(std::int64_t v, Cmp c, std::int64_t b) {
    switch (c) {
        case Cmp::lt: return v < b;
        case Cmp::le: return v <= b;
        case Cmp::eq: return v == b;
        case Cmp::ge: return v >= b;
        case Cmp::gt: return v > b;
        case Cmp::ne: return v != b;
    }
    return false;
}

}  // namespace

std::vector<LatticeClass> enumerate_classes(const GramLattice& lat, std::int64_t self_int,
                                            const std::vector<LinearConstraint>& constraints,
                                            const std::optional<Box>& box,
                                            std::uint64_t* visited) {
    const auto n = static_cast<std::size_t>(lat.rank);
    if (!box) throw std::invalid_argument("enumerate_classes: unbounded search (no box supplied)");
    if (box->lo.size() != n || box->hi.size() != n)
        throw std::invalid_argument("enumerate_classes: box dimension mismatch");
    const std::uint64_t total = box->size();
    if (total > kMaxBoxSize) throw std::invalid_argument("enumerate_classes: box exceeds size cap");

    std::vector<std::vector<std::int64_t>> lin;  // gram * cls
    for (const auto& c : constraints) {
        if (c.cls.size() != n) throw std::invalid_argument("constraint dimension mismatch");
        std::vector<std::int64_t> w(n, 0);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) w[a] += lat.gram[a][b] * c.cls[b];
        lin.push_back(std::move(w));
    }

    std::vector<LatticeClass> out;
    if (visited) *visited = total;
    if (total == 0) return out;
    LatticeClass x(box->lo);
    for (std::uint64_t step = 0; step < total; ++step) {
        bool ok = pairing(lat, x, x) == self_int;
        for (std::size_t c = 0; ok && c < lin.size(); ++c) {
            std::int64_t v = 0;
            for (std::size_t a = 0; a < n; ++a) v += x[a] * lin[c][a];
            ok = compare(v, constraints[c].cmp, constraints[c].bound);
        }
        if (ok) out.push_back(x);
        for (std::size_t a = n; a-- > 0;) {
            if (x[a] < box->hi[a]) {
                ++x[a];
                break;
            }
            x[a] = box->lo[a];
        }
    }
    return out;
}

HodgeBound hodge_index_bound(const GramLattice& lat, const LatticeClass& ample,
                             const LatticeClass& target) {
    const std::int64_t a2 = self(lat, ample);
    if (a2 <= 0) throw std::invalid_argument("hodge_index_bound: ample class must have positive square");
    const std::int64_t t2 = self(lat, target), at = pairing(lat, ample, target);
    HodgeBound h{a2 * t2, at * at, false, false};
    h.holds = h.lhs <= h.rhs;
    h.strict = h.lhs < h.rhs;
    return h;
}

// ---------------------------------------------------------------------------

bool NikulinView::parity_ok() const {
    const auto par = c2[0] & 1;
    for (auto v : c2)
        if ((v & 1) != par) return false;
    return true;
}

namespace {
std::size_t nikulin_offset(const GramLattice& lat) {
    if (lat.kind == Kind::nikulin_lambda && lat.rank == 9) return 1;
    if (lat.kind == Kind::nikulin_t_hat && lat.rank == 10) return 2;
    throw std::invalid_argument("not a Nikulin lattice: " + lat.name);
}
}  // namespace

NikulinView to_view(const GramLattice& lat, const LatticeClass& x) {
    const std::size_t off = nikulin_offset(lat);
    if (x.size() != static_cast<std::size_t>(lat.rank)) throw std::invalid_argument("to_view: dimension mismatch");
    NikulinView v;
    v.a = x[0];
    v.b = off == 2 ? x[1] : 0;
    const std::int64_t m = x[off + 7];
    for (std::size_t j = 0; j < 7; ++j) v.c2[j] = 2 * x[off + j] + m;
    v.c2[7] = m;
    return v;
}

LatticeClass from_view(const GramLattice& lat, const NikulinView& v) {
    const std::size_t off = nikulin_offset(lat);
    if (!v.parity_ok()) throw std::invalid_argument("from_view: 2c_j of mixed parity");
    if (off == 1 && v.b != 0) throw std::invalid_argument("from_view: E-coefficient on Lambda_g");
    LatticeClass x = lat.zero();
    x[0] = v.a;
    if (off == 2) x[1] = v.b;
    const std::int64_t m = v.c2[7];
    for (std::size_t j = 0; j < 7; ++j) x[off + j] = (v.c2[j] - m) / 2;
    x[off + 7] = m;
    return x;
}

std::int64_t view_pairing(long g, const NikulinView& x, const NikulinView& y) {
    std::int64_t s = (2 * g - 2) * x.a * y.a + 2 * (x.a * y.b + x.b * y.a);
    std::int64_t cc = 0;
    for (std::size_t j = 0; j < 8; ++j) cc += x.c2[j] * y.c2[j];
    // -2 * sum c_j c'_j = -(sum 2c_j 2c'_j) / 2
    if (cc % 2 != 0) throw std::logic_error("view_pairing: non-integral pairing");
    return s - cc / 2;
}

std::vector<std::array<std::int64_t, 8>> nikulin_small_c(long g, std::int64_t bound4) {
    if (bound4 < 0) return {};
    const GramLattice lat = make_lattice(Kind::nikulin_lambda, g);
    const auto r = static_cast<std::int64_t>(std::floor(std::sqrt(static_cast<double>(bound4))));
    Box box = Box::cube(lat.rank, r);
    box.lo[0] = box.hi[0] = 0;
    std::vector<std::array<std::int64_t, 8>> out;
    // x^2 = -sum (2c_j)^2 / 2 on the Nikulin part
    for (std::int64_t s = 0; s >= -bound4 / 2; s -= 2) {
        for (const auto& x : enumerate_classes(lat, s, {}, box)) {
            const NikulinView v = to_view(lat, x);
            std::int64_t sq = 0;
            bool in_range = true;
            for (auto c : v.c2) {
                sq += c * c;
                in_range = in_range && c >= -r && c <= r;
            }
            if (in_range && sq <= bound4) out.push_back(v.c2);
        }
    }
    return out;
}

}  // namespace syzygy::lattice
