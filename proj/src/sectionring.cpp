#include <algorithm>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "syzygy/koszul.hpp"

namespace syzygy::koszul {

namespace {

std::vector<std::vector<FpVector>> multiplication_tables(const std::vector<Echelon>& R, const std::vector<FpVector>& V,
                                                         std::uint32_t p) {
    std::vector<std::vector<FpVector>> mult;
    for (std::size_t q = 0; q + 1 < R.size(); ++q) {
        std::vector<FpVector> table(V.size() * R[q].dim());
        for (std::size_t i = 0; i < V.size(); ++i) {
            for (std::size_t m = 0; m < R[q].dim(); ++m) {
                FpVector prod(V[i].size());
                for (std::size_t s = 0; s < prod.size(); ++s) prod[s] = fp::mul(V[i][s], R[q].rows[m][s], p);
                if (!R[q + 1].contains(prod))
                    throw std::runtime_error("section ring: product leaves R_" + std::to_string(q + 1));
                table[i * R[q].dim() + m] = R[q + 1].coordinates(prod);
            }
        }
        mult.push_back(std::move(table));
    }
    return mult;
}

long spec_value(const std::map<std::string, long>& kv, const std::string& key, long fallback) {
    auto it = kv.find(key);
    return it == kv.end() ? fallback : it->second;
}

template <class T>
std::vector<T> pick_samples(std::vector<T> pool, std::size_t n, std::uint64_t seed) {
    if (pool.size() < n) throw std::runtime_error("not enough rational points for the evaluation model");
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    std::shuffle(pool.begin(), pool.end(), rng);
    pool.resize(n);
    return pool;
}

}  // namespace

SectionRing make_section_ring(std::string id, std::uint32_t p, long g, long d, std::uint64_t seed, bool nonspecial,
                              std::size_t npoints, std::vector<std::vector<FpVector>> evals,
                              const std::vector<long>& expected_dims) {
    SectionRing r;
    r.id = std::move(id);
    r.p = p;
    r.g = g;
    r.d = d;
    r.seed = seed;
    r.nonspecial = nonspecial;
    r.npoints = npoints;
    r.R.push_back(echelon(p, npoints, {FpVector(npoints, 1)}));
    for (auto& rows : evals) r.R.push_back(echelon(p, npoints, std::move(rows)));
    for (std::size_t q = 0; q < r.R.size() && q < expected_dims.size(); ++q) {
        if (expected_dims[q] < 0) continue;
        if (static_cast<long>(r.R[q].dim()) != expected_dims[q]) {
            std::ostringstream os;
            os << r.id << ": dim R_" << q << " = " << r.R[q].dim() << ", Riemann-Roch gives " << expected_dims[q];
            throw std::runtime_error(os.str());
        }
    }
    if (r.R.size() > 1) r.V = r.R[1].rows;
    r.mult = multiplication_tables(r.R, r.V, p);
    return r;
}

SectionRing change_basis(const SectionRing& r, std::uint64_t seed) {
    const std::size_t n = r.V.size();
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint32_t> coef(0, r.p - 1);
    for (int attempt = 0; attempt < 32; ++attempt) {
        std::vector<std::uint32_t> M(n * n);
        for (auto& v : M) v = coef(rng);
        if (rank(FieldMatrix::from_dense(Prime(r.p), n, n, M)) != n) continue;
        SectionRing out = r;
        for (std::size_t i = 0; i < n; ++i) {
            FpVector v(r.npoints, 0);
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t s = 0; s < r.npoints; ++s)
                    v[s] = fp::add(v[s], fp::mul(M[i * n + j], r.V[j][s], r.p), r.p);
            out.V[i] = std::move(v);
        }
        out.mult = multiplication_tables(out.R, out.V, r.p);
        return out;
    }
    throw std::runtime_error("change_basis: no invertible matrix found");
}

std::vector<long> riemann_roch_dims(long g, long d, bool canonical, long qmax) {
    std::vector<long> out = {1};
    for (long q = 1; q <= qmax; ++q) {
        if (canonical) out.push_back(q == 1 ? g : (2 * q - 1) * (g - 1));
        else if (q * d > 2 * g - 2) out.push_back(q * d - g + 1);
        else out.push_back(-1);
    }
    return out;
}

SectionRing rational_normal_curve(long d, std::uint32_t p, std::uint64_t seed, long qmax) {
    if (d < 1 || qmax < 1) throw std::invalid_argument("rational_normal_curve: d, qmax >= 1");
    const auto n = static_cast<std::size_t>(3 * (qmax * d + 1));
    std::vector<std::uint32_t> ts(p);
    for (std::uint32_t t = 0; t < p; ++t) ts[t] = t;
    ts = pick_samples(ts, n, seed);
    std::vector<std::vector<FpVector>> evals;
    for (long q = 1; q <= qmax; ++q) {
        std::vector<FpVector> rows;
        for (long k = 0; k <= q * d; ++k) {
            FpVector v(n);
            for (std::size_t s = 0; s < n; ++s) v[s] = fp::pow(ts[s], static_cast<std::uint64_t>(k), p);
            rows.push_back(std::move(v));
        }
        evals.push_back(std::move(rows));
    }
    std::ostringstream id;
    id << "rnc d=" << d << " p=" << p << " seed=" << seed;
    return make_section_ring(id.str(), p, 0, d, seed, true, n, std::move(evals), riemann_roch_dims(0, d, false, qmax));
}

SectionRing hyperelliptic_ring(const curve::HyperellipticCurve& c, const curve::Divisor& L, long qmax,
                               std::uint64_t seed) {
    const long d = curve::degree(L);
    if (d < 1 || qmax < 1) throw std::invalid_argument("hyperelliptic_ring: deg L, qmax >= 1");
    const auto n = static_cast<std::size_t>(3 * (qmax * d + 1));
    std::set<std::uint32_t> avoid;
    for (const auto& [P, m] : L)
        if (P.kind != curve::Place::Kind::Infinity) avoid.insert(P.x);
    std::vector<curve::Place> pool;
    for (const auto& P : c.affine_points())
        if (!avoid.count(P.x)) pool.push_back(P);
    const auto pts = pick_samples(pool, n, seed);
    std::vector<std::vector<FpVector>> evals;
    for (long q = 1; q <= qmax; ++q) {
        const auto basis = curve::rr_basis(c, q * L);
        std::vector<FpVector> rows;
        for (const auto& [a, b] : basis.funcs) {
            FpVector v(n);
            for (std::size_t s = 0; s < n; ++s) v[s] = curve::evaluate(c, a, b, basis.h, pts[s]);
            rows.push_back(std::move(v));
        }
        evals.push_back(std::move(rows));
    }
    const bool canonical = curve::linearly_equivalent(c, L, c.canonical());
    const bool nonspecial = curve::h0(c, c.canonical() - L) == 0;
    std::ostringstream id;
    id << c.id() << " deg L=" << d;
    return make_section_ring(id.str(), c.p, c.g, d, seed, nonspecial, n, std::move(evals),
                             riemann_roch_dims(c.g, d, canonical, qmax));
}

SectionRing quartic_ring(const curve::PlaneQuartic& q, int m, const std::vector<curve::ProjPoint>& E, long qmax,
                         std::uint64_t seed) {
    const long d = 4L * m - static_cast<long>(E.size());
    if (m < 1 || d < 1 || qmax < 1) throw std::invalid_argument("quartic_ring: bad twist");
    const auto n = static_cast<std::size_t>(3 * (qmax * d + 1));
    std::vector<curve::ProjPoint> pool;
    for (const auto& P : q.points)
        if (std::find(E.begin(), E.end(), P) == E.end()) pool.push_back(P);
    const auto pts = pick_samples(pool, n, seed);
    std::vector<std::vector<FpVector>> evals;
    for (long k = 1; k <= qmax; ++k)
        evals.push_back(curve::quartic_sections(q, m * static_cast<int>(k), E, static_cast<int>(k), pts));
    const bool canonical = m == 1 && E.empty();
    std::ostringstream id;
    id << q.id() << " L=" << m << "H-E" << E.size();
    return make_section_ring(id.str(), q.p, 3, d, seed, d > 4, n, std::move(evals),
                             riemann_roch_dims(3, d, canonical, qmax));
}

SectionRing genus4_canonical_ring(const curve::Genus4Curve& c, long qmax, std::uint64_t seed) {
    if (qmax < 1) throw std::invalid_argument("genus4_canonical_ring: qmax >= 1");
    const auto n = static_cast<std::size_t>(3 * (qmax * 6 + 1));
    const auto pts = pick_samples(c.points, n, seed);
    std::vector<std::vector<FpVector>> evals;
    for (long q = 1; q <= qmax; ++q) evals.push_back(curve::genus4_sections(c, static_cast<int>(q), pts));
    return make_section_ring(c.id() + " canonical", c.p, 4, 6, seed, false, n, std::move(evals),
                             riemann_roch_dims(4, 6, true, qmax));
}

SectionRing model_from_spec(const std::string& spec, std::uint32_t p, long qmax) {
    std::istringstream is(spec);
    std::string kind, tok;
    if (!(is >> kind)) throw std::invalid_argument("empty model spec");
    std::map<std::string, long> kv;
    while (is >> tok) {
        const auto eq = tok.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("model spec token without '=': " + tok);
        const std::string key = tok.substr(0, eq);
        if (key != "d" && key != "g" && key != "seed") throw std::invalid_argument("unknown model key: " + key);
        try {
            kv[key] = std::stol(tok.substr(eq + 1));
        } catch (const std::exception&) {
            throw std::invalid_argument("bad value in model spec: " + tok);
        }
    }
    const auto seed = static_cast<std::uint64_t>(spec_value(kv, "seed", 0));
    if (kind == "rnc") return rational_normal_curve(spec_value(kv, "d", 3), p, seed, qmax);
    if (kind == "quartic") return quartic_ring(curve::plane_quartic_sample(p, seed), 1, {}, qmax, seed);
    if (kind == "quartic6") {
        const auto q = curve::plane_quartic_sample(p, seed);
        const auto E = pick_samples(q.points, 6, seed + 1);
        return quartic_ring(q, 3, E, qmax, seed);
    }
    if (kind == "genus4") return genus4_canonical_ring(curve::genus4_sample(p, seed), qmax, seed);
    if (kind == "hyp" || kind == "prym") {
        const long g = spec_value(kv, "g", kind == "hyp" ? 2 : 7);
        const auto c = curve::hyperelliptic_sample(p, static_cast<int>(g), seed);
        if (kind == "prym") {
            const auto eta = curve::two_torsion(c, {0, 1});
            return hyperelliptic_ring(c, c.canonical() + eta.eta, qmax, seed);
        }
        std::mt19937_64 rng(seed);
        for (int attempt = 0; attempt < 64; ++attempt) {
            const auto L = curve::random_effective(c, 2 * g, rng);
            if (curve::h0(c, c.canonical() - L) == 0) return hyperelliptic_ring(c, L, qmax, seed);
        }
        throw std::runtime_error("no nonspecial divisor found");
    }
    throw std::invalid_argument("unknown model kind: " + kind);
}

}  // namespace syzygy::koszul
