#include "syzygy/hyperelliptic.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>
#include <stdexcept>

#include "syzygy/exactla.hpp"

namespace syzygy::curve {

using poly::Poly;

std::string Place::str() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::Infinity: os << "inf"; break;
        case Kind::Weierstrass: os << "w(" << x << ")"; break;
        case Kind::Affine: os << "(" << x << "," << y << ")"; break;
    }
    return os.str();
}

long degree(const Divisor& d) {
    long s = 0;
    for (const auto& [P, n] : d) s += n;
    return s;
}

namespace {
void accumulate(Divisor& d, const Place& P, long n) {
    if (n == 0) return;
    auto it = d.find(P);
    if (it == d.end()) {
        d.emplace(P, n);
    } else if ((it->second += n) == 0) {
        d.erase(it);
    }
}
}  // namespace

Divisor operator+(const Divisor& a, const Divisor& b) {
    Divisor r = a;
    for (const auto& [P, n] : b) accumulate(r, P, n);
    return r;
}

Divisor operator-(const Divisor& a, const Divisor& b) {
    Divisor r = a;
    for (const auto& [P, n] : b) accumulate(r, P, -n);
    return r;
}

Divisor operator*(long k, const Divisor& a) {
    Divisor r;
    for (const auto& [P, n] : a) accumulate(r, P, k * n);
    return r;
}

Divisor point(const Place& P, long n) {
    Divisor d;
    accumulate(d, P, n);
    return d;
}

std::string to_string(const Divisor& d) {
    if (d.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [P, n] : d) {
        if (!first) os << (n > 0 ? " + " : " - ");
        else if (n < 0) os << "-";
        first = false;
        const long m = n < 0 ? -n : n;
        if (m != 1) os << m << "*";
        os << P.str();
    }
    return os.str();
}

bool HyperellipticCurve::on_curve(const Place& P) const {
    switch (P.kind) {
        case Place::Kind::Infinity: return true;
        case Place::Kind::Weierstrass: return P.x < p && poly::eval(f, P.x, p) == 0;
        case Place::Kind::Affine:
            return P.x < p && P.y < p && P.y != 0 &&
                   fp::mul(P.y, P.y, p) == poly::eval(f, P.x, p);
    }
    return false;
}

Place HyperellipticCurve::conjugate(const Place& P) const {
    if (P.kind != Place::Kind::Affine) return P;
    return Place::affine(P.x, fp::neg(P.y, p));
}

std::vector<Place> HyperellipticCurve::affine_points() const {
    std::vector<Place> out;
    for (std::uint32_t x = 0; x < p; ++x) {
        const std::uint32_t v = poly::eval(f, x, p);
        if (v == 0) continue;
        const std::int64_t y = fp::sqrt(v, p);
        if (y < 0) continue;
        const auto y0 = static_cast<std::uint32_t>(y);
        out.push_back(Place::affine(x, y0));
        out.push_back(Place::affine(x, fp::neg(y0, p)));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Place> HyperellipticCurve::rational_places() const {
    std::vector<Place> out = affine_points();
    for (auto r : roots) out.push_back(Place::weierstrass(r));
    out.push_back(Place::infinity());
    std::sort(out.begin(), out.end());
    return out;
}

std::string HyperellipticCurve::id() const {
    std::ostringstream os;
    os << "hyp g=" << g << " p=" << p << " seed=" << seed;
    return os.str();
}

HyperellipticCurve make_hyperelliptic(std::uint32_t p, Poly f) {
    Prime checked(p);
    poly::trim(f);
    const long d = poly::deg(f);
    if (d < 3 || d % 2 == 0) throw std::invalid_argument("hyperelliptic model needs odd degree >= 3");
    if (f.back() != 1) throw std::invalid_argument("hyperelliptic model needs monic f");
    if (!poly::squarefree(f, p)) throw std::invalid_argument("f is not squarefree");
    HyperellipticCurve c;
    c.p = checked.value();
    c.f = std::move(f);
    c.g = static_cast<int>((d - 1) / 2);
    c.roots = poly::roots(c.f, p);
    if (static_cast<long>(c.roots.size()) != d) throw std::invalid_argument("f does not split over F_p");
    return c;
}

HyperellipticCurve hyperelliptic_sample(std::uint32_t p, int g, std::uint64_t seed) {
    if (g < 1) throw std::invalid_argument("genus must be positive");
    if (static_cast<std::uint64_t>(2 * g + 1) >= p) throw std::invalid_argument("prime too small for genus");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint32_t> pick(0, p - 1);
    std::set<std::uint32_t> rs;
    while (rs.size() < static_cast<std::size_t>(2 * g + 1)) rs.insert(pick(rng));
    Poly f = {1};
    for (auto r : rs) f = poly::mul(f, poly::linear(r, p), p);
    auto c = make_hyperelliptic(p, f);
    c.seed = seed;
    return c;
}

namespace {

// Expansion of x and y in a local parameter t at an affine place, mod t^n.
// Returned as u with x = x0 + u(t), u(0) = 0, and y(t).
struct LocalParam {
    Poly u;
    Poly y;
};

LocalParam local_param(const HyperellipticCurve& c, const Place& P, std::size_t n) {
    const std::uint32_t p = c.p;
    const Poly fs = poly::taylor_shift(c.f, P.x, p);
    auto coef = [&](std::size_t k) -> std::uint32_t { return k < fs.size() ? fs[k] : 0; };
    LocalParam lp;
    if (P.kind == Place::Kind::Affine) {
        lp.u.assign(n, 0);
        if (n > 1) lp.u[1] = 1;
        lp.y.assign(n, 0);
        lp.y[0] = P.y;
        const std::uint32_t inv2y = fp::inv(fp::mul(2, P.y, p), p);
        for (std::size_t k = 1; k < n; ++k) {
            std::uint32_t acc = coef(k);
            for (std::size_t j = 1; j < k; ++j) acc = fp::sub(acc, fp::mul(lp.y[j], lp.y[k - j], p), p);
            lp.y[k] = fp::mul(acc, inv2y, p);
        }
        return lp;
    }
    // Weierstrass: t = y, x = x0 + s with f1 s + f2 s^2 + ... = t^2.
    lp.y.assign(n, 0);
    if (n > 1) lp.y[1] = 1;
    const std::uint32_t inv_f1 = fp::inv(coef(1), p);
    Poly tail = fs;
    if (!tail.empty()) tail[0] = 0;
    if (tail.size() > 1) tail[1] = 0;
    Poly t2(n, 0);
    if (n > 2) t2[2] = 1;
    Poly s(n, 0);
    for (std::size_t it = 0; it < n; ++it) {
        const Poly rest = poly::series::compose(tail, s, n, p);
        Poly next(n, 0);
        for (std::size_t k = 0; k < n; ++k) next[k] = fp::mul(fp::sub(t2[k], rest[k], p), inv_f1, p);
        if (next == s) break;
        s = std::move(next);
    }
    lp.u = std::move(s);
    return lp;
}

// a(x) + b(x) y as a series in t, mod t^n.
Poly local_series(const HyperellipticCurve& c, const LocalParam& lp, const Poly& a, const Poly& b,
                  std::uint32_t x0, std::size_t n) {
    const std::uint32_t p = c.p;
    Poly r = poly::series::compose(poly::taylor_shift(a, x0, p), lp.u, n, p);
    if (!b.empty()) {
        const Poly bs = poly::series::compose(poly::taylor_shift(b, x0, p), lp.u, n, p);
        const Poly by = poly::series::mul(bs, lp.y, n, p);
        for (std::size_t k = 0; k < n; ++k) r[k] = fp::add(r[k], by[k], p);
    }
    return r;
}

long pole_order_at_infinity(const HyperellipticCurve& c, const Poly& a, const Poly& b) {
    long m = -1;
    if (poly::deg(a) >= 0) m = std::max(m, 2 * poly::deg(a));
    if (poly::deg(b) >= 0) m = std::max(m, 2 * poly::deg(b) + 2 * c.g + 1);
    return m;
}

void check_support(const HyperellipticCurve& c, const Divisor& d) {
    for (const auto& [P, n] : d)
        if (!c.on_curve(P)) throw std::invalid_argument("divisor place not on curve: " + P.str());
}

}  // namespace

long order_at(const HyperellipticCurve& c, const Poly& a, const Poly& b, const Place& P) {
    const long m = pole_order_at_infinity(c, a, b);
    if (m < 0) throw std::invalid_argument("order of the zero function");
    if (P.kind == Place::Kind::Infinity) return -m;
    // total zero count equals the pole order at infinity
    const auto n = static_cast<std::size_t>(m + 1);
    const LocalParam lp = local_param(c, P, n);
    return static_cast<long>(poly::series::valuation(local_series(c, lp, a, b, P.x, n), n));
}

std::uint32_t evaluate(const HyperellipticCurve& c, const Poly& a, const Poly& b, const Poly& h,
                       const Place& P) {
    if (P.kind == Place::Kind::Infinity) throw std::invalid_argument("evaluate at infinity");
    const std::uint32_t p = c.p;
    const std::uint32_t hv = poly::eval(h, P.x, p);
    if (hv == 0) throw std::invalid_argument("evaluate at a pole of 1/h");
    const std::uint32_t num = fp::add(poly::eval(a, P.x, p), fp::mul(poly::eval(b, P.x, p), P.y, p), p);
    return fp::mul(num, fp::inv(hv, p), p);
}

RRBasis rr_basis(const HyperellipticCurve& c, const Divisor& d) {
    check_support(c, d);
    const std::uint32_t p = c.p;
    RRBasis out;
    out.h = {1};

    // exponent of (x - x0) in the denominator
    std::map<std::uint32_t, long> ex;
    long n_inf = 0;
    for (const auto& [P, n] : d) {
        if (P.kind == Place::Kind::Infinity) {
            n_inf = n;
            continue;
        }
        const long e = P.kind == Place::Kind::Weierstrass ? (std::max(n, 0L) + 1) / 2 : std::max(n, 0L);
        ex[P.x] = std::max(ex[P.x], e);
    }
    long deg_h = 0;
    for (const auto& [x0, e] : ex) {
        out.h = poly::mul(out.h, poly::pow(poly::linear(x0, p), static_cast<unsigned>(e), p), p);
        deg_h += e;
    }
    const long M = n_inf + 2 * deg_h;
    if (M < 0) return out;

    struct Col {
        long k;
        bool y;
    };
    std::vector<Col> cols;
    for (long k = 0; 2 * k <= M; ++k) cols.push_back({k, false});
    for (long k = 0; 2 * k + 2 * c.g + 1 <= M; ++k) cols.push_back({k, true});

    std::set<Place> constrained;
    for (const auto& [P, n] : d)
        if (P.kind != Place::Kind::Infinity) constrained.insert(P);
    for (const auto& [x0, e] : ex) {
        if (e == 0) continue;
        const std::uint32_t v = poly::eval(c.f, x0, p);
        if (v == 0) continue;
        const auto y0 = static_cast<std::uint32_t>(fp::sqrt(v, p));
        constrained.insert(Place::affine(x0, y0));
        constrained.insert(Place::affine(x0, fp::neg(y0, p)));
    }

    std::vector<FieldMatrix::Row> rows;
    for (const Place& P : constrained) {
        const auto it_d = d.find(P);
        const long nP = it_d == d.end() ? 0 : it_d->second;
        const auto it_e = ex.find(P.x);
        const long e = it_e == ex.end() ? 0 : it_e->second;
        const long ord_h = P.kind == Place::Kind::Weierstrass ? 2 * e : e;
        const long req = ord_h - nP;
        if (req <= 0) continue;
        const auto n = static_cast<std::size_t>(req);
        const LocalParam lp = local_param(c, P, n);
        Poly X = lp.u;
        X[0] = fp::add(X[0], P.x, p);
        std::vector<Poly> xpow = {Poly(n, 0)};
        xpow[0][0] = 1;
        for (const Col& col : cols)
            while (static_cast<long>(xpow.size()) <= col.k)
                xpow.push_back(poly::series::mul(xpow.back(), X, n, p));
        std::vector<Poly> series;
        for (const Col& col : cols)
            series.push_back(col.y ? poly::series::mul(xpow[static_cast<std::size_t>(col.k)], lp.y, n, p)
                                   : xpow[static_cast<std::size_t>(col.k)]);
        for (std::size_t t = 0; t < n; ++t) {
            FieldMatrix::Row row;
            for (std::size_t j = 0; j < cols.size(); ++j)
                if (t < series[j].size() && series[j][t])
                    row.push_back({static_cast<std::uint32_t>(j), series[j][t]});
            rows.push_back(std::move(row));
        }
    }

    std::vector<FpVector> ker;
    if (rows.empty()) {
        for (std::size_t j = 0; j < cols.size(); ++j) {
            FpVector v(cols.size(), 0);
            v[j] = 1;
            ker.push_back(std::move(v));
        }
    } else {
        ker = kernel_basis(FieldMatrix(Prime(p), cols.size(), std::move(rows)));
    }
    for (const auto& v : ker) {
        Poly a, b;
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (!v[j]) continue;
            Poly& tgt = cols[j].y ? b : a;
            const auto k = static_cast<std::size_t>(cols[j].k);
            if (tgt.size() <= k) tgt.resize(k + 1, 0);
            tgt[k] = v[j];
        }
        poly::trim(a);
        poly::trim(b);
        out.funcs.emplace_back(std::move(a), std::move(b));
    }
    return out;
}

long h0(const HyperellipticCurve& c, const Divisor& d) {
    return static_cast<long>(rr_basis(c, d).dim());
}

PrincipalDivisor divisor_of(const HyperellipticCurve& c, const Poly& a, const Poly& b, const Poly& h) {
    const std::uint32_t p = c.p;
    const long m_num = pole_order_at_infinity(c, a, b);
    const long m_den = 2 * poly::deg(h);
    if (m_num < 0 || poly::deg(h) < 0) throw std::invalid_argument("divisor of the zero function");
    // candidate x-coordinates: rational roots of the norms
    const Poly norm = poly::sub(poly::mul(a, a, p), poly::mul(poly::mul(b, b, p), c.f, p), p);
    std::set<std::uint32_t> xs;
    for (auto x : poly::roots(norm, p)) xs.insert(x);
    for (auto x : poly::roots(h, p)) xs.insert(x);
    PrincipalDivisor out;
    long zeros_num = 0, zeros_den = 0;
    for (auto x0 : xs) {
        std::vector<Place> above;
        const std::uint32_t v = poly::eval(c.f, x0, p);
        if (v == 0) {
            above.push_back(Place::weierstrass(x0));
        } else {
            const std::int64_t y = fp::sqrt(v, p);
            if (y < 0) continue;
            above.push_back(Place::affine(x0, static_cast<std::uint32_t>(y)));
            above.push_back(Place::affine(x0, fp::neg(static_cast<std::uint32_t>(y), p)));
        }
        for (const Place& P : above) {
            const long on = order_at(c, a, b, P);
            const long od = order_at(c, h, {}, P);
            zeros_num += on;
            zeros_den += od;
            accumulate(out.div, P, on - od);
        }
    }
    accumulate(out.div, Place::infinity(), m_den - m_num);
    out.complete = zeros_num == m_num && zeros_den == m_den;
    return out;
}

bool linearly_equivalent(const HyperellipticCurve& c, const Divisor& d, const Divisor& e) {
    return degree(d) == degree(e) && h0(c, d - e) >= 1;
}

TwoTorsion two_torsion(const HyperellipticCurve& c, const std::vector<std::size_t>& S) {
    const std::size_t n = c.roots.size();
    std::set<std::size_t> uniq(S.begin(), S.end());
    if (uniq.size() != S.size()) throw std::invalid_argument("two_torsion: repeated index");
    if (S.empty() || S.size() % 2 != 0 || S.size() >= n + 1)
        throw std::invalid_argument("two_torsion needs a nonempty even proper subset");
    TwoTorsion t;
    t.witness = {1};
    for (auto i : S) {
        if (i >= n) throw std::invalid_argument("two_torsion: index out of range");
        accumulate(t.eta, c.weierstrass(i), 1);
        t.witness = poly::mul(t.witness, poly::linear(c.roots[i], c.p), c.p);
    }
    accumulate(t.eta, Place::infinity(), -static_cast<long>(S.size()));
    return t;
}

TwoTorsion two_torsion_mask(const HyperellipticCurve& c, std::uint64_t mask) {
    std::vector<std::size_t> S;
    for (std::size_t i = 0; i < c.roots.size(); ++i)
        if (mask >> i & 1) S.push_back(i);
    if (S.empty()) return {Divisor{}, Poly{1}};
    return two_torsion(c, S);
}

GrdDecomposition grd_decompose(const HyperellipticCurve& c, const Divisor& d) {
    const long deg = degree(d);
    if (deg < 0 || deg > 2 * c.g - 2) throw std::invalid_argument("grd_decompose: degree out of range");
    GrdDecomposition out;
    out.r = h0(c, d) - 1;
    if (out.r < 0) return out;
    const Divisor rest = d - c.pencil(out.r);
    const RRBasis basis = rr_basis(c, rest);
    if (basis.dim() != 1) return out;
    const auto& [a, b] = basis.funcs.front();
    const PrincipalDivisor pd = divisor_of(c, a, b, basis.h);
    const Divisor B = rest + pd.div;
    for (const auto& [P, n] : B)
        if (n > 0) accumulate(out.base, P, n);
    out.rational = pd.complete && degree(out.base) == degree(rest);
    out.verified = out.rational && linearly_equivalent(c, c.pencil(out.r) + out.base, d) &&
                   h0(c, c.pencil(out.r) + out.base) == out.r + 1;
    return out;
}

bool diff_variety_member(const HyperellipticCurve& c, const Divisor& L, long a, long b) {
    if (a < 0 || b < 0) throw std::invalid_argument("diff_variety_member: negative degree");
    if (degree(L) != a - b) throw std::invalid_argument("diff_variety_member: degree mismatch");
    return h0(c, L + c.pencil(b)) >= 1;
}

Divisor random_effective(const HyperellipticCurve& c, long deg, std::mt19937_64& rng) {
    const auto places = c.rational_places();
    std::uniform_int_distribution<std::size_t> pick(0, places.size() - 1);
    Divisor d;
    for (long k = 0; k < deg; ++k) accumulate(d, places[pick(rng)], 1);
    return d;
}

Witness diff_variety_witness(const HyperellipticCurve& c, const Divisor& L, long a, long b,
                             std::mt19937_64& rng, long budget) {
    if (degree(L) != a - b) throw std::invalid_argument("diff_variety_witness: degree mismatch");
    Witness w;
    auto accept = [&](const Divisor& E) { return h0(c, L + E) >= 1; };

    // Effective D ~ L + bA with rational support: split off b points and
    // conjugate them, since E' + conj(E') ~ bA.
    const Divisor D0 = L + c.pencil(b);
    const RRBasis basis = rr_basis(c, D0);
    std::vector<std::pair<Poly, Poly>> candidates = basis.funcs;
    std::uniform_int_distribution<std::uint32_t> coef(1, c.p - 1);
    for (int extra = 0; extra < 8 && basis.dim() > 1; ++extra) {
        Poly ra, rb;
        for (const auto& [fa, fb] : basis.funcs) {
            const std::uint32_t s = coef(rng);
            ra = poly::add(ra, poly::scale(fa, s, c.p), c.p);
            rb = poly::add(rb, poly::scale(fb, s, c.p), c.p);
        }
        if (poly::deg(ra) >= 0 || poly::deg(rb) >= 0) candidates.emplace_back(ra, rb);
    }
    for (const auto& [fa, fb] : candidates) {
        if (w.trials >= budget) break;
        ++w.trials;
        const PrincipalDivisor pd = divisor_of(c, fa, fb, basis.h);
        if (!pd.complete) continue;
        const Divisor D = D0 + pd.div;
        Divisor E;
        long need = b;
        for (const auto& [P, n] : D) {
            const long take = std::min(need, n);
            if (take > 0) accumulate(E, c.conjugate(P), take);
            need -= take;
        }
        if (need != 0) continue;
        if (accept(E)) {
            w.found = true;
            w.E = E;
            w.source = "decomposition";
            return w;
        }
    }
    while (w.trials < budget) {
        ++w.trials;
        const Divisor E = random_effective(c, b, rng);
        if (accept(E)) {
            w.found = true;
            w.E = E;
            w.source = "search";
            return w;
        }
    }
    return w;
}

bool theta_Q_member(const HyperellipticCurve& c, const Divisor& xi, long j) {
    if (degree(xi) != c.g - 2 * j - 1) throw std::invalid_argument("theta_Q_member: degree mismatch");
    return h0(c, c.pencil(c.g - 1 - j) - xi) >= 1;
}

bool secant_nonempty(const HyperellipticCurve& c, const Divisor& L, long p) {
    if (h0(c, c.canonical() - L) != 0) throw std::invalid_argument("secant_nonempty: L is special");
    const long d = degree(L);
    return diff_variety_member(c, L - c.canonical(), p + 2, 2 * c.g - d + p);
}

TwistedCohomology twisted_wedge_cohomology(const HyperellipticCurve& c, const Divisor& eta, long m) {
    const Divisor D = eta + c.pencil(m);
    return {h0(c, D), h0(c, c.canonical() - D)};
}

std::vector<TorsionScanRow> torsion_scan(const HyperellipticCurve& c, long p) {
    if (c.g != 2 * p + 3) throw std::invalid_argument("torsion_scan needs g = 2p+3");
    const std::size_t n = c.roots.size();
    std::vector<std::uint64_t> masks;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m)
        if (std::popcount(m) % 2 == 0) masks.push_back(m);
    std::vector<TorsionScanRow> rows(masks.size());
#pragma omp parallel for schedule(dynamic, 64)
    for (std::size_t k = 0; k < masks.size(); ++k) {
        const TwoTorsion t = two_torsion_mask(c, masks[k]);
        TorsionScanRow row;
        row.mask = masks[k];
        row.vanishing = true;
        for (long j = 0; j <= p; ++j) {
            const long h1 = twisted_wedge_cohomology(c, t.eta, 2 * p + 2 - j).h1;
            row.h1.push_back(h1);
            if (h1 != 0) row.vanishing = false;
        }
        rows[k] = std::move(row);
    }
    return rows;
}

}  // namespace syzygy::curve
