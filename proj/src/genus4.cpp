#include "syzygy/genus4.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

#include "syzygy/forms.hpp"
#include "syzygy/polyfp.hpp"

namespace syzygy::curve {

std::string Genus4Curve::id() const {
    std::ostringstream os;
    os << "genus4 p=" << p << " seed=" << seed;
    return os.str();
}

namespace {

Genus4Point make_point(std::uint32_t s0, std::uint32_t s1, std::uint32_t t0, std::uint32_t t1, std::uint32_t p) {
    Genus4Point P;
    P.s0 = s0;
    P.s1 = s1;
    P.t0 = t0;
    P.t1 = t1;
    P.x = forms::normalize({fp::mul(s0, t0, p), fp::mul(s0, t1, p), fp::mul(s1, t0, p), fp::mul(s1, t1, p)}, p);
    return P;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> p1_points(std::uint32_t p) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
    for (std::uint32_t a = 0; a < p; ++a) out.emplace_back(a, 1);
    out.emplace_back(1, 0);
    return out;
}

// binary evaluation s^i t^j with i <= a, j <= b
std::vector<std::uint32_t> eval_bidegree(const Genus4Point& P, int a, int b, std::uint32_t p) {
    const auto sv = forms::eval_monomials({P.s0, P.s1}, a, p);
    const auto tv = forms::eval_monomials({P.t0, P.t1}, b, p);
    std::vector<std::uint32_t> out;
    for (auto u : sv)
        for (auto v : tv) out.push_back(fp::mul(u, v, p));
    return out;
}

}  // namespace

Genus4Curve make_genus4(std::uint32_t p, std::vector<std::uint32_t> cubic) {
    Prime checked(p);
    if (cubic.size() != forms::monomials(4, 3).size()) throw std::invalid_argument("cubic needs 20 coefficients");
    for (auto& v : cubic) v %= p;
    Genus4Curve c;
    c.p = p;
    c.cubic = std::move(cubic);
    // On the line tau (s0,0,s1,0) + (0,s0,0,s1) the cubic is a polynomial in tau.
    for (const auto& [s0, s1] : p1_points(p)) {
        std::vector<poly::Poly> line = {{0, s0}, {s0}, {0, s1}, {s1}};
        const poly::Poly g = forms::series_form(c.cubic, line, 3, 4, p);
        poly::Poly gt = g;
        poly::trim(gt);
        if (gt.empty()) throw std::invalid_argument("cubic contains a ruling line");
        for (auto tau : poly::roots(gt, p)) c.points.push_back(make_point(s0, s1, tau, 1, p));
        if (poly::deg(gt) < 3) c.points.push_back(make_point(s0, s1, 1, 0, p));
    }
    std::vector<std::vector<std::uint32_t>> grad;
    for (int k = 0; k < 4; ++k) grad.push_back(forms::derivative(c.cubic, 4, 3, k, p));
    c.smooth = true;
    for (const auto& P : c.points) {
        const auto& x = P.x;
        // gradient of x0 x3 - x1 x2
        const std::vector<std::uint32_t> gq = {x[3], fp::neg(x[2], p), fp::neg(x[1], p), x[0]};
        std::vector<std::uint32_t> gc;
        for (const auto& gk : grad) gc.push_back(forms::eval_form(gk, x, 2, p));
        const std::vector<FpVector> rows = {gq, gc};
        if (rank(FieldMatrix::from_rows(Prime(p), 4, rows)) < 2) {
            c.smooth = false;
            break;
        }
    }
    return c;
}

Genus4Curve genus4_sample(std::uint32_t p, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint32_t> coef(0, p - 1);
    for (int attempt = 0; attempt < 100; ++attempt) {
        std::vector<std::uint32_t> F(20);
        for (auto& v : F) v = coef(rng);
        Genus4Curve c;
        try {
            c = make_genus4(p, F);
        } catch (const std::invalid_argument&) {
            continue;
        }
        if (c.smooth && c.points.size() >= 40) {
            c.seed = seed;
            return c;
        }
    }
    throw std::runtime_error("genus4_sample: resampling budget exhausted");
}

long h0_bidegree(const Genus4Curve& c, int a, int b, const std::vector<Genus4Point>& pts) {
    if (a < 0 || b < 0 || a > 2 || b > 2) throw std::invalid_argument("h0_bidegree: bidegree out of range");
    const long total = (a + 1) * (b + 1);
    if (pts.empty()) return total;
    std::vector<FpVector> rows;
    for (const auto& P : pts) rows.push_back(eval_bidegree(P, a, b, c.p));
    return total - static_cast<long>(rank(FieldMatrix::from_rows(Prime(c.p), static_cast<std::size_t>(total), rows)));
}

std::vector<FpVector> genus4_sections(const Genus4Curve& c, int q, const std::vector<Genus4Point>& samples) {
    const std::size_t nm = forms::monomials(4, q).size();
    std::vector<FpVector> out(nm, FpVector(samples.size(), 0));
    for (std::size_t s = 0; s < samples.size(); ++s) {
        const auto vals = forms::eval_monomials(samples[s].x, q, c.p);
        for (std::size_t m = 0; m < nm; ++m) out[m][s] = vals[m];
    }
    return out;
}

std::vector<Genus4Point> a_fibre(const Genus4Curve& c, const Genus4Point& P) {
    std::vector<Genus4Point> out;
    for (const auto& Q : c.points)
        if (Q.s0 == P.s0 && Q.s1 == P.s1) out.push_back(Q);
    return out;
}

DiffconReport diffcon_g4_check(const Genus4Curve& c, long samples, std::uint64_t seed) {
    DiffconReport r;
    r.deg_L = 0;  // deg K - 2 deg A = 6 - 6
    std::vector<Genus4Point> split;
    for (const auto& P : c.points)
        if (a_fibre(c, P).size() == 3) split.push_back(P);
    if (split.empty()) return r;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, split.size() - 1);
    // Riemann-Roch with K - L = 2A, resp. K - L' = A + A':
    //   h0(L + x + y) = h0(O(2,0) - x - y) - 1,  h0(L + y) = h0(O(2,0) - y) - 2
    for (long k = 0; k < samples; ++k) {
        const Genus4Point x = split[pick(rng)];
        ++r.sampled;
        bool member = false, in_fibre = false, mixed = false;
        for (const auto& y : c.points) {
            if (y == x) continue;
            if (!member && h0_bidegree(c, 2, 0, {x, y}) - 1 >= 1) {
                member = true;
                in_fibre = y.s0 == x.s0 && y.s1 == x.s1;
            }
            if (!mixed && h0_bidegree(c, 1, 1, {x, y}) - 1 >= 1) mixed = true;
            if (member && mixed) break;
        }
        r.plus_x_members += member;
        r.witness_in_fibre += in_fibre;
        r.mixed_plus_x_members += mixed;
    }
    for (const auto& y : c.points) {
        ++r.points_checked;
        if (h0_bidegree(c, 2, 0, {y}) - 2 >= 1) ++r.single_point_hits;
        if (h0_bidegree(c, 1, 1, {y}) - 2 >= 1) ++r.mixed_single_point_hits;
    }
    r.pass = r.plus_x_members == r.sampled && r.single_point_hits == 0;
    return r;
}

}  // namespace syzygy::curve
