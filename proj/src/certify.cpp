#include "syzygy/certify.hpp"

#include <cmath>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace syzygy::lattice {

namespace {

constexpr std::int64_t kBoxRadius = 12;

long need(const Params& p, const std::string& key) {
    auto it = p.find(key);
    if (it == p.end()) throw std::invalid_argument("missing parameter: " + key);
    return it->second;
}

long get_or(const Params& p, const std::string& key, long dflt) {
    auto it = p.find(key);
    return it == p.end() ? dflt : it->second;
}

void check(Certificate& c, std::string what, std::int64_t lhs, std::int64_t rhs, bool holds) {
    c.bounds.push_back({std::move(what), lhs, rhs, holds});
}

void fail(Certificate& c, const LatticeClass& x) {
    if (!c.counterexample) c.counterexample = x;
}

void finish(Certificate& c) {
    bool bounds_ok = true;
    for (const auto& b : c.bounds) bounds_ok = bounds_ok && b.holds;
    c.pass = bounds_ok && !c.counterexample && c.candidates_checked == c.candidates_expected &&
             c.candidates_checked > 0;
}

void for_each_in_box(const Box& box, const std::function<void(const LatticeClass&)>& fn) {
    const std::uint64_t total = box.size();
    if (total > kMaxBoxSize) throw std::invalid_argument("search box exceeds size cap");
    if (total == 0) return;
    LatticeClass x(box.lo);
    for (std::uint64_t s = 0; s < total; ++s) {
        fn(x);
        for (std::size_t a = x.size(); a-- > 0;) {
            if (x[a] < box.hi[a]) {
                ++x[a];
                break;
            }
            x[a] = box.lo[a];
        }
    }
}

// Run enumerate_classes over the standard cube; every hit is an obstruction.
void cube_search(Certificate& c, const GramLattice& lat, std::int64_t self_int,
                 const std::vector<LinearConstraint>& cons) {
    std::uint64_t visited = 0;
    const Box box = Box::cube(lat.rank, kBoxRadius);
    auto hits = enumerate_classes(lat, self_int, cons, box, &visited);
    c.candidates_checked += visited;
    c.candidates_expected += box.size();
    if (!hits.empty()) fail(c, hits.front());
}

struct OddParams {
    long g, p, i;
};

OddParams theta_params(const Params& ps) {
    const long g = need(ps, "g"), p = need(ps, "p");
    if (g < 3 || g % 2 == 0 || g > 41) throw std::invalid_argument("theta lemmas need odd 3 <= g <= 41");
    const long i = (g - 1) / 2;
    if (p < 1 || p < i - 1 || p > 20) throw std::invalid_argument("theta lemmas need max(1,i-1) <= p <= 20");
    return {g, p, i};
}

OddParams xi_params(const Params& ps) {
    const long g = need(ps, "g"), p = need(ps, "p");
    if (g < 4 || g % 2 != 0 || g > 40) throw std::invalid_argument("xi lemmas need even 4 <= g <= 40");
    const long i = g / 2;
    if (p < i - 1 || p > 20) throw std::invalid_argument("xi lemmas need i-1 <= p <= 20");
    return {g, p, i};
}

long nikulin_g(const Params& ps) {
    const long g = need(ps, "g");
    if (g < 11 || g % 2 == 0 || g > 41) throw std::invalid_argument("Nikulin lemmas need odd 11 <= g <= 41");
    return g;
}

// ---------------------------------------------------------------------------
// Odd genus

void theta_div4(Certificate& c, const Params& ps) {
    const auto [g, p, i] = theta_params(ps);
    const GramLattice hat = make_lattice(Kind::theta_hat, g, p);
    const GramLattice th = make_lattice(Kind::theta, g, p);
    c.lattice_name = hat.name;
    c.search_bounds = "all aH+b*eta+cE with |a|,|b|,|c| <= 12: square equals 4a^2(p+1)-4b^2+4ab(p-i)+4ac and is 0 mod 4; "
                      "(-2)-classes of Theta in |a|,|b| <= 12";
    check(c, "div4_criterion(theta_hat)", div4_criterion(hat), 1, div4_criterion(hat));
    const Box box = Box::cube(3, kBoxRadius);
    for_each_in_box(box, [&](const LatticeClass& x) {
        const std::int64_t a = x[0], b = x[1], e = x[2];
        const std::int64_t sq = self(hat, x);
        const std::int64_t formula = 4 * a * a * (p + 1) - 4 * b * b + 4 * a * b * (p - i) + 4 * a * e;
        if (sq != formula || sq % 4 != 0) fail(c, x);
        ++c.candidates_checked;
    });
    c.candidates_expected += box.size();
    cube_search(c, th, -2, {});
}

void theta_bn(Certificate& c, const Params& ps) {
    const auto [g, p, i] = theta_params(ps);
    (void)i;
    const GramLattice th = make_lattice(Kind::theta, g, p);
    const GramLattice hat = make_lattice(Kind::theta_hat, g, p);
    c.lattice_name = th.name;
    const std::int64_t B = 2 * p + 2;
    c.search_bounds = "H = A1 + A2, A1 = a1*H + b1*eta, a1 in {0,1} (a_i >= 0 from E-intersection), |b1| <= " +
                      std::to_string(B) + "; obstruction iff both A_i nonzero with (A_i)^2 >= 0";
    // a_i >= 0: classes aH + b eta with a < 0 meet E negatively
    const LatticeClass E = hat.unit("E");
    check(c, "(-H + 0 eta).E < 0", pairing(hat, {-1, 0, 0}, E), 0, pairing(hat, {-1, 0, 0}, E) < 0);
    const LatticeClass H = th.unit("H");
    for (std::int64_t a1 = 0; a1 <= 1; ++a1)
        for (std::int64_t b1 = -B; b1 <= B; ++b1) {
            const LatticeClass A1 = {a1, b1};
            const LatticeClass A2 = add(H, scale(-1, A1));
            const bool nz1 = A1 != th.zero(), nz2 = A2 != th.zero();
            if (nz1 && nz2 && self(th, A1) >= 0 && self(th, A2) >= 0) fail(c, A1);
            ++c.candidates_checked;
        }
    c.candidates_expected += 2 * static_cast<std::uint64_t>(2 * B + 1);
}

void theta_hypvanodd(Certificate& c, const Params& ps) {
    const auto [g, p, i] = theta_params(ps);
    const GramLattice hat = make_lattice(Kind::theta_hat, g, p);
    c.lattice_name = hat.name;
    c.search_bounds = "j = 0.." + std::to_string(p) + ": ((2p+2-j)E+eta)^2 = -4 and ((2p+2-j)E+eta-H)^2 = 4(i+j)-8p-8 <= -4";
    const LatticeClass H = hat.unit("H"), eta = hat.unit("eta"), E = hat.unit("E");
    check(c, "4(i-p)-8 <= -4", 4 * (i - p) - 8, -4, 4 * (i - p) - 8 <= -4);
    for (long j = 0; j <= p; ++j) {
        const LatticeClass v = add(scale(2 * p + 2 - j, E), eta);
        const LatticeClass w = add(v, scale(-1, H));
        const std::int64_t v2 = self(hat, v), w2 = self(hat, w);
        if (v2 != -4 || w2 != 4 * (i + j) - 8 * p - 8 || w2 > -4) fail(c, v);
        ++c.candidates_checked;
    }
    c.candidates_expected = static_cast<std::uint64_t>(p + 1);
}

// ---------------------------------------------------------------------------
// Even genus

void xi_E_nef(Certificate& c, const Params& ps) {
    const auto [g, p, i] = xi_params(ps);
    (void)i;
    const GramLattice hat = make_lattice(Kind::xi_hat, g, p);
    c.lattice_name = hat.name;
    c.search_bounds = "(-2)-classes R with R.E < 0 and R.H >= 0 in |a|,|b|,|c| <= 12; "
                      "-4c^2 = -2 + a^2(4p+4) - 2a(R.H) > 0 for a <= -1, R.H >= 0";
    check(c, "-2 + (4p+4) > 0 (minimum at a=-1, R.H=0)", -2 + 4 * p + 4, 0, -2 + 4 * p + 4 > 0);
    cube_search(c, hat, -2, {{hat.unit("E"), Cmp::lt, 0}, {hat.unit("H"), Cmp::ge, 0}});
}

void xi_H_bpf(Certificate& c, const Params& ps) {
    const auto [g, p, i] = xi_params(ps);
    (void)i;
    const GramLattice hat = make_lattice(Kind::xi_hat, g, p);
    c.lattice_name = hat.name;
    c.search_bounds = "F^2 = 0, F.H = 1, F.E >= 0 in |a|,|b|,|c| <= 12; -4c^2 = a(a(4p+4)-2) > 0 for a >= 1";
    check(c, "(4p+4) - 2 > 0 (a = 1)", 4 * p + 2, 0, 4 * p + 2 > 0);
    cube_search(c, hat, 0, {{hat.unit("H"), Cmp::eq, 1}, {hat.unit("E"), Cmp::ge, 0}});
}

void xi_lattice1(Certificate& c, const Params& ps) {
    const auto [g, p, i] = xi_params(ps);
    (void)i;
    const GramLattice hat = make_lattice(Kind::xi_hat, g, p);
    c.lattice_name = hat.name;
    c.search_bounds = "R = xE + y*eta, |x|,|y| <= 12: R^2 = -4y^2 != -2; (-2)-classes with R.E = 0 in the cube";
    const LatticeClass E = hat.unit("E"), eta = hat.unit("eta");
    for (std::int64_t x = -kBoxRadius; x <= kBoxRadius; ++x)
        for (std::int64_t y = -kBoxRadius; y <= kBoxRadius; ++y) {
            const LatticeClass R = add(scale(x, E), scale(y, eta));
            const std::int64_t r2 = self(hat, R);
            if (r2 != -4 * y * y || r2 == -2) fail(c, R);
            ++c.candidates_checked;
        }
    c.candidates_expected += static_cast<std::uint64_t>((2 * kBoxRadius + 1) * (2 * kBoxRadius + 1));
    cube_search(c, hat, -2, {{E, Cmp::eq, 0}});
}

void xi_A_nef(Certificate& c, const Params& ps) {
    const auto [g, p, i] = xi_params(ps);
    const GramLattice hat = make_lattice(Kind::xi_hat, g, p);
    c.lattice_name = hat.name;
    const LatticeClass H = hat.unit("H"), eta = hat.unit("eta"), E = hat.unit("E");
    const std::int64_t C = 4 * p + 4;
    auto A2 = [&](std::int64_t cc) { return self(hat, add(H, scale(cc, eta))); };
    c.search_bounds = "A = H + c*eta with A^2 >= 0 (|c| <= " + std::to_string(C) +
                      ", concavity re-checked at the edges); R = A + yE, -(A^2+2)/4 - 1 <= y <= -1; "
                      "obstruction iff R^2 = -2 and R.A < 0";
    check(c, "A^2 < 0 at c = C+1", A2(C + 1), 0, A2(C + 1) < 0);
    check(c, "A^2 < 0 at c = -C-1", A2(-C - 1), 0, A2(-C - 1) < 0);
    (void)i;
    for (std::int64_t cc = -C; cc <= C; ++cc) {
        const LatticeClass A = add(H, scale(cc, eta));
        const std::int64_t a2 = self(hat, A);
        if (a2 < 0) continue;
        const std::int64_t ylo = -(a2 + 2) / 4 - 1;
        for (std::int64_t y = ylo; y <= -1; ++y) {
            const LatticeClass R = add(A, scale(y, E));
            const std::int64_t r2 = self(hat, R), ra = pairing(hat, R, A);
            if (r2 != a2 + 4 * y || ra != a2 + 2 * y) fail(c, R);
            if (r2 == -2 && ra < 0) fail(c, R);
            ++c.candidates_checked;
            ++c.candidates_expected;
        }
    }
}

void xi_h1cor(Certificate& c, const Params& ps) {
    const auto [g, p, i] = xi_params(ps);
    const GramLattice hat = make_lattice(Kind::xi_hat, g, p);
    c.lattice_name = hat.name;
    c.search_bounds = "L^2 = 2g-2 > 0, eta^2 = -4, (H+eta)^2 = 4p + 2(2(p-i)+1) > 0";
    const LatticeClass H = hat.unit("H"), eta = hat.unit("eta");
    const LatticeClass L = add(H, scale(-1, eta));
    const std::int64_t l2 = self(hat, L), e2 = self(hat, eta), he2 = self(hat, add(H, eta));
    check(c, "L^2 = 2g-2", l2, 2 * g - 2, l2 == 2 * g - 2 && l2 > 0);
    check(c, "eta^2 = -4", e2, -4, e2 == -4);
    check(c, "(H+eta)^2 = 4p+2(2(p-i)+1) > 0", he2, 4 * p + 2 * (2 * (p - i) + 1),
          he2 == 4 * p + 2 * (2 * (p - i) + 1) && he2 > 0);
    c.candidates_checked = c.candidates_expected = 3;
}

void xi_L_bpf(Certificate& c, const Params& ps) {
    const auto [g, p, i] = xi_params(ps);
    (void)i;
    const GramLattice hat = make_lattice(Kind::xi_hat, g, p);
    c.lattice_name = hat.name;
    const LatticeClass L = add(hat.unit("H"), scale(-1, hat.unit("eta")));
    c.search_bounds = "F^2 = 0, F.L = 1, F.E >= 0 in |a|,|b|,|c| <= 12; -4(c+a)^2 = a(a(2g-2)-2) > 0 for a >= 1";
    check(c, "2g-4 > 0 (a = 1)", 2 * g - 4, 0, 2 * g - 4 > 0);
    cube_search(c, hat, 0, {{L, Cmp::eq, 1}, {hat.unit("E"), Cmp::ge, 0}});
}

void xi_B_not_effective(Certificate& c, const Params& ps) {
    const auto [g, p, i] = xi_params(ps);
    const GramLattice hat = make_lattice(Kind::xi_hat, g, p);
    c.lattice_name = hat.name;
    const LatticeClass H = hat.unit("H"), eta = hat.unit("eta"), E = hat.unit("E");
    c.search_bounds = "j = 0..p: B = H-(2p+2-j)E-eta, B^2 = 4(i+j)-8p-10 <= -6; residual R = H+bE-eta with "
                      "b <= -(2p+2-j) (window of 2p+3 values), R^2 = 4(b+i)-2 != -2";
    (void)g;
    for (long j = 0; j <= p; ++j) {
        const LatticeClass B = add(add(H, scale(-(2 * p + 2 - j), E)), scale(-1, eta));
        const std::int64_t b2 = self(hat, B);
        check(c, "B^2 = 4(i+j)-8p-10 <= -6 at j=" + std::to_string(j), b2, 4 * (i + j) - 8 * p - 10,
              b2 == 4 * (i + j) - 8 * p - 10 && b2 <= -6);
        const std::int64_t bmax = -(2 * p + 2 - j);
        for (std::int64_t b = bmax - (2 * p + 2); b <= bmax; ++b) {
            const LatticeClass R = add(add(H, scale(b, E)), scale(-1, eta));
            const std::int64_t r2 = self(hat, R);
            if (r2 != 4 * (b + i) - 2 || r2 == -2) fail(c, R);
            ++c.candidates_checked;
            ++c.candidates_expected;
        }
    }
}

// ---------------------------------------------------------------------------
// Nikulin

struct Nik {
    long g;
    GramLattice lat;
    std::vector<std::array<std::int64_t, 8>> cs;
    NikulinView L, E, e, H;
};

Nik nikulin_setup(Certificate& c, long g) {
    Nik n{g, make_lattice(Kind::nikulin_t_hat, g), nikulin_small_c(g, 4), {}, {}, {}, {}};
    n.L.a = 1;
    n.E.b = 1;
    n.e.c2.fill(1);
    n.H.a = 1;
    n.H.c2.fill(-1);
    c.lattice_name = n.lat.name;
    check(c, "admissible c-vectors with sum (2c_j)^2 <= 4", static_cast<std::int64_t>(n.cs.size()), 17,
          n.cs.size() == 17);
    return n;
}

bool nonpositive(const std::array<std::int64_t, 8>& c2) {
    for (auto v : c2)
        if (v > 0) return false;
    return true;
}

std::int64_t sum_sq(const std::array<std::int64_t, 8>& c2) {
    std::int64_t s = 0;
    for (auto v : c2) s += v * v;
    return s;
}

std::int64_t sum_abs(const std::array<std::int64_t, 8>& c2) {
    std::int64_t s = 0;
    for (auto v : c2) s += v < 0 ? -v : v;
    return s;
}

// Integer roots of A a^2 + B a + C = 0.
std::vector<std::int64_t> int_roots(std::int64_t A, std::int64_t B, std::int64_t C) {
    std::vector<std::int64_t> out;
    if (A == 0) {
        if (B != 0 && C % B == 0) out.push_back(-C / B);
        return out;
    }
    const std::int64_t D = B * B - 4 * A * C;
    if (D < 0) return out;
    auto s = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<long double>(D))));
    while (s * s > D) --s;
    while ((s + 1) * (s + 1) <= D) ++s;
    if (s * s != D) return out;
    for (std::int64_t num : {-B + s, -B - s})
        if (num % (2 * A) == 0) out.push_back(num / (2 * A));
    if (out.size() == 2 && out[0] == out[1]) out.pop_back();
    return out;
}

NikulinView make_view(std::int64_t a, std::int64_t b, const std::array<std::int64_t, 8>& c2) {
    NikulinView v;
    v.a = a;
    v.b = b;
    v.c2 = c2;
    return v;
}

bool is_minus_N(const NikulinView& v) {
    if (v.a != 0 || v.b != 0) return false;
    int neg = 0;
    for (auto x : v.c2) {
        if (x == -2) ++neg;
        else if (x != 0) return false;
    }
    return neg == 1;
}

void nikulin_H_nef(Certificate& c, const Params& ps) {
    Nik n = nikulin_setup(c, nikulin_g(ps));
    const long g = n.g;
    c.search_bounds = "c-vectors with sum (2c_j)^2 <= 4, c_j <= 0; 0 <= k < sum|c_j|; integer a with "
                      "(2g-2)a^2 - 2ka + 2 sum c_j^2 - 2 = 0, b = (k - a(2g-2))/2; -N_l rejected as anti-effective";
    check(c, "4(g-1) <= 5(g-3) so sum (2c_j)^2 < 4(g-1)/(g-3) gives <= 4", 4 * (g - 1), 5 * (g - 3),
          4 * (g - 1) <= 5 * (g - 3));
    for (const auto& c2 : n.cs) {
        ++c.candidates_expected;
        ++c.candidates_checked;
        if (!nonpositive(c2)) continue;  // Gamma.N_j >= 0
        const std::int64_t S2 = sum_abs(c2);  // 2 * sum |c_j|
        const std::int64_t T = sum_sq(c2) / 2 - 2;  // 2 sum c_j^2 - 2
        for (std::int64_t k = 0; 2 * k < S2; ++k) {
            ++c.candidates_expected;
            ++c.candidates_checked;
            for (std::int64_t a : int_roots(2 * g - 2, -2 * k, T)) {
                const std::int64_t num = k - a * (2 * g - 2);
                if (num % 2 != 0) continue;
                const NikulinView G = make_view(a, num / 2, c2);
                const LatticeClass x = from_view(n.lat, G);
                const auto hb = hodge_index_bound(n.lat, from_view(n.lat, n.L), from_view(n.lat, make_view(a, num / 2, {})));
                check(c, "Hodge index at k=" + std::to_string(k), hb.lhs, hb.rhs, hb.holds);
                if (view_pairing(g, G, G) != -2 || view_pairing(g, G, n.L) != k) fail(c, x);
                if (view_pairing(g, G, n.H) < 0 && !is_minus_N(G)) fail(c, x);
            }
        }
    }
}

void nikulin_H_bpf(Certificate& c, const Params& ps) {
    Nik n = nikulin_setup(c, nikulin_g(ps));
    const long g = n.g;
    c.search_bounds = "c-vectors with sum (2c_j)^2 <= 4, c_j <= 0; k = 1 + sum|c_j|; integer a with "
                      "(2g-2)a^2 - 2ka + 2 sum c_j^2 = 0, b = (k - a(2g-2))/2 integral";
    check(c, "(4(g-1)-12)/4 > 1 forces sum (2c_j)^2 = 0", 4 * (g - 1) - 12, 4, 4 * (g - 1) - 12 > 4);
    for (const auto& c2 : n.cs) {
        ++c.candidates_expected;
        ++c.candidates_checked;
        if (!nonpositive(c2)) continue;
        const std::int64_t S2 = sum_abs(c2);
        if (S2 % 2 != 0) continue;
        const std::int64_t k = 1 + S2 / 2;
        for (std::int64_t a : int_roots(2 * g - 2, -2 * k, sum_sq(c2) / 2)) {
            const std::int64_t num = k - a * (2 * g - 2);
            if (num % 2 != 0) continue;
            const NikulinView F = make_view(a, num / 2, c2);
            if (view_pairing(g, F, F) == 0 && view_pairing(g, F, n.H) == 1) fail(c, from_view(n.lat, F));
        }
    }
}

void nikulin_E_elliptic(Certificate& c, const Params& ps) {
    Nik n = nikulin_setup(c, nikulin_g(ps));
    const long g = n.g;
    c.search_bounds = "R = aL+bE+sum c_j N_j with -g <= a <= -1, b in {-a(g-1), 1-a(g-1)}, c-vectors with "
                      "sum (2c_j)^2 <= 4 and c_j <= 0; obstruction iff R^2 = -2";
    check(c, "8/(2g-2) < 1 so (2g-2)(2 sum c_j^2 - 2) <= 4 gives sum (2c_j)^2 <= 4", 8, 2 * g - 2, 8 < 2 * g - 2);
    for (std::int64_t a = -g; a <= -1; ++a)
        for (std::int64_t b : {-a * (g - 1), 1 - a * (g - 1)})
            for (const auto& c2 : n.cs) {
                ++c.candidates_expected;
                ++c.candidates_checked;
                if (!nonpositive(c2)) continue;
                const NikulinView R = make_view(a, b, c2);
                if (view_pairing(g, R, R) == -2 && view_pairing(g, R, n.E) < 0) fail(c, from_view(n.lat, R));
            }
}

void nikulin_L_half_bpf(Certificate& c, const Params& ps) {
    Nik n = nikulin_setup(c, nikulin_g(ps));
    const long g = n.g;
    const std::int64_t h = (g - 1) / 2;
    const NikulinView M = make_view(1, -h, {});
    c.search_bounds = "R = L+bE+sum c_j N_j, -(g-1)/2-(g+1) <= b <= -(g-1)/2, c-vectors with sum (2c_j)^2 <= 4 "
                      "and c_j <= 0; obstruction iff R^2 = -2 and R.M < 0 for M = L-(g-1)/2 E";
    check(c, "M^2 = 0", view_pairing(g, M, M), 0, view_pairing(g, M, M) == 0);
    check(c, "L.M = g-1", view_pairing(g, n.L, M), g - 1, view_pairing(g, n.L, M) == g - 1);
    for (std::int64_t b = -h - (g + 1); b <= -h; ++b)
        for (const auto& c2 : n.cs) {
            ++c.candidates_expected;
            ++c.candidates_checked;
            if (!nonpositive(c2)) continue;
            const NikulinView R = make_view(1, b, c2);
            const std::int64_t r2 = view_pairing(g, R, R), rm = view_pairing(g, R, M);
            if (r2 != 2 * g - 2 + 4 * b - sum_sq(c2) / 2 || rm != g - 1 + 2 * b) fail(c, from_view(n.lat, R));
            if (r2 == -2 && rm < 0) fail(c, from_view(n.lat, R));
        }
}

void nikulin_cE_minus_e(Certificate& c, const Params& ps) {
    Nik n = nikulin_setup(c, nikulin_g(ps));
    const long g = n.g;
    const long cmax = get_or(ps, "cmax", 5);
    if (cmax < 0 || cmax > 200) throw std::invalid_argument("cmax out of range");
    c.params["cmax"] = cmax;
    c.search_bounds = "c = -cmax..cmax; c < 0 by L-intersection, c = 0 since -e is L-orthogonal with negative "
                      "N-coefficients; c > 0: components R = bE - N_l with 0 <= b <= c reduce to (c-b)E - e";
    // c < 0
    for (long cc = -cmax; cc < 0; ++cc) {
        const NikulinView D = make_view(0, cc, [] { std::array<std::int64_t, 8> a{}; a.fill(-1); return a; }());
        const std::int64_t dl = view_pairing(g, D, n.L);
        check(c, "(cE-e).L < 0 at c=" + std::to_string(cc), dl, 0, dl < 0);
        ++c.candidates_checked;
        ++c.candidates_expected;
    }
    // c = 0
    {
        const NikulinView D = make_view(0, 0, [] { std::array<std::int64_t, 8> a{}; a.fill(-1); return a; }());
        check(c, "(-e).L = 0", view_pairing(g, D, n.L), 0, view_pairing(g, D, n.L) == 0);
        bool negative_coeff = false;
        for (auto v : D.c2) negative_coeff = negative_coeff || v < 0;
        check(c, "-e has a negative N-coefficient", negative_coeff, 1, negative_coeff);
        ++c.candidates_checked;
        ++c.candidates_expected;
    }
    // c > 0, by induction on c
    for (long cc = 1; cc <= cmax; ++cc) {
        std::array<std::int64_t, 8> me{};
        me.fill(-1);
        const NikulinView D = make_view(0, cc, me);
        check(c, "(cE-e)^2 = -4 at c=" + std::to_string(cc), view_pairing(g, D, D), -4, view_pairing(g, D, D) == -4);
        for (const auto& c2 : n.cs) {
            if (!nonpositive(c2) || sum_sq(c2) != 4) continue;  // sum c_j^2 = 1
            for (std::int64_t b = 0; b <= cc; ++b) {
                ++c.candidates_checked;
                ++c.candidates_expected;
                const NikulinView R = make_view(0, b, c2);
                if (view_pairing(g, R, R) != -2) fail(c, from_view(n.lat, R));
                if (b == 0) continue;  // -N_l is not effective
                if (view_pairing(g, R, D) >= 0) continue;
                // residual (c-b)E - e, certified above since 0 <= c-b < c
                if (cc - b < 0 || cc - b >= cc) fail(c, from_view(n.lat, R));
            }
        }
    }
}

using Runner = void (*)(Certificate&, const Params&);

const std::map<std::string, Runner>& registry() {
    static const std::map<std::string, Runner> r = {
        {"theta.div4", theta_div4},
        {"theta.bn_decomposition", theta_bn},
        {"theta.hypvanodd_arith", theta_hypvanodd},
        {"xi.E_nef", xi_E_nef},
        {"xi.H_bpf", xi_H_bpf},
        {"xi.lattice1", xi_lattice1},
        {"xi.A_nef", xi_A_nef},
        {"xi.h1cor", xi_h1cor},
        {"xi.L_bpf", xi_L_bpf},
        {"xi.B_not_effective", xi_B_not_effective},
        {"nikulin.H_nef", nikulin_H_nef},
        {"nikulin.H_bpf", nikulin_H_bpf},
        {"nikulin.E_elliptic", nikulin_E_elliptic},
        {"nikulin.L_half_bpf", nikulin_L_half_bpf},
        {"nikulin.cE_minus_e", nikulin_cE_minus_e},
    };
    return r;
}

}  // namespace

const std::vector<std::string>& lemma_ids() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> v;
        for (const auto& [k, f] : registry()) v.push_back(k);
        return v;
    }();
    return ids;
}

Certificate certify(const std::string& lemma_id, const Params& params) {
    auto it = registry().find(lemma_id);
    if (it == registry().end()) throw std::invalid_argument("unknown lemma: " + lemma_id);
    Certificate c;
    c.lemma_id = lemma_id;
    c.params = params;
    it->second(c, params);
    finish(c);
    return c;
}

std::vector<Params> default_grid(const std::string& lemma_id) {
    if (!registry().count(lemma_id)) throw std::invalid_argument("unknown lemma: " + lemma_id);
    std::vector<Params> out;
    if (lemma_id.rfind("theta.", 0) == 0) {
        for (long g = 3; g <= 41; g += 2) {
            const long i = (g - 1) / 2;
            for (long p = std::max(1L, i - 1); p <= 20; ++p) out.push_back({{"g", g}, {"p", p}});
        }
    } else if (lemma_id.rfind("xi.", 0) == 0) {
        for (long g = 4; g <= 40; g += 2) {
            const long i = g / 2;
            for (long p = i - 1; p <= 20; ++p) out.push_back({{"g", g}, {"p", p}});
        }
    } else {
        for (long g = 11; g <= 41; g += 2) out.push_back({{"g", g}});
    }
    return out;
}

nlohmann::json to_json(const Certificate& c) {
    nlohmann::json j;
    j["lemma_id"] = c.lemma_id;
    j["params"] = c.params;
    j["lattice"] = c.lattice_name;
    j["search_bounds"] = c.search_bounds;
    j["candidates_checked"] = c.candidates_checked;
    j["candidates_expected"] = c.candidates_expected;
    j["verdict"] = c.pass ? "pass" : (c.counterexample ? "counterexample" : "fail");
    if (c.counterexample) j["counterexample"] = *c.counterexample;
    nlohmann::json bs = nlohmann::json::array();
    for (const auto& b : c.bounds) bs.push_back({{"check", b.what}, {"lhs", b.lhs}, {"rhs", b.rhs}, {"holds", b.holds}});
    j["bound_checks"] = bs;
    return j;
}

}  // namespace syzygy::lattice
