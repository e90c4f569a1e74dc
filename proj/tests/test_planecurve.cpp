#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "syzygy/forms.hpp"
#include "syzygy/genus4.hpp"
#include "syzygy/planecurve.hpp"

using namespace syzygy;
using namespace syzygy::curve;

namespace {

// all points of P^2(F_p) with last nonzero coordinate 1
std::vector<ProjPoint> brute_points(const PlaneQuartic& q) {
    std::vector<ProjPoint> out;
    const std::uint32_t p = q.p;
    auto test = [&](ProjPoint P) {
        if (forms::eval_form(q.F, P, 4, p) == 0) out.push_back(P);
    };
    for (std::uint32_t x = 0; x < p; ++x)
        for (std::uint32_t y = 0; y < p; ++y) test({x, y, 1});
    for (std::uint32_t x = 0; x < p; ++x) test({x, 1, 0});
    test({1, 0, 0});
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("rational points match exhaustive search") {
    for (std::uint32_t p : {101u, 1009u}) {
        const auto q = plane_quartic_sample(p, 3);
        CHECK(q.smooth);
        CHECK(q.points == brute_points(q));
        CHECK(within_weil_bound(q));
    }
    const auto f = fermat_quartic(1009);
    CHECK(f.points == brute_points(f));
    CHECK(within_weil_bound(f));
}

TEST_CASE("singular quartic detected") {
    // x^4 + y^4 - x^2 z^2 (node at (0:0:1))
    const auto mons = forms::monomials(3, 4);
    std::vector<std::uint32_t> F(mons.size(), 0);
    for (std::size_t k = 0; k < mons.size(); ++k) {
        if (mons[k] == forms::Exponent{4, 0, 0} || mons[k] == forms::Exponent{0, 4, 0}) F[k] = 1;
        if (mons[k] == forms::Exponent{2, 0, 2}) F[k] = 1008;
    }
    CHECK_FALSE(make_quartic(1009, F).smooth);
}

TEST_CASE("section counts") {
    const auto q = plane_quartic_sample(1009, 5);
    std::mt19937_64 rng(1);
    auto pts = q.points;
    std::shuffle(pts.begin(), pts.end(), rng);
    const std::vector<ProjPoint> samples(pts.begin() + 10, pts.begin() + 40);
    for (int d = 1; d <= 3; ++d) {
        const auto rows = quartic_sections(q, d, {}, 1, samples);
        CHECK(static_cast<long>(echelon(1009, samples.size(), rows).dim()) == (d + 1) * (d + 2) / 2);
    }
    // five general points impose independent conditions on conics
    const std::vector<ProjPoint> E5(pts.begin(), pts.begin() + 5);
    CHECK(conics_through(q, E5) == 1);
    const auto line = split_line(q, rng);
    REQUIRE(line.size() == 4);
    // the line times any line through a fifth point
    std::vector<ProjPoint> E = line;
    E.push_back(pts[20]);
    CHECK(conics_through(q, E) >= 1);
}

TEST_CASE("local branches lie on the curve") {
    const auto q = plane_quartic_sample(1009, 7);
    for (std::size_t k = 0; k < 5; ++k) {
        const auto br = local_branch(q, q.points[k * 7], 6);
        std::vector<poly::Poly> pt(br.begin(), br.end());
        CHECK(poly::series::valuation(forms::series_form(q.F, pt, 4, 6, 1009), 6) == 6);
    }
}

TEST_CASE("genus 4 canonical curve") {
    const auto c = genus4_sample(1009, 2);
    CHECK(c.smooth);
    for (const auto& P : c.points) {
        const auto& x = P.x;
        CHECK(fp::mul(x[0], x[3], 1009) == fp::mul(x[1], x[2], 1009));
        CHECK(forms::eval_form(c.cubic, x, 3, 1009) == 0);
    }
    CHECK(h0_bidegree(c, 1, 0, {}) == 2);
    CHECK(h0_bidegree(c, 1, 1, {}) == 4);
    CHECK(h0_bidegree(c, 2, 1, {}) == 6);
    const auto r = diffcon_g4_check(c, 10, 1);
    CHECK(r.pass);
    CHECK(r.sampled == 10);
    CHECK(r.plus_x_members == r.sampled);
    CHECK(r.single_point_hits == 0);
}
