#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "syzygy/koszul.hpp"

using namespace syzygy;
using namespace syzygy::koszul;

namespace {

long binom(long n, long k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (long j = 1; j <= k; ++j) r = r * (n - k + j) / j;
    return r;
}

}  // namespace

TEST_CASE("rational normal curves: Eagon-Northcott numbers") {
    for (long d = 2; d <= 6; ++d) {
        const auto r = rational_normal_curve(d, 1009, d, 3);
        const auto t = betti_table(r, d, 2);
        CHECK(t.at(0, 0) == 1);
        for (long p = 1; p <= d - 1; ++p) {
            INFO("d=" << d << " p=" << p);
            CHECK(t.at(p, 1) == p * binom(d, p + 1));
            CHECK(t.at(p, 2) == 0);
        }
        CHECK(euler_diagonal_check(t, 0, d));
        CHECK(naturality_check(t));
    }
}

TEST_CASE("plane quartic and genus 4 canonical curves are complete intersections") {
    const auto q = model_from_spec("quartic seed=3", 1009, 4);
    const auto tq = betti_table(q, 2, 3);
    for (long p = 0; p <= 2; ++p)
        for (long k = 0; k <= 3; ++k) CHECK(tq.at(p, k) == ((p == 0 && k == 0) || (p == 1 && k == 3) ? 1 : 0));

    const auto c = model_from_spec("genus4 seed=2", 1009, 4);
    const auto tc = betti_table(c, 3, 3);
    CHECK(tc.at(1, 1) == 1);
    CHECK(tc.at(1, 2) == 1);
    CHECK(tc.at(2, 3) == 1);
    CHECK(tc.at(2, 1) == 0);
    CHECK(tc.at(2, 2) == 0);
}

TEST_CASE("differential squares to zero and ranks are basis independent") {
    const auto r = model_from_spec("hyp g=3 seed=4", 1009, 3);
    for (long p = 1; p <= 3; ++p) {
        const auto d1 = koszul_differential(r, p, 1), d2 = koszul_differential(r, p - 1, 2);
        CHECK((d1 * d2).nnz() == 0);
    }
    const auto s = change_basis(r, 77);
    for (long p = 0; p <= 4; ++p)
        for (long q = 0; q <= 2; ++q) CHECK(koszul_dim(r, p, q) == koszul_dim(s, p, q));
}

TEST_CASE("nonspecial hyperelliptic tables satisfy the diagonal formula") {
    for (long g = 2; g <= 4; ++g) {
        const auto r = model_from_spec("hyp g=" + std::to_string(g) + " seed=1", 1009, 3);
        REQUIRE(r.nonspecial);
        const auto t = betti_table(r, static_cast<long>(r.dimV()) - 1, 2);
        std::vector<std::string> why;
        CHECK(euler_diagonal_check(t, g, 2 * g, &why));
    }
}

TEST_CASE("Prym-Green predicted table at g=7") {
    const auto t = prym_green_predicted(7);
    CHECK(t.at(1, 1) == 3);
    CHECK(t.at(1, 2) == 8);
    CHECK(t.at(2, 2) == 27);
    CHECK(t.at(3, 2) == 24);
    CHECK(t.at(4, 2) == 7);
    CHECK(naturality_check(t));
    CHECK(mixed_columns(t) == std::vector<long>{1});
    CHECK(euler_diagonal_check(t, 7, 12));
    for (long g = 9; g <= 35; g += 2) {
        const auto u = prym_green_predicted(g);
        CHECK(mixed_columns(u).size() == 1);
        for (const auto& [pq, b] : u.entries) CHECK(b >= 0);
    }
    CHECK_THROWS(prym_green_predicted(8));
}

TEST_CASE("scroll syzygies at genus 5") {
    const auto c = curve::hyperelliptic_sample(1009, 5, 3);
    std::mt19937_64 rng(3);
    curve::Divisor L;
    do L = curve::random_effective(c, 10, rng);
    while (curve::h0(c, c.canonical() - L) != 0);
    const auto s = scroll_syzygies(c, L, 3);
    CHECK(s.quadrics.size() == 2);
    CHECK(s.quadric_rank == 2);
    CHECK(s.quadrics_vanish);
    CHECK(s.gammas.size() == 2);
    CHECK(s.cycles_verified);
    CHECK(s.koszul_i1 >= 2);
    CHECK(s.pass);
}

TEST_CASE("model specs and limits") {
    CHECK_THROWS_AS(model_from_spec("torus", 1009, 2), std::invalid_argument);
    CHECK_THROWS_AS(model_from_spec("rnc q=3", 1009, 2), std::invalid_argument);
    const auto big = rational_normal_curve(30, 1009, 1, 1);
    CHECK_THROWS_AS(koszul_dim(big, 15, 0), std::length_error);
    const auto r = rational_normal_curve(3, 1009, 1, 2);
    CHECK_THROWS_AS(koszul_dim(r, 1, 2), std::out_of_range);
    const auto j = to_json(betti_table(r, 2, 1));
    CHECK(j.at("g") == 0);
    CHECK(j.at("entries").is_array());
    CHECK(pretty(betti_table(r, 2, 1)).find("total") != std::string::npos);
}
