#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "syzygy/lattice.hpp"

using namespace syzygy::lattice;

TEST_CASE("intersection forms") {
    const auto th = make_lattice(Kind::theta, 7, 3);
    CHECK(th.gram == std::vector<std::vector<std::int64_t>>{{16, 0}, {0, -4}});
    const auto H = th.unit("H"), eta = th.unit("eta");
    const auto L = add(H, scale(-1, eta));
    CHECK(pairing(th, H, L) == 16);
    CHECK(self(th, L) == 12);

    const auto xi = make_lattice(Kind::xi, 6, 3);
    CHECK(pairing(xi, xi.unit("H"), xi.unit("eta")) == 1);

    const auto nl = make_lattice(Kind::nikulin_lambda, 11);
    CHECK(pairing(nl, nl.unit("N1"), nl.unit("e")) == -1);
    CHECK(self(nl, nl.unit("e")) == -4);
    CHECK(self(nl, nl.unit("L")) == 20);
}

TEST_CASE("pairing is symmetric and bilinear") {
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<std::int64_t> c(-6, 6);
    for (const auto& lat : {make_lattice(Kind::xi_hat, 10, 7), make_lattice(Kind::nikulin_t_hat, 13)}) {
        for (int t = 0; t < 100; ++t) {
            LatticeClass x = lat.zero(), y = lat.zero(), z = lat.zero();
            for (int k = 0; k < lat.rank; ++k) x[k] = c(rng), y[k] = c(rng), z[k] = c(rng);
            CHECK(pairing(lat, x, y) == pairing(lat, y, x));
            CHECK(pairing(lat, add(x, scale(3, z)), y) == pairing(lat, x, y) + 3 * pairing(lat, z, y));
        }
    }
}

TEST_CASE("divisibility by four") {
    for (long g = 3; g <= 21; g += 2)
        for (long p = std::max(1L, (g - 1) / 2 - 1); p <= 8; ++p) CHECK(div4_criterion(make_lattice(Kind::theta_hat, g, p)));
    CHECK_FALSE(div4_criterion(make_lattice(Kind::xi, 8, 5)));
    CHECK_FALSE(div4_criterion(make_custom("A1", {{-2}})));
}

TEST_CASE("no (-2)-classes on theta_hat, by brute force over the same box") {
    const auto lat = make_lattice(Kind::theta_hat, 9, 4);
    CHECK(enumerate_classes(lat, -2, {}, Box::cube(3, 10)).empty());
    long brute = 0;
    for (std::int64_t a = -10; a <= 10; ++a)
        for (std::int64_t b = -10; b <= 10; ++b)
            for (std::int64_t c = -10; c <= 10; ++c) brute += self(lat, {a, b, c}) == -2;
    CHECK(brute == 0);
}

TEST_CASE("enumeration agrees with a brute-force count") {
    const auto lat = make_custom("hyp", {{0, 1}, {1, 0}});
    const auto found = enumerate_classes(lat, 0, {}, Box::cube(2, 5));
    long brute = 0;
    for (std::int64_t a = -5; a <= 5; ++a)
        for (std::int64_t b = -5; b <= 5; ++b) brute += 2 * a * b == 0;
    CHECK(static_cast<long>(found.size()) == brute);
    const LinearConstraint pos{{1, 0}, Cmp::gt, 0}, neg{{1, 0}, Cmp::lt, 0};
    CHECK(enumerate_classes(lat, 0, {pos, neg}, Box::cube(2, 5)).empty());
    CHECK_THROWS(enumerate_classes(lat, 0, {}, std::nullopt));
}

TEST_CASE("small admissible c-vectors") {
    // independent count over {-2..2}^8: all 2c_j of one parity, sum of squares <= 4
    long count = 0;
    std::array<int, 8> v{};
    for (long code = 0; code < 390625; ++code) {
        long x = code, sq = 0;
        for (auto& c : v) c = static_cast<int>(x % 5) - 2, x /= 5, sq += c * c;
        bool same = true;
        for (auto c : v) same = same && ((c & 1) == (v[0] & 1));
        count += same && sq <= 4;
    }
    CHECK(count == 17);
    CHECK(nikulin_small_c(11, 4).size() == 17);
}

TEST_CASE("Nikulin half-integer view round trip") {
    const auto lat = make_lattice(Kind::nikulin_t_hat, 15);
    std::mt19937_64 rng(4);
    std::uniform_int_distribution<std::int64_t> c(-4, 4);
    for (int t = 0; t < 50; ++t) {
        LatticeClass x = lat.zero(), y = lat.zero();
        for (int k = 0; k < lat.rank; ++k) x[k] = c(rng), y[k] = c(rng);
        const auto vx = to_view(lat, x), vy = to_view(lat, y);
        CHECK(vx.parity_ok());
        CHECK(from_view(lat, vx) == x);
        CHECK(view_pairing(15, vx, vy) == pairing(lat, x, y));
    }
}

TEST_CASE("Hodge index shape") {
    const auto lat = make_lattice(Kind::nikulin_t_hat, 11);
    const auto L = lat.unit("L");
    const auto eq = hodge_index_bound(lat, L, L);
    CHECK(eq.holds);
    CHECK_FALSE(eq.strict);
    const auto n1 = lat.unit("N1");
    CHECK(hodge_index_bound(lat, L, n1).strict);
}

TEST_CASE("signature") {
    CHECK(signature(make_lattice(Kind::theta, 7, 3)) == Signature{1, 1, 0});
    CHECK(signature(make_lattice(Kind::nikulin_lambda, 11)) == Signature{1, 8, 0});
}
