#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "syzygy/certify.hpp"

using namespace syzygy::lattice;

TEST_CASE("hypvanodd arithmetic at g=9, p=3") {
    const auto c = certify("theta.hypvanodd_arith", {{"g", 9}, {"p", 3}});
    CHECK(c.pass);
    CHECK(c.candidates_checked > 0);
    const auto lat = make_lattice(Kind::theta_hat, 9, 3);
    for (long j = 0; j <= 3; ++j) {
        const auto x = add(scale(2 * 3 + 2 - j, lat.unit("E")), lat.unit("eta"));
        CHECK(self(lat, x) == -4);
    }
}

TEST_CASE("named instances") {
    CHECK(certify("nikulin.cE_minus_e", {{"g", 11}}).pass);
    CHECK(certify("xi.lattice1", {{"g", 6}, {"p", 3}}).pass);
    CHECK(certify("nikulin.H_nef", {{"g", 11}}).pass);
}

TEST_CASE("every lemma passes on a slice of its grid") {
    for (const auto& id : lemma_ids()) {
        const auto grid = default_grid(id);
        REQUIRE_FALSE(grid.empty());
        for (std::size_t k = 0; k < grid.size(); k += std::max<std::size_t>(1, grid.size() / 5)) {
            const auto c = certify(id, grid[k]);
            INFO(id);
            CHECK(c.pass);
            CHECK(c.candidates_checked > 0);
            CHECK_FALSE(c.counterexample.has_value());
        }
    }
}

TEST_CASE("bad input") {
    CHECK_THROWS_AS(certify("no.such", {{"g", 11}}), std::invalid_argument);
    CHECK_THROWS_AS(certify("theta.div4", {{"g", 8}, {"p", 3}}), std::invalid_argument);
    const auto j = to_json(certify("theta.div4", {{"g", 7}, {"p", 3}}));
    CHECK(j.at("verdict") == "pass");
    CHECK(j.at("lemma_id") == "theta.div4");
}
