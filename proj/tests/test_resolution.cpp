#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "syzygy/resolution.hpp"

using namespace syzygy;
using namespace syzygy::koszul;

namespace {

long get(const std::map<std::pair<long, long>, long>& b, long p, long q) {
    auto it = b.find({p, q});
    return it == b.end() ? 0 : it->second;
}

}  // namespace

TEST_CASE("k[y]/(y^3)") {
    const std::vector<std::size_t> dims = {1, 1, 1};
    const std::vector<std::vector<std::vector<std::uint32_t>>> action = {{{1}}, {{1}}};
    const auto b = resolve_finite_length(1009, 1, dims, action, 2);
    CHECK(get(b, 0, 0) == 1);
    CHECK(get(b, 1, 2) == 1);
    CHECK(get(b, 1, 0) + get(b, 1, 1) == 0);
    CHECK(get(b, 2, 1) + get(b, 2, 2) == 0);
}

TEST_CASE("k[y1,y2]/(y1,y2)^2") {
    const std::vector<std::size_t> dims = {1, 2};
    const std::vector<std::vector<std::vector<std::uint32_t>>> action = {{{1, 0}, {0, 1}}};
    const auto b = resolve_finite_length(1009, 2, dims, action, 3);
    CHECK(get(b, 0, 0) == 1);
    CHECK(get(b, 1, 1) == 3);
    CHECK(get(b, 2, 1) == 2);
    CHECK(get(b, 3, 1) + get(b, 3, 0) == 0);
}

TEST_CASE("oracle agrees with Koszul tables") {
    for (const std::string spec : {"rnc d=4 seed=1", "quartic seed=3", "genus4 seed=2", "hyp g=3 seed=5"}) {
        const auto r = model_from_spec(spec, 1009, 4);
        const long pmax = static_cast<long>(r.dimV()) - 2;
        const auto t = betti_table(r, pmax, 3);
        const auto o = minimal_resolution_oracle(r, pmax, 11);
        INFO(spec);
        CHECK(compare(t, o).empty());
        CHECK(o.quotient_dims.back() == 0);
    }
}

TEST_CASE("oracle rejects rings that are too short") {
    const auto r = rational_normal_curve(3, 1009, 1, 1);
    CHECK_THROWS(minimal_resolution_oracle(r, 2, 1));
}
