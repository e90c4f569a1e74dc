#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "syzygy/moduli.hpp"

using namespace syzygy;
using namespace syzygy::moduli;

namespace {

BigRational q(long n, long d = 1) { return make_rational(n, d); }

}  // namespace

TEST_CASE("ranks") {
    for (long i = 1; i <= 10; ++i) {
        CHECK(rank_G0(1, i) == 2 * i + 2);
        CHECK(rank_H0(1, i) == 2 * i + 2);
        CHECK(rank_H0(0, i) == 1);
        CHECK(rank_rec(0, 2, i, Family::G) == rank_G0(2, i));
    }
    CHECK(rank_G0(2, 2) == 16);
    CHECK_THROWS(rank_G0(1, 0));
}

TEST_CASE("first Chern classes of the base bundles") {
    CHECK(c1_G0(1, 3) == DivClass{q(1), q(-1)});
    CHECK(c1_G0(2, 3) == DivClass{q(1), q(-3)});
    for (long ell = 1; ell <= 10; ++ell) CHECK(grr_expand(ell, 2) == c1_G0(ell, 2));
    CHECK(grr_expand(0, 2) == DivClass{q(1), q(0)});
}

TEST_CASE("closed forms from the proof") {
    for (long i = 1; i <= 60; ++i) {
        const BigRational c = binomial(2 * i, i);
        const DivClass G = {c * make_rational(4 * i * i * i + 5 * i * i - 4 * i - 2, (i + 1) * (i + 2)),
                            c * make_rational(-(8 * i * i * i + 13 * i * i - i - 2), 2 * (i + 1) * (i + 2))};
        const BigRational h = c * make_rational(i * (2 * i + 1) * (2 * i + 3), (i + 1) * (i + 2));
        CHECK(c1_rec(i - 1, 2, i, Family::G) == G);
        CHECK(c1_rec(i - 1, 2, i, Family::H) == DivClass{h, -h});
    }
}

TEST_CASE("Syz, Sec and Hur") {
    CHECK(syz_class(1) == DivClass{q(-4), q(2)});
    for (long i = 1; i <= 60; ++i) {
        const BigRational f = BigRational(binomial(2 * i, i - 1)) / (2 * i);
        CHECK(syz_class(i) == DivClass{f * (-(6 * i + 2)), f * (3 * i + 1)});
        CHECK(syz_class(i) == sec_class(i) + hur_pullback(i) * BigRational(i));
        CHECK(syz_class(i).c_psi == sec_class(i).c_psi);
        CHECK(hur_pullback(i).c_psi == 0);
    }
}

TEST_CASE("dimension count") {
    const auto d1 = dim_count_check(1);
    CHECK(d1.printed == 5);
    CHECK(d1.derived == 10);
    CHECK(d1.fibre == 10);
    CHECK_FALSE(d1.printed_eq_derived);
    for (long i = 1; i <= 60; ++i) {
        const auto d = dim_count_check(i);
        CHECK(d.derived_eq_fibre);
        CHECK(rank_rec(i - 1, 2, i, Family::G) == d.fibre);
        CHECK(rank_rec(i - 1, 2, i, Family::H) == d.fibre);
    }
    CHECK_THROWS(dim_count_check(0));
}
