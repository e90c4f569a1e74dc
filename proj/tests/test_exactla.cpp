#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "syzygy/exactla.hpp"

using namespace syzygy;

namespace {

// rank = log_p of the size of the row span, enumerated
std::size_t span_rank(const std::vector<FpVector>& rows, std::uint32_t p) {
    std::set<FpVector> span = {FpVector(rows.empty() ? 0 : rows[0].size(), 0)};
    for (const auto& r : rows) {
        std::set<FpVector> next;
        for (const auto& v : span)
            for (std::uint32_t c = 0; c < p; ++c) {
                FpVector w = v;
                for (std::size_t i = 0; i < w.size(); ++i) w[i] = (w[i] + c * r[i]) % p;
                next.insert(w);
            }
        span = std::move(next);
    }
    std::size_t k = 0;
    for (std::size_t s = 1; s < span.size(); s *= p) ++k;
    return k;
}

std::vector<FpVector> random_rows(std::mt19937_64& rng, std::size_t r, std::size_t c, std::uint32_t p, int zero_pct) {
    std::uniform_int_distribution<std::uint32_t> coef(0, p - 1);
    std::uniform_int_distribution<int> pct(0, 99);
    std::vector<FpVector> rows(r, FpVector(c));
    for (auto& row : rows)
        for (auto& v : row) v = pct(rng) < zero_pct ? 0 : coef(rng);
    return rows;
}

}  // namespace

TEST_CASE("rank matches span enumeration over small fields") {
    std::mt19937_64 rng(1);
    for (std::uint32_t p : {3u, 5u}) {
        for (int trial = 0; trial < 60; ++trial) {
            const std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
            auto rows = random_rows(rng, r, c, p, 50);
            const auto m = FieldMatrix::from_rows(Prime(p), c, rows);
            CHECK(rank(m) == span_rank(rows, p));
            CHECK(echelon(p, c, rows).dim() == span_rank(rows, p));
        }
    }
}

TEST_CASE("kernel basis is annihilated and has the right size") {
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t r = 1 + rng() % 12, c = 1 + rng() % 12;
        const auto m = FieldMatrix::from_rows(Prime(1009), c, random_rows(rng, r, c, 1009, 60));
        const auto ker = kernel_basis(m);
        CHECK(ker.size() == c - rank(m));
        for (const auto& v : ker)
            for (auto x : m.apply(v)) CHECK(x == 0);
        if (!ker.empty()) CHECK(rank(FieldMatrix::from_rows(Prime(1009), c, ker)) == ker.size());
    }
}

TEST_CASE("serial and parallel dense kernels agree bit for bit") {
    std::mt19937_64 rng(3);
    for (std::size_t n : {1, 7, 64, 150}) {
        auto rows = random_rows(rng, n, n + 3, 1009, 30);
        std::vector<std::uint32_t> a;
        for (const auto& r : rows) a.insert(a.end(), r.begin(), r.end());
        auto b = a;
        CHECK(kernels::rank_dense_serial(a, n, n + 3, 1009) == kernels::rank_dense_parallel(b, n, n + 3, 1009));
        CHECK(a == b);
    }
}

TEST_CASE("low rank products") {
    std::mt19937_64 rng(4);
    const Prime p(1009);
    const auto A = FieldMatrix::from_rows(p, 4, random_rows(rng, 30, 4, 1009, 0));
    const auto B = FieldMatrix::from_rows(p, 40, random_rows(rng, 4, 40, 1009, 0));
    CHECK(rank(A * B) == 4);
    CHECK(rank(FieldMatrix(p, 5, 9)) == 0);
    CHECK(rank(FieldMatrix::identity(p, 17)) == 17);
    CHECK(rank((A * B).transpose()) == 4);
}

TEST_CASE("echelon coordinates reconstruct members") {
    std::mt19937_64 rng(5);
    auto rows = random_rows(rng, 6, 10, 1009, 20);
    const auto e = echelon(1009, 10, rows);
    for (const auto& r : rows) {
        REQUIRE(e.contains(r));
        const auto c = e.coordinates(r);
        FpVector back(10, 0);
        for (std::size_t i = 0; i < e.dim(); ++i)
            for (std::size_t j = 0; j < 10; ++j) back[j] = fp::add(back[j], fp::mul(c[i], e.rows[i][j], 1009), 1009);
        CHECK(back == r);
    }
}

TEST_CASE("scalar arithmetic") {
    for (std::uint32_t a = 1; a < 1009; ++a) CHECK(fp::mul(a, fp::inv(a, 1009), 1009) == 1);
    long squares = 0;
    for (std::uint32_t a = 0; a < 1009; ++a) {
        const auto r = fp::sqrt(a, 1009);
        if (r >= 0) {
            ++squares;
            CHECK(fp::mul(static_cast<std::uint32_t>(r), static_cast<std::uint32_t>(r), 1009) == a);
        }
    }
    CHECK(squares == 505);
    CHECK(fp::reduce(-1, 1009) == 1008);
    CHECK_THROWS(Prime(1001));
    CHECK(to_string(make_rational(6, -4)) == "-3/2");
}
