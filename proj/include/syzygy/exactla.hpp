#pragma once
// Exact linear algebra over prime fields F_p and arbitrary-precision
// rationals. Every Betti number, h^0 and lattice certificate downstream
// reduces to rank and kernel computations in this header.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace syzygy {

using BigInt = mpz_class;
using BigRational = mpq_class;

std::string to_string(const BigInt& v);
std::string to_string(const BigRational& v);
/// n/d in lowest terms, d != 0.
BigRational make_rational(const BigInt& n, const BigInt& d);

/// A prime 3 <= p < 2^31, primality checked on construction.
class Prime {
public:
    explicit Prime(std::uint64_t p);
    std::uint32_t value() const noexcept { return p_; }
    bool operator==(const Prime&) const = default;

private:
    std::uint32_t p_;
};

inline constexpr std::uint32_t kDefaultPrime = 1009;

bool is_prime(std::uint64_t n);

// Scalar arithmetic mod p. Inputs must already be reduced.
namespace fp {
inline std::uint32_t add(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    std::uint32_t s = a + b;
    return s >= p ? s - p : s;
}
inline std::uint32_t sub(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    return a >= b ? a - b : a + p - b;
}
inline std::uint32_t neg(std::uint32_t a, std::uint32_t p) { return a == 0 ? 0 : p - a; }
inline std::uint32_t mul(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}
std::uint32_t pow(std::uint32_t a, std::uint64_t e, std::uint32_t p);
std::uint32_t inv(std::uint32_t a, std::uint32_t p);
/// Reduce a signed integer into [0, p).
std::uint32_t reduce(std::int64_t v, std::uint32_t p);
/// Square root of a if it exists (smallest of the two roots), else -1.
std::int64_t sqrt(std::uint32_t a, std::uint32_t p);
}  // namespace fp

using FpVector = std::vector<std::uint32_t>;

/// Sparse row-major matrix over F_p. Immutable after construction.
class FieldMatrix {
public:
    struct Entry {
        std::uint32_t col;
        std::uint32_t val;
    };
    using Row = std::vector<Entry>;

    FieldMatrix(Prime p, std::size_t rows, std::size_t cols);
    /// Entries are reduced mod p, duplicates within a row summed, zeros dropped.
    FieldMatrix(Prime p, std::size_t cols, std::vector<Row> rows);
    static FieldMatrix from_dense(Prime p, std::size_t rows, std::size_t cols,
                                  std::span<const std::uint32_t> data);
    static FieldMatrix from_rows(Prime p, std::size_t cols, std::span<const FpVector> rows);
    static FieldMatrix identity(Prime p, std::size_t n);

    Prime prime() const noexcept { return p_; }
    std::size_t rows() const noexcept { return rows_.size(); }
    std::size_t cols() const noexcept { return cols_; }
    std::span<const Entry> row(std::size_t i) const { return rows_[i]; }
    std::uint32_t at(std::size_t i, std::size_t j) const;
    std::size_t nnz() const noexcept;
    double density() const noexcept;

    FieldMatrix transpose() const;
    FieldMatrix operator*(const FieldMatrix& rhs) const;
    FpVector apply(std::span<const std::uint32_t> v) const;
    std::vector<std::uint32_t> to_dense() const;

private:
    Prime p_;
    std::size_t cols_;
    std::vector<Row> rows_;
};

/// Row rank. Sparse elimination, switching to the dense OpenMP kernel once
/// fill-in exceeds kDenseThreshold.
std::size_t rank(const FieldMatrix& m);

/// Basis of {v : m v = 0}; size is cols - rank.
std::vector<FpVector> kernel_basis(const FieldMatrix& m);

/// Reduced row echelon form of a row space.
struct Echelon {
    std::uint32_t p = 0;
    std::size_t cols = 0;
    std::vector<FpVector> rows;        // dense, leading 1 at pivots[i]
    std::vector<std::size_t> pivots;   // strictly increasing

    std::size_t dim() const noexcept { return rows.size(); }
    /// Coordinates of v in the basis `rows`; v must lie in the span.
    FpVector coordinates(std::span<const std::uint32_t> v) const;
    /// True iff v lies in the row space.
    bool contains(std::span<const std::uint32_t> v) const;
};

Echelon echelon(std::uint32_t p, std::size_t cols, std::vector<FpVector> rows);

BigInt binomial(long n, long k);

inline constexpr double kDenseThreshold = 0.30;

// Dense elimination kernels over a row-major buffer. The OpenMP variant and
// the serial reference must agree bit-for-bit; both leave `data` in row
// echelon form with deterministic first-nonzero pivoting.
namespace kernels {
std::size_t rank_dense_serial(std::vector<std::uint32_t>& data, std::size_t rows,
                              std::size_t cols, std::uint32_t p);
std::size_t rank_dense_parallel(std::vector<std::uint32_t>& data, std::size_t rows,
                                std::size_t cols, std::uint32_t p);
/// Full RREF in place; returns pivot columns.
std::vector<std::size_t> rref_dense(std::vector<std::uint32_t>& data, std::size_t rows,
                                    std::size_t cols, std::uint32_t p);
}  // namespace kernels

}  // namespace syzygy
