#include "syzygy/exactla.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace syzygy {

std::string to_string(const BigInt& v) { return v.get_str(); }
std::string to_string(const BigRational& v) { return v.get_str(); }

BigRational make_rational(const BigInt& n, const BigInt& d) {
    if (d == 0) throw std::domain_error("zero denominator");
    BigRational r(n, d);
    r.canonicalize();
    return r;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Prime::Prime(std::uint64_t p) {
    if (p < 3 || p >= (1ULL << 31) || !is_prime(p))
        throw std::invalid_argument("not a prime in [3, 2^31): " + std::to_string(p));
    p_ = static_cast<std::uint32_t>(p);
}

namespace fp {

std::uint32_t pow(std::uint32_t a, std::uint64_t e, std::uint32_t p) {
    std::uint64_t r = 1, b = a % p;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(r);
}

std::uint32_t inv(std::uint32_t a, std::uint32_t p) {
    if (a == 0) throw std::domain_error("inverse of zero mod p");
    std::int64_t t = 0, nt = 1, r = p, nr = a;
    while (nr) {
        std::int64_t q = r / nr;
        std::tie(t, nt) = std::make_pair(nt, t - q * nt);
        std::tie(r, nr) = std::make_pair(nr, r - q * nr);
    }
    return reduce(t, p);
}

std::uint32_t reduce(std::int64_t v, std::uint32_t p) {
    std::int64_t r = v % static_cast<std::int64_t>(p);
    return static_cast<std::uint32_t>(r < 0 ? r + p : r);
}

std::int64_t sqrt(std::uint32_t a, std::uint32_t p) {
    a %= p;
    if (a == 0) return 0;
    if (pow(a, (p - 1) / 2, p) != 1) return -1;
    // Tonelli-Shanks
    std::uint32_t q = p - 1, s = 0;
    while ((q & 1) == 0) {
        q >>= 1;
        ++s;
    }
    std::uint32_t z = 2;
    while (pow(z, (p - 1) / 2, p) != p - 1) ++z;
    std::uint32_t m = s, c = pow(z, q, p), t = pow(a, q, p), r = pow(a, (q + 1) / 2, p);
    while (t != 1) {
        std::uint32_t i = 0, tt = t;
        while (tt != 1) {
            tt = mul(tt, tt, p);
            ++i;
        }
        std::uint32_t b = c;
        for (std::uint32_t j = 0; j + i + 1 < m; ++j) b = mul(b, b, p);
        m = i;
        c = mul(b, b, p);
        t = mul(t, c, p);
        r = mul(r, b, p);
    }
    return std::min<std::int64_t>(r, p - r);
}

}  // namespace fp

// ---------------------------------------------------------------------------

FieldMatrix::FieldMatrix(Prime p, std::size_t rows, std::size_t cols)
    : p_(p), cols_(cols), rows_(rows) {}

FieldMatrix::FieldMatrix(Prime p, std::size_t cols, std::vector<Row> rows)
    : p_(p), cols_(cols), rows_(std::move(rows)) {
    const std::uint32_t q = p_.value();
    for (auto& r : rows_) {
        std::sort(r.begin(), r.end(), [](const Entry& a, const Entry& b) { return a.col < b.col; });
        Row out;
        out.reserve(r.size());
        for (const auto& e : r) {
            if (e.col >= cols_) throw std::out_of_range("column index out of range");
            std::uint32_t v = e.val % q;
            if (!out.empty() && out.back().col == e.col)
                out.back().val = fp::add(out.back().val, v, q);
            else
                out.push_back({e.col, v});
        }
        std::erase_if(out, [](const Entry& e) { return e.val == 0; });
        r = std::move(out);
    }
}

FieldMatrix FieldMatrix::from_dense(Prime p, std::size_t rows, std::size_t cols,
                                    std::span<const std::uint32_t> data) {
    if (data.size() != rows * cols) throw std::invalid_argument("dense buffer size mismatch");
    std::vector<Row> rs(rows);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            if (std::uint32_t v = data[i * cols + j] % p.value())
                rs[i].push_back({static_cast<std::uint32_t>(j), v});
    return FieldMatrix(p, cols, std::move(rs));
}

FieldMatrix FieldMatrix::from_rows(Prime p, std::size_t cols, std::span<const FpVector> rows) {
    std::vector<Row> rs(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw std::invalid_argument("row length mismatch");
        for (std::size_t j = 0; j < cols; ++j)
            if (std::uint32_t v = rows[i][j] % p.value()) rs[i].push_back({static_cast<std::uint32_t>(j), v});
    }
    return FieldMatrix(p, cols, std::move(rs));
}

FieldMatrix FieldMatrix::identity(Prime p, std::size_t n) {
    std::vector<Row> rs(n);
    for (std::size_t i = 0; i < n; ++i) rs[i].push_back({static_cast<std::uint32_t>(i), 1});
    return FieldMatrix(p, n, std::move(rs));
}

std::uint32_t FieldMatrix::at(std::size_t i, std::size_t j) const {
    const auto& r = rows_.at(i);
    auto it = std::lower_bound(r.begin(), r.end(), j,
                               [](const Entry& e, std::size_t c) { return e.col < c; });
    return (it != r.end() && it->col == j) ? it->val : 0;
}

std::size_t FieldMatrix::nnz() const noexcept {
    std::size_t n = 0;
    for (const auto& r : rows_) n += r.size();
    return n;
}

double FieldMatrix::density() const noexcept {
    const double cells = static_cast<double>(rows()) * static_cast<double>(cols_);
    return cells == 0 ? 0.0 : static_cast<double>(nnz()) / cells;
}

FieldMatrix FieldMatrix::transpose() const {
    std::vector<Row> rs(cols_);
    for (std::size_t i = 0; i < rows_.size(); ++i)
        for (const auto& e : rows_[i]) rs[e.col].push_back({static_cast<std::uint32_t>(i), e.val});
    return FieldMatrix(p_, rows_.size(), std::move(rs));
}

FieldMatrix FieldMatrix::operator*(const FieldMatrix& rhs) const {
    if (cols_ != rhs.rows()) throw std::invalid_argument("matrix product dimension mismatch");
    const std::uint32_t q = p_.value();
    std::vector<Row> rs(rows_.size());
    std::vector<std::uint32_t> acc(rhs.cols(), 0);
    std::vector<char> seen(rhs.cols(), 0);
    std::vector<std::uint32_t> touched;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        for (const auto& a : rows_[i])
            for (const auto& b : rhs.rows_[a.col]) {
                if (!seen[b.col]) {
                    seen[b.col] = 1;
                    touched.push_back(b.col);
                }
                acc[b.col] = fp::add(acc[b.col], fp::mul(a.val, b.val, q), q);
            }
        std::sort(touched.begin(), touched.end());
        for (auto c : touched) {
            if (acc[c]) rs[i].push_back({c, acc[c]});
            acc[c] = 0;
            seen[c] = 0;
        }
        touched.clear();
    }
    return FieldMatrix(p_, rhs.cols(), std::move(rs));
}

FpVector FieldMatrix::apply(std::span<const std::uint32_t> v) const {
    if (v.size() != cols_) throw std::invalid_argument("vector length mismatch");
    const std::uint32_t q = p_.value();
    FpVector out(rows_.size(), 0);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        std::uint64_t s = 0;
        for (const auto& e : rows_[i]) s = (s + static_cast<std::uint64_t>(e.val) * v[e.col]) % q;
        out[i] = static_cast<std::uint32_t>(s);
    }
    return out;
}

std::vector<std::uint32_t> FieldMatrix::to_dense() const {
    std::vector<std::uint32_t> d(rows_.size() * cols_, 0);
    for (std::size_t i = 0; i < rows_.size(); ++i)
        for (const auto& e : rows_[i]) d[i * cols_ + e.col] = e.val;
    return d;
}

// ---------------------------------------------------------------------------
// Dense kernels

namespace kernels {
namespace {

// row_dst -= f * row_src on columns [from, cols)
inline void axpy_row(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t f,
                     std::size_t from, std::size_t cols, std::uint32_t p) {
    const std::uint64_t nf = p - f;
    for (std::size_t k = from; k < cols; ++k)
        if (src[k]) dst[k] = static_cast<std::uint32_t>((dst[k] + nf * src[k]) % p);
}

void normalize_row(std::uint32_t* row, std::size_t from, std::size_t cols, std::uint32_t p) {
    const std::uint32_t iv = fp::inv(row[from], p);
    for (std::size_t k = from; k < cols; ++k) row[k] = fp::mul(row[k], iv, p);
}

template <bool Parallel>
std::size_t forward_eliminate(std::vector<std::uint32_t>& a, std::size_t rows, std::size_t cols,
                              std::uint32_t p, std::vector<std::size_t>* pivots) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = rows;
        for (std::size_t i = r; i < rows; ++i)
            if (a[i * cols + c]) {
                piv = i;
                break;
            }
        if (piv == rows) continue;
        if (piv != r)
            std::swap_ranges(a.begin() + piv * cols + c, a.begin() + piv * cols + cols,
                             a.begin() + r * cols + c);
        normalize_row(&a[r * cols], c, cols, p);
        const std::uint32_t* src = &a[r * cols];
        const auto lo = static_cast<std::ptrdiff_t>(r + 1), hi = static_cast<std::ptrdiff_t>(rows);
        if constexpr (Parallel) {
#pragma omp parallel for schedule(static) if (hi - lo > 32)
            for (std::ptrdiff_t i = lo; i < hi; ++i) {
                std::uint32_t* dst = &a[static_cast<std::size_t>(i) * cols];
                if (dst[c]) axpy_row(dst, src, dst[c], c, cols, p);
            }
        } else {
            for (std::ptrdiff_t i = lo; i < hi; ++i) {
                std::uint32_t* dst = &a[static_cast<std::size_t>(i) * cols];
                if (dst[c]) axpy_row(dst, src, dst[c], c, cols, p);
            }
        }
        if (pivots) pivots->push_back(c);
        ++r;
    }
    return r;
}

}  // namespace

std::size_t rank_dense_serial(std::vector<std::uint32_t>& data, std::size_t rows,
                              std::size_t cols, std::uint32_t p) {
    return forward_eliminate<false>(data, rows, cols, p, nullptr);
}

std::size_t rank_dense_parallel(std::vector<std::uint32_t>& data, std::size_t rows,
                                std::size_t cols, std::uint32_t p) {
    return forward_eliminate<true>(data, rows, cols, p, nullptr);
}

std::vector<std::size_t> rref_dense(std::vector<std::uint32_t>& a, std::size_t rows,
                                    std::size_t cols, std::uint32_t p) {
    std::vector<std::size_t> piv;
    const std::size_t r = forward_eliminate<true>(a, rows, cols, p, &piv);
    for (std::size_t k = r; k-- > 0;) {
        const std::size_t c = piv[k];
        const std::uint32_t* src = &a[k * cols];
#pragma omp parallel for schedule(static) if (k > 32)
        for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(k); ++i) {
            std::uint32_t* dst = &a[static_cast<std::size_t>(i) * cols];
            if (dst[c]) axpy_row(dst, src, dst[c], c, cols, p);
        }
    }
    return piv;
}

}  // namespace kernels

// ---------------------------------------------------------------------------

namespace {

using SRow = FieldMatrix::Row;

// dst - f * src, both sorted by column.
SRow sparse_axpy(const SRow& dst, const SRow& src, std::uint32_t f, std::uint32_t p) {
    SRow out;
    out.reserve(dst.size() + src.size());
    std::size_t i = 0, j = 0;
    const std::uint32_t nf = p - f;
    while (i < dst.size() || j < src.size()) {
        if (j == src.size() || (i < dst.size() && dst[i].col < src[j].col)) {
            out.push_back(dst[i++]);
        } else if (i == dst.size() || src[j].col < dst[i].col) {
            out.push_back({src[j].col, fp::mul(nf, src[j].val, p)});
            ++j;
        } else {
            std::uint32_t v = fp::add(dst[i].val, fp::mul(nf, src[j].val, p), p);
            if (v) out.push_back({dst[i].col, v});
            ++i;
            ++j;
        }
    }
    return out;
}

std::size_t dense_rank_of(std::span<const SRow> rows, std::size_t cols, std::uint32_t p) {
    std::vector<std::uint32_t> d(rows.size() * cols, 0);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (const auto& e : rows[i]) d[i * cols + e.col] = e.val;
    return kernels::rank_dense_parallel(d, rows.size(), cols, p);
}

}  // namespace

std::size_t rank(const FieldMatrix& m) {
    const std::uint32_t p = m.prime().value();
    const std::size_t cols = m.cols();
    if (m.rows() == 0 || cols == 0) return 0;
    if (m.density() > kDenseThreshold) {
        auto d = m.to_dense();
        return kernels::rank_dense_parallel(d, m.rows(), cols, p);
    }
    std::map<std::uint32_t, SRow> pivots;  // leading column -> normalized row
    std::size_t pivot_nnz = 0;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        SRow r(m.row(i).begin(), m.row(i).end());
        while (!r.empty()) {
            auto it = pivots.find(r.front().col);
            if (it == pivots.end()) break;
            r = sparse_axpy(r, it->second, r.front().val, p);
        }
        if (r.empty()) continue;
        const std::uint32_t iv = fp::inv(r.front().val, p);
        for (auto& e : r) e.val = fp::mul(e.val, iv, p);
        pivot_nnz += r.size();
        pivots.emplace(r.front().col, std::move(r));
        const double fill = static_cast<double>(pivot_nnz) /
                            (static_cast<double>(pivots.size()) * static_cast<double>(cols));
        if (fill > kDenseThreshold && pivots.size() * cols > 4096 && i + 1 < m.rows()) {
            std::vector<SRow> rest;
            rest.reserve(pivots.size() + m.rows() - i - 1);
            for (auto& [c, pr] : pivots) rest.push_back(std::move(pr));
            for (std::size_t k = i + 1; k < m.rows(); ++k) rest.emplace_back(m.row(k).begin(), m.row(k).end());
            return dense_rank_of(rest, cols, p);
        }
    }
    return pivots.size();
}

std::vector<FpVector> kernel_basis(const FieldMatrix& m) {
    const std::uint32_t p = m.prime().value();
    const std::size_t rows = m.rows(), cols = m.cols();
    auto d = m.to_dense();
    const auto piv = kernels::rref_dense(d, rows, cols, p);
    std::vector<bool> is_pivot(cols, false);
    for (auto c : piv) is_pivot[c] = true;
    std::vector<FpVector> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        FpVector v(cols, 0);
        v[f] = 1;
        for (std::size_t k = 0; k < piv.size(); ++k) v[piv[k]] = fp::neg(d[k * cols + f], p);
        basis.push_back(std::move(v));
    }
    return basis;
}

Echelon echelon(std::uint32_t p, std::size_t cols, std::vector<FpVector> rows) {
    std::vector<std::uint32_t> d;
    d.reserve(rows.size() * cols);
    for (const auto& r : rows) {
        if (r.size() != cols) throw std::invalid_argument("row length mismatch");
        d.insert(d.end(), r.begin(), r.end());
    }
    Echelon e;
    e.p = p;
    e.cols = cols;
    e.pivots = kernels::rref_dense(d, rows.size(), cols, p);
    e.rows.reserve(e.pivots.size());
    for (std::size_t k = 0; k < e.pivots.size(); ++k)
        e.rows.emplace_back(d.begin() + static_cast<std::ptrdiff_t>(k * cols),
                            d.begin() + static_cast<std::ptrdiff_t>((k + 1) * cols));
    return e;
}

FpVector Echelon::coordinates(std::span<const std::uint32_t> v) const {
    FpVector c(pivots.size());
    for (std::size_t k = 0; k < pivots.size(); ++k) c[k] = v[pivots[k]];
    return c;
}

bool Echelon::contains(std::span<const std::uint32_t> v) const {
    if (v.size() != cols) return false;
    FpVector r(v.begin(), v.end());
    for (std::size_t k = 0; k < pivots.size(); ++k) {
        const std::uint32_t f = r[pivots[k]];
        if (!f) continue;
        const std::uint32_t nf = p - f;
        for (std::size_t j = pivots[k]; j < cols; ++j)
            if (rows[k][j]) r[j] = static_cast<std::uint32_t>((r[j] + static_cast<std::uint64_t>(nf) * rows[k][j]) % p);
    }
    return std::all_of(r.begin(), r.end(), [](std::uint32_t x) { return x == 0; });
}

BigInt binomial(long n, long k) {
    if (k < 0) return 0;
    if (n >= 0 && k > n) return 0;
    BigInt r, nn = n;
    mpz_bin_ui(r.get_mpz_t(), nn.get_mpz_t(), static_cast<unsigned long>(k));
    return r;
}

}  // namespace syzygy
