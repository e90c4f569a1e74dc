#include "syzygy/resolution.hpp"

#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

#include "syzygy/forms.hpp"

namespace syzygy::koszul {

long OracleBetti::at(long p, long q) const {
    auto it = b.find({p, q});
    return it == b.end() ? 0 : it->second;
}

namespace {

// Row space grown one vector at a time.
class IncrementalSpan {
public:
    IncrementalSpan(std::uint32_t p, std::size_t cols) : p_(p), cols_(cols) {}

    // Returns true if v was independent (and adds it).
    bool add(FpVector v) {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const std::uint32_t c = v[pivots_[r]];
            if (!c) continue;
            const auto& row = rows_[r];
            for (std::size_t j = 0; j < cols_; ++j)
                if (row[j]) v[j] = fp::sub(v[j], fp::mul(c, row[j], p_), p_);
        }
        std::size_t piv = 0;
        while (piv < cols_ && v[piv] == 0) ++piv;
        if (piv == cols_) return false;
        const std::uint32_t inv = fp::inv(v[piv], p_);
        for (auto& x : v) x = fp::mul(x, inv, p_);
        rows_.push_back(std::move(v));
        pivots_.push_back(piv);
        return true;
    }

private:
    std::uint32_t p_;
    std::size_t cols_;
    std::vector<FpVector> rows_;
    std::vector<std::size_t> pivots_;
};

std::vector<forms::Exponent> monos(std::size_t m, long t) {
    if (t < 0) return {};
    if (m == 0) return t == 0 ? std::vector<forms::Exponent>{forms::Exponent{}} : std::vector<forms::Exponent>{};
    return forms::monomials(static_cast<int>(m), static_cast<int>(t));
}

struct Generator {
    long deg;
    FpVector image;  // in the ambient of its level at degree deg
};

struct BasisEntry {
    std::size_t gen;
    forms::Exponent mono;
};

class Resolver {
public:
    Resolver(std::uint32_t p, std::size_t m, const std::vector<std::size_t>& dims,
             const std::vector<std::vector<std::vector<std::uint32_t>>>& action)
        : p_(p), m_(m), dims_(dims), action_(action) {}

    std::map<std::pair<long, long>, long> run(long steps) {
        std::map<std::pair<long, long>, long> betti;
        const long s = static_cast<long>(dims_.size()) - 1;
        for (long k = 0; k <= steps; ++k) {
            levels_.emplace_back();
            if (s < 0) break;
            std::vector<FpVector> prev;  // basis of N^{(k)}_{D-1}
            for (long D = 0; D <= k + s + 1; ++D) {
                const std::size_t amb = ambient_dim(k, D);
                const std::vector<FpVector> cur = submodule_piece(k, D);
                IncrementalSpan span(p_, amb);
                for (const auto& z : prev)
                    for (std::size_t i = 0; i < m_; ++i) span.add(times_var(k, D - 1, z, i));
                long fresh = 0;
                for (const auto& z : cur) {
                    if (span.add(z)) {
                        levels_[static_cast<std::size_t>(k)].push_back({D, z});
                        ++fresh;
                    }
                }
                if (fresh) betti[{k, D - k}] += fresh;
                prev = cur;
            }
        }
        return betti;
    }

private:
    std::size_t module_dim(long D) const {
        return D >= 0 && D < static_cast<long>(dims_.size()) ? dims_[static_cast<std::size_t>(D)] : 0;
    }

    // Ambient of level k images at degree D: M_D for k = 0, (F_{k-1})_D otherwise.
    std::size_t ambient_dim(long k, long D) { return k == 0 ? module_dim(D) : basis(k - 1, D).size(); }

    const std::vector<BasisEntry>& basis(long k, long D) {
        auto key = std::make_pair(k, D);
        auto it = basis_cache_.find(key);
        if (it != basis_cache_.end()) return it->second;
        std::vector<BasisEntry> out;
        const auto& gens = levels_[static_cast<std::size_t>(k)];
        for (std::size_t j = 0; j < gens.size(); ++j)
            for (auto& mo : monos(m_, D - gens[j].deg)) out.push_back({j, std::move(mo)});
        std::map<std::pair<std::size_t, forms::Exponent>, std::size_t> index;
        for (std::size_t t = 0; t < out.size(); ++t) index[{out[t].gen, out[t].mono}] = t;
        index_cache_[key] = std::move(index);
        return basis_cache_[key] = std::move(out);
    }

    std::size_t basis_index(long k, long D, std::size_t gen, const forms::Exponent& mono) {
        basis(k, D);
        return index_cache_.at({k, D}).at({gen, mono});
    }

    // y_i * z, z in the ambient of level k at degree D.
    FpVector times_var(long k, long D, const FpVector& z, std::size_t i) {
        const std::size_t out_dim = ambient_dim(k, D + 1);
        FpVector out(out_dim, 0);
        if (out_dim == 0) return out;
        if (k == 0) {
            const auto& A = action_[static_cast<std::size_t>(D)][i];
            const std::size_t in_dim = module_dim(D);
            for (std::size_t r = 0; r < out_dim; ++r) {
                std::uint64_t acc = 0;
                for (std::size_t c = 0; c < in_dim; ++c) acc = (acc + static_cast<std::uint64_t>(A[r * in_dim + c]) * z[c]) % p_;
                out[r] = static_cast<std::uint32_t>(acc);
            }
            return out;
        }
        const auto& src = basis(k - 1, D);
        for (std::size_t t = 0; t < src.size(); ++t) {
            if (!z[t]) continue;
            forms::Exponent e = src[t].mono;
            ++e[i];
            const std::size_t idx = basis_index(k - 1, D + 1, src[t].gen, e);
            out[idx] = fp::add(out[idx], z[t], p_);
        }
        return out;
    }

    // Image of the basis element (gen, mono) of (F_k)_D in the ambient of level k.
    FpVector image(long k, long D, const BasisEntry& be) {
        const Generator& gen = levels_[static_cast<std::size_t>(k)][be.gen];
        FpVector v = gen.image;
        long deg = gen.deg;
        for (std::size_t i = 0; i < m_; ++i)
            for (int e = 0; e < (m_ ? be.mono[i] : 0); ++e) v = times_var(k, deg++, v, i);
        if (deg != D) throw std::logic_error("resolution: degree bookkeeping");
        return v;
    }

    // Basis of N^{(k)}_D: M_D itself for k = 0, else ker((F_{k-1})_D -> ambient).
    std::vector<FpVector> submodule_piece(long k, long D) {
        const std::size_t amb = ambient_dim(k, D);
        std::vector<FpVector> out;
        if (amb == 0) return out;
        if (k == 0) {
            for (std::size_t j = 0; j < amb; ++j) {
                FpVector e(amb, 0);
                e[j] = 1;
                out.push_back(std::move(e));
            }
            return out;
        }
        const auto& src = basis(k - 1, D);
        const std::size_t tgt = ambient_dim(k - 1, D);
        if (tgt == 0) {
            for (std::size_t j = 0; j < amb; ++j) {
                FpVector e(amb, 0);
                e[j] = 1;
                out.push_back(std::move(e));
            }
            return out;
        }
        std::vector<FpVector> imgs;
        imgs.reserve(src.size());
        for (const auto& be : src) imgs.push_back(image(k - 1, D, be));
        return kernel_basis(FieldMatrix::from_rows(Prime(p_), tgt, imgs).transpose());
    }

    std::uint32_t p_;
    std::size_t m_;
    std::vector<std::size_t> dims_;
    const std::vector<std::vector<std::vector<std::uint32_t>>>& action_;
    std::vector<std::vector<Generator>> levels_;
    std::map<std::pair<long, long>, std::vector<BasisEntry>> basis_cache_;
    std::map<std::pair<long, long>, std::map<std::pair<std::size_t, forms::Exponent>, std::size_t>> index_cache_;
};

// v reduced modulo the row space W (RREF), in place.
void reduce_mod(FpVector& v, const Echelon& W, std::uint32_t p) {
    for (std::size_t r = 0; r < W.dim(); ++r) {
        const std::uint32_t c = v[W.pivots[r]];
        if (!c) continue;
        for (std::size_t j = 0; j < v.size(); ++j)
            if (W.rows[r][j]) v[j] = fp::sub(v[j], fp::mul(c, W.rows[r][j], p), p);
    }
}

FpVector hadamard(const FpVector& a, const FpVector& b, std::uint32_t p) {
    FpVector out(a.size());
    for (std::size_t s = 0; s < a.size(); ++s) out[s] = fp::mul(a[s], b[s], p);
    return out;
}

}  // namespace

std::map<std::pair<long, long>, long> resolve_finite_length(
    std::uint32_t p, std::size_t m, const std::vector<std::size_t>& dims,
    const std::vector<std::vector<std::vector<std::uint32_t>>>& action, long steps) {
    if (action.size() + 1 < dims.size()) throw std::invalid_argument("resolve_finite_length: missing action matrices");
    Resolver res(p, m, dims, action);
    return res.run(steps);
}

OracleBetti minimal_resolution_oracle(const SectionRing& r, long steps, std::uint64_t seed) {
    const std::size_t n = r.dimV();
    if (n < 2) throw std::invalid_argument("minimal_resolution_oracle: need dim V >= 2");
    const std::size_t m = n - 2;
    const long Q = r.qmax();
    const std::uint32_t p = r.p;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint32_t> coef(0, p - 1);

    std::vector<long> expected;
    for (long q = 0; q <= Q; ++q) {
        const long a = static_cast<long>(r.dim(q)), b = q >= 1 ? static_cast<long>(r.dim(q - 1)) : 0,
                   c = q >= 2 ? static_cast<long>(r.dim(q - 2)) : 0;
        expected.push_back(a - 2 * b + c);
    }

    OracleBetti out;
    for (long attempt = 1; attempt <= 8; ++attempt) {
        out.attempts = attempt;
        std::vector<FpVector> w(n, FpVector(r.npoints, 0));
        for (auto& wk : w)
            for (const auto& v : r.V) {
                const std::uint32_t c = coef(rng);
                for (std::size_t s = 0; s < r.npoints; ++s) wk[s] = fp::add(wk[s], fp::mul(c, v[s], p), p);
            }
        if (rank(FieldMatrix::from_rows(Prime(p), r.npoints, w)) != n) continue;

        std::vector<Echelon> W, Qt;
        std::vector<long> qdims;
        for (long q = 0; q <= Q; ++q) {
            std::vector<FpVector> wrows;
            if (q >= 1)
                for (const auto& s : r.R[static_cast<std::size_t>(q - 1)].rows) {
                    wrows.push_back(hadamard(w[0], s, p));
                    wrows.push_back(hadamard(w[1], s, p));
                }
            W.push_back(echelon(p, r.npoints, std::move(wrows)));
            std::vector<FpVector> red;
            for (auto v : r.R[static_cast<std::size_t>(q)].rows) {
                reduce_mod(v, W.back(), p);
                red.push_back(std::move(v));
            }
            Qt.push_back(echelon(p, r.npoints, std::move(red)));
            qdims.push_back(static_cast<long>(Qt.back().dim()));
        }
        if (qdims != expected) continue;
        if (qdims.back() != 0) {
            std::ostringstream os;
            os << r.id << ": quotient does not vanish by degree " << Q << "; extend the graded range";
            throw std::runtime_error(os.str());
        }
        out.quotient_dims = qdims;
        long top = -1;
        for (long q = 0; q <= Q; ++q)
            if (qdims[static_cast<std::size_t>(q)] > 0) top = q;
        out.top_degree = top;

        std::vector<std::size_t> dims;
        for (long q = 0; q <= top; ++q) dims.push_back(static_cast<std::size_t>(qdims[static_cast<std::size_t>(q)]));
        std::vector<std::vector<std::vector<std::uint32_t>>> action;
        for (long q = 0; q <= top; ++q) {
            const auto& from = Qt[static_cast<std::size_t>(q)];
            const auto& to = Qt[static_cast<std::size_t>(q + 1)];
            std::vector<std::vector<std::uint32_t>> per_var;
            for (std::size_t k = 0; k < m; ++k) {
                std::vector<std::uint32_t> A(to.dim() * from.dim(), 0);
                for (std::size_t c = 0; c < from.dim(); ++c) {
                    FpVector v = hadamard(w[k + 2], from.rows[c], p);
                    reduce_mod(v, W[static_cast<std::size_t>(q + 1)], p);
                    for (std::size_t rr = 0; rr < to.dim(); ++rr) A[rr * from.dim() + c] = v[to.pivots[rr]];
                }
                per_var.push_back(std::move(A));
            }
            action.push_back(std::move(per_var));
        }
        out.b = resolve_finite_length(p, m, dims, action, steps);
        out.steps = steps;
        return out;
    }
    throw std::runtime_error(r.id + ": no regular sequence of linear forms found");
}

std::vector<std::pair<long, long>> compare(const BettiTable& t, const OracleBetti& o) {
    std::vector<std::pair<long, long>> bad;
    for (const auto& [k, v] : t.entries)
        if (k.first <= o.steps && o.at(k.first, k.second) != v) bad.push_back(k);
    return bad;
}

}  // namespace syzygy::koszul
