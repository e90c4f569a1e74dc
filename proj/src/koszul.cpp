#include "syzygy/koszul.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "syzygy/forms.hpp"

namespace syzygy::koszul {

namespace {

std::uint64_t choose(std::size_t n, long k) {
    if (k < 0 || static_cast<std::size_t>(k) > n) return 0;
    std::uint64_t r = 1;
    for (long j = 1; j <= k; ++j) r = r * (n - static_cast<std::size_t>(k) + static_cast<std::size_t>(j)) / static_cast<std::uint64_t>(j);
    return r;
}

// Sorted k-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<std::uint32_t>> subsets(std::size_t n, long k) {
    std::vector<std::vector<std::uint32_t>> out;
    if (k < 0 || static_cast<std::size_t>(k) > n) return out;
    std::vector<std::uint32_t> cur(static_cast<std::size_t>(k));
    for (std::size_t j = 0; j < cur.size(); ++j) cur[j] = static_cast<std::uint32_t>(j);
    while (true) {
        out.push_back(cur);
        long j = k - 1;
        while (j >= 0 && cur[static_cast<std::size_t>(j)] == n - static_cast<std::size_t>(k) + static_cast<std::size_t>(j)) --j;
        if (j < 0) break;
        ++cur[static_cast<std::size_t>(j)];
        for (auto t = static_cast<std::size_t>(j) + 1; t < cur.size(); ++t) cur[t] = cur[t - 1] + 1;
    }
    return out;
}

// Lexicographic rank of a sorted subset.
std::uint64_t subset_rank(std::size_t n, const std::vector<std::uint32_t>& s) {
    const long k = static_cast<long>(s.size());
    std::uint64_t colex = 0;
    for (long j = 0; j < k; ++j) colex += choose(n - 1 - s[static_cast<std::size_t>(j)], k - j);
    return choose(n, k) - 1 - colex;
}

void check_wedge(std::size_t n, long p) {
    const std::uint64_t c = choose(n, p);
    if (c > kMaxWedgeBasis) {
        std::ostringstream os;
        os << "wedge^" << p << " of a " << n << "-dimensional space has " << c << " basis elements (cap "
           << kMaxWedgeBasis << ")";
        throw std::length_error(os.str());
    }
}

}  // namespace

FieldMatrix koszul_differential(const SectionRing& r, long p, long q) {
    const std::size_t n = r.dimV();
    if (q < 0 || q + 1 > r.qmax()) throw std::out_of_range("koszul_differential: q outside the model's graded range");
    check_wedge(n, p);
    check_wedge(n, p - 1);
    const std::size_t rq = r.dim(q), rq1 = r.dim(q + 1);
    const auto dom = subsets(n, p);
    const std::size_t cols = static_cast<std::size_t>(choose(n, p - 1)) * rq1;
    std::vector<FieldMatrix::Row> rows(dom.size() * rq);
    if (p >= 1) {
        const auto& table = r.mult[static_cast<std::size_t>(q)];
#pragma omp parallel for schedule(static) if (dom.size() > 64)
        for (std::size_t s = 0; s < dom.size(); ++s) {
            const auto& I = dom[s];
            for (std::size_t m = 0; m < rq; ++m) {
                FieldMatrix::Row row;
                for (std::size_t k = 0; k < I.size(); ++k) {
                    std::vector<std::uint32_t> J;
                    J.reserve(I.size() - 1);
                    for (std::size_t t = 0; t < I.size(); ++t)
                        if (t != k) J.push_back(I[t]);
                    const std::uint64_t base = subset_rank(n, J) * rq1;
                    const FpVector& coords = table[I[k] * rq + m];
                    for (std::size_t c = 0; c < rq1; ++c) {
                        if (!coords[c]) continue;
                        const std::uint32_t v = k % 2 == 0 ? coords[c] : fp::neg(coords[c], r.p);
                        row.push_back({static_cast<std::uint32_t>(base + c), v});
                    }
                }
                rows[s * rq + m] = std::move(row);
            }
        }
    }
    return FieldMatrix(Prime(r.p), cols, std::move(rows));
}

namespace {

std::size_t strand_rank(const SectionRing& r, long p, long q) {
    if (p < 1 || q < 0 || choose(r.dimV(), p) == 0 || r.dim(q) == 0) return 0;
    return rank(koszul_differential(r, p, q));
}

}  // namespace

std::size_t koszul_dim(const SectionRing& r, long p, long q) {
    const std::size_t n = r.dimV();
    if (q < 0 || q > r.qmax()) throw std::out_of_range("koszul_dim: q outside the model's graded range");
    if (p >= 1 && q + 1 > r.qmax()) throw std::out_of_range("koszul_dim: needs R_{q+1}");
    if (p < 0 || static_cast<std::size_t>(p) > n) return 0;
    check_wedge(n, p);
    const std::size_t dom = static_cast<std::size_t>(choose(n, p)) * r.dim(q);
    return dom - strand_rank(r, p, q) - (q >= 1 ? strand_rank(r, p + 1, q - 1) : 0);
}

long BettiTable::at(long p, long q) const {
    auto it = entries.find({p, q});
    return it == entries.end() ? 0 : it->second;
}

BettiTable betti_table(const SectionRing& r, long pmax, long qmax) {
    if (pmax < 0 || qmax < 0) throw std::invalid_argument("betti_table: negative range");
    if (qmax > r.qmax() || (pmax >= 1 && qmax + 1 > r.qmax()))
        throw std::out_of_range("betti_table: model graded range must reach q_max + 1");
    const std::size_t n = r.dimV();
    std::set<std::pair<long, long>> need;
    for (long p = 0; p <= pmax; ++p)
        for (long q = 0; q <= qmax; ++q) {
            if (p >= 1) need.insert({p, q});
            if (q >= 1) need.insert({p + 1, q - 1});
        }
    const std::vector<std::pair<long, long>> keys(need.begin(), need.end());
    std::vector<std::size_t> ranks(keys.size(), 0);
#pragma omp parallel for schedule(dynamic, 1)
    for (std::size_t k = 0; k < keys.size(); ++k) ranks[k] = strand_rank(r, keys[k].first, keys[k].second);
    std::map<std::pair<long, long>, std::size_t> rk;
    for (std::size_t k = 0; k < keys.size(); ++k) rk[keys[k]] = ranks[k];

    BettiTable t;
    t.pmax = pmax;
    t.qmax = qmax;
    t.g = r.g;
    t.d = r.d;
    t.prime = r.p;
    t.seed = r.seed;
    t.model = r.id;
    for (long p = 0; p <= pmax; ++p)
        for (long q = 0; q <= qmax; ++q) {
            long b = 0;
            if (static_cast<std::size_t>(p) <= n) {
                check_wedge(n, p);
                b = static_cast<long>(choose(n, p) * r.dim(q));
                if (p >= 1) b -= static_cast<long>(rk[{p, q}]);
                if (q >= 1) b -= static_cast<long>(rk[{p + 1, q - 1}]);
            }
            t.entries[{p, q}] = b;
        }
    return t;
}

bool naturality_check(const BettiTable& t) {
    for (long p = 0; p <= t.pmax; ++p)
        if (t.at(p, 2) * t.at(p + 1, 1) != 0) return false;
    return true;
}

std::vector<long> mixed_columns(const BettiTable& t) {
    std::vector<long> out;
    for (long p = 0; p <= t.pmax; ++p)
        if (t.at(p, 1) > 0 && t.at(p, 2) > 0) out.push_back(p);
    return out;
}

BigRational euler_diagonal_rhs(long g, long d, long p) {
    if (d == g) throw std::invalid_argument("euler_diagonal_rhs: d = g");
    const BigRational bracket = make_rational(d + 1 - g, p + 2) - make_rational(d, d - g);
    return BigRational(BigInt(p + 1) * binomial(d - g, p + 1)) * bracket;
}

bool euler_diagonal_check(const BettiTable& t, long g, long d, std::vector<std::string>* failures) {
    bool ok = true;
    for (long p = 0; p + 1 <= t.pmax && t.qmax >= 2; ++p) {
        const BigRational lhs(t.at(p + 1, 1) - t.at(p, 2));
        const BigRational rhs = euler_diagonal_rhs(g, d, p);
        if (lhs != rhs) {
            ok = false;
            if (failures) {
                std::ostringstream os;
                os << "p=" << p << ": b_{p+1,1} - b_{p,2} = " << to_string(lhs) << ", formula " << to_string(rhs);
                failures->push_back(os.str());
            }
        }
    }
    return ok;
}

BettiTable prym_green_predicted(long g) {
    if (g < 7 || g % 2 == 0) throw std::invalid_argument("prym_green_predicted: g must be odd >= 7");
    const long i = (g - 5) / 2;
    BettiTable t;
    t.pmax = 2 * i + 2;
    t.qmax = 2;
    t.g = g;
    t.d = 2 * g - 2;
    t.model = "prym-green predicted g=" + std::to_string(g);
    auto integral = [&](const BigRational& v, long p, long q) {
        if (v.get_den() != 1 || v < 0) {
            std::ostringstream os;
            os << "prym_green_predicted: b_{" << p << "," << q << "} = " << to_string(v) << " is not a nonnegative integer";
            throw std::domain_error(os.str());
        }
        return v.get_num().get_si();
    };
    for (long p = 0; p <= t.pmax; ++p)
        for (long q = 0; q <= 2; ++q) t.entries[{p, q}] = 0;
    t.entries[{0, 0}] = 1;
    for (long p = 1; p <= i; ++p) {
        const BigRational v = make_rational(BigInt(p * (2 * i - 2 * p + 1)) * binomial(2 * i + 4, p + 1), 2 * i + 3);
        t.entries[{p, 1}] = integral(v, p, 1);
    }
    for (long p = i; p <= t.pmax; ++p) {
        const BigRational v =
            make_rational(BigInt((p + 1) * (2 * p - 2 * i + 1)) * binomial(2 * i + 4, p + 2), 2 * i + 3);
        t.entries[{p, 2}] = integral(v, p, 2);
    }
    return t;
}

std::string pretty(const BettiTable& t) {
    std::size_t w = 5;
    for (const auto& [k, v] : t.entries) w = std::max(w, std::to_string(v).size() + 1);
    std::ostringstream os;
    os << std::setw(7) << "";
    for (long p = 0; p <= t.pmax; ++p) os << std::setw(static_cast<int>(w)) << p;
    os << "\n" << std::setw(7) << "total:";
    for (long p = 0; p <= t.pmax; ++p) {
        long s = 0;
        for (long q = 0; q <= t.qmax; ++q) s += t.at(p, q);
        os << std::setw(static_cast<int>(w)) << s;
    }
    os << "\n";
    for (long q = 0; q <= t.qmax; ++q) {
        os << std::setw(5) << q << ": ";
        for (long p = 0; p <= t.pmax; ++p) {
            const long b = t.at(p, q);
            os << std::setw(static_cast<int>(w)) << (b == 0 ? std::string(".") : std::to_string(b));
        }
        os << "\n";
    }
    return os.str();
}

nlohmann::json to_json(const BettiTable& t) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& [k, v] : t.entries) entries.push_back({k.first, k.second, v});
    return {{"g", t.g},         {"d", t.d},       {"prime", t.prime}, {"seed", t.seed},
            {"model", t.model}, {"pmax", t.pmax}, {"qmax", t.qmax},   {"entries", entries}};
}

ScrollSyzygies scroll_syzygies(const curve::HyperellipticCurve& c, const curve::Divisor& L, std::uint64_t seed) {
    if (c.g % 2 == 0 || c.g < 3) throw std::invalid_argument("scroll_syzygies: g must be odd >= 3");
    if (curve::degree(L) != 2 * c.g) throw std::invalid_argument("scroll_syzygies: deg L must be 2g");
    if (curve::h0(c, c.canonical() - L) != 0) throw std::invalid_argument("scroll_syzygies: L is special");
    const std::uint32_t p = c.p;
    ScrollSyzygies out;
    out.i = (c.g - 1) / 2;
    const long i = out.i;
    const std::size_t n = static_cast<std::size_t>(2 * i + 2);
    out.nvars = n;

    const auto tau_basis = curve::rr_basis(c, L - c.pencil(1));
    std::set<std::uint32_t> avoid;
    for (const auto& [P, m] : L)
        if (P.kind != curve::Place::Kind::Infinity) avoid.insert(P.x);
    std::vector<curve::Place> pts;
    for (const auto& P : c.affine_points())
        if (!avoid.count(P.x)) pts.push_back(P);
    std::mt19937_64 rng(seed);
    std::shuffle(pts.begin(), pts.end(), rng);
    pts.resize(std::min<std::size_t>(pts.size(), static_cast<std::size_t>(3 * (6 * c.g + 1))));
    const std::size_t N = pts.size();

    std::vector<FpVector> tau_vals;
    for (const auto& [a, b] : tau_basis.funcs) {
        FpVector v(N);
        for (std::size_t s = 0; s < N; ++s) v[s] = curve::evaluate(c, a, b, tau_basis.h, pts[s]);
        tau_vals.push_back(std::move(v));
    }
    // z_{a,b} = sigma_a tau_b with sigma_0 = 1, sigma_1 = x
    std::vector<FpVector> z;
    std::uniform_int_distribution<std::uint32_t> coef(0, p - 1);
    for (int attempt = 0; attempt < 32 && z.empty(); ++attempt) {
        std::vector<FpVector> tau(static_cast<std::size_t>(i + 1), FpVector(N, 0));
        for (auto& t : tau)
            for (const auto& tb : tau_vals) {
                const std::uint32_t k = coef(rng);
                for (std::size_t s = 0; s < N; ++s) t[s] = fp::add(t[s], fp::mul(k, tb[s], p), p);
            }
        std::vector<FpVector> cand;
        for (int a = 0; a < 2; ++a)
            for (const auto& t : tau) {
                FpVector v(N);
                for (std::size_t s = 0; s < N; ++s) v[s] = a == 0 ? t[s] : fp::mul(pts[s].x, t[s], p);
                cand.push_back(std::move(v));
            }
        if (rank(FieldMatrix::from_rows(Prime(p), N, cand)) == n &&
            static_cast<long>(n) == curve::h0(c, L))
            z = std::move(cand);
    }
    if (z.empty()) throw std::runtime_error("scroll_syzygies: multiplication map not injective on sampled bases");
    auto var = [&](int a, long b) { return static_cast<std::size_t>(a) * static_cast<std::size_t>(i + 1) + static_cast<std::size_t>(b); };

    const auto mon2 = forms::monomials(static_cast<int>(n), 2);
    const auto mon3 = forms::monomials(static_cast<int>(n), 3);
    std::map<forms::Exponent, std::size_t> idx2, idx3;
    for (std::size_t k = 0; k < mon2.size(); ++k) idx2[mon2[k]] = k;
    for (std::size_t k = 0; k < mon3.size(); ++k) idx3[mon3[k]] = k;
    auto quad = [&](std::size_t u, std::size_t v) {
        forms::Exponent e(n, 0);
        ++e[u];
        ++e[v];
        return idx2.at(e);
    };
    // 2x2 minors of [[z_{0,b}], [z_{1,b}]]; columns l < l'
    std::vector<FpVector> minors;
    std::vector<std::pair<long, long>> minor_cols;
    for (long l = 0; l <= i; ++l)
        for (long l2 = l + 1; l2 <= i; ++l2) {
            FpVector m(mon2.size(), 0);
            m[quad(var(0, l), var(1, l2))] = fp::add(m[quad(var(0, l), var(1, l2))], 1, p);
            m[quad(var(0, l2), var(1, l))] = fp::sub(m[quad(var(0, l2), var(1, l))], 1, p);
            minors.push_back(std::move(m));
            minor_cols.emplace_back(l, l2);
        }
    for (std::size_t k = 0; k < minors.size(); ++k)
        if (minor_cols[k].second == i) out.quadrics.push_back(minors[k]);
    out.quadric_rank = static_cast<long>(rank(FieldMatrix::from_rows(Prime(p), mon2.size(), out.quadrics)));

    out.quadrics_vanish = true;
    for (const auto& qd : out.quadrics)
        for (std::size_t s = 0; s < N && out.quadrics_vanish; ++s) {
            std::vector<std::uint32_t> pt(n);
            for (std::size_t v = 0; v < n; ++v) pt[v] = z[v][s];
            if (forms::eval_form(qd, pt, 2, p) != 0) out.quadrics_vanish = false;
        }

    // Linear syzygies among the minors: kernel of wedge^{i-1} V (x) span(minors) -> wedge^{i-2} V (x) S_3.
    auto times_var = [&](const FpVector& f2, std::size_t v) {
        std::vector<std::pair<std::size_t, std::uint32_t>> out3;
        for (std::size_t k = 0; k < mon2.size(); ++k) {
            if (!f2[k]) continue;
            forms::Exponent e = mon2[k];
            ++e[v];
            out3.emplace_back(idx3.at(e), f2[k]);
        }
        return out3;
    };
    // Full differential on wedge^{i-1} V (x) S_2, rows indexed by (I, monomial).
    const auto dom = subsets(n, i - 1);
    const auto cod = subsets(n, i - 2);
    auto full_image = [&](const std::vector<std::uint32_t>& I, const FpVector& f2) {
        FpVector img(cod.size() * mon3.size(), 0);
        for (std::size_t k = 0; k < I.size(); ++k) {
            std::vector<std::uint32_t> J;
            for (std::size_t t = 0; t < I.size(); ++t)
                if (t != k) J.push_back(I[t]);
            const std::uint64_t base = subset_rank(n, J) * mon3.size();
            for (const auto& [col, val] : times_var(f2, I[k])) {
                auto& slot = img[base + col];
                slot = k % 2 == 0 ? fp::add(slot, val, p) : fp::sub(slot, val, p);
            }
        }
        return img;
    };

    std::vector<FpVector> syz_domain;  // coefficient vectors over (I, minor)
    if (i == 1) {
        syz_domain.push_back(FpVector(minors.size(), 1));
    } else {
        std::vector<FpVector> images;
        for (const auto& I : dom)
            for (const auto& m : minors) images.push_back(full_image(I, m));
        const FieldMatrix M = FieldMatrix::from_rows(Prime(p), cod.size() * mon3.size(), images).transpose();
        syz_domain = kernel_basis(M);
    }
    for (const auto& coeffs : syz_domain) {
        FpVector gamma(dom.size() * mon2.size(), 0);
        for (std::size_t s = 0; s < dom.size(); ++s)
            for (std::size_t k = 0; k < minors.size(); ++k) {
                const std::uint32_t cf = coeffs[s * minors.size() + k];
                if (!cf) continue;
                for (std::size_t mm = 0; mm < mon2.size(); ++mm)
                    if (minors[k][mm])
                        gamma[s * mon2.size() + mm] =
                            fp::add(gamma[s * mon2.size() + mm], fp::mul(cf, minors[k][mm], p), p);
            }
        out.gammas.push_back(std::move(gamma));
    }

    // Verify through the full strand matrix, independent of the minor basis.
    out.cycles_verified = static_cast<long>(out.gammas.size()) == i;
    if (i >= 2) {
        std::vector<FieldMatrix::Row> rows;
        for (const auto& I : dom)
            for (std::size_t mm = 0; mm < mon2.size(); ++mm) {
                FpVector unit(mon2.size(), 0);
                unit[mm] = 1;
                const FpVector img = full_image(I, unit);
                FieldMatrix::Row row;
                for (std::size_t c2 = 0; c2 < img.size(); ++c2)
                    if (img[c2]) row.push_back({static_cast<std::uint32_t>(c2), img[c2]});
                rows.push_back(std::move(row));
            }
        const FieldMatrix D = FieldMatrix(Prime(p), cod.size() * mon3.size(), std::move(rows)).transpose();
        for (const auto& gmm : out.gammas) {
            const FpVector img = D.apply(gmm);
            if (std::any_of(img.begin(), img.end(), [](std::uint32_t v) { return v != 0; })) out.cycles_verified = false;
        }
    }
    if (!out.gammas.empty() &&
        rank(FieldMatrix::from_rows(Prime(p), dom.size() * mon2.size(), out.gammas)) != out.gammas.size())
        out.cycles_verified = false;

    const SectionRing ring = hyperelliptic_ring(c, L, 2, seed);
    out.koszul_i1 = static_cast<long>(koszul_dim(ring, i, 1));
    out.pass = out.quadric_rank == i && out.quadrics_vanish && out.cycles_verified && out.koszul_i1 >= i;
    return out;
}

bool secant_nonempty(const curve::PlaneQuartic& q, const std::vector<curve::ProjPoint>& E) {
    if (E.size() != 6) throw std::invalid_argument("secant_nonempty: expects L = 3H - E6");
    return curve::conics_through(q, E) >= 1;
}

SecantComparison gl_secant_divisorial_check(const curve::PlaneQuartic& q, const std::vector<curve::ProjPoint>& E,
                                            std::uint64_t seed) {
    if (!q.smooth) throw std::invalid_argument("gl_secant_divisorial_check: quartic not smooth");
    const SectionRing ring = quartic_ring(q, 3, E, 2, seed);
    return {koszul_dim(ring, 0, 2) != 0, secant_nonempty(q, E)};
}

SecantComparison gl_secant_divisorial_check(const curve::HyperellipticCurve& c, const curve::Divisor& L,
                                            std::uint64_t seed) {
    if (c.g != 3 || curve::degree(L) != 6) throw std::invalid_argument("gl_secant_divisorial_check: needs g=3, deg 6");
    if (curve::h0(c, c.canonical() - L) != 0) throw std::invalid_argument("gl_secant_divisorial_check: L is special");
    const SectionRing ring = hyperelliptic_ring(c, L, 2, seed);
    // Clifford index 0 < 1 on a hyperelliptic curve
    return {koszul_dim(ring, 0, 2) != 0, true};
}

}  // namespace syzygy::koszul
