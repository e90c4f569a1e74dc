#include "syzygy/planecurve.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>

#include "syzygy/forms.hpp"

namespace syzygy::curve {

using poly::Poly;

std::string PlaneQuartic::id() const {
    std::ostringstream os;
    os << "quartic p=" << p << " seed=" << seed;
    return os.str();
}

namespace {

std::vector<ProjPoint> rational_points(std::uint32_t p, const std::vector<std::uint32_t>& F) {
    const auto mons = forms::monomials(3, 4);
    std::vector<ProjPoint> out;
    // z = 1: F(x, y, 1) as a polynomial in y for each x
    for (std::uint32_t x = 0; x < p; ++x) {
        Poly fy(5, 0);
        for (std::size_t k = 0; k < mons.size(); ++k) {
            if (!F[k]) continue;
            const auto b = static_cast<std::size_t>(mons[k][1]);
            fy[b] = fp::add(fy[b], fp::mul(F[k], fp::pow(x, static_cast<std::uint64_t>(mons[k][0]), p), p), p);
        }
        poly::trim(fy);
        if (fy.empty()) throw std::invalid_argument("quartic contains a line z = const");
        for (std::uint32_t y = 0; y < p; ++y)
            if (poly::eval(fy, y, p) == 0) out.push_back({x, y, 1});
    }
    for (std::uint32_t x = 0; x < p; ++x)
        if (forms::eval_form(F, {x, 1, 0}, 4, p) == 0) out.push_back({x, 1, 0});
    if (forms::eval_form(F, {1, 0, 0}, 4, p) == 0) out.push_back({1, 0, 0});
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

PlaneQuartic make_quartic(std::uint32_t p, std::vector<std::uint32_t> F) {
    Prime checked(p);
    if (F.size() != forms::monomials(3, 4).size()) throw std::invalid_argument("quartic needs 15 coefficients");
    for (auto& v : F) v %= p;
    PlaneQuartic q;
    q.p = p;
    q.F = std::move(F);
    q.points = rational_points(p, q.F);
    std::vector<std::vector<std::uint32_t>> grad;
    for (int k = 0; k < 3; ++k) grad.push_back(forms::derivative(q.F, 3, 4, k, p));
    q.smooth = true;
    for (const auto& P : q.points) {
        bool singular = true;
        for (int k = 0; k < 3 && singular; ++k)
            if (forms::eval_form(grad[static_cast<std::size_t>(k)], P, 3, p) != 0) singular = false;
        if (singular) {
            q.smooth = false;
            break;
        }
    }
    return q;
}

PlaneQuartic fermat_quartic(std::uint32_t p) {
    std::vector<std::uint32_t> F(15, 0);
    const auto mons = forms::monomials(3, 4);
    for (std::size_t k = 0; k < mons.size(); ++k)
        if (mons[k][0] == 4 || mons[k][1] == 4 || mons[k][2] == 4) F[k] = 1;
    return make_quartic(p, F);
}

PlaneQuartic plane_quartic_sample(std::uint32_t p, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint32_t> coef(0, p - 1);
    for (int attempt = 0; attempt < 100; ++attempt) {
        std::vector<std::uint32_t> F(15);
        for (auto& v : F) v = coef(rng);
        PlaneQuartic q = make_quartic(p, F);
        if (q.smooth && q.points.size() >= 40) {
            q.seed = seed;
            return q;
        }
    }
    throw std::runtime_error("plane_quartic_sample: resampling budget exhausted");
}

bool within_weil_bound(const PlaneQuartic& q) {
    const double dev = std::fabs(static_cast<double>(q.points.size()) - (static_cast<double>(q.p) + 1.0));
    return dev <= 6.0 * std::sqrt(static_cast<double>(q.p));
}

std::vector<std::vector<std::uint32_t>> local_branch(const PlaneQuartic& q, const ProjPoint& P, std::size_t len) {
    const std::uint32_t p = q.p;
    std::size_t k = 2;
    while (P[k] == 0) --k;  // chart coordinate, P[k] = 1 after normalization
    std::size_t i = (k + 1) % 3, j = (k + 2) % 3;
    auto gi = forms::eval_form(forms::derivative(q.F, 3, 4, static_cast<int>(i), p), P, 3, p);
    auto gj = forms::eval_form(forms::derivative(q.F, 3, 4, static_cast<int>(j), p), P, 3, p);
    if (gj == 0) {
        std::swap(i, j);
        std::swap(gi, gj);
    }
    if (gj == 0) throw std::invalid_argument("local_branch: singular point");
    std::vector<Poly> X(3, Poly(len, 0));
    X[k][0] = P[k];
    X[i][0] = P[i];
    if (len > 1) X[i][1] = 1;
    X[j][0] = P[j];
    const std::uint32_t inv_g = fp::inv(gj, p);
    for (std::size_t it = 0; it < len; ++it) {
        const Poly val = forms::series_form(q.F, X, 4, len, p);
        if (poly::series::valuation(val, len) == len) break;
        for (std::size_t t = 0; t < len; ++t) X[j][t] = fp::sub(X[j][t], fp::mul(val[t], inv_g, p), p);
    }
    return X;
}

std::vector<FpVector> quartic_sections(const PlaneQuartic& q, int deg, const std::vector<ProjPoint>& E, int order,
                                       const std::vector<ProjPoint>& samples) {
    const std::uint32_t p = q.p;
    const std::size_t nm = forms::monomials(3, deg).size();
    std::vector<FpVector> basis;
    if (E.empty() || order <= 0) {
        for (std::size_t k = 0; k < nm; ++k) {
            FpVector v(nm, 0);
            v[k] = 1;
            basis.push_back(std::move(v));
        }
    } else {
        std::vector<FieldMatrix::Row> rows;
        const auto len = static_cast<std::size_t>(order);
        for (const auto& P : E) {
            const auto branch = local_branch(q, P, len);
            const auto ser = forms::series_monomials(branch, deg, len, p);
            for (std::size_t t = 0; t < len; ++t) {
                FieldMatrix::Row row;
                for (std::size_t m = 0; m < nm; ++m)
                    if (ser[m][t]) row.push_back({static_cast<std::uint32_t>(m), ser[m][t]});
                rows.push_back(std::move(row));
            }
        }
        basis = kernel_basis(FieldMatrix(Prime(p), nm, std::move(rows)));
    }
    std::vector<std::vector<std::uint32_t>> mon_vals;
    mon_vals.reserve(samples.size());
    for (const auto& s : samples) mon_vals.push_back(forms::eval_monomials(s, deg, p));
    std::vector<FpVector> out;
    for (const auto& form : basis) {
        FpVector v(samples.size(), 0);
        for (std::size_t s = 0; s < samples.size(); ++s) {
            std::uint64_t acc = 0;
            for (std::size_t m = 0; m < nm; ++m) acc = (acc + static_cast<std::uint64_t>(form[m]) * mon_vals[s][m]) % p;
            v[s] = static_cast<std::uint32_t>(acc);
        }
        out.push_back(std::move(v));
    }
    return out;
}

long conics_through(const PlaneQuartic& q, const std::vector<ProjPoint>& E) {
    std::vector<FpVector> rows;
    for (const auto& P : E) rows.push_back(forms::eval_monomials(P, 2, q.p));
    if (rows.empty()) return 6;
    return 6 - static_cast<long>(rank(FieldMatrix::from_rows(Prime(q.p), 6, rows)));
}

std::vector<ProjPoint> split_line(const PlaneQuartic& q, std::mt19937_64& rng, int tries) {
    const std::uint32_t p = q.p;
    if (q.points.size() < 2) return {};
    std::uniform_int_distribution<std::size_t> pick(0, q.points.size() - 1);
    for (int attempt = 0; attempt < tries; ++attempt) {
        const auto& A = q.points[pick(rng)];
        const auto& B = q.points[pick(rng)];
        if (A == B) continue;
        std::set<ProjPoint> on_line = {B};
        for (std::uint32_t s = 0; s < p; ++s) {
            ProjPoint X(3);
            for (int k = 0; k < 3; ++k) X[static_cast<std::size_t>(k)] = fp::add(A[static_cast<std::size_t>(k)], fp::mul(s, B[static_cast<std::size_t>(k)], p), p);
            if (forms::eval_form(q.F, X, 4, p) == 0) on_line.insert(forms::normalize(X, p));
        }
        if (on_line.size() != 4) continue;
        return {on_line.begin(), on_line.end()};
    }
    return {};
}

}  // namespace syzygy::curve
