#include "syzygy/forms.hpp"

#include <map>
#include <stdexcept>

#include "syzygy/exactla.hpp"

namespace syzygy::forms {

namespace {
void fill(int n, int d, int pos, Exponent& cur, std::vector<Exponent>& out) {
    if (pos == n - 1) {
        cur[static_cast<std::size_t>(pos)] = d;
        out.push_back(cur);
        return;
    }
    for (int e = d; e >= 0; --e) {
        cur[static_cast<std::size_t>(pos)] = e;
        fill(n, d - e, pos + 1, cur, out);
    }
}
}  // namespace

std::vector<Exponent> monomials(int n, int d) {
    if (n <= 0 || d < 0) throw std::invalid_argument("monomials: bad arguments");
    std::vector<Exponent> out;
    Exponent cur(static_cast<std::size_t>(n), 0);
    fill(n, d, 0, cur, out);
    return out;
}

std::vector<std::uint32_t> eval_monomials(const std::vector<std::uint32_t>& pt, int d, std::uint32_t p) {
    const int n = static_cast<int>(pt.size());
    std::vector<std::vector<std::uint32_t>> pw(pt.size(), std::vector<std::uint32_t>(static_cast<std::size_t>(d) + 1, 1));
    for (std::size_t i = 0; i < pt.size(); ++i)
        for (int e = 1; e <= d; ++e) pw[i][static_cast<std::size_t>(e)] = fp::mul(pw[i][static_cast<std::size_t>(e - 1)], pt[i], p);
    std::vector<std::uint32_t> out;
    for (const auto& m : monomials(n, d)) {
        std::uint32_t v = 1;
        for (std::size_t i = 0; i < m.size(); ++i) v = fp::mul(v, pw[i][static_cast<std::size_t>(m[i])], p);
        out.push_back(v);
    }
    return out;
}

std::vector<poly::Poly> series_monomials(const std::vector<poly::Poly>& pt, int d, std::size_t len,
                                         std::uint32_t p) {
    const int n = static_cast<int>(pt.size());
    std::vector<std::vector<poly::Poly>> pw(pt.size());
    for (std::size_t i = 0; i < pt.size(); ++i) {
        poly::Poly one(len, 0);
        if (len) one[0] = 1;
        pw[i].push_back(one);
        for (int e = 1; e <= d; ++e) pw[i].push_back(poly::series::mul(pw[i].back(), pt[i], len, p));
    }
    std::vector<poly::Poly> out;
    for (const auto& m : monomials(n, d)) {
        poly::Poly v = pw[0][static_cast<std::size_t>(m[0])];
        for (std::size_t i = 1; i < m.size(); ++i) v = poly::series::mul(v, pw[i][static_cast<std::size_t>(m[i])], len, p);
        out.push_back(std::move(v));
    }
    return out;
}

std::uint32_t eval_form(const std::vector<std::uint32_t>& coeffs, const std::vector<std::uint32_t>& pt,
                        int d, std::uint32_t p) {
    const auto vals = eval_monomials(pt, d, p);
    if (vals.size() != coeffs.size()) throw std::invalid_argument("eval_form: coefficient count");
    std::uint32_t s = 0;
    for (std::size_t k = 0; k < vals.size(); ++k) s = fp::add(s, fp::mul(coeffs[k], vals[k], p), p);
    return s;
}

poly::Poly series_form(const std::vector<std::uint32_t>& coeffs, const std::vector<poly::Poly>& pt, int d,
                       std::size_t len, std::uint32_t p) {
    const auto vals = series_monomials(pt, d, len, p);
    if (vals.size() != coeffs.size()) throw std::invalid_argument("series_form: coefficient count");
    poly::Poly s(len, 0);
    for (std::size_t k = 0; k < vals.size(); ++k) {
        if (!coeffs[k]) continue;
        for (std::size_t t = 0; t < len; ++t) s[t] = fp::add(s[t], fp::mul(coeffs[k], vals[k][t], p), p);
    }
    return s;
}

std::vector<std::uint32_t> derivative(const std::vector<std::uint32_t>& coeffs, int n, int d, int k,
                                      std::uint32_t p) {
    if (d == 0) return {};
    const auto src = monomials(n, d);
    const auto dst = monomials(n, d - 1);
    std::map<Exponent, std::size_t> index;
    for (std::size_t j = 0; j < dst.size(); ++j) index[dst[j]] = j;
    std::vector<std::uint32_t> out(dst.size(), 0);
    for (std::size_t j = 0; j < src.size(); ++j) {
        const int e = src[j][static_cast<std::size_t>(k)];
        if (e == 0 || !coeffs[j]) continue;
        Exponent m = src[j];
        --m[static_cast<std::size_t>(k)];
        auto& slot = out[index.at(m)];
        slot = fp::add(slot, fp::mul(coeffs[j], static_cast<std::uint32_t>(e) % p, p), p);
    }
    return out;
}

std::vector<std::uint32_t> normalize(std::vector<std::uint32_t> pt, std::uint32_t p) {
    for (std::size_t k = pt.size(); k-- > 0;) {
        if (pt[k]) {
            const std::uint32_t s = fp::inv(pt[k], p);
            for (auto& v : pt) v = fp::mul(v, s, p);
            return pt;
        }
    }
    throw std::invalid_argument("normalize: zero vector");
}

}  // namespace syzygy::forms
