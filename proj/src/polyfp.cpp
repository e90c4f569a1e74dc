#include "syzygy/polyfp.hpp"

#include <stdexcept>

#include "syzygy/exactla.hpp"

namespace syzygy::poly {

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

long deg(const Poly& a) {
    for (std::size_t k = a.size(); k-- > 0;)
        if (a[k]) return static_cast<long>(k);
    return -1;
}

Poly add(const Poly& a, const Poly& b, std::uint32_t p) {
    Poly c(std::max(a.size(), b.size()), 0);
    for (std::size_t k = 0; k < c.size(); ++k)
        c[k] = fp::add(k < a.size() ? a[k] : 0, k < b.size() ? b[k] : 0, p);
    trim(c);
    return c;
}

Poly sub(const Poly& a, const Poly& b, std::uint32_t p) {
    Poly c(std::max(a.size(), b.size()), 0);
    for (std::size_t k = 0; k < c.size(); ++k)
        c[k] = fp::sub(k < a.size() ? a[k] : 0, k < b.size() ? b[k] : 0, p);
    trim(c);
    return c;
}

Poly mul(const Poly& a, const Poly& b, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    std::vector<std::uint64_t> acc(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            acc[i + j] = (acc[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p;
    }
    Poly c(acc.begin(), acc.end());
    trim(c);
    return c;
}

Poly scale(const Poly& a, std::uint32_t s, std::uint32_t p) {
    Poly c(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) c[k] = fp::mul(a[k], s, p);
    trim(c);
    return c;
}

void divmod(const Poly& a, const Poly& b, std::uint32_t p, Poly& q, Poly& r) {
    const long db = deg(b);
    if (db < 0) throw std::domain_error("polynomial division by zero");
    r = a;
    trim(r);
    const long da = deg(r);
    q.assign(da >= db ? static_cast<std::size_t>(da - db + 1) : 0, 0);
    const std::uint32_t lead_inv = fp::inv(b[static_cast<std::size_t>(db)], p);
    for (long k = da; k >= db; --k) {
        const std::uint32_t c = fp::mul(r[static_cast<std::size_t>(k)], lead_inv, p);
        if (!c) continue;
        q[static_cast<std::size_t>(k - db)] = c;
        for (long j = 0; j <= db; ++j) {
            auto& t = r[static_cast<std::size_t>(k - db + j)];
            t = fp::sub(t, fp::mul(c, b[static_cast<std::size_t>(j)], p), p);
        }
    }
    trim(q);
    trim(r);
}

Poly gcd(Poly a, Poly b, std::uint32_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly q, r;
        divmod(a, b, p, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) a = scale(a, fp::inv(a.back(), p), p);
    return a;
}

Poly derivative(const Poly& a, std::uint32_t p) {
    Poly d;
    for (std::size_t k = 1; k < a.size(); ++k) d.push_back(fp::mul(a[k], static_cast<std::uint32_t>(k % p), p));
    trim(d);
    return d;
}

std::uint32_t eval(const Poly& a, std::uint32_t x, std::uint32_t p) {
    std::uint64_t v = 0;
    for (std::size_t k = a.size(); k-- > 0;) v = (v * x + a[k]) % p;
    return static_cast<std::uint32_t>(v);
}

bool squarefree(const Poly& a, std::uint32_t p) {
    return deg(gcd(a, derivative(a, p), p)) == 0;
}

std::vector<std::uint32_t> roots(const Poly& a, std::uint32_t p) {
    if (deg(a) < 0) throw std::domain_error("roots of the zero polynomial");
    std::vector<std::uint32_t> out;
    for (std::uint32_t x = 0; x < p; ++x)
        if (eval(a, x, p) == 0) out.push_back(x);
    return out;
}

Poly linear(std::uint32_t root, std::uint32_t p) { return {fp::neg(root % p, p), 1}; }

Poly pow(const Poly& a, unsigned e, std::uint32_t p) {
    Poly r = {1};
    for (unsigned k = 0; k < e; ++k) r = mul(r, a, p);
    return r;
}

Poly taylor_shift(const Poly& a, std::uint32_t x0, std::uint32_t p) {
    // Horner in the ring F_p[t]: a(x0 + t)
    Poly r;
    const Poly lin = {x0 % p, 1};
    for (std::size_t k = a.size(); k-- > 0;) r = add(mul(r, lin, p), Poly{a[k]}, p);
    return r;
}

namespace series {

Poly mul(const Poly& a, const Poly& b, std::size_t n, std::uint32_t p) {
    Poly c(n, 0);
    for (std::size_t i = 0; i < a.size() && i < n; ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size() && i + j < n; ++j)
            c[i + j] = fp::add(c[i + j], fp::mul(a[i], b[j], p), p);
    }
    return c;
}

Poly compose(const Poly& a, const Poly& s, std::size_t n, std::uint32_t p) {
    if (!s.empty() && s[0] != 0) throw std::invalid_argument("series::compose needs s(0) = 0");
    Poly r(n, 0);
    for (std::size_t k = a.size(); k-- > 0;) {
        r = mul(r, s, n, p);
        if (n > 0) r[0] = fp::add(r[0], a[k], p);
    }
    return r;
}

std::size_t valuation(const Poly& a, std::size_t n) {
    for (std::size_t k = 0; k < n && k < a.size(); ++k)
        if (a[k]) return k;
    return n;
}

}  // namespace series

}  // namespace syzygy::poly
