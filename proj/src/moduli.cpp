#include "syzygy/moduli.hpp"

#include <map>
#include <stdexcept>
#include <vector>

namespace syzygy::moduli {

namespace {

void require_i(long i) {
    if (i < 1 || i > kMaxI) throw std::invalid_argument("i out of range [1, 60]: " + std::to_string(i));
}

BigRational Q(const BigInt& v) { return BigRational(v); }

}  // namespace

std::string DivClass::str() const {
    return "(" + to_string(c_lambda) + ")*lambda + (" + to_string(c_psi) + ")*sum_psi";
}

BigInt rank_G0(long ell, long i) {
    require_i(i);
    if (ell < 1) throw std::invalid_argument("rank_G0 needs ell >= 1");
    return BigInt((2 * i + 1) * (2 * ell - 1) + 1);
}

BigInt rank_H0(long q, long i) {
    require_i(i);
    if (q < 0) throw std::invalid_argument("rank_H0 needs q >= 0");
    return binomial(2 * i + 1 + q, q);
}

namespace {
BigInt rank0(long q, long i, Family fam) { return fam == Family::G ? rank_G0(q, i) : rank_H0(q, i); }
DivClass c10(long q, long i, Family fam) { return fam == Family::G ? c1_G0(q, i) : c1_H0(q, i); }
constexpr long kRecCap = 256;
}  // namespace

BigInt rank_rec(long p, long q, long i, Family fam) {
    require_i(i);
    if (p < 0 || q < 1) throw std::invalid_argument("rank_rec needs p >= 0, q >= 1");
    if (p > kRecCap) throw std::invalid_argument("rank_rec recursion cap exceeded");
    // rank F_{p,q} = sum_k (-1)^k C(r, p-k) rank F_{0,q+k}
    const long r = 2 * i + 2;
    BigInt total = 0;
    for (long k = 0; k <= p; ++k) {
        BigInt term = binomial(r, p - k) * rank0(q + k, i, fam);
        if (k % 2) total -= term;
        else total += term;
    }
    return total;
}

DivClass c1_G0(long ell, long i) {
    require_i(i);
    if (ell < 1) throw std::invalid_argument("c1_G0 needs ell >= 1");
    return {1, -Q(binomial(ell + 1, 2))};
}

DivClass c1_H0(long q, long i) {
    require_i(i);
    if (q < 1) throw std::invalid_argument("c1_H0 needs q >= 1");
    const long r = 2 * i + 2;
    // c1(Sym^q E) = C(r+q-1, r) c1(E), with c1(H_{0,1}) = lambda - sum psi
    const BigRational s = Q(binomial(r + q - 1, r));
    return {s, -s};
}

DivClass c1_rec(long p, long q, long i, Family fam) {
    require_i(i);
    if (p < 0 || q < 1) throw std::invalid_argument("c1_rec needs p >= 0, q >= 1");
    if (p > kRecCap) throw std::invalid_argument("c1_rec recursion cap exceeded");
    const long r = 2 * i + 2;
    const DivClass c01 = c10(1, i, fam);
    DivClass total{0, 0};
    for (long k = 0; k <= p; ++k) {
        const long n = p - k, qq = q + k;
        // c1(wedge^n F01 (x) F0qq) = rk(F0qq) c1(wedge^n F01) + C(r, n) c1(F0qq)
        DivClass wedge = c01 * Q(binomial(r - 1, n - 1));
        DivClass term = wedge * Q(rank0(qq, i, fam)) + c10(qq, i, fam) * Q(binomial(r, n));
        total = (k % 2) ? total - term : total + term;
    }
    return total;
}

// ---------------------------------------------------------------------------
// GRR on the universal curve. Variables: 0 = omega, 1 = lambda, 2+j = E_j.

namespace {

using Mono = std::pair<int, int>;  // sorted; -1 = absent
using Poly = std::map<Mono, BigRational>;

Mono mono(int a, int b) {
    if (a > b) std::swap(a, b);
    return {a, b};
}

int degree(const Mono& m) { return (m.first >= 0) + (m.second >= 0); }

Poly mul_trunc2(const Poly& x, const Poly& y) {
    Poly out;
    for (const auto& [mx, cx] : x)
        for (const auto& [my, cy] : y) {
            if (degree(mx) + degree(my) > 2) continue;
            std::vector<int> v;
            for (int t : {mx.first, mx.second, my.first, my.second})
                if (t >= 0) v.push_back(t);
            Mono m = v.empty() ? mono(-1, -1) : v.size() == 1 ? mono(-1, v[0]) : mono(v[0], v[1]);
            out[m] += cx * cy;
        }
    return out;
}

}  // namespace

DivClass grr_expand(long ell, long i) {
    require_i(i);
    if (ell < 0) throw std::invalid_argument("grr_expand needs ell >= 0");
    const long g = 2 * i + 1, n = 2 * g;
    const int OMEGA = 0;
    auto E = [](long j) { return static_cast<int>(2 + j); };

    // ch(O(ell * sum E_j)) truncated to degree 2
    Poly sumE;
    for (long j = 0; j < n; ++j) sumE[mono(-1, E(j))] += 1;
    Poly ch;
    ch[mono(-1, -1)] = 1;
    for (const auto& [m, c] : sumE) ch[m] += c * ell;
    for (const auto& [m, c] : mul_trunc2(sumE, sumE))
        if (degree(m) == 2) ch[m] += c * make_rational(ell * ell, 2);

    // Todd class of the relative tangent bundle: 1 - omega/2 + omega^2/12
    Poly td;
    td[mono(-1, -1)] = 1;
    td[mono(-1, OMEGA)] = make_rational(-1, 2);
    td[mono(OMEGA, OMEGA)] = make_rational(1, 12);

    BigRational lam = 0;
    std::vector<BigRational> psi(static_cast<std::size_t>(n), 0);
    for (const auto& [m, c] : mul_trunc2(ch, td)) {
        if (degree(m) != 2 || c == 0) continue;
        const int a = m.first, b = m.second;
        if (a == OMEGA && b == OMEGA) {
            lam += c * 12;
        } else if (a == OMEGA && b == 1) {
            lam += c * (2 * g - 2);
        } else if (a == 1 && b >= 2) {
            lam += c;
        } else if (a == OMEGA && b >= 2) {
            psi[static_cast<std::size_t>(b - 2)] += c;
        } else if (a >= 2 && a == b) {
            psi[static_cast<std::size_t>(a - 2)] -= c;
        } else if (a >= 2 && b >= 2) {
            // disjoint sections
        } else {
            throw std::logic_error("grr_expand: no pushforward rule for monomial");
        }
    }
    for (const auto& v : psi)
        if (v != psi[0]) throw std::logic_error("grr_expand: asymmetric psi coefficients");
    return {lam, psi[0]};
}

// ---------------------------------------------------------------------------

namespace {
BigRational prefactor(long i) { return Q(binomial(2 * i, i - 1)) / BigRational(2 * i); }
}  // namespace

DivClass syz_class(long i) {
    return c1_rec(i - 1, 2, i, Family::G) - c1_rec(i - 1, 2, i, Family::H);
}

DivClass syz_closed(long i) {
    require_i(i);
    return DivClass{-(6 * i + 2), 3 * i + 1} * prefactor(i);
}

DivClass sec_class(long i) {
    require_i(i);
    return DivClass{-make_rational(18 * i * i + 10 * i - 2, 2 * i - 1), 3 * i + 1} * prefactor(i);
}

DivClass hur_pullback(long i) {
    require_i(i);
    return DivClass{make_rational(6 * (i + 2), 2 * i - 1), 0} * prefactor(i);
}

DivClass c1_G_closed(long i) {
    require_i(i);
    const long d = (i + 1) * (i + 2);
    return DivClass{make_rational(4 * i * i * i + 5 * i * i - 4 * i - 2, d),
                    -make_rational(8 * i * i * i + 13 * i * i - i - 2, 2 * d)} *
           Q(binomial(2 * i, i));
}

DivClass c1_H_closed(long i) {
    require_i(i);
    const BigRational s = Q(binomial(2 * i, i)) * make_rational(i * (2 * i + 1) * (2 * i + 3), (i + 1) * (i + 2));
    return {s, -s};
}

DimCount dim_count_check(long i) {
    require_i(i);
    DimCount d{i, binomial(2 * i + 3, i) * i, binomial(2 * i + 3, i + 1) * i,
               binomial(2 * i + 1, i - 1) * (4 * i + 6), false, false, false};
    d.printed_eq_derived = d.printed == d.derived;
    d.derived_eq_fibre = d.derived == d.fibre;
    d.printed_eq_fibre = d.printed == d.fibre;
    return d;
}

}  // namespace syzygy::moduli
