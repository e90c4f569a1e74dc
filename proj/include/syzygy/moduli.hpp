#pragma once
// Divisor classes on M_{g,2g} in the span of lambda and sum psi_j, with the
// rank / first Chern class recursions for the bundles G_{p,q}, H_{p,q}.

#include <string>

#include "syzygy/exactla.hpp"

namespace syzygy::moduli {

struct DivClass {
    BigRational c_lambda;
    BigRational c_psi;

    DivClass operator+(const DivClass& o) const { return {c_lambda + o.c_lambda, c_psi + o.c_psi}; }
    DivClass operator-(const DivClass& o) const { return {c_lambda - o.c_lambda, c_psi - o.c_psi}; }
    DivClass operator*(const BigRational& s) const { return {c_lambda * s, c_psi * s}; }
    bool operator==(const DivClass& o) const { return c_lambda == o.c_lambda && c_psi == o.c_psi; }
    std::string str() const;
};

enum class Family { G, H };

inline constexpr long kMaxI = 60;

BigInt rank_G0(long ell, long i);
BigInt rank_H0(long q, long i);
BigInt rank_rec(long p, long q, long i, Family fam);

DivClass c1_G0(long ell, long i);
DivClass c1_H0(long q, long i);
DivClass c1_rec(long p, long q, long i, Family fam);

/// Independent GRR pushforward, carried out symbolically on the universal
/// curve with 2g individual markings, g = 2i+1.
DivClass grr_expand(long ell, long i);

DivClass syz_class(long i);
DivClass syz_closed(long i);
DivClass sec_class(long i);
DivClass hur_pullback(long i);

/// Closed forms for c1(G_{i-1,2}) and c1(H_{i-1,2}).
DivClass c1_G_closed(long i);
DivClass c1_H_closed(long i);

struct DimCount {
    long i;
    BigInt printed;      // i * C(2i+3, i)
    BigInt derived;      // i * C(2i+3, i+1)
    BigInt fibre;        // C(2i+1, i-1) * (4i+6)
    bool printed_eq_derived;
    bool derived_eq_fibre;
    bool printed_eq_fibre;
};

DimCount dim_count_check(long i);

}  // namespace syzygy::moduli
