#pragma once

// Cubic residue symbols in Z[w] and the rational Kronecker symbol.
//
// The fast cubic symbol runs a Euclidean loop: reduce, strip units and
// lambda powers with the supplementary laws, flip with cubic reciprocity.
// The oracle computes a^{(N(pi)-1)/3} mod pi directly and is kept as an
// independent reference.

#include "em/eisenstein.hpp"

#include <complex>

namespace em {

// Value in {0, 1, w, w^2}: zero flag plus exponent of w.
struct CubicSymbol {
    bool is_zero{false};
    int exponent{0};  // in {0, 1, 2}, meaningful when !is_zero

    static CubicSymbol zero() { return {true, 0}; }
    static CubicSymbol omega_pow(int e) { return {false, ((e % 3) + 3) % 3}; }

    CubicSymbol operator*(const CubicSymbol& o) const {
        if (is_zero || o.is_zero) return zero();
        return omega_pow(exponent + o.exponent);
    }
    CubicSymbol conj() const { return is_zero ? zero() : omega_pow(-exponent); }
    bool operator==(const CubicSymbol&) const = default;

    std::complex<double> to_complex() const;
};

// (a/b)_3 for b != 0 coprime to lambda; b is normalized to its primary
// associate internally (units do not change the symbol).
CubicSymbol cubic_symbol(const EisensteinInt& a, const EisensteinInt& b);

// Reference implementation: symbol modulo pi^e by modular exponentiation,
// a^{(N(pi)-1)/3} == w^k (mod pi).  pi must be a primary prime != lambda.
CubicSymbol cubic_symbol_oracle(const EisensteinInt& a, const EisensteinInt& pi, int e = 1);

// alpha2/alpha3 of c == 1 + alpha2*lambda^2 + alpha3*lambda^3 (mod 9),
// both in {-1, 0, 1}; c must be primary.
std::pair<int, int> supplementary_exponents(const EisensteinInt& c);

// Kronecker symbol (a|n), n != 0.
int kronecker(std::int64_t a, std::int64_t n);

// (1/9) sum over a,b of chi_c(w^a lambda^b) conj(chi_q(w^a lambda^b)),
// rounded to an integer: 1 iff q == c (mod 9), else 0.
int mod9_projector(const EisensteinInt& q, const EisensteinInt& c);

}  // namespace em
