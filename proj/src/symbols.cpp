#include "em/symbols.hpp"

#include <cmath>
#include <numbers>

namespace em {

std::complex<double> CubicSymbol::to_complex() const {
    if (is_zero) return {0.0, 0.0};
    static const std::complex<double> w[3] = {
        {1.0, 0.0},
        {-0.5, std::sqrt(3.0) / 2.0},
        {-0.5, -std::sqrt(3.0) / 2.0},
    };
    return w[exponent];
}

std::pair<int, int> supplementary_exponents(const EisensteinInt& c) {
    if (!is_primary(c)) throw std::domain_error("supplementary_exponents: c not primary");
    // (c - 1)/lambda^2 = (u - v) + u*w  with  c - 1 = 3(u + v*w)
    std::int64_t u = (c.a - 1) / 3;
    std::int64_t v = c.b / 3;
    auto mod3 = [](std::int64_t x) { return int((x % 3 + 3) % 3); };
    int e1 = mod3(u - v);
    int e2 = mod3(u);
    // e == alpha2 + alpha3*(1 - w) (mod 3): e2 == -alpha3, e1 == alpha2 + alpha3
    int alpha3 = mod3(-e2);
    if (alpha3 == 2) alpha3 = -1;
    int alpha2 = mod3(e1 - alpha3);
    if (alpha2 == 2) alpha2 = -1;
    return {alpha2, alpha3};
}

CubicSymbol cubic_symbol(const EisensteinInt& a_in, const EisensteinInt& b_in) {
    if (b_in.is_zero()) throw std::domain_error("cubic_symbol: zero modulus");
    auto bdec = primary_associate(b_in);
    if (bdec.lambda_exp != 0)
        throw std::domain_error("cubic_symbol: modulus divisible by lambda");
    EisensteinInt b = bdec.primary;
    EisensteinInt a = a_in;
    int e = 0;  // accumulated exponent of w
    while (true) {
        if (b == EisensteinInt{1, 0}) return CubicSymbol::omega_pow(e);
        a = divmod(a, b).second;
        if (a.is_zero()) return CubicSymbol::zero();
        auto [alpha2, alpha3] = supplementary_exponents(b);
        auto adec = primary_associate(a);
        // unit: (+-w^j / b) = w^{j*alpha2}; lambda^t: w^{-t*alpha3}
        int j = 0;
        if (adec.unit == kUnits[2] || adec.unit == kUnits[3]) j = 1;
        else if (adec.unit == kUnits[4] || adec.unit == kUnits[5]) j = 2;
        e += j * alpha2 - adec.lambda_exp * alpha3;
        // reciprocity: (a'/b) = (b/a') for primary a', b
        a = b;
        b = adec.primary;
    }
}

namespace {

EisensteinInt mod_reduce(const EisensteinInt& x, const EisensteinInt& m) {
    return divmod(x, m).second;
}

EisensteinInt mulmod(const EisensteinInt& x, const EisensteinInt& y, const EisensteinInt& m) {
    return mod_reduce(x * y, m);
}

}  // namespace

CubicSymbol cubic_symbol_oracle(const EisensteinInt& a, const EisensteinInt& pi, int e) {
    if (!is_primary(pi)) throw std::domain_error("cubic_symbol_oracle: pi not primary");
    if (pi.norm64() % 3 == 0) throw std::domain_error("cubic_symbol_oracle: pi = lambda");
    if (e < 1) throw std::domain_error("cubic_symbol_oracle: exponent < 1");
    if (!gcd(a, pi).is_zero() && gcd(a, pi).norm() > 1) return CubicSymbol::zero();
    std::int64_t npi = pi.norm64();
    std::uint64_t exp = std::uint64_t((npi - 1) / 3);
    EisensteinInt r{1, 0};
    EisensteinInt base = mod_reduce(a, pi);
    while (exp) {
        if (exp & 1) r = mulmod(r, base, pi);
        base = mulmod(base, base, pi);
        exp >>= 1;
    }
    // identify r with a cube root of unity mod pi
    int k = -1;
    EisensteinInt w[3] = {{1, 0}, kOmega, kOmegaSq};
    for (int i = 0; i < 3; ++i) {
        if (divides(pi, r - w[i])) {
            k = i;
            break;
        }
    }
    if (k < 0) throw std::logic_error("cubic_symbol_oracle: residue is not a cube root of unity");
    return CubicSymbol::omega_pow(k * e);
}

int kronecker(std::int64_t a, std::int64_t n) {
    if (n == 0) throw std::domain_error("kronecker: n = 0");
    int result = 1;
    if (n < 0) {
        n = -n;
        if (a < 0) result = -result;
    }
    if (n % 2 == 0) {
        if (a % 2 == 0) return 0;
        int t = 0;
        while (n % 2 == 0) { n /= 2; ++t; }
        std::int64_t am8 = ((a % 8) + 8) % 8;
        if (t % 2 == 1 && (am8 == 3 || am8 == 5)) result = -result;
    }
    a %= n;
    if (a < 0) a += n;
    // Jacobi symbol on odd n > 0
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            std::int64_t nm8 = n % 8;
            if (nm8 == 3 || nm8 == 5) result = -result;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) result = -result;
        a %= n;
    }
    return (n == 1) ? result : 0;
}

int mod9_projector(const EisensteinInt& q, const EisensteinInt& c) {
    if (!is_primary(q) || !is_primary(c))
        throw std::domain_error("mod9_projector: inputs must be == 1 (mod 3)");
    std::complex<double> s{0.0, 0.0};
    for (int a = 0; a < 3; ++a) {
        for (int b = 0; b < 3; ++b) {
            EisensteinInt t = pow(kOmega, unsigned(a)) * pow(kLambda, unsigned(b));
            auto xc = cubic_symbol(t, c).to_complex();
            auto xq = std::conj(cubic_symbol(t, q).to_complex());
            s += xc * xq;
        }
    }
    return int(std::lround(s.real() / 9.0));
}

}  // namespace em
