#pragma once

// Analytic layer: complex gamma, Dedekind zeta of Q(w), smooth test
// weights with Mellin transforms, the AFE cutoff function V_s, and
// truncated Euler products over primary or rational primes.

#include <complex>
#include <cstdint>
#include <functional>
#include <vector>

namespace em {

using cplx = std::complex<double>;

inline constexpr double kEulerGamma = 0.57721566490153286060651209;

// Lanczos approximation with reflection; >= 12 significant digits on |s| <= 50.
cplx complex_gamma(cplx s);

// 1/Gamma, finite everywhere (exactly 0 at non-positive integers).
cplx reciprocal_gamma(cplx s);

// Real digamma by asymptotic series (reference quality).
double digamma(double x);

// Digamma by Richardson-extrapolated central differences on complex_gamma.
double digamma_central_diff(double x);

// Hurwitz zeta by Euler-Maclaurin; valid well beyond Re(s) > 1 (used
// internally near s = 1).  a > 0.
cplx hurwitz_zeta(cplx s, double a);

cplx riemann_zeta_em(cplx s);

// L(s, chi_{-3}) for the quadratic character of conductor 3.
cplx l_chi3(cplx s);

// zeta_{Q(w)}(s) = zeta(s) * L(s, chi_{-3}); series domain Re(s) > 1.
cplx dedekind_zeta_eisenstein(cplx s);

// (s-1) * zeta_{Q(w)}(s), analytic near s = 1 (internal helper).
cplx dedekind_zeta_scaled(cplx s);

// gamma_{Q(w)} = lim_{s->1} ((s-1) zeta_{Q(w)}(s))', by Richardson
// extrapolation of central differences.
double gamma_eisenstein_constant();

// Residue of zeta_{Q(w)} at s = 1: pi/(3 sqrt 3).
double dedekind_residue();

// ---------------------------------------------------------------------------
// Smooth weight w, compactly supported in (0, 1)
// ---------------------------------------------------------------------------
class SmoothWeight {
public:
    // The default bump exp(-1/((x-1/4)(3/4-x))) on (1/4, 3/4).
    SmoothWeight();

    const std::string& id() const { return id_; }
    double support_lo() const { return x0_; }
    double support_hi() const { return x1_; }

    double operator()(double x) const;
    double deriv(double x) const;

    // Mellin transform w~(z) = int_0^inf x^{z-1} w(x) dx.
    cplx mellin(cplx z) const;
    // d/dz w~(z) at z = 1, i.e. int w(x) log x dx.
    double mellin_deriv1() const;
    // Independent quadrature with a caller-chosen panel count (oracle hook).
    cplx mellin_direct(cplx z, int panels) const;

private:
    std::string id_;
    double x0_, x1_;
    std::vector<double> nodes_, weights_;  // cached composite Gauss-Legendre
};

// Gauss-Legendre nodes/weights on [-1, 1].
void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w);

// ---------------------------------------------------------------------------
// AFE cutoff V_s(y)
// ---------------------------------------------------------------------------
enum class GammaKernel { Cubic, Quadratic };

struct VWeightParams {
    double abscissa = 2.0;      // right contour Re(u)
    double height = 15.0;       // truncation of Im(u)
    int panels = 400;           // composite Gauss-Legendre panels
};

// G(u) = exp(u^2): even, entire, G(0) = 1.
cplx afe_G(cplx u);

// g_s(u): (2pi)^{-u} Gamma(s+u)/Gamma(s) for the cubic kernel,
// pi^{-u/2} Gamma((s+u)/2)/Gamma(s/2) for the quadratic one.
cplx gamma_kernel(GammaKernel k, cplx s, cplx u);

// V_s(y) by contour quadrature; absolute error <= 1e-10 on y in [1e-6, 1e3].
cplx v_weight(GammaKernel k, cplx s, double y, const VWeightParams& p = {});

inline cplx v_weight_cubic(cplx s, double y, const VWeightParams& p = {}) {
    return v_weight(GammaKernel::Cubic, s, y, p);
}
inline cplx v_weight_quadratic(cplx s, double y, const VWeightParams& p = {}) {
    return v_weight(GammaKernel::Quadratic, s, y, p);
}

// Truncation radius from the polynomial decay bound with E = 3:
// smallest y with (1 + y/c_s)^{-3} < eps.
double v_truncation_radius(GammaKernel k, cplx s, double eps);

// Tabulated V_s on a log grid, with a rigorous-ish decay envelope used
// for truncation-error estimates.
class VTable {
public:
    VTable(GammaKernel k, cplx s, double y_max, const VWeightParams& p = {});

    cplx value(double y) const;      // 0 for y > y_max
    double envelope(double y) const; // upper bound for |V_s| at large y
    // Estimated bound on sum_{n > T} n^{-sigma} V(n/S) for a stream of
    // arguments with counting density <= rho per unit norm.
    double tail_bound(double S, double sigma, double T, double rho) const;

    cplx s() const { return s_; }
    double y_max() const { return y_max_; }

private:
    GammaKernel kernel_;
    cplx s_;
    double y_max_;
    VWeightParams params_;
    double t0_, h_;
    std::vector<cplx> grid_;
    std::vector<double> env_coef_;  // line-integral bound per abscissa R = 1..10
};

// ---------------------------------------------------------------------------
// Euler products
// ---------------------------------------------------------------------------
struct ProductResult {
    double value{1.0};
    double tail{0.0};  // estimated bound on the relative truncation error
};

// Product of local(q) over primary primes of Z[w] with N(pi) = q <= P:
// split p == 1 (mod 3) contributes local(p)^2, inert p == 2 (mod 3)
// contributes local(p^2); the ramified prime is excluded.  The caller
// declares |local(q) - 1| <= cbound * q^{-1-delta}.
ProductResult euler_product_primary(const std::function<double(double)>& local,
                                    double P, double delta, double cbound);

// Product over rational primes p <= P (optionally odd primes only).
ProductResult euler_product_rational(const std::function<double(double)>& local,
                                     double P, double delta, double cbound,
                                     bool odd_only = false);

// Sums over the same prime streams (same tail convention).
ProductResult prime_sum_primary(const std::function<double(double)>& term,
                                double P, double delta, double cbound);
ProductResult prime_sum_rational(const std::function<double(double)>& term,
                                 double P, double delta, double cbound,
                                 bool odd_only = false);

}  // namespace em
