#include "em/special.hpp"
#include "em/sieve.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace em {

namespace {

constexpr double kPi = std::numbers::pi;

// Lanczos g = 7, n = 9 coefficients.
constexpr double kLanczosG = 7.0;
constexpr double kLanczos[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

cplx lanczos_gamma_core(cplx z) {
    // valid for Re(z) >= 0.5
    z -= 1.0;
    cplx x = kLanczos[0];
    for (int i = 1; i < 9; ++i) x += kLanczos[i] / (z + double(i));
    cplx t = z + kLanczosG + 0.5;
    return std::sqrt(2.0 * kPi) * std::pow(t, z + 0.5) * std::exp(-t) * x;
}

}  // namespace

cplx complex_gamma(cplx s) {
    if (s.real() < 0.5) {
        // reflection: Gamma(s) = pi / (sin(pi s) Gamma(1 - s))
        return kPi / (std::sin(kPi * s) * lanczos_gamma_core(1.0 - s));
    }
    return lanczos_gamma_core(s);
}

cplx reciprocal_gamma(cplx s) {
    if (s.real() < 0.5) {
        return std::sin(kPi * s) * lanczos_gamma_core(1.0 - s) / kPi;
    }
    return 1.0 / lanczos_gamma_core(s);
}

namespace {

// B_2 .. B_24
constexpr double kBernoulli[12] = {
    1.0 / 6, -1.0 / 30, 1.0 / 42, -1.0 / 30, 5.0 / 66, -691.0 / 2730,
    7.0 / 6, -3617.0 / 510, 43867.0 / 798, -174611.0 / 330,
    854513.0 / 138, -236364091.0 / 2730,
};

}  // namespace

double digamma(double x) {
    if (x <= 0 && x == std::floor(x)) throw std::domain_error("digamma: pole");
    double r = 0.0;
    while (x < 8.0) {
        r -= 1.0 / x;
        x += 1.0;
    }
    double inv = 1.0 / x, inv2 = inv * inv;
    double s = std::log(x) - 0.5 * inv;
    double p = inv2;
    for (int k = 0; k < 7; ++k) {
        s -= kBernoulli[k] / (2.0 * (k + 1)) * p;
        p *= inv2;
    }
    r += s;
    return r;
}

double digamma_central_diff(double x) {
    auto f = [](double t) { return std::log(complex_gamma(cplx(t, 0.0))).real(); };
    // Richardson table over h, h/2, h/4
    double h = 0.08 * std::min(1.0, x);
    double d[3];
    for (int i = 0; i < 3; ++i, h *= 0.5) d[i] = (f(x + h) - f(x - h)) / (2.0 * h);
    double r1 = (4.0 * d[1] - d[0]) / 3.0;
    double r2 = (4.0 * d[2] - d[1]) / 3.0;
    return (16.0 * r2 - r1) / 15.0;
}

cplx hurwitz_zeta(cplx s, double a) {
    if (s == cplx(1.0, 0.0)) throw std::domain_error("hurwitz_zeta: pole at s = 1");
    const int N = 40, K = 12;
    cplx sum = 0.0;
    for (int n = 0; n < N; ++n) sum += std::pow(cplx(n + a, 0.0), -s);
    double M = N + a;
    cplx Ms = std::pow(cplx(M, 0.0), -s);
    sum += Ms * M / (s - 1.0);
    sum += 0.5 * Ms;
    cplx poch = s;       // s(s+1)...(s+2k-2)
    cplx Mpow = Ms / M;  // M^{-s-2k+1}
    double fact = 2.0;   // (2k)!
    for (int k = 1; k <= K; ++k) {
        sum += kBernoulli[k - 1] / fact * poch * Mpow;
        if (k < K) {
            poch *= (s + double(2 * k - 1)) * (s + double(2 * k));
            fact *= double(2 * k + 1) * double(2 * k + 2);
            Mpow /= M * M;
        }
    }
    return sum;
}

cplx riemann_zeta_em(cplx s) { return hurwitz_zeta(s, 1.0); }

cplx l_chi3(cplx s) {
    if (s == cplx(1.0, 0.0)) return cplx(kPi / (3.0 * std::sqrt(3.0)), 0.0);
    return std::pow(cplx(3.0, 0.0), -s) *
           (hurwitz_zeta(s, 1.0 / 3.0) - hurwitz_zeta(s, 2.0 / 3.0));
}

cplx dedekind_zeta_eisenstein(cplx s) {
    if (s.real() <= 1.0)
        throw std::domain_error("dedekind_zeta_eisenstein: series domain is Re(s) > 1");
    return riemann_zeta_em(s) * l_chi3(s);
}

cplx dedekind_zeta_scaled(cplx s) {
    if (s == cplx(1.0, 0.0)) return cplx(dedekind_residue(), 0.0);
    return (s - 1.0) * riemann_zeta_em(s) * l_chi3(s);
}

double dedekind_residue() { return kPi / (3.0 * std::sqrt(3.0)); }

double gamma_eisenstein_constant() {
    auto f = [](double s) { return dedekind_zeta_scaled(cplx(s, 0.0)).real(); };
    double h = 1e-2;
    double d[3];
    for (int i = 0; i < 3; ++i, h *= 0.5) d[i] = (f(1.0 + h) - f(1.0 - h)) / (2.0 * h);
    double r1 = (4.0 * d[1] - d[0]) / 3.0;
    double r2 = (4.0 * d[2] - d[1]) / 3.0;
    return (16.0 * r2 - r1) / 15.0;
}

// ---------------------------------------------------------------------------
// Gauss-Legendre
// ---------------------------------------------------------------------------

void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
    x.resize(n);
    w.resize(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double t = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double p0, p1, dp;
        for (int iter = 0; iter < 100; ++iter) {
            p0 = 1.0;
            p1 = t;
            for (int j = 2; j <= n; ++j) {
                double p2 = ((2.0 * j - 1.0) * t * p1 - (j - 1.0) * p0) / j;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (t * p1 - p0) / (t * t - 1.0);
            double dt = p1 / dp;
            t -= dt;
            if (std::abs(dt) < 1e-15) break;
        }
        x[i] = -t;
        x[n - 1 - i] = t;
        double ww = 2.0 / ((1.0 - t * t) * dp * dp);
        w[i] = ww;
        w[n - 1 - i] = ww;
    }
}

// ---------------------------------------------------------------------------
// SmoothWeight
// ---------------------------------------------------------------------------

SmoothWeight::SmoothWeight() : id_("bump-quarter"), x0_(0.25), x1_(0.75) {
    std::vector<double> gx, gw;
    gauss_legendre(8, gx, gw);
    const int panels = 30;
    double width = (x1_ - x0_) / panels;
    for (int p = 0; p < panels; ++p) {
        double lo = x0_ + p * width;
        for (int i = 0; i < 8; ++i) {
            nodes_.push_back(lo + 0.5 * width * (gx[i] + 1.0));
            weights_.push_back(0.5 * width * gw[i]);
        }
    }
}

double SmoothWeight::operator()(double x) const {
    if (x <= x0_ || x >= x1_) return 0.0;
    return std::exp(-1.0 / ((x - x0_) * (x1_ - x)));
}

double SmoothWeight::deriv(double x) const {
    if (x <= x0_ || x >= x1_) return 0.0;
    double u = (x - x0_) * (x1_ - x);
    return (*this)(x) * (x0_ + x1_ - 2.0 * x) / (u * u);
}

cplx SmoothWeight::mellin(cplx z) const {
    cplx s = 0.0;
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        double x = nodes_[i];
        s += weights_[i] * std::exp((z - 1.0) * std::log(x)) * (*this)(x);
    }
    return s;
}

double SmoothWeight::mellin_deriv1() const {
    double s = 0.0;
    for (std::size_t i = 0; i < nodes_.size(); ++i)
        s += weights_[i] * std::log(nodes_[i]) * (*this)(nodes_[i]);
    return s;
}

cplx SmoothWeight::mellin_direct(cplx z, int panels) const {
    std::vector<double> gx, gw;
    gauss_legendre(10, gx, gw);
    double width = (x1_ - x0_) / panels;
    cplx s = 0.0;
    for (int p = 0; p < panels; ++p) {
        double lo = x0_ + p * width;
        for (int i = 0; i < 10; ++i) {
            double x = lo + 0.5 * width * (gx[i] + 1.0);
            s += 0.5 * width * gw[i] * std::exp((z - 1.0) * std::log(x)) * (*this)(x);
        }
    }
    return s;
}

// ---------------------------------------------------------------------------
// AFE cutoff
// ---------------------------------------------------------------------------

cplx afe_G(cplx u) { return std::exp(u * u); }

cplx gamma_kernel(GammaKernel k, cplx s, cplx u) {
    if (k == GammaKernel::Cubic) {
        return std::exp(-u * std::log(2.0 * kPi)) * complex_gamma(s + u) / complex_gamma(s);
    }
    return std::exp(-u * (0.5 * std::log(kPi))) * complex_gamma(0.5 * (s + u)) /
           complex_gamma(0.5 * s);
}

namespace {

// (1/2pi) int_{-H}^{H} y^{-(c+it)} G g / (c+it) dt  via composite GL.
cplx contour_integral(GammaKernel k, cplx s, double y, double c,
                      const VWeightParams& p) {
    // 8 nodes per panel: the y^{-it} oscillation (frequency log y) must be
    // resolved well below 1e-13 so that million-term AFE sums stay unbiased
    static thread_local std::vector<double> gx, gw;
    if (gx.empty()) gauss_legendre(8, gx, gw);
    const cplx inv_gamma_s =
        (k == GammaKernel::Cubic) ? 1.0 / complex_gamma(s) : 1.0 / complex_gamma(0.5 * s);
    const double lk = (k == GammaKernel::Cubic) ? std::log(2.0 * kPi) : 0.5 * std::log(kPi);
    const double ly = std::log(y);
    long double acc_re = 0.0L, acc_im = 0.0L;
    const double width = 2.0 * p.height / p.panels;
    for (int pi_ = 0; pi_ < p.panels; ++pi_) {
        double lo = -p.height + pi_ * width;
        for (std::size_t i = 0; i < gx.size(); ++i) {
            double t = lo + 0.5 * width * (gx[i] + 1.0);
            cplx u{c, t};
            cplx g = (k == GammaKernel::Cubic) ? complex_gamma(s + u) * inv_gamma_s
                                               : complex_gamma(0.5 * (s + u)) * inv_gamma_s;
            cplx val = std::exp(-u * (ly + lk) + u * u) * g / u;
            double wq = 0.5 * width * gw[i];
            acc_re += (long double)(wq * val.real());
            acc_im += (long double)(wq * val.imag());
        }
    }
    return cplx(double(acc_re), double(acc_im)) / (2.0 * kPi);
}

}  // namespace

cplx v_weight(GammaKernel k, cplx s, double y, const VWeightParams& p) {
    if (!(y > 0)) throw std::domain_error("v_weight: y must be positive");
    double sr = s.real();
    if (k == GammaKernel::Cubic && (sr < -0.01 || sr > 1.51))
        throw std::domain_error("v_weight: Re(s) out of range");
    if (y < 0.05 && sr > 0.04) {
        double c = -std::min(0.35, 0.5 * sr);
        return 1.0 + contour_integral(k, s, y, c, p);
    }
    return contour_integral(k, s, y, p.abscissa, p);
}

double v_truncation_radius(GammaKernel k, cplx s, double eps) {
    double c = (k == GammaKernel::Cubic)
                   ? std::sqrt((std::abs(s) + 3.0) * (std::abs(s + 1.0) + 3.0))
                   : std::sqrt(std::abs(s) + 3.0);
    return c * (std::pow(eps, -1.0 / 3.0) - 1.0);
}

// ---------------------------------------------------------------------------
// VTable
// ---------------------------------------------------------------------------

VTable::VTable(GammaKernel k, cplx s, double y_max, const VWeightParams& p)
    : kernel_(k), s_(s), y_max_(y_max), params_(p) {
    h_ = 0.04;
    t0_ = std::log(0.5e-6);
    double t1 = std::log(y_max * 1.05) + h_;
    int n = int((t1 - t0_) / h_) + 8;
    grid_.resize(n);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (int i = 0; i < n; ++i) grid_[i] = v_weight(kernel_, s_, std::exp(t0_ + i * h_), params_);

    // line-integral bounds for the decay envelope at abscissa R = 1..10
    env_coef_.assign(10, 0.0);
    for (int R = 1; R <= 10; ++R) {
        double bound = 0.0;
        const int M = 3000;
        double dt = 2.0 * params_.height / M;
        for (int i = 0; i <= M; ++i) {
            double t = -params_.height + i * dt;
            cplx u{double(R), t};
            double g = std::abs(gamma_kernel(kernel_, s_, u));
            bound += std::abs(afe_G(u)) * g / std::abs(u) * dt;
        }
        env_coef_[R - 1] = 1.1 * bound / (2.0 * kPi);
    }
}

cplx VTable::value(double y) const {
    if (y > y_max_) return 0.0;
    double t = std::log(y);
    if (t < t0_) return v_weight(kernel_, s_, y, params_);
    int idx = int((t - t0_) / h_);
    int lo = std::max(0, std::min(idx - 3, int(grid_.size()) - 8));
    // 8-point Lagrange on the uniform grid
    double x = (t - t0_) / h_ - lo;
    cplx num = 0.0;
    for (int j = 0; j < 8; ++j) {
        double cj = 1.0;
        for (int m = 0; m < 8; ++m) {
            if (m == j) continue;
            cj *= (x - m) / double(j - m);
        }
        num += cj * grid_[lo + j];
    }
    return num;
}

double VTable::envelope(double y) const {
    double best = 1e300;
    double ly = std::log(std::max(y, 1e-300));
    for (int R = 1; R <= 10; ++R) {
        double b = env_coef_[R - 1] * std::exp(-R * ly);
        best = std::min(best, b);
    }
    // V is bounded near and below y ~ 1
    return std::min(best, 2.0 + env_coef_[0]);
}

double VTable::tail_bound(double S, double sigma, double T, double rho) const {
    // sum_{n > T} n^{-sigma} |V(n/S)| <= 1.15 rho int_T^inf t^{-sigma} env(t/S) dt
    double acc = 0.0;
    double t = std::max(T, 1.0);
    const double step = 1.25;
    for (int i = 0; i < 400; ++i) {
        double t2 = t * step;
        double mid = std::sqrt(t * t2);
        double val = std::pow(mid, -sigma) * envelope(mid / S) * (t2 - t);
        acc += val;
        if (val < 1e-22 * (1.0 + acc) && i > 4) break;
        t = t2;
    }
    return 1.15 * rho * acc;
}

// ---------------------------------------------------------------------------
// Euler products and prime sums
// ---------------------------------------------------------------------------

namespace {

double tail_estimate(double P, double delta, double cbound) {
    double t = cbound * (2.0 * std::pow(P, -delta) / delta +
                         std::pow(std::sqrt(P), -1.0 - 2.0 * delta) / (1.0 + 2.0 * delta));
    return 1.2 * t;
}

}  // namespace

ProductResult euler_product_primary(const std::function<double(double)>& local,
                                    double P, double delta, double cbound) {
    if (delta <= 0) throw std::domain_error("euler_product_primary: delta <= 0");
    auto primes = primes_up_to(std::int64_t(P));
    double v = 1.0;
    for (auto p : primes) {
        if (p == 3) continue;
        if (p % 3 == 1) {
            double f = local(double(p));
            v *= f * f;
        } else if (double(p) * double(p) <= P) {
            v *= local(double(p) * double(p));
        }
    }
    return {v, tail_estimate(P, delta, cbound)};
}

ProductResult euler_product_rational(const std::function<double(double)>& local,
                                     double P, double delta, double cbound,
                                     bool odd_only) {
    if (delta <= 0) throw std::domain_error("euler_product_rational: delta <= 0");
    auto primes = primes_up_to(std::int64_t(P));
    double v = 1.0;
    for (auto p : primes) {
        if (odd_only && p == 2) continue;
        v *= local(double(p));
    }
    return {v, 0.6 * tail_estimate(P, delta, cbound)};
}

ProductResult prime_sum_primary(const std::function<double(double)>& term,
                                double P, double delta, double cbound) {
    if (delta <= 0) throw std::domain_error("prime_sum_primary: delta <= 0");
    auto primes = primes_up_to(std::int64_t(P));
    double v = 0.0;
    for (auto p : primes) {
        if (p == 3) continue;
        if (p % 3 == 1) v += 2.0 * term(double(p));
        else if (double(p) * double(p) <= P) v += term(double(p) * double(p));
    }
    return {v, tail_estimate(P, delta, cbound)};
}

ProductResult prime_sum_rational(const std::function<double(double)>& term,
                                 double P, double delta, double cbound,
                                 bool odd_only) {
    if (delta <= 0) throw std::domain_error("prime_sum_rational: delta <= 0");
    auto primes = primes_up_to(std::int64_t(P));
    double v = 0.0;
    for (auto p : primes) {
        if (odd_only && p == 2) continue;
        v += term(double(p));
    }
    return {v, 0.6 * tail_estimate(P, delta, cbound)};
}

}  // namespace em
