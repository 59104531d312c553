#include "em/moments.hpp"
#include "em/symbols.hpp"
#include "em/sieve.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace em {

namespace {

constexpr double kPi = std::numbers::pi;

double T0() { return 1.0 / (1.0 - std::pow(3.0, -1.0 / 3.0)); }

double zeta_K2() {
    static const double v = dedekind_zeta_eisenstein(cplx(2.0, 0.0)).real();
    return v;
}

// principal-sum product: prod (1 - 1/(N(N+1)))
ProductResult product_P1(double P) {
    return euler_product_primary(
        [](double q) { return 1.0 - 1.0 / (q * (q + 1.0)); }, P, 1.0, 1.0);
}

// dual-sum product: prod N(N^2+N-1)/((N-1)(N+1)^2)
ProductResult product_P2(double P) {
    return euler_product_primary(
        [](double q) {
            return q * (q * q + q - 1.0) / ((q - 1.0) * (q + 1.0) * (q + 1.0));
        },
        P, 2.0, 1.5);
}

const cplx kOmegaC[3] = {
    {1.0, 0.0},
    {-0.5, 0.8660254037844386467637232},
    {-0.5, -0.8660254037844386467637232},
};

}  // namespace

// ---------------------------------------------------------------------------
// Cubic constants, principal side
// ---------------------------------------------------------------------------

ConstantValue constant_C(double z, double P) {
    if (z <= 1.0 / 3.0)
        throw std::domain_error("constant_C: implemented for z > 1/3 only");
    double zk3 = dedekind_zeta_eisenstein(cplx(3.0 * z, 0.0)).real();
    auto prod = euler_product_primary(
        [z](double q) { return 1.0 - 1.0 / (std::pow(q, 3.0 * z) * (q + 1.0)); }, P,
        std::min(3.0 * z, 3.0), 1.0);
    double pref = (1.0 + std::pow(3.0, -z) + std::pow(3.0, -2.0 * z)) * kPi /
                  (4.0 * std::pow(3.0, 2.5) * zeta_K2());
    return {pref * zk3 * prod.value, prod.tail};
}

ConstantValue constant_D(double z, double P) {
    if (std::abs(z - 1.0 / 3.0) < 1e-9)
        throw std::domain_error("constant_D: z = 1/3 excluded");
    auto p1 = product_P1(P);
    double g13 = complex_gamma(cplx(1.0 / 3.0, 0.0)).real();
    double rgz = reciprocal_gamma(cplx(z, 0.0)).real();
    double G = afe_G(cplx(1.0 / 3.0 - z, 0.0)).real();
    double v = T0() * std::pow(2.0, z - 4.0 / 3.0) * std::pow(kPi, z + 5.0 / 3.0) * g13 *
               rgz / (std::pow(3.0, 35.0 / 6.0 + 0.5 * z) * zeta_K2()) * G /
               (1.0 / 3.0 - z) * p1.value;
    return {v, p1.tail};
}

double delta_k_sum() {
    // sum_k 3^{-2k/3} converges geometrically; |delta| values: 1 and three
    // entries of modulus 3^{-1/3}
    double ksum = 0.0;
    for (int k = 0; k < 200; ++k) ksum += std::pow(3.0, -2.0 * k / 3.0);
    double dsum = 1.0 + 3.0 * std::pow(3.0, -2.0 / 3.0);
    return ksum * dsum;
}

ConstantValue constant_Dprime(double z, double P) {
    if (std::abs(z - 1.0 / 3.0) < 1e-9)
        throw std::domain_error("constant_Dprime: z = 1/3 excluded");
    auto p2 = product_P2(P);
    // Gamma(1-z) g_{1-z}(z - 1/3) = (2 pi)^{1/3 - z} Gamma(2/3) exactly
    double kernel = std::pow(2.0 * kPi, 1.0 / 3.0 - z) *
                    complex_gamma(cplx(2.0 / 3.0, 0.0)).real();
    double g23 = complex_gamma(cplx(2.0 / 3.0, 0.0)).real();
    double rgz = reciprocal_gamma(cplx(z, 0.0)).real();
    double G = afe_G(cplx(z - 1.0 / 3.0, 0.0)).real();
    double zk2 = zeta_K2();
    double v = std::pow(kPi, 2.0 * z + 7.0 / 3.0) * kernel * rgz /
               (std::pow(2.0, 11.0 / 3.0 - 2.0 * z) *
                std::pow(3.0, 0.5 * z + 14.0 / 3.0) * g23 * g23 * zk2 * zk2) *
               delta_k_sum() * G / (z - 1.0 / 3.0) * p2.value;
    return {v, p2.tail};
}

ConstantValue constant_C13(double P) {
    auto p1 = product_P1(P);
    double v = T0() * kPi * kPi / (2.0 * std::pow(3.0, 6.0) * zeta_K2()) * p1.value;
    return {v, p1.tail};
}

ConstantValue constant_C13prime(double P) {
    auto p2 = product_P2(P);
    double zk2 = zeta_K2();
    double v = kPi * kPi / (16.0 * std::pow(3.0, 13.0 / 3.0) * zk2 * zk2) *
               delta_k_sum() * p2.value;
    return {v, p2.tail};
}

ConstantValue constant_C2(const SmoothWeight& w, double P) {
    auto p1 = product_P1(P);
    auto psum = prime_sum_primary(
        [](double q) { return std::log(q) / (q * (q + 1.0) - 1.0); }, P, 1.0, 1.0);
    double zk2 = zeta_K2();
    double w1 = w.mellin(cplx(1.0, 0.0)).real();
    double w1p = w.mellin_deriv1();
    // G'(0) vanishes for the even entire G in use; keep the numeric value
    double h = 1e-4;
    double Gp0 = (afe_G(cplx(h, 0)).real() - afe_G(cplx(-h, 0)).real()) / (2.0 * h);
    double dig = digamma_central_diff(1.0 / 3.0);
    double gammaK = gamma_eisenstein_constant();
    double b14 = kPi * kPi / (4.0 * std::pow(3.0, 5.0) * zk2);
    double b5 = kPi / (4.0 * std::pow(3.0, 2.5) * zk2);
    double bracket =
        b14 * (w1p + w1 * Gp0 + w1 * (dig - std::log(2.0 * kPi)) +
               w1 * std::log(3.0) * (0.5 - 1.0 / (std::pow(3.0, 1.0 / 3.0) - 1.0))) +
        b5 * w1 * ((2.0 * gammaK + std::log(3.0)) / 3.0 + psum.value);
    return {T0() * p1.value * bracket, p1.tail + psum.tail};
}

// ---------------------------------------------------------------------------
// E'_z (dual-sum constant from the Kubota series)
// ---------------------------------------------------------------------------

namespace {

cplx delta_ab(int a, int b) {
    if (a == 0 && b == 0) return {1.0, 0.0};
    if (b == 2) {
        double m = std::pow(3.0, -1.0 / 3.0);
        if (a == 0) return {m, 0.0};
        if (a == 1) return std::polar(m, -2.0 * kPi / 9.0);
        return std::polar(m, 2.0 * kPi / 9.0);
    }
    return {0.0, 0.0};
}

}  // namespace

ConstantValue constant_Eprime(double z, const EprimeParams& params) {
    if (z < 0.0 || z >= 1.0 / 6.0)
        throw std::domain_error("constant_Eprime: supported domain is z in [0, 1/6)");
    const double s_psi = 5.0 / 3.0 - z;  // always > 3/2 here
    GaussPrimeCache cache;
    cache.prefill(std::int64_t(params.psi_nmax) + 1);

    auto E0 = euler_product_primary(
        [z](double q) {
            return 1.0 + q / ((q + 1.0) * (std::pow(q, 3.0 - 3.0 * z) - 1.0));
        },
        params.euler_P, std::min(2.0 - 3.0 * z, 3.0), 1.2);

    double pref_k = 1.0 / (1.0 - std::pow(3.0, z - 1.0));
    double zk2 = zeta_K2();
    double pref = std::pow(kPi, 2.0 * z + 2.0 / 3.0) *
                  complex_gamma(cplx(1.0 - z, 0.0)).real() *
                  reciprocal_gamma(cplx(z, 0.0)).real() /
                  (std::pow(2.0, 7.0 / 3.0 - 2.0 * z) * std::pow(3.0, z + 3.0) *
                   complex_gamma(cplx(2.0 / 3.0, 0.0)).real() * zk2);

    auto local_E = [z](double q) {
        return 1.0 + q / ((q + 1.0) * (std::pow(q, 3.0 - 3.0 * z) - 1.0));
    };
    auto local_F = [z](double q) { return 1.0 - std::pow(q, 3.0 * z - 3.0); };

    auto cs = enumerate_primary(params.c_max);
    auto ds = enumerate_primary(params.d_max);

    // cache psi values per (a, b, d')
    struct PsiKey {
        int ab;
        std::int64_t da, db;
        bool operator==(const PsiKey&) const = default;
    };
    cplx total{0.0, 0.0};
    double psi_tail_mass = 0.0;
    for (int a = 0; a < 3; ++a) {
        for (int b = 0; b < 3; ++b) {
            cplx dab = delta_ab(a, b);
            if (dab == cplx{0.0, 0.0}) continue;
            EisensteinInt twist = pow(kOmega, unsigned(a)) * pow(kLambda, unsigned(b));
            // psi values for each squarefree d'
            std::vector<cplx> psi_vals(ds.size());
            std::vector<double> psi_tails(ds.size(), 0.0);
            for (std::size_t j = 0; j < ds.size(); ++j) {
                if (moebius(ds[j]) == 0) continue;
                auto pv = kubota_psi(twist * ds[j], cplx(s_psi, 0.0), params.psi_nmax, cache);
                psi_vals[j] = pv.value;
                psi_tails[j] = pv.tail;
            }
            for (const auto& c : cs) {
                int mu2 = moebius(c);
                if (mu2 == 0) continue;
                double nc = double(c.norm64());
                double coef_c = std::pow(nc, -(4.0 - 3.0 * z)) / double(sigma_primary(c));
                for (auto& [pi, e] : factor(c).factors) {
                    (void)e;
                    double q = double(pi.norm64());
                    coef_c /= local_E(q) * local_F(q);
                }
                for (std::size_t j = 0; j < ds.size(); ++j) {
                    const auto& dp = ds[j];
                    int mud = moebius(dp);
                    if (mud == 0) continue;
                    if (gcd(c, dp).norm() != 1) continue;
                    double nd = double(dp.norm64());
                    double coef_d = double(mud) * std::pow(nd, -(5.0 / 3.0 - z)) /
                                    double(sigma_primary(dp));
                    for (auto& [pi, e] : factor(dp).factors) {
                        (void)e;
                        double q = double(pi.norm64());
                        coef_d /= local_F(q) * local_E(q);
                    }
                    cplx g1 = gauss_sum(twist * dp, c, cache);
                    cplx g2 = gauss_sum(twist, c * dp, cache);
                    cplx term = dab * coef_c * coef_d * g1 * std::conj(g2) *
                                std::conj(psi_vals[j]);
                    total += term;
                    psi_tail_mass += std::abs(dab * coef_c * coef_d * g1) *
                                     std::abs(g2) * psi_tails[j];
                }
            }
        }
    }
    double value = pref * pref_k * E0.value * total.real();
    double tail = std::abs(pref * pref_k * E0.value) * psi_tail_mass + E0.tail * std::abs(value);
    return {value, tail};
}

// ---------------------------------------------------------------------------
// Quadratic constants
// ---------------------------------------------------------------------------

QuadConstants quad_constants(double z, const SmoothWeight& w, double P) {
    QuadConstants out;
    const double z2 = kPi * kPi / 6.0;  // zeta(2)
    auto p1 = euler_product_rational(
        [](double p) { return 1.0 - 1.0 / (p * (p + 1.0)); }, P, 1.0, 1.0, true);
    out.tail = p1.tail;
    if (std::abs(z - 0.5) > 1e-9) {
        double zeta2z = riemann_zeta_em(cplx(2.0 * z, 0.0)).real();
        auto pc = euler_product_rational(
            [z](double p) { return 1.0 - 1.0 / (std::pow(p, 2.0 * z) * (p + 1.0)); }, P,
            std::min(2.0 * z, 3.0), 1.0, true);
        out.C_z = zeta2z / (3.0 * z2) * pc.value;
        double zeta22z = riemann_zeta_em(cplx(2.0 - 2.0 * z, 0.0)).real();
        auto pcp = euler_product_rational(
            [z](double p) {
                return 1.0 - std::pow(p, 2.0 * z) / (p * p * p + p * p);
            },
            P, std::min(3.0 - 2.0 * z, 3.0), 1.0, true);
        out.Cp_z = std::pow(kPi, z - 0.5) * complex_gamma(cplx(0.5 * (1.0 - z), 0.0)).real() *
                   reciprocal_gamma(cplx(0.5 * z, 0.0)).real() * zeta22z / (3.0 * z2) *
                   pcp.value;
        out.D_z = std::pow(kPi, 0.5 * z - 0.25) * complex_gamma(cplx(0.25, 0.0)).real() *
                  reciprocal_gamma(cplx(0.5 * z, 0.0)).real() *
                  afe_G(cplx(0.5 - z, 0.0)).real() / (0.5 - z) / (6.0 * z2) * p1.value;
        out.tail += pc.tail + pcp.tail;
    }
    out.C_half = p1.value / (12.0 * z2);
    auto ps = prime_sum_rational(
        [](double p) { return std::log(p) / (p * (p + 1.0) - 1.0); }, P, 1.0, 1.0, true);
    double w1 = w.mellin(cplx(1.0, 0.0)).real();
    double w1p = w.mellin_deriv1();
    double h = 1e-4;
    double Gp0 = (afe_G(cplx(h, 0)).real() - afe_G(cplx(-h, 0)).real()) / (2.0 * h);
    double dig = digamma_central_diff(0.25);
    out.C2 = p1.value * (w1p / (12.0 * z2) + w1 * Gp0 / (6.0 * z2) +
                         w1 * (dig - std::log(kPi)) / (12.0 * z2) +
                         w1 * (kEulerGamma + ps.value) / (3.0 * z2));
    out.C = 2.0 * out.C_half;
    out.D = 2.0 * out.C2;
    out.tail += ps.tail;
    return out;
}

// ---------------------------------------------------------------------------
// Moment engines
// ---------------------------------------------------------------------------

namespace {

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    }
};

void cubic_predictions(double z, double Q, const SmoothWeight& w, double P,
                       MomentReport& rep) {
    double w1 = w.mellin(cplx(1.0, 0.0)).real();
    if (std::abs(z - 1.0 / 3.0) < 1e-3) {
        // logarithmic regime; the Q-coefficient D_{1/3} is not evaluated
        rep.predicted_main = constant_C13(P).value * w1 * Q * std::log(Q);
        rep.predicted_secondary = 0.0;
        return;
    }
    double cterm = 0.0, eterm = 0.0;
    if (z > 1.0 / 3.0) cterm = constant_C(z, P).value * w1 * Q;
    if (z < 1.0 / 6.0) {
        double we = w.mellin(cplx(4.0 / 3.0 - z, 0.0)).real();
        eterm = constant_Eprime(z).value * we * std::pow(Q, 4.0 / 3.0 - z);
    }
    if (z > 1.0 / 3.0) {
        rep.predicted_main = cterm;
        rep.predicted_secondary = 0.0;  // E'_z term not evaluable for z >= 1/6
    } else {
        rep.predicted_main = eterm;  // switching regime: Q^{4/3-z} dominates
        rep.predicted_secondary = 0.0;
    }
}

}  // namespace

MomentReport cubic_moment(double z, double Q, const SmoothWeight& w,
                          const MomentOptions& opt) {
    Timer timer;
    MomentReport rep;
    rep.family = "cubic";
    rep.z = z;
    rep.Q = Q;
    rep.weight_id = w.id();
    auto family = enumerate_family(Q);
    rep.family_size = long(family.size());
    if (!family.empty()) {
        std::vector<std::size_t> active;
        for (std::size_t i = 0; i < family.size(); ++i)
            if (w(double(family[i].norm64()) / Q) != 0.0) active.push_back(i);
        if (!active.empty()) {
            double max_norm = w.support_hi() * Q;
            AfeOptions aopt;
            aopt.v_eps = opt.v_eps;
            CubicAfeContext ctx(cplx(z, 0.0), max_norm, 1.0, aopt);
            ctx.gauss_cache().prefill(std::int64_t(max_norm) + 1);
            std::vector<cplx> values(active.size());
            std::vector<double> errs(active.size());
#ifdef _OPENMP
            if (opt.threads > 0) omp_set_num_threads(opt.threads);
#pragma omp parallel
            {
                std::vector<std::uint8_t> scratch;
#pragma omp for schedule(dynamic)
                for (std::size_t i = 0; i < active.size(); ++i) {
                    auto r = ctx.evaluate_parts(family[active[i]], 1.0, false, scratch);
                    values[i] = r.principal + r.dual_with_eps;
                    errs[i] = r.est_error;
                }
            }
#else
            std::vector<std::uint8_t> scratch;
            for (std::size_t i = 0; i < active.size(); ++i) {
                auto r = ctx.evaluate_parts(family[active[i]], 1.0, false, scratch);
                values[i] = r.principal + r.dual_with_eps;
                errs[i] = r.est_error;
            }
#endif
            cplx acc{0.0, 0.0};
            double err = 0.0;
            for (std::size_t i = 0; i < active.size(); ++i) {
                double wq = w(double(family[active[i]].norm64()) / Q);
                acc += wq * values[i];
                err += wq * errs[i];
            }
            rep.computed = acc;
            rep.est_error = err;
        }
    }
    cubic_predictions(z, Q, w, opt.euler_P, rep);
    rep.residual = rep.computed.real() - rep.predicted_main - rep.predicted_secondary;
    rep.wallclock_s = timer.seconds();
    return rep;
}

SplitMoment cubic_moment_split(double z, double Q, double A, double B,
                               const SmoothWeight& w, const MomentOptions& opt) {
    if (std::abs(A * B - Q) > 1e-12 * Q)
        throw std::domain_error("cubic_moment_split: A*B must equal Q");
    Timer timer;
    SplitMoment out;
    out.report.family = "cubic";
    out.report.z = z;
    out.report.Q = Q;
    out.report.A = A;
    out.report.B = B;
    out.report.weight_id = w.id();
    auto family = enumerate_family(Q);
    out.report.family_size = long(family.size());
    std::vector<std::size_t> active;
    for (std::size_t i = 0; i < family.size(); ++i)
        if (w(double(family[i].norm64()) / Q) != 0.0) active.push_back(i);
    if (!active.empty()) {
        double max_norm = w.support_hi() * Q;
        double max_x = std::max(1.0, A * std::sqrt(max_norm) / Q);
        AfeOptions aopt;
        aopt.v_eps = opt.v_eps;
        CubicAfeContext ctx(cplx(z, 0.0), max_norm, max_x, aopt);
        ctx.gauss_cache().prefill(std::int64_t(max_norm) + 1);
        // split the AFE per conductor with X_q = A sqrt(N(q)) / Q
        std::vector<cplx> m1(active.size()), m2(active.size());
        std::vector<double> errs(active.size());
#ifdef _OPENMP
        if (opt.threads > 0) omp_set_num_threads(opt.threads);
#pragma omp parallel
        {
            std::vector<std::uint8_t> scratch;
#pragma omp for schedule(dynamic)
            for (std::size_t i = 0; i < active.size(); ++i) {
                const auto& q = family[active[i]];
                double Xq = A * std::sqrt(double(q.norm64())) / Q;
                auto parts = ctx.evaluate_parts(q, Xq, false, scratch);
                m1[i] = parts.principal;
                m2[i] = parts.dual_with_eps;
                errs[i] = parts.est_error;
            }
        }
#else
        std::vector<std::uint8_t> scratch;
        for (std::size_t i = 0; i < active.size(); ++i) {
            const auto& q = family[active[i]];
            double Xq = A * std::sqrt(double(q.norm64())) / Q;
            auto parts = ctx.evaluate_parts(q, Xq, false, scratch);
            m1[i] = parts.principal;
            m2[i] = parts.dual_with_eps;
            errs[i] = parts.est_error;
        }
#endif
        double err = 0.0;
        for (std::size_t i = 0; i < active.size(); ++i) {
            double wq = w(double(family[active[i]].norm64()) / Q);
            out.M1 += wq * m1[i];
            out.M2 += wq * m2[i];
            err += wq * errs[i];
        }
        out.report.est_error = err;
    }
    out.report.computed = out.M1 + out.M2;
    cubic_predictions(z, Q, w, opt.euler_P, out.report);
    out.report.residual = out.report.computed.real() - out.report.predicted_main -
                          out.report.predicted_secondary;
    out.report.wallclock_s = timer.seconds();
    return out;
}

MomentReport quadratic_moment(double z, double Q, const SmoothWeight& w,
                              const MomentOptions& opt) {
    Timer timer;
    MomentReport rep;
    rep.family = "quadratic";
    rep.z = z;
    rep.Q = Q;
    rep.weight_id = w.id();
    auto family = enumerate_quad_family(Q);
    rep.family_size = long(family.size());
    std::vector<std::size_t> active;
    for (std::size_t i = 0; i < family.size(); ++i)
        if (w(double(family[i]) / Q) != 0.0) active.push_back(i);
    if (!active.empty()) {
        AfeOptions aopt;
        aopt.v_eps = opt.v_eps;
        QuadAfeContext ctx(cplx(z, 0.0), w.support_hi() * Q, aopt);
        std::vector<cplx> values(active.size());
        std::vector<double> errs(active.size());
#ifdef _OPENMP
        if (opt.threads > 0) omp_set_num_threads(opt.threads);
#pragma omp parallel
        {
            std::vector<std::int8_t> scratch;
#pragma omp for schedule(dynamic)
            for (std::size_t i = 0; i < active.size(); ++i) {
                auto r = ctx.evaluate_with_scratch(family[active[i]], scratch);
                values[i] = r.value;
                errs[i] = r.est_error;
            }
        }
#else
        std::vector<std::int8_t> scratch;
        for (std::size_t i = 0; i < active.size(); ++i) {
            auto r = ctx.evaluate_with_scratch(family[active[i]], scratch);
            values[i] = r.value;
            errs[i] = r.est_error;
        }
#endif
        cplx acc{0.0, 0.0};
        double err = 0.0;
        for (std::size_t i = 0; i < active.size(); ++i) {
            double wq = w(double(family[active[i]]) / Q);
            acc += wq * values[i];
            err += wq * errs[i];
        }
        rep.computed = acc;
        rep.est_error = err;
    }
    auto qc = quad_constants(std::abs(z - 0.5) < 1e-3 ? 0.5 : z, w, opt.euler_P);
    double w1 = w.mellin(cplx(1.0, 0.0)).real();
    if (std::abs(z - 0.5) < 1e-3) {
        rep.predicted_main = qc.C * w1 * Q * std::log(Q);
        rep.predicted_secondary = qc.D * Q;
    } else {
        double t1 = qc.C_z * w1 * Q;
        double t2 = qc.Cp_z * w.mellin(cplx(1.5 - z, 0.0)).real() * std::pow(Q, 1.5 - z);
        rep.predicted_main = (z > 0.5) ? t1 : t2;
        rep.predicted_secondary = (z > 0.5) ? t2 : t1;
    }
    rep.residual = rep.computed.real() - rep.predicted_main - rep.predicted_secondary;
    rep.wallclock_s = timer.seconds();
    return rep;
}

// ---------------------------------------------------------------------------
// Serial reference paths
// ---------------------------------------------------------------------------

cplx cubic_moment_reference(double z, double Q, const SmoothWeight& w, double v_eps) {
    cplx acc{0.0, 0.0};
    GaussPrimeCache cache;
    VWeightParams vp;
    cplx zz(z, 0.0), z1 = 1.0 - zz;
    VTable vz(GammaKernel::Cubic, zz,
              v_truncation_radius(GammaKernel::Cubic, zz, v_eps) * 1.02, vp);
    VTable v1z(GammaKernel::Cubic, z1,
               v_truncation_radius(GammaKernel::Cubic, z1, v_eps) * 1.02, vp);
    for (const auto& q : enumerate_family(Q)) {
        double wq = w(double(q.norm64()) / Q);
        if (wq == 0.0) continue;
        double S = std::sqrt(3.0 * double(q.norm64()));
        double Tp = vz.y_max() * S, Td = v1z.y_max() * S;
        cplx principal{0.0, 0.0}, dual{0.0, 0.0};
        for (double p3 = 1.0; p3 <= std::max(Tp, Td); p3 *= 3.0) {
            for (const auto& m : enumerate_primary(std::max(Tp, Td) / p3)) {
                CubicSymbol chi = cubic_symbol(m, q);
                if (chi.is_zero) continue;
                double nm = double(m.norm64()) * p3;
                if (nm <= Tp)
                    principal += kOmegaC[chi.exponent] * std::pow(nm, -z) *
                                 vz.value(nm / S);
                if (nm <= Td)
                    dual += kOmegaC[(3 - chi.exponent) % 3] * std::pow(nm, z - 1.0) *
                            v1z.value(nm / S);
            }
        }
        acc += wq * (principal + root_number_cubic(zz, q, cache) * dual);
    }
    return acc;
}

cplx quadratic_moment_reference(double z, double Q, const SmoothWeight& w, double v_eps) {
    cplx acc{0.0, 0.0};
    VWeightParams vp;
    cplx zz(z, 0.0), z1 = 1.0 - zz;
    VTable vz(GammaKernel::Quadratic, zz,
              v_truncation_radius(GammaKernel::Quadratic, zz, v_eps) * 1.02, vp);
    VTable v1z(GammaKernel::Quadratic, z1,
               v_truncation_radius(GammaKernel::Quadratic, z1, v_eps) * 1.02, vp);
    for (std::int64_t q : enumerate_quad_family(Q)) {
        double wq = w(double(q) / Q);
        if (wq == 0.0) continue;
        double S = std::sqrt(double(q));
        std::int64_t Tp = std::int64_t(vz.y_max() * S), Td = std::int64_t(v1z.y_max() * S);
        cplx principal{0.0, 0.0}, dual{0.0, 0.0};
        for (std::int64_t n = 1; n <= std::max(Tp, Td); ++n) {
            int chi = kronecker(n, q);
            if (chi == 0) continue;
            if (n <= Tp) principal += double(chi) * std::pow(double(n), -z) * vz.value(n / S);
            if (n <= Td)
                dual += double(chi) * std::pow(double(n), z - 1.0) * v1z.value(n / S);
        }
        acc += wq * (principal + root_number_quadratic(zz, q) * dual);
    }
    return acc;
}

}  // namespace em
