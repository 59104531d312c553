// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.  Tolerances are fixed here, not tuned at run time.

#include "em/moments.hpp"
#include "em/runconfig.hpp"
#include "em/symbols.hpp"
#include "em/sieve.hpp"

#include <chrono>
#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace em;

namespace {

int g_failures = 0;

void report(int criterion, bool pass, const std::string& detail) {
    std::printf("CRITERION %2d: %s  %s\n", criterion, pass ? "PASS" : "FAIL",
                detail.c_str());
    std::fflush(stdout);
    if (!pass) ++g_failures;
}

double now_seconds() {
    using clock = std::chrono::steady_clock;
    static const auto t0 = clock::now();
    return std::chrono::duration<double>(clock::now() - t0).count();
}

std::string fmt(const char* f, ...) {
    char buf[512];
    va_list ap;
    va_start(ap, f);
    std::vsnprintf(buf, sizeof(buf), f, ap);
    va_end(ap);
    return buf;
}

// ---------------------------------------------------------------------------
// 1. Gauss-sum cube identity by direct summation, N(c) <= 2000, <= 60 s
// ---------------------------------------------------------------------------
void criterion_1() {
    double t0 = now_seconds();
    double worst = 0.0;
    long count = 0;
    for (const auto& c : enumerate_primary(2000.0)) {
        if (c.norm64() < 2) continue;
        auto g = gauss_sum_naive({1, 0}, c);
        auto cc = c.to_complex();
        auto rhs = double(moebius(c)) * cc * cc * std::conj(cc);
        double err = std::abs(g * g * g - rhs) / std::pow(double(c.norm64()), 1.5);
        worst = std::max(worst, err);
        ++count;
    }
    double dt = now_seconds() - t0;
    report(1, worst <= 1e-9 && dt <= 60.0,
           fmt("cube identity on %ld moduli: worst %.2e (tol 1e-9), %.1fs single-threaded",
               count, worst, dt));
}

// ---------------------------------------------------------------------------
// 2. Symbol oracle equivalence, 1e4 random pairs each
// ---------------------------------------------------------------------------
void criterion_2() {
    std::mt19937_64 rng(20260810);
    int bad_cubic = 0;
    for (int i = 0; i < 10000; ++i) {
        EisensteinInt pi;
        while (true) {
            std::int64_t p = std::int64_t(rng() % 999983) + 5;
            if (!is_prime_u64(std::uint64_t(p))) continue;
            if (p % 3 == 1) {
                auto [p1, p2] = split_prime_above(p);
                pi = (rng() & 1) ? p1 : p2;
                break;
            }
            if (p % 3 == 2 && double(p) * double(p) <= 1e6) {
                pi = {-p, 0};
                break;
            }
        }
        EisensteinInt a{std::int64_t(rng() % 4001) - 2000, std::int64_t(rng() % 4001) - 2000};
        if (a.is_zero()) a = {1, 0};
        if (!(cubic_symbol(a, pi) == cubic_symbol_oracle(a, pi))) ++bad_cubic;
    }
    int bad_kron = 0;
    auto primes = primes_up_to(2000000);
    for (int i = 0; i < 10000; ++i) {
        std::int64_t p = primes[rng() % (primes.size() - 1) + 1];  // odd primes
        std::int64_t a = std::int64_t(rng() % 100000000) + 1;
        int k = kronecker(a, p);
        auto e = powmod_u64(std::uint64_t(a % p), std::uint64_t((p - 1) / 2), std::uint64_t(p));
        int ek = (e == 0) ? 0 : (e == 1 ? 1 : -1);
        if (k != ek) ++bad_kron;
    }
    report(2, bad_cubic == 0 && bad_kron == 0,
           fmt("cubic mismatches %d/10000, kronecker mismatches %d/10000", bad_cubic,
               bad_kron));
}

// ---------------------------------------------------------------------------
// 3. Local prime-power table, N(pi) <= 100, k <= 6, j <= 6
// ---------------------------------------------------------------------------
void criterion_3() {
    GaussPrimeCache cache;
    double worst = 0.0;
    long cases = 0;
    std::vector<EisensteinInt> pis;
    for (const auto& m : enumerate_primary(100.0)) {
        if (m.norm64() < 2) continue;
        auto f = factor(m);
        if (f.factors.size() == 1 && f.factors[0].second == 1) pis.push_back(m);
    }
    std::vector<EisensteinInt> rs = {{1, 0}, {4, 3}, {1, -9}};
    for (const auto& pi : pis) {
        double np = double(pi.norm64());
        for (const auto& r : rs) {
            if (gcd(r, pi).norm() != 1) continue;
            cplx grpi = gauss_sum_naive(r, pi);  // reference base value
            for (int j = 0; j <= 6; ++j) {
                for (int k = 1; k <= 6; ++k) {
                    auto got = gauss_sum(r * pow(pi, unsigned(j)), pow(pi, unsigned(k)), cache);
                    cplx want{0.0, 0.0};
                    if (k != j + 1) {
                        if (k % 3 == 0 && k <= j)
                            want = std::pow(np, k) - std::pow(np, k - 1);
                    } else {
                        double nj = std::pow(np, j);
                        if (k % 3 == 0) want = -nj;
                        else if (k % 3 == 1) want = nj * grpi;
                        else want = nj * std::conj(grpi);
                    }
                    double scale = std::max(1.0, std::abs(want));
                    worst = std::max(worst, std::abs(got - want) / scale);
                    ++cases;
                }
            }
        }
    }
    report(3, worst <= 1e-9,
           fmt("local table: %ld (pi,r,j,k) cases, worst relative %.2e (tol 1e-9)", cases,
               worst));
}

// ---------------------------------------------------------------------------
// 4. AFE consistency: X-invariance, functional equation, split vs balanced
// ---------------------------------------------------------------------------
void criterion_4() {
    std::mt19937_64 rng(4);
    auto fam = enumerate_family(400.0);
    auto shared = std::make_shared<const PrimaryTable>(
        std::int64_t(v_truncation_radius(GammaKernel::Cubic, {0.5, 1.5}, 1e-12) * 2.0 *
                     std::sqrt(3.0 * 400.0)) + 16);
    double worstX = 0.0, worstFE = 0.0;
    std::uniform_real_distribution<double> zr(0.15, 0.85), zt(-1.5, 1.5);
    for (int iz = 0; iz < 6; ++iz) {
        cplx z = (iz % 2 == 0) ? cplx(0.5, zt(rng)) : cplx(zr(rng), 0.0);
        CubicAfeContext ctx(z, 400.0, 2.0, {}, shared);
        CubicAfeContext ctx1(1.0 - z, 400.0, 1.0, {}, shared);
        for (int iq = 0; iq < 5; ++iq) {
            const auto& q = fam[rng() % fam.size()];
            auto r1 = ctx.evaluate(q, 1.0);
            auto r2 = ctx.evaluate(q, 2.0);
            worstX = std::max(worstX, std::abs(r1.value - r2.value) / std::abs(r1.value));
            auto L1z = ctx1.evaluate(q, 1.0, true).value;
            double nq3 = 3.0 * double(q.norm64());
            cplx lhs = std::pow(cplx(nq3, 0.0), z / 2.0) *
                       std::pow(cplx(2.0 * 3.14159265358979323846, 0.0), -z) *
                       complex_gamma(z) * r1.value;
            cplx gt = gauss_sum_normalized(q, ctx.gauss_cache());
            cplx rhs = gt * std::pow(cplx(nq3, 0.0), (1.0 - z) / 2.0) *
                       std::pow(cplx(2.0 * 3.14159265358979323846, 0.0), -(1.0 - z)) *
                       complex_gamma(1.0 - z) * L1z;
            worstFE = std::max(worstFE, std::abs(lhs - rhs) / std::abs(lhs));
        }
    }
    // quadratic functional equation residuals on the same footing
    auto qfam = enumerate_quad_family(400.0);
    for (int t = 0; t < 6; ++t) {
        std::int64_t q = qfam[rng() % qfam.size()];
        cplx z = (t % 2 == 0) ? cplx(0.5, zt(rng)) : cplx(zr(rng), 0.0);
        auto lz = quad_L_afe(z, q);
        auto l1z = quad_L_afe(1.0 - z, q);
        cplx lhs = std::pow(cplx(double(q) / 3.14159265358979323846, 0.0), z / 2.0) *
                   complex_gamma(z / 2.0) * lz.value;
        cplx rhs = std::pow(cplx(double(q) / 3.14159265358979323846, 0.0), (1.0 - z) / 2.0) *
                   complex_gamma((1.0 - z) / 2.0) * l1z.value;
        worstFE = std::max(worstFE, std::abs(lhs - rhs) / std::abs(lhs));
    }
    // split consistency
    SmoothWeight w;
    MomentOptions opt;
    opt.v_eps = 1e-10;
    double worstS = 0.0;
    for (double z : {0.45, 0.6}) {
        for (double Q : {400.0, 800.0}) {
            double A = std::pow(Q, 0.6);
            auto bal = cubic_moment(z, Q, w, opt);
            auto sp = cubic_moment_split(z, Q, A, Q / A, w, opt);
            worstS = std::max(worstS,
                              std::abs(sp.M1 + sp.M2 - bal.computed) / std::abs(bal.computed));
        }
    }
    report(4, worstX <= 1e-8 && worstFE <= 1e-6 && worstS <= 1e-8,
           fmt("X-invariance %.2e (tol 1e-8), FE residual %.2e (tol 1e-6), split %.2e (tol 1e-8)",
               worstX, worstFE, worstS));
}

// ---------------------------------------------------------------------------
// 5. Z(2) closed form by direct sigma-weighted summation to 6e7
// ---------------------------------------------------------------------------
void criterion_5() {
    const std::int64_t X = 60000000;
    auto spf = spf_table(std::int32_t(X));
    long double direct = 0.0L;
    std::int64_t R = std::int64_t(std::sqrt(4.0 * double(X) / 3.0)) + 2;
    std::int64_t a0 = -((R + 2) / 3) * 3 + 1, b0 = -((R + 2) / 3) * 3;
    std::vector<std::int64_t> arange;
    for (std::int64_t a = a0; a <= R; a += 3) arange.push_back(a);
    std::vector<long double> partial(arange.size(), 0.0L);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (std::size_t ia = 0; ia < arange.size(); ++ia) {
        std::int64_t a = arange[ia];
        long double acc = 0.0L;
        for (std::int64_t b = b0; b <= R; b += 3) {
            std::int64_t n = a * a - a * b + b * b;
            if (n > X || (n == 0)) continue;
            double wgt = 1.0;
            std::int64_t m = n;
            while (m > 1) {
                std::int32_t p = spf[m];
                if (p % 3 == 1) {
                    // split: one primary prime above p, two iff p | (a, b)
                    wgt /= 1.0 + 1.0 / double(p);
                    if (a % p == 0 && b % p == 0) wgt /= 1.0 + 1.0 / double(p);
                } else {
                    // inert: the prime above p has norm p^2
                    wgt /= 1.0 + 1.0 / (double(p) * double(p));
                }
                while (m % p == 0) m /= p;
            }
            acc += (long double)(wgt / (double(n) * double(n)));
        }
        partial[ia] = acc;
    }
    for (auto v : partial) direct += v;
    auto prod = euler_product_primary(
        [](double q) { return 1.0 - 1.0 / (q * q * (q + 1.0)); }, 1e7, 2.0, 1.0);
    double closed =
        (1.0 - 1.0 / 9.0) * dedekind_zeta_eisenstein({2.0, 0.0}).real() * prod.value;
    double diff = std::abs(double(direct) - closed);
    report(5, diff <= 1e-8,
           fmt("Z(2): direct sum to %lld vs closed form, |diff| = %.2e (tol 1e-8)",
               (long long)X, diff));
}

// ---------------------------------------------------------------------------
// 6. Cancellation identities between the two constant pipelines (flagship)
// ---------------------------------------------------------------------------
void criterion_6() {
    const double P = 1e7;
    double worstD = 0.0;
    for (double z : {0.0, 0.2, 0.5, 0.8, 1.0}) {
        double D = constant_D(z, P).value;
        double Dp = constant_Dprime(z, P).value;
        double rel = (D == 0.0 && Dp == 0.0) ? 0.0 : std::abs(Dp + D) / std::abs(D);
        worstD = std::max(worstD, rel);
    }
    double c13 = constant_C13(P).value;
    double c13p = constant_C13prime(P).value;
    double relC = std::abs(c13p / c13 - 1.0);
    report(6, worstD <= 1e-6 && relC <= 1e-6,
           fmt("|D'_z + D_z|/|D_z| worst %.2e, |C'13/C13 - 1| = %.2e (tol 1e-6); "
               "C13 = %.9g", worstD, relC, c13));
}

// ---------------------------------------------------------------------------
// 7. Patterson residue prediction for the smoothed Gauss-sum average
// ---------------------------------------------------------------------------
void criterion_7() {
    double t0 = now_seconds();
    SmoothWeight w;
    GaussPrimeCache cache;
    double c0 = kubota_residue_c0();
    double w43 = w.mellin({4.0 / 3.0, 0.0}).real();
    std::vector<double> lx, ls;
    double ratio_at_1e5 = 0.0;
    for (double X : {1e3, 1e4, 1e5}) {
        auto S = smoothed_gauss_average({1, 0}, X, w, cache);
        lx.push_back(std::log(X));
        ls.push_back(std::log(std::abs(S.real())));
        if (X == 1e5) ratio_at_1e5 = S.real() / (c0 * 27.0 * w43 * std::pow(X, 4.0 / 3.0));
    }
    // least-squares slope
    double mx = (lx[0] + lx[1] + lx[2]) / 3.0, ms = (ls[0] + ls[1] + ls[2]) / 3.0;
    double num = 0.0, den = 0.0;
    for (int i = 0; i < 3; ++i) {
        num += (lx[i] - mx) * (ls[i] - ms);
        den += (lx[i] - mx) * (lx[i] - mx);
    }
    double slope = num / den;
    double dt = now_seconds() - t0;
    report(7, std::abs(slope - 4.0 / 3.0) <= 0.1 && std::abs(ratio_at_1e5 - 1.0) <= 0.2 &&
              dt <= 600.0,
           fmt("log-log slope %.3f (want 4/3 +- 0.1), S/prediction at X=1e5: %.3f "
               "(tol 20%%), %.0fs", slope, ratio_at_1e5, dt));
}

// ---------------------------------------------------------------------------
// 8. Quadratic moment against its predicted asymptotic at z = 1/2
// ---------------------------------------------------------------------------
void criterion_8() {
    SmoothWeight w;
    MomentOptions opt;
    opt.v_eps = 1e-6;
    opt.euler_P = 1e7;
    auto qc = quad_constants(0.5, w, 1e7);
    double w1 = w.mellin({1.0, 0.0}).real();
    std::vector<double> devs;
    double ratio_1e5 = 0.0;
    for (double Q : {1e3, 1e4, 1e5}) {
        auto rep = quadratic_moment(0.5, Q, w, opt);
        double pred = qc.C * w1 * Q * std::log(Q) + qc.D * Q;
        double ratio = rep.computed.real() / pred;
        devs.push_back(std::abs(ratio - 1.0));
        if (Q == 1e5) ratio_1e5 = ratio;
        std::fprintf(stderr, "  [c8] Q=%g ratio=%.4f (%.0fs)\n", Q, ratio, rep.wallclock_s);
    }
    bool window = ratio_1e5 >= 0.95 && ratio_1e5 <= 1.05;
    bool monotone = devs[0] > devs[1] && devs[1] > devs[2];
    report(8, window && monotone,
           fmt("ratio at Q=1e5: %.4f (window [0.95,1.05]); deviations %.4f > %.4f > %.4f %s",
               ratio_1e5, devs[0], devs[1], devs[2], monotone ? "monotone" : "NOT monotone"));
}

// ---------------------------------------------------------------------------
// 9. Cubic moment trend at z = 1/2
// ---------------------------------------------------------------------------
void criterion_9() {
    SmoothWeight w;
    MomentOptions opt;
    opt.v_eps = 1e-6;
    double C = constant_C(0.5, 1e7).value;
    double D = constant_D(0.5, 1e7).value;
    double w1 = w.mellin({1.0, 0.0}).real();
    double w56 = w.mellin({5.0 / 6.0, 0.0}).real();
    std::vector<double> ratios;
    for (double Q : {2e3, 8e3, 3.2e4}) {
        auto rep = cubic_moment(0.5, Q, w, opt);
        ratios.push_back(rep.computed.real() / (C * w1 * Q));
        std::fprintf(stderr, "  [c9] Q=%g ratio=%.4f (%.0fs)\n", Q, ratios.back(),
                     rep.wallclock_s);
    }
    bool improving = std::abs(ratios.back() - 1.0) < std::abs(ratios.front() - 1.0);
    report(9, improving,
           fmt("computed/(C_{1/2} w~(1) Q) over the ladder: %.4f -> %.4f -> %.4f "
               "(|last - 1| < |first - 1|)", ratios[0], ratios[1], ratios[2]));
    if (!improving) {
        // Supporting evidence that the constants and L-values are sound: the
        // principal sum alone against its own two-term asymptotic
        // C w~(1) Q + D w~(5/6) Q A^{-1/6}, whose error terms are much
        // smaller.  The full moment carries the secondary term
        // E' w~(5/6) Q^{5/6} with an empirically sizable negative E'(1/2),
        // which dominates the window above; see the analysis note.
        double Q = 3.2e4, A = std::pow(Q, 0.6);
        auto sp = cubic_moment_split(0.5, Q, A, Q / A, w, opt);
        double m1_pred = C * w1 * Q + D * w56 * Q * std::pow(A, -1.0 / 6.0);
        double eprime = (sp.M1.real() + sp.M2.real() - C * w1 * Q) /
                        (w56 * std::pow(Q, 5.0 / 6.0));
        std::printf("    [info] principal sum M1 / its two-term prediction at Q=3.2e4: %.4f; "
                    "empirical E'(1/2) = %.3f\n",
                    sp.M1.real() / m1_pred, eprime);
    }
}

// ---------------------------------------------------------------------------
// 10. Coprimality-removal identity for G_2(r, s) at a convergent point
// ---------------------------------------------------------------------------
cplx removal_rhs(const EisensteinInt& r, double s, double psi_nmax, GaussPrimeCache& cache,
                 double* tail_out) {
    auto fac = factor(r);
    EisensteinInt r1{1, 0}, r2{1, 0}, r3{1, 0};
    for (auto& [pi, e] : fac.factors) {
        if (e % 3 == 1) r1 = r1 * pi;
        if (e % 3 == 2) r2 = r2 * pi;
        for (int i = 0; i < e / 3; ++i) r3 = r3 * pi;
    }
    EisensteinInt r3s{1, 0};
    for (auto& [pi, e] : factor(r3).factors) {
        (void)e;
        if (divides(pi, r1) || divides(pi, r2)) continue;
        r3s = r3s * pi;
    }
    std::vector<EisensteinInt> dlist{{1, 0}};
    for (auto& [pi, e] : factor(r3s).factors) {
        (void)e;
        std::size_t n = dlist.size();
        for (std::size_t i = 0; i < n; ++i) dlist.push_back(dlist[i] * pi);
    }
    cplx total{0.0, 0.0};
    double tails = 0.0;
    for (int a = 0; a < 3; ++a) {
        for (int b = 0; b < 3; ++b) {
            EisensteinInt tw = pow(kOmega, unsigned(a)) * pow(kLambda, unsigned(b));
            for (const auto& d : dlist) {
                int mud = moebius(d);
                cplx gd = gauss_sum(tw * r1 * r2 * r2, d, cache);
                if (gd == cplx{0.0, 0.0}) continue;
                double prod = 1.0;
                for (auto& [pi, e] : factor(r2).factors) {
                    (void)e;
                    prod /= 1.0 - std::pow(double(pi.norm64()), 2.0 - 3.0 * s);
                }
                EisensteinInt dr1 = d * r1;
                for (auto& [pi, e] : factor(dr1).factors) {
                    (void)e;
                    prod /= 1.0 - std::pow(double(pi.norm64()), 2.0 - 3.0 * s);
                }
                std::vector<EisensteinInt> alist{{1, 0}};
                for (auto& [pi, e] : factor(dr1).factors) {
                    (void)e;
                    std::size_t n = alist.size();
                    for (std::size_t i = 0; i < n; ++i) alist.push_back(alist[i] * pi);
                }
                cplx inner{0.0, 0.0};
                double coef_abs = std::abs(gd) * prod / std::pow(double(d.norm64()), s) / 9.0;
                for (const auto& al : alist) {
                    int mua = moebius(al);
                    EisensteinInt arg = tw * div_exact(dr1, al) * r2 * r2;
                    cplx ga = gauss_sum(arg, al, cache);
                    auto pv = kubota_psi(arg, {s, 0.0}, psi_nmax, cache);
                    double na = std::pow(double(al.norm64()), 1.0 - 2.0 * s);
                    inner += double(mua) * na * std::conj(ga) * pv.value;
                    tails += coef_abs * na * std::abs(ga) * pv.tail;
                }
                total += double(mud) / std::pow(double(d.norm64()), s) * gd * prod * inner;
            }
        }
    }
    *tail_out = tails;
    return total / 9.0;
}

void criterion_10() {
    GaussPrimeCache cache;
    const double s = 1.8;
    const double qmax = 4e5, psi_nmax = 6e5;
    cache.prefill(std::int64_t(psi_nmax) + 1);
    auto [pi7, pi7b] = split_prime_above(7);
    (void)pi7b;
    auto [pi13, pi13b] = split_prime_above(13);
    (void)pi13b;
    bool all = true;
    std::string detail;
    for (EisensteinInt r : {pi7 * pi7, pi13 * pi13 * pi13}) {
        cplx left{1.0, 0.0};  // q = 1 term
        for (const auto& q : enumerate_family(qmax)) {
            auto chi = cubic_symbol(r, q);
            if (chi.is_zero) continue;
            left += std::conj(chi.to_complex()) * gauss_sum({1, 0}, q, cache) *
                    std::pow(double(q.norm64()), -s);
        }
        double tail_left = 1.15 * 0.0448 * std::pow(qmax, 1.5 - s) / (s - 1.5);
        double tail_right = 0.0;
        cplx right = removal_rhs(r, s, psi_nmax, cache, &tail_right);
        double diff = std::abs(left - right);
        bool ok = diff <= tail_left + tail_right;
        all = all && ok;
        detail += fmt("r=%s: |L-R| = %.2e vs tails %.2e;  ", r.str().c_str(), diff,
                      tail_left + tail_right);
    }
    report(10, all, detail);
}

// ---------------------------------------------------------------------------
// 11. Determinism of the CLI moment output across thread counts
// ---------------------------------------------------------------------------
std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

void criterion_11() {
    const char* cli = std::getenv("EM_CLI_PATH");
    if (!cli) {
        report(11, false, "EM_CLI_PATH not set");
        return;
    }
    bool ok = true;
    std::string detail;
    for (const std::string kase : {"quadratic", "cubic"}) {
        std::string base;
        for (int threads : {1, 4, 8}) {
            std::string out = "/tmp/em_det_" + kase + "_" + std::to_string(threads) + ".csv";
            std::string cmd = std::string(cli) + " moment --case " + kase +
                              " --z 0.5 --Q 1500 --v-eps 1e-8 --threads " +
                              std::to_string(threads) + " --no-wallclock --out " + out +
                              " 2>/dev/null";
            int rc = std::system(cmd.c_str());
            if (rc != 0) {
                ok = false;
                detail += kase + ": CLI failed; ";
                break;
            }
            std::string text = slurp(out);
            if (base.empty()) base = text;
            else if (text != base) {
                ok = false;
                detail += kase + ": bytes differ at threads=" + std::to_string(threads) + "; ";
            }
        }
    }
    if (ok) detail = "byte-identical CSV across thread counts {1,4,8}, both families";
    report(11, ok, detail);
}

}  // namespace

int main(int argc, char** argv) {
    std::setvbuf(stdout, nullptr, _IONBF, 0);
    // modes: (default) all criteria; "core" = all but 9; "criterion9" = 9 only.
    // Criterion 9 is expected red at desk scale (see notes in the README and
    // the analysis ledger): the secondary term E'_{1/2} Q^{5/6} dominates the
    // trend inside this Q-window.
    std::string mode = (argc > 1) ? argv[1] : "all";
    int total = 0;
    auto want = [&](int k) {
        if (mode == "core") return k != 9;
        if (mode == "criterion9") return k == 9;
        return true;
    };
    if (want(1)) { criterion_1(); ++total; }
    if (want(2)) { criterion_2(); ++total; }
    if (want(3)) { criterion_3(); ++total; }
    if (want(4)) { criterion_4(); ++total; }
    if (want(5)) { criterion_5(); ++total; }
    if (want(6)) { criterion_6(); ++total; }
    if (want(7)) { criterion_7(); ++total; }
    if (want(8)) { criterion_8(); ++total; }
    if (want(9)) { criterion_9(); ++total; }
    if (want(10)) { criterion_10(); ++total; }
    if (want(11)) { criterion_11(); ++total; }
    std::printf("%s (%d/%d criteria failed)\n",
                g_failures == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL", g_failures, total);
    return g_failures == 0 ? 0 : 1;
}
