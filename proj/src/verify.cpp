#include "em/verify.hpp"
#include "em/moments.hpp"
#include "em/symbols.hpp"
#include "em/sieve.hpp"

#include <cmath>
#include <numbers>
#include <random>

namespace em {

namespace {

void add(SuiteReport& rep, const std::string& name, double measured, double tol) {
    rep.checks.push_back({name, measured, tol, measured <= tol});
}

EisensteinInt random_elem(std::mt19937_64& rng, std::int64_t box) {
    std::uniform_int_distribution<std::int64_t> d(-box, box);
    while (true) {
        EisensteinInt z{d(rng), d(rng)};
        if (!z.is_zero()) return z;
    }
}

EisensteinInt random_primary(std::mt19937_64& rng, std::int64_t box) {
    while (true) {
        auto z = random_elem(rng, box);
        auto p = primary_associate(z);
        if (p.lambda_exp == 0) return p.primary;
    }
}

EisensteinInt random_primary_prime(std::mt19937_64& rng, std::int64_t max_norm) {
    std::uniform_int_distribution<std::int64_t> d(2, max_norm);
    while (true) {
        std::int64_t p = d(rng);
        if (!is_prime_u64(std::uint64_t(p))) continue;
        if (p % 3 == 1) {
            auto [p1, p2] = split_prime_above(p);
            return (rng() & 1) ? p1 : p2;
        }
        if (p % 3 == 2 && p * p <= max_norm) return {-p, 0};
    }
}

SuiteReport suite_ring(std::uint64_t seed) {
    SuiteReport rep{"ring", {}};
    std::mt19937_64 rng(seed);
    int bad = 0;
    for (int i = 0; i < 5000; ++i) {
        auto x = random_elem(rng, 1000), y = random_elem(rng, 1000);
        if ((x * y).norm() != x.norm() * y.norm()) ++bad;
    }
    add(rep, "norm multiplicative (5000 random pairs)", bad, 0);
    bad = 0;
    for (int i = 0; i < 2000; ++i) {
        auto z = random_elem(rng, 3000);
        auto f = factor(z);
        if (!(f.recompose() == z)) ++bad;
        if (!(factor(f.recompose()) == f)) ++bad;
        for (auto& [p, e] : f.factors) {
            (void)e;
            if (!is_primary(p)) ++bad;
        }
    }
    add(rep, "factor o recompose = id (2000 random)", bad, 0);
    bad = 0;
    for (int i = 0; i < 1000; ++i) {
        auto a = random_elem(rng, 100), b = random_elem(rng, 100), g = random_elem(rng, 30);
        auto lhs = gcd(a * g, b * g);
        auto rhs = g * gcd(a, b);
        bool assoc = false;
        for (const auto& u : kUnits)
            if (u * rhs == lhs) assoc = true;
        if (!assoc) ++bad;
    }
    add(rep, "gcd(ag,bg) ~ g gcd(a,b) (1000 random)", bad, 0);
    {
        auto fam = enumerate_family(10000.0);
        long brute = 0;
        std::int64_t R = 120;
        for (std::int64_t a = -R; a <= R; ++a)
            for (std::int64_t b = -R; b <= R; ++b) {
                EisensteinInt q{a, b};
                if (((a - 1) % 9 + 9) % 9 != 0 || (b % 9 + 9) % 9 != 0) continue;
                auto n = q.norm64();
                if (n <= 1 || n > 10000) continue;
                if (moebius(q) != 0) ++brute;
            }
        add(rep, "enumerate_family(1e4) = brute-force scan", std::abs(long(fam.size()) - brute), 0);
    }
    {
        double c1 = double(enumerate_family(4000.0).size()) / 4000.0;
        double c2 = double(enumerate_family(16000.0).size()) / 16000.0;
        double c3 = double(enumerate_family(64000.0).size()) / 64000.0;
        add(rep, "N_3(X)/X slope stable", std::abs(c2 - c3) + std::abs(c1 - c2), 0.01);
    }
    {
        auto [pi, pib] = split_prime_above(7);
        (void)pib;
        double s1 = std::abs(double(sigma_primary(pi)) - 8.0);
        double s2 = std::abs(double(sigma_primary(pi * pi)) - 57.0);
        double s3 = std::abs(double(moebius(pi)) + 1.0);
        add(rep, "sigma/moebius prime cases", s1 + s2 + s3, 0);
    }
    return rep;
}

SuiteReport suite_symbols(std::uint64_t seed) {
    SuiteReport rep{"symbols", {}};
    std::mt19937_64 rng(seed);
    int bad = 0;
    for (int i = 0; i < 2000; ++i) {
        auto pi = random_primary_prime(rng, 1000000);
        auto a = random_elem(rng, 1000);
        if (!(cubic_symbol(a, pi) == cubic_symbol_oracle(a, pi))) ++bad;
    }
    add(rep, "fast symbol == exponentiation oracle (2000)", bad, 0);
    bad = 0;
    for (int i = 0; i < 2000; ++i) {
        auto a = random_primary(rng, 300), b = random_primary(rng, 300);
        if (gcd(a, b).norm() != 1) continue;
        if (!(cubic_symbol(a, b) == cubic_symbol(b, a))) ++bad;
    }
    add(rep, "cubic reciprocity (primary pairs)", bad, 0);
    bad = 0;
    for (int i = 0; i < 1000; ++i) {
        auto a = random_elem(rng, 200), b = random_elem(rng, 200);
        auto c = random_primary(rng, 200);
        if (!(cubic_symbol(a * b, c) == cubic_symbol(a, c) * cubic_symbol(b, c))) ++bad;
        auto d = random_primary(rng, 200);
        if (!(cubic_symbol(a, c * d) == cubic_symbol(a, c) * cubic_symbol(a, d))) ++bad;
    }
    add(rep, "symbol multiplicativity", bad, 0);
    bad = 0;
    for (int i = 0; i < 1000; ++i) {
        auto a = random_elem(rng, 200);
        auto b = random_primary(rng, 200);
        if (gcd(a, b).norm() != 1) continue;
        if (!(cubic_symbol(a, b).conj() == cubic_symbol(a * a, b))) ++bad;
    }
    add(rep, "conj(a/b) = (a^2/b)", bad, 0);
    bad = 0;
    auto primes = primes_up_to(100000);
    std::uniform_int_distribution<std::size_t> pd(26, primes.size() - 1);
    for (int i = 0; i < 2000; ++i) {
        std::int64_t p = primes[pd(rng)];
        std::int64_t a = std::int64_t(rng() % 1000000) + 1;
        int k = kronecker(a, p);
        std::int64_t e = std::int64_t(powmod_u64(std::uint64_t(a % p), std::uint64_t((p - 1) / 2),
                                                 std::uint64_t(p)));
        int ek = (e == 0) ? 0 : (e == 1 ? 1 : -1);
        if (k != ek) ++bad;
    }
    add(rep, "kronecker == Euler criterion (2000)", bad, 0);
    bad = 0;
    for (const auto& q : enumerate_primary(500.0)) {
        for (const auto& c : {EisensteinInt{1, 0}, EisensteinInt{4, 3}, EisensteinInt{1, -9}}) {
            bool cong = ((q.a - c.a) % 9 == 0) && ((q.b - c.b) % 9 == 0);
            if (mod9_projector(q, c) != (cong ? 1 : 0)) ++bad;
        }
    }
    add(rep, "mod-9 projector == coordinate congruence", bad, 0);
    return rep;
}

SuiteReport suite_gauss(std::uint64_t seed) {
    SuiteReport rep{"gauss", {}};
    GaussPrimeCache cache;
    double worst_cube = 0.0, worst_mod = 0.0, worst_zero = 0.0;
    for (const auto& c : enumerate_primary(2000.0)) {
        if (c.norm64() < 2) continue;
        auto g = gauss_sum(EisensteinInt{1, 0}, c, cache);
        double nc = double(c.norm64());
        int mu = moebius(c);
        auto cc = c.to_complex();
        auto rhs = double(mu) * cc * cc * std::conj(cc);
        worst_cube = std::max(worst_cube, std::abs(g * g * g - rhs) / std::pow(nc, 1.5));
        if (mu != 0)
            worst_mod = std::max(worst_mod, std::abs(std::abs(g) / std::sqrt(nc) - 1.0));
        else
            worst_zero = std::max(worst_zero, std::abs(g) / nc);
    }
    add(rep, "g(c)^3 = mu(c) c^2 conj(c), N <= 2000", worst_cube, 1e-9);
    add(rep, "|g~(c)| = 1 on squarefree c", worst_mod, 1e-9);
    add(rep, "g(c) = 0 on non-squarefree c", worst_zero, 1e-9);
    std::mt19937_64 rng(seed);
    double worst = 0.0;
    std::vector<EisensteinInt> nus = {{1, 0}, {0, 1}, {1, -1}, {1, 3}, {-2, 0}, {7, 3}};
    for (const auto& c : enumerate_primary(5000.0)) {
        if (c.norm64() < 2) continue;
        const auto& nu = nus[rng() % nus.size()];
        auto gf = gauss_sum(nu, c, cache);
        auto gn = gauss_sum_naive(nu, c);
        worst = std::max(worst, std::abs(gf - gn) / (1.0 + std::abs(gn)));
    }
    add(rep, "factored == direct summation, N <= 5000", worst, 1e-8);
    double worst_tm = 0.0;
    auto elems = enumerate_primary(60.0);
    for (const auto& a : elems) {
        if (a.norm64() < 2 || moebius(a) == 0) continue;
        for (const auto& b : elems) {
            if (b.norm64() < 2 || moebius(b) == 0) continue;
            if (gcd(a, b).norm() != 1) continue;
            auto lhs = gauss_sum_naive({1, 0}, a * b);
            auto rhs = std::conj(cubic_symbol(a, b).to_complex()) *
                       gauss_sum_naive({1, 0}, a) * gauss_sum_naive({1, 0}, b);
            worst_tm = std::max(worst_tm, std::abs(lhs - rhs) / (1.0 + std::abs(rhs)));
        }
    }
    add(rep, "g(ab) = conj((a/b)) g(a) g(b)", worst_tm, 1e-9);
    double worst_loc = 0.0;
    auto [pi7, pi7b] = split_prime_above(7);
    (void)pi7b;
    for (int j = 0; j <= 3; ++j) {
        for (int k = 1; k <= 4; ++k) {
            if (std::pow(7.0, k) > 5000.0) continue;
            EisensteinInt r{4, 3};
            auto lhs = gauss_sum_naive(r * pow(pi7, unsigned(j)), pow(pi7, unsigned(k)));
            auto rhs = gauss_sum(r * pow(pi7, unsigned(j)), pow(pi7, unsigned(k)), cache);
            worst_loc = std::max(worst_loc, std::abs(lhs - rhs) / (1.0 + std::abs(lhs)));
        }
    }
    add(rep, "prime-power local table vs direct", worst_loc, 1e-9);
    auto t1 = tau(EisensteinInt{1, 0}, 0, cache);
    add(rep, "tau(1) = 27", std::abs(t1 - cplx{27.0, 0.0}), 1e-12);
    auto tl = tau(kLambda, 0, cache);
    add(rep, "tau(lambda) = 0", std::abs(tl), 0.0);
    return rep;
}

SuiteReport suite_afe(std::uint64_t seed) {
    SuiteReport rep{"afe", {}};
    std::mt19937_64 rng(seed);
    auto fam = enumerate_family(1500.0);
    std::uniform_real_distribution<double> zd(0.15, 0.85);
    std::uniform_real_distribution<double> td(-1.5, 1.5);
    double worstX = 0.0, worstFE = 0.0;
    for (int i = 0; i < 4; ++i) {
        cplx z = (i % 2 == 0) ? cplx(0.5, td(rng)) : cplx(zd(rng), 0.0);
        const auto& q = fam[rng() % fam.size()];
        CubicAfeContext ctx(z, double(q.norm64()), 2.0);
        CubicAfeContext ctx1(1.0 - z, double(q.norm64()), 1.0);
        auto r1 = ctx.evaluate(q, 1.0);
        auto r2 = ctx.evaluate(q, 2.0);
        worstX = std::max(worstX, std::abs(r1.value - r2.value) / std::abs(r1.value));
        auto L1z = ctx1.evaluate(q, 1.0, true).value;
        double nq3 = 3.0 * double(q.norm64());
        cplx lhs = std::pow(nq3, z / 2.0) * std::pow(2.0 * std::numbers::pi, -z) *
                   complex_gamma(z) * r1.value;
        cplx gt = gauss_sum_normalized(q, ctx.gauss_cache());
        cplx rhs = gt * std::pow(nq3, (1.0 - z) / 2.0) *
                   std::pow(2.0 * std::numbers::pi, -(1.0 - z)) * complex_gamma(1.0 - z) * L1z;
        worstFE = std::max(worstFE, std::abs(lhs - rhs) / std::abs(lhs));
    }
    add(rep, "X-invariance (X=1 vs 2)", worstX, 1e-8);
    add(rep, "functional-equation residual", worstFE, 1e-6);
    add(rep, "quad eps(1/2, chi_13) = 1",
        std::abs(root_number_quadratic(cplx(0.5, 0.0), 13) - cplx(1.0, 0.0)), 1e-12);
    {
        auto d = quad_L_direct(cplx(1.2, 0.0), 17, 2e7);
        auto a = quad_L_afe(cplx(1.2, 0.0), 17);
        add(rep, "quad direct vs AFE at z=1.2", std::abs(d.value - a.value), 1e-6);
    }
    return rep;
}

SuiteReport suite_constants(std::uint64_t seed) {
    (void)seed;
    SuiteReport rep{"constants", {}};
    double P = 3e6;
    double worst = 0.0;
    for (double z : {0.0, 0.2, 0.5, 0.8, 1.0}) {
        double D = constant_D(z, P).value;
        double Dp = constant_Dprime(z, P).value;
        double rel = (D == 0.0 && Dp == 0.0) ? 0.0 : std::abs(Dp + D) / std::abs(D);
        worst = std::max(worst, rel);
    }
    add(rep, "D'_z = -D_z on the z-grid", worst, 1e-6);
    double c13 = constant_C13(P).value, c13p = constant_C13prime(P).value;
    add(rep, "C'_{1/3} = C_{1/3}", std::abs(c13p / c13 - 1.0), 1e-6);
    add(rep, "sum_k 3^{-2k/3} sum |delta|^2 = 3^{1/3}/(1-3^{-1/3})",
        std::abs(delta_k_sum() - std::pow(3.0, 1.0 / 3.0) /
                                     (1.0 - std::pow(3.0, -1.0 / 3.0))),
        1e-12);
    {
        double direct = 0.0;
        for (const auto& m : enumerate_primary(300000.0)) {
            double wgt = 1.0;
            for (auto& [pi, e] : factor(m).factors) {
                (void)e;
                wgt /= 1.0 + 1.0 / double(pi.norm64());
            }
            direct += wgt / std::pow(double(m.norm64()), 2.0);
        }
        auto prod = euler_product_primary(
            [](double q) { return 1.0 - 1.0 / (q * q * (q + 1.0)); }, 1e6, 2.0, 1.0);
        double closed = (1.0 - 1.0 / 9.0) * dedekind_zeta_eisenstein(cplx(2.0, 0.0)).real() *
                        prod.value;
        add(rep, "Z(2) closed form (quick truncation)", std::abs(direct - closed), 2e-6);
    }
    {
        double g1 = gamma_eisenstein_constant();
        double h = 1e-3;
        double lp = (l_chi3(cplx(1.0 + h, 0.0)).real() - l_chi3(cplx(1.0 - h, 0.0)).real()) /
                    (2.0 * h);
        double oracle = kEulerGamma * l_chi3(cplx(1.0, 0.0)).real() + lp;
        add(rep, "gamma_K = gamma L(1) + L'(1)", std::abs(g1 - oracle), 1e-6);
    }
    {
        double worstg = 0.0;
        for (double z : {0.2, 0.5, 0.8}) {
            cplx lhs = std::pow(std::numbers::pi, z - 0.5) *
                       complex_gamma(cplx(0.5 * (1.0 - z), 0.0)) *
                       reciprocal_gamma(cplx(0.5 * z, 0.0)) *
                       gamma_kernel(GammaKernel::Quadratic, cplx(1.0 - z, 0.0),
                                    cplx(z - 0.5, 0.0));
            cplx rhs = gamma_kernel(GammaKernel::Quadratic, cplx(z, 0.0), cplx(0.5 - z, 0.0));
            worstg = std::max(worstg, std::abs(lhs - rhs));
        }
        add(rep, "quad kernel symmetry g_{1-z}(z-1/2) ~ g_z(1/2-z)", worstg, 1e-10);
    }
    return rep;
}

}  // namespace

std::vector<std::string> suite_names() {
    return {"ring", "symbols", "gauss", "afe", "constants", "all"};
}

SuiteReport run_suite(const std::string& suite, std::uint64_t seed) {
    if (suite == "ring") return suite_ring(seed);
    if (suite == "symbols") return suite_symbols(seed);
    if (suite == "gauss") return suite_gauss(seed);
    if (suite == "afe") return suite_afe(seed);
    if (suite == "constants") return suite_constants(seed);
    if (suite == "all") {
        SuiteReport all{"all", {}};
        for (const auto& s : {"ring", "symbols", "gauss", "afe", "constants"}) {
            auto r = run_suite(s, seed);
            for (auto& c : r.checks) {
                c.name = std::string(s) + ": " + c.name;
                all.checks.push_back(c);
            }
        }
        return all;
    }
    throw std::domain_error("run_suite: unknown suite '" + suite + "'");
}

}  // namespace em
