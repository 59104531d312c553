#include "em/gauss.hpp"
#include "em/symbols.hpp"
#include "em/sieve.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace em {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Residue box for Z[w]/c: y in [0, g), x in [0, N/g) with g = gcd(a, b).
struct ResidueBox {
    std::int64_t g, xspan;  // xspan = N/g
    std::int64_t N;
};

ResidueBox residue_box(const EisensteinInt& c) {
    std::int64_t g = std::gcd(std::abs(c.a), std::abs(c.b));
    std::int64_t N = c.norm64();
    return {g, N / g, N};
}

}  // namespace

cplx gauss_sum_naive(const EisensteinInt& nu, const EisensteinInt& c) {
    if (!is_primary(c)) throw std::domain_error("gauss_sum_naive: c must be == 1 (mod 3)");
    std::int64_t N = c.norm64();
    if (N > 10000000) throw std::domain_error("gauss_sum_naive: N(c) > 1e7");
    if (N == 1) return {1.0, 0.0};
    auto box = residue_box(c);
    // e(nu d / c) = exp(2 pi i * Tr(nu d conj(c)) / N); the trace is integral.
    EisensteinInt w = nu * c.conj();
    // Tr((x + y w) * w0) with w0 = u + v w: x*(2u - v) + y*(2v - ... ) computed
    // directly from coordinates: Tr(p + q w) = 2p - q.
    long double acc_re = 0.0L, acc_im = 0.0L;
    for (std::int64_t y = 0; y < box.g; ++y) {
        for (std::int64_t x = 0; x < box.xspan; ++x) {
            EisensteinInt d{x, y};
            CubicSymbol chi = cubic_symbol(d, c);
            if (chi.is_zero) continue;
            EisensteinInt t = d * w;
            std::int64_t tr = ((t.trace() % N) + N) % N;
            double ang = kTwoPi * double(tr) / double(N);
            double cre = std::cos(ang), cim = std::sin(ang);
            switch (chi.exponent) {
                case 0:
                    acc_re += cre;
                    acc_im += cim;
                    break;
                case 1:  // w = (-1 + i sqrt3)/2
                    acc_re += -0.5 * cre - 0.8660254037844386467637232 * cim;
                    acc_im += 0.8660254037844386467637232 * cre - 0.5 * cim;
                    break;
                default:  // w^2
                    acc_re += -0.5 * cre + 0.8660254037844386467637232 * cim;
                    acc_im += -0.8660254037844386467637232 * cre - 0.5 * cim;
                    break;
            }
        }
    }
    return {double(acc_re), double(acc_im)};
}

// ---------------------------------------------------------------------------
// Prime base values
// ---------------------------------------------------------------------------

namespace {

// g(1, pi) for split pi (N(pi) = p prime) via an F_p character table.
cplx g1_split_prime(const EisensteinInt& pi) {
    std::int64_t p = pi.norm64();
    // cubic character on F_p via a generator
    std::vector<std::uint8_t> cls(std::size_t(p), 0);
    std::int64_t g = 2;
    for (;; ++g) {
        // test generator: g^((p-1)/q) != 1 for q | p-1
        bool ok = true;
        for (auto [q, e] : factor_u64(std::uint64_t(p - 1))) {
            (void)e;
            if (powmod_u64(std::uint64_t(g), std::uint64_t((p - 1) / std::int64_t(q)),
                           std::uint64_t(p)) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) break;
    }
    std::int64_t x = 1;
    for (std::int64_t k = 0; k < p - 1; ++k) {
        cls[std::size_t(x)] = std::uint8_t(k % 3);
        x = std::int64_t(mulmod_u64(std::uint64_t(x), std::uint64_t(g), std::uint64_t(p)));
    }
    // calibrate: (g/pi)_3 = w^{eps}
    CubicSymbol sg = cubic_symbol(EisensteinInt{g, 0}, pi);
    int eps = sg.exponent;  // g is a non-residue mod pi, eps in {1, 2}
    // e(x/pi) = exp(2 pi i x Tr(conj(pi)) / p)
    std::int64_t tr = ((pi.conj().trace() % p) + p) % p;
    long double acc_re = 0.0L, acc_im = 0.0L;
    for (std::int64_t xx = 1; xx < p; ++xx) {
        int e = (eps * cls[std::size_t(xx)]) % 3;
        // angle reduced mod 2pi by exact integer arithmetic on tr*x mod p
        std::int64_t m = std::int64_t(mulmod_u64(std::uint64_t(tr), std::uint64_t(xx),
                                                 std::uint64_t(p)));
        double ang = kTwoPi * double(m) / double(p);
        double cre = std::cos(ang), cim = std::sin(ang);
        switch (e) {
            case 0:
                acc_re += cre;
                acc_im += cim;
                break;
            case 1:
                acc_re += -0.5 * cre - 0.8660254037844386467637232 * cim;
                acc_im += 0.8660254037844386467637232 * cre - 0.5 * cim;
                break;
            default:
                acc_re += -0.5 * cre + 0.8660254037844386467637232 * cim;
                acc_im += -0.8660254037844386467637232 * cre - 0.5 * cim;
                break;
        }
    }
    return {double(acc_re), double(acc_im)};
}

}  // namespace

cplx GaussPrimeCache::g1(const EisensteinInt& pi) {
    auto it = map_.find(pi);
    if (it != map_.end()) return it->second;
    std::int64_t n = pi.norm64();
    cplx v;
    if (n % 3 != 2 && is_prime_u64(std::uint64_t(n))) {
        v = g1_split_prime(pi);
    } else {
        v = gauss_sum_naive(EisensteinInt{1, 0}, pi);
    }
    map_.emplace(pi, v);
    return v;
}

void GaussPrimeCache::prefill(std::int64_t bound) {
    auto primes = primes_up_to(bound);
    std::vector<EisensteinInt> todo;
    for (auto p : primes) {
        if (p == 3) continue;
        if (p % 3 == 1) {
            auto [p1, p2] = split_prime_above(p);
            if (!map_.count(p1)) todo.push_back(p1);
            if (!map_.count(p2)) todo.push_back(p2);
        } else if (p * p <= bound) {
            EisensteinInt pi{-p, 0};
            if (!map_.count(pi)) todo.push_back(pi);
        }
    }
    std::vector<cplx> vals(todo.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (std::size_t i = 0; i < todo.size(); ++i) {
        std::int64_t n = todo[i].norm64();
        vals[i] = (n % 3 != 2 && is_prime_u64(std::uint64_t(n)))
                      ? g1_split_prime(todo[i])
                      : gauss_sum_naive(EisensteinInt{1, 0}, todo[i]);
    }
    for (std::size_t i = 0; i < todo.size(); ++i) map_.emplace(todo[i], vals[i]);
}

// ---------------------------------------------------------------------------
// Factored evaluation
// ---------------------------------------------------------------------------

namespace {

const cplx kOmegaC[3] = {
    {1.0, 0.0},
    {-0.5, 0.8660254037844386467637232},
    {-0.5, -0.8660254037844386467637232},
};

// local factor g(pi^j * (coprime), pi^k) with the coprime part pulled out:
// returns T such that g = conj((nu'/pi^k)_3) * T.
cplx local_prime_power(const EisensteinInt& pi, int j, int k, GaussPrimeCache& cache) {
    std::int64_t npi = pi.norm64();
    if (k != j + 1) {
        if (k % 3 == 0 && k <= j) {
            // phi(pi^k) = N^k - N^{k-1}
            double nk = std::pow(double(npi), k);
            return {nk - nk / double(npi), 0.0};
        }
        return {0.0, 0.0};
    }
    double nj = std::pow(double(npi), j);
    if (k % 3 == 0) return {-nj, 0.0};
    cplx base = cache.g1(pi);
    return (k % 3 == 1) ? nj * base : nj * std::conj(base);
}

}  // namespace

cplx gauss_sum(const EisensteinInt& nu, const EisensteinInt& c, GaussPrimeCache& cache) {
    if (!is_primary(c)) throw std::domain_error("gauss_sum: c must be == 1 (mod 3)");
    if (c == EisensteinInt{1, 0}) return {1.0, 0.0};
    auto fac = factor(c);
    if (nu.is_zero()) {
        // full character sum: phi(c) if chi_c is principal (c a cube), else 0
        bool cube = true;
        double phi = 1.0;
        for (auto& [pi, e] : fac.factors) {
            if (e % 3 != 0) cube = false;
            double np = double(pi.norm64());
            phi *= std::pow(np, e) - std::pow(np, e - 1);
        }
        return cube ? cplx{phi, 0.0} : cplx{0.0, 0.0};
    }
    cplx result{1.0, 0.0};
    EisensteinInt prefix = nu;
    for (auto& [pi, k] : fac.factors) {
        // split prefix = pi^j * rest with (rest, pi) = 1
        EisensteinInt rest = prefix;
        int j = 0;
        while (divides(pi, rest)) {
            rest = div_exact(rest, pi);
            ++j;
        }
        cplx T = local_prime_power(pi, j, k, cache);
        if (T == cplx{0.0, 0.0}) return {0.0, 0.0};
        CubicSymbol chi = cubic_symbol(rest, pi);
        if (chi.is_zero) throw std::logic_error("gauss_sum: unit part shares a factor");
        int e = (chi.exponent * k) % 3;              // (rest/pi^k)_3
        result *= std::conj(kOmegaC[e]) * T;
        prefix = prefix * pow(pi, unsigned(k));
    }
    return result;
}

cplx gauss_sum(const EisensteinInt& nu, const EisensteinInt& c) {
    GaussPrimeCache cache;
    return gauss_sum(nu, c, cache);
}

cplx gauss_sum_normalized(const EisensteinInt& c, GaussPrimeCache& cache) {
    return gauss_sum(EisensteinInt{1, 0}, c, cache) / std::sqrt(double(c.norm64()));
}

// ---------------------------------------------------------------------------
// tau(mu): Patterson's five-case formula
// ---------------------------------------------------------------------------

cplx tau(const EisensteinInt& elt, int lambda_shift, GaussPrimeCache& cache) {
    if (elt.is_zero()) throw std::domain_error("tau: mu = 0");
    auto dec = primary_associate(elt);
    int v = dec.lambda_exp + lambda_shift;  // lambda valuation of mu
    if (v < -3) throw std::domain_error("tau: mu not in lambda^{-3} Z[w]");
    // unit = +- w^t
    int t;
    if (dec.unit == kUnits[0] || dec.unit == kUnits[1]) t = 0;
    else if (dec.unit == kUnits[2] || dec.unit == kUnits[3]) t = 1;
    else t = 2;
    if (v < 0) return {0.0, 0.0};
    int vm3 = v % 3;
    if (vm3 == 1) return {0.0, 0.0};
    if (vm3 == 0 && t != 0) return {0.0, 0.0};
    // m = c d^3 with c squarefree primary requires all exponents != 2 (mod 3)
    auto fac = factor(dec.primary);
    EisensteinInt c{1, 0}, d{1, 0};
    for (auto& [pi, e] : fac.factors) {
        int ce = e % 3;
        if (ce == 2) return {0.0, 0.0};
        if (ce == 1) c = c * pi;
        for (int i = 0; i < (e - ce) / 3; ++i) d = d * pi;
    }
    double dc = std::sqrt(double(d.norm64()) / double(c.norm64()));
    if (vm3 == 0) {
        int n = v / 3 + 1;  // mu = +- lambda^{3n-3} c d^3, n >= 1
        cplx g = gauss_sum(EisensteinInt{1, 0}, c, cache);
        return std::conj(g) * dc * std::pow(3.0, 0.5 * (n + 5));
    }
    int n = (v + 4) / 3;  // mu = +- w^t lambda^{3n-4} c d^3, n >= 2
    EisensteinInt shift = pow(kOmega, unsigned(t)) * kLambda * kLambda;
    cplx g = gauss_sum(shift, c, cache);
    cplx phase{1.0, 0.0};
    if (t == 1) phase = std::polar(1.0, -kTwoPi / 9.0);
    else if (t == 2) phase = std::polar(1.0, kTwoPi / 9.0);
    return phase * std::conj(g) * dc * std::pow(3.0, 0.5 * n + 2.0);
}

// ---------------------------------------------------------------------------
// Kubota series and the smoothed average
// ---------------------------------------------------------------------------

double primary_count_bound(double X) { return 0.4031 * X + 4.0 * std::sqrt(X) + 4.0; }

PsiValue kubota_psi(const EisensteinInt& r, cplx s, double nmax, GaussPrimeCache& cache) {
    if (s.real() <= 1.5)
        throw std::domain_error("kubota_psi: absolutely convergent region is Re(s) > 3/2");
    auto elems = enumerate_primary(nmax);
    cache.prefill(std::int64_t(nmax) + 1);
    cplx acc{0.0, 0.0};
    for (const auto& n : elems) {
        cplx g = gauss_sum(r, n, cache);
        if (g == cplx{0.0, 0.0}) continue;
        acc += g * std::pow(double(n.norm64()), -s);
    }
    // Nonzero terms have n = n0 * n1 with n0 squarefree coprime to r and
    // n1 supported on primes of r with bounded exponents.  Using
    // |g(r, n)| <= sqrt(N(n0)) N(n1) and summing the n1 piece geometrically
    // gives a factor prod_{pi | r} (1 - N(pi)^{-1/2})^{-1}.
    auto rdec = primary_associate(r);
    double fr = 1.0;
    for (auto& [pi, j] : factor(rdec.primary).factors) {
        (void)j;
        fr /= 1.0 - 1.0 / std::sqrt(double(pi.norm64()));
    }
    double sigma = s.real();
    double tail = 1.15 * 0.4031 * fr * std::pow(nmax, 1.5 - sigma) / (sigma - 1.5);
    return {acc, tail};
}

double kubota_residue_c0() {
    double z2 = dedekind_zeta_eisenstein(cplx(2.0, 0.0)).real();
    return std::pow(kTwoPi, 5.0 / 3.0) /
           (std::pow(3.0, 4.5) * 8.0 * complex_gamma(cplx(2.0 / 3.0, 0.0)).real() * z2);
}

cplx smoothed_gauss_average_serial(const EisensteinInt& r, double X, const SmoothWeight& w,
                                   GaussPrimeCache& cache) {
    double bound = w.support_hi() * X;
    if (bound < 1.0) return {0.0, 0.0};
    auto elems = enumerate_primary(bound);
    cache.prefill(std::int64_t(bound) + 1);
    cplx acc{0.0, 0.0};
    for (const auto& n : elems) {
        double wx = w(double(n.norm64()) / X);
        if (wx == 0.0) continue;
        acc += wx * gauss_sum(r, n, cache);
    }
    return acc;
}

cplx smoothed_gauss_average(const EisensteinInt& r, double X, const SmoothWeight& w,
                            GaussPrimeCache& cache, int threads) {
    double bound = w.support_hi() * X;
    if (bound < 1.0) return {0.0, 0.0};
    auto elems = enumerate_primary(bound);
    cache.prefill(std::int64_t(bound) + 1);
    std::vector<cplx> terms(elems.size());
#ifdef _OPENMP
    if (threads > 0) omp_set_num_threads(threads);
#pragma omp parallel for schedule(dynamic, 256)
#endif
    for (std::size_t i = 0; i < elems.size(); ++i) {
        double wx = w(double(elems[i].norm64()) / X);
        terms[i] = (wx == 0.0) ? cplx{0.0, 0.0} : wx * gauss_sum(r, elems[i], cache);
    }
    // reduce in enumeration order: result independent of the thread count
    cplx acc{0.0, 0.0};
    for (const auto& t : terms) acc += t;
    return acc;
}

}  // namespace em
