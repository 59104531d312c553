#pragma once

// Cubic Gauss sums g(nu, c) = sum_{d mod c} (d/c)_3 e(nu d / c) with
// e(z) = exp(2 pi i Tr(z)), plus the Fourier coefficients tau(mu) of the
// cubic metaplectic theta function, the Kubota series psi(r, s), and
// smoothed averages of g(r, n) over primary n.
//
// Two evaluation routes are kept side by side: a direct summation over a
// fundamental domain of Z[w]/c (the reference), and a factored evaluator
// built from twisted multiplicativity and the prime-power local table,
// with prime base values cached.

#include "em/eisenstein.hpp"
#include "em/special.hpp"

#include <complex>
#include <unordered_map>

namespace em {

// Direct summation; c must be primary, N(c) <= 1e7.
cplx gauss_sum_naive(const EisensteinInt& nu, const EisensteinInt& c);

// Prime base values g(1, pi), filled on demand.  prefill() must be called
// before sharing a cache across threads.
class GaussPrimeCache {
public:
    cplx g1(const EisensteinInt& pi);
    // compute g(1, pi) for all primary primes with N(pi) <= bound
    void prefill(std::int64_t bound);

private:
    std::unordered_map<EisensteinInt, cplx, EisensteinHash> map_;
};

// Factored evaluation, agrees with gauss_sum_naive everywhere.
cplx gauss_sum(const EisensteinInt& nu, const EisensteinInt& c, GaussPrimeCache& cache);

// Convenience overload with a per-call cache (fine for occasional use).
cplx gauss_sum(const EisensteinInt& nu, const EisensteinInt& c);

// g~(c) = g(1, c)/sqrt(N(c)).
cplx gauss_sum_normalized(const EisensteinInt& c, GaussPrimeCache& cache);

// tau(mu) for mu = elt * lambda^{shift}, mu in lambda^{-3} Z[w] \ {0}.
cplx tau(const EisensteinInt& elt, int lambda_shift, GaussPrimeCache& cache);

struct PsiValue {
    cplx value{0.0, 0.0};
    double tail{0.0};  // bound on the truncation error
};

// Kubota series psi(r, s) = sum over primary n of g(r, n)/N(n)^s,
// truncated at N(n) <= nmax; requires Re(s) > 3/2 for the tail bound.
PsiValue kubota_psi(const EisensteinInt& r, cplx s, double nmax, GaussPrimeCache& cache);

// Residue scale of psi at s = 4/3:
//   c0 = (2 pi)^{5/3} / (3^{9/2} * 8 * Gamma(2/3) * zeta_{Q(w)}(2)).
double kubota_residue_c0();

// sum over primary n of g(r, n) * w(N(n)/X); deterministic reduction order.
cplx smoothed_gauss_average(const EisensteinInt& r, double X, const SmoothWeight& w,
                            GaussPrimeCache& cache, int threads = 0);
// Plain serial loop kept as the reference implementation.
cplx smoothed_gauss_average_serial(const EisensteinInt& r, double X, const SmoothWeight& w,
                                   GaussPrimeCache& cache);

// Counting envelope used by tail bounds: #{primary m : N(m) <= X}.
double primary_count_bound(double X);

}  // namespace em
