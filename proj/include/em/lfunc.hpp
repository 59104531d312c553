#pragma once

// Hecke L-functions L(z, chi_q) over Q(w) for the cubic family, and
// quadratic Dirichlet L-functions for the Kronecker family: direct series
// on Re(z) > 1 and approximate functional equation inside the strip.
//
// The AFE evaluators share one PrimaryTable / SPF table and two V-tables
// per value of z, so family sweeps cost one character fill per conductor.

#include "em/eisenstein.hpp"
#include "em/gauss.hpp"
#include "em/special.hpp"

#include <memory>
#include <string>

namespace em {

struct LValueResult {
    cplx value{0.0, 0.0};
    cplx z{0.0, 0.0};
    std::int64_t conductor_norm{0};
    std::string method;     // "direct", "afe-balanced", "afe-split"
    double est_error{0.0};  // truncation + quadrature error estimate
};

// ---------------------------------------------------------------------------
// Cubic (Hecke) side
// ---------------------------------------------------------------------------

// Direct ideal sum over N(m) <= cutoff; Re(z) >= 1.1, q in the family.
LValueResult hecke_L_direct(cplx z, const EisensteinInt& q, double cutoff);

// eps(z, chi_q) = (2 pi)^{2z-1} (3 N(q))^{1/2-z} Gamma(1-z)/Gamma(z) g~(q).
cplx root_number_cubic(cplx z, const EisensteinInt& q, GaussPrimeCache& cache);

struct AfeOptions {
    double v_eps = 1e-12;    // truncate where the E=3 decay bound drops below
    bool conj_char = false;  // evaluate L(z, conj(chi_q)) instead
};

class CubicAfeContext {
public:
    // max_norm: largest conductor norm; max_x: largest AFE parameter X used.
    // An existing PrimaryTable can be shared across contexts (it only has
    // to be large enough); otherwise one is built.
    CubicAfeContext(cplx z, double max_norm, double max_x, const AfeOptions& opt = {},
                    std::shared_ptr<const PrimaryTable> table = nullptr);

    // The two AFE sums separately (dual already multiplied by the root
    // number).  Thread-safe with caller-owned scratch, provided the Gauss
    // prime cache has been prefilled up to max_norm.
    struct Parts {
        cplx principal{0.0, 0.0};
        cplx dual_with_eps{0.0, 0.0};
        double est_error{0.0};
    };
    Parts evaluate_parts(const EisensteinInt& q, double X, bool conj_char,
                         std::vector<std::uint8_t>& scratch) const;

    LValueResult evaluate(const EisensteinInt& q, double X = 1.0, bool conj_char = false);

    cplx z() const { return z_; }
    GaussPrimeCache& gauss_cache() { return gauss_; }
    const AfeOptions& options() const { return opt_; }

private:
    cplx z_;
    AfeOptions opt_;
    double ycut_z_, ycut_1z_;
    std::shared_ptr<const PrimaryTable> table_;
    std::unique_ptr<VTable> vz_, v1z_;
    mutable GaussPrimeCache gauss_;
    std::vector<std::uint8_t> chi_scratch_;
};

// Convenience wrapper building a one-shot context.
LValueResult hecke_L_afe(cplx z, const EisensteinInt& q, double X = 1.0,
                         const AfeOptions& opt = {});

// ---------------------------------------------------------------------------
// Quadratic (Kronecker) side
// ---------------------------------------------------------------------------

LValueResult quad_L_direct(cplx z, std::int64_t q, double cutoff);

// eps(z, chi_q) = (q/pi)^{1/2-z} Gamma((1-z)/2)/Gamma(z/2); equals 1 at z = 1/2.
cplx root_number_quadratic(cplx z, std::int64_t q);

class QuadAfeContext {
public:
    QuadAfeContext(cplx z, double max_q, const AfeOptions& opt = {});

    // Thread-safe with caller-owned scratch.
    LValueResult evaluate_with_scratch(std::int64_t q,
                                       std::vector<std::int8_t>& scratch) const;
    LValueResult evaluate(std::int64_t q);

    cplx z() const { return z_; }

private:
    cplx z_;
    AfeOptions opt_;
    double ycut_z_, ycut_1z_;
    std::int64_t nmax_;
    std::vector<std::int32_t> spf_;
    std::unique_ptr<VTable> vz_, v1z_;
    std::vector<std::int8_t> chi_scratch_;
};

LValueResult quad_L_afe(cplx z, std::int64_t q, const AfeOptions& opt = {});

// Squarefree q == 1 (mod 4), 1 < q <= Q, ascending.
std::vector<std::int64_t> enumerate_quad_family(double Q);

}  // namespace em
