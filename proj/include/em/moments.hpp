#pragma once

// First moments of L(z, chi_q) over the cubic family (conductors q == 1
// mod 9, squarefree) and the quadratic family (q == 1 mod 4, squarefree),
// together with the predicted asymptotic constants: the principal-sum
// constants C_z, D_z, C_{1/3}, C_2 and the dual-sum (metaplectic)
// constants D'_z, C'_{1/3}, E'_z.  D'_z = -D_z and C'_{1/3} = C_{1/3}
// are exact identities; the two sides are computed through independent
// Euler-product pipelines so the cancellation is a genuine cross-check.

#include "em/lfunc.hpp"

#include <optional>

namespace em {

// ---------------------------------------------------------------------------
// Cubic constants
// ---------------------------------------------------------------------------

struct ConstantValue {
    double value{0.0};
    double tail{0.0};  // Euler-product truncation estimate
};

// C_z for z > 1/3 (the zeta factor is evaluated by series).
ConstantValue constant_C(double z, double P = 1e5);

// D_z and D'_z for z in [0,1], z != 1/3;  D'_z = -D_z.
ConstantValue constant_D(double z, double P = 1e5);
ConstantValue constant_Dprime(double z, double P = 1e5);

ConstantValue constant_C13(double P = 1e5);
ConstantValue constant_C13prime(double P = 1e5);
ConstantValue constant_C2(const SmoothWeight& w, double P = 1e5);

// sum_k 3^{-2k/3} * sum_{a,b} |delta_{a,b}|^2  (= 3^{1/3}/(1 - 3^{-1/3})).
double delta_k_sum();

struct EprimeParams {
    double c_max = 40.0;      // truncation of the outer squarefree sum
    double d_max = 400.0;     // truncation of the inner squarefree sum
    double psi_nmax = 1e4;    // truncation of each Kubota series
    double euler_P = 1e5;
};

// E'_z for z in [0, 1/6) (every psi argument stays in Re(s) > 3/2).
ConstantValue constant_Eprime(double z, const EprimeParams& params = {});

// ---------------------------------------------------------------------------
// Quadratic constants
// ---------------------------------------------------------------------------

struct QuadConstants {
    double C_z{0.0};      // coefficient of w~(1) Q
    double Cp_z{0.0};     // coefficient of w~(3/2-z) Q^{3/2-z}
    double D_z{0.0};      // split-sum coefficient of w~(5/4-z/2) Q^{5/4-z/2}
    double C_half{0.0};   // z = 1/2 log coefficient (per split sum)
    double C2{0.0};       // z = 1/2 constant coefficient (per split sum)
    double C{0.0};        // 2 C_half
    double D{0.0};        // 2 C2
    double tail{0.0};
};

QuadConstants quad_constants(double z, const SmoothWeight& w, double P = 1e5);

// ---------------------------------------------------------------------------
// Moments
// ---------------------------------------------------------------------------

struct MomentReport {
    std::string family;  // "cubic" or "quadratic"
    double z{0.0};
    double Q{0.0};
    double A{0.0}, B{0.0};  // split parameters (A*B = Q); 0 when balanced
    cplx computed{0.0, 0.0};
    double predicted_main{0.0};
    double predicted_secondary{0.0};
    double residual{0.0};  // Re(computed) - main - secondary
    long family_size{0};
    std::string weight_id;
    double est_error{0.0};
    double wallclock_s{0.0};
};

struct MomentOptions {
    double v_eps = 1e-12;  // AFE truncation threshold per L-value
    int threads = 0;       // 0 = library default
    double euler_P = 1e5;
};

MomentReport cubic_moment(double z, double Q, const SmoothWeight& w,
                          const MomentOptions& opt = {});

// Unbalanced split: M1 uses A_q = A N(q)/Q, M2 uses B; A*B = Q.
struct SplitMoment {
    cplx M1{0.0, 0.0};
    cplx M2{0.0, 0.0};
    MomentReport report;
};
SplitMoment cubic_moment_split(double z, double Q, double A, double B,
                               const SmoothWeight& w, const MomentOptions& opt = {});

MomentReport quadratic_moment(double z, double Q, const SmoothWeight& w,
                              const MomentOptions& opt = {});

// Serial reference paths: independent plain loops over the same families,
// summing chi one symbol at a time (no shared tables).  Kept for testing
// and benchmarked against the engine implementations.
cplx cubic_moment_reference(double z, double Q, const SmoothWeight& w,
                            double v_eps = 1e-12);
cplx quadratic_moment_reference(double z, double Q, const SmoothWeight& w,
                                double v_eps = 1e-12);

}  // namespace em
