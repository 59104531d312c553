#include "em/lfunc.hpp"
#include "em/symbols.hpp"
#include "em/sieve.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace em {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kIdealDensity = 0.6046;  // residue of zeta_{Q(w)}
constexpr double kCountSlack = 1.15;

const cplx kOmegaC[3] = {
    {1.0, 0.0},
    {-0.5, 0.8660254037844386467637232},
    {-0.5, -0.8660254037844386467637232},
};

bool in_cubic_family(const EisensteinInt& q) {
    if (q == EisensteinInt{1, 0}) return false;
    if (((q.a - 1) % 9 + 9) % 9 != 0 || (q.b % 9 + 9) % 9 != 0) return false;
    return moebius(q) != 0;
}

}  // namespace

LValueResult hecke_L_direct(cplx z, const EisensteinInt& q, double cutoff) {
    if (z.real() < 1.1) throw std::domain_error("hecke_L_direct: Re(z) >= 1.1 required");
    if (!in_cubic_family(q)) throw std::domain_error("hecke_L_direct: q not in the family");
    LValueResult out;
    out.z = z;
    out.conductor_norm = q.norm64();
    out.method = "direct";
    cplx acc{0.0, 0.0};
    // ideals (lambda^k m): chi_q((lambda^k m)) = (m/q)_3 since (lambda/q)_3 = 1
    auto elems = enumerate_primary(cutoff);
    for (double p3 = 1.0; p3 <= cutoff; p3 *= 3.0) {
        for (const auto& m : elems) {
            double nm = double(m.norm64()) * p3;
            if (nm > cutoff) continue;
            CubicSymbol chi = cubic_symbol(m, q);
            if (chi.is_zero) continue;
            acc += kOmegaC[chi.exponent] * std::exp(-z * std::log(nm));
        }
    }
    out.value = acc;
    double sigma = z.real();
    out.est_error = kCountSlack * kIdealDensity * std::pow(cutoff, 1.0 - sigma) / (sigma - 1.0);
    return out;
}

cplx root_number_cubic(cplx z, const EisensteinInt& q, GaussPrimeCache& cache) {
    double nq = double(q.norm64());
    cplx gt = gauss_sum_normalized(q, cache);
    return std::exp((2.0 * z - 1.0) * std::log(2.0 * kPi)) *
           std::exp((0.5 - z) * std::log(3.0 * nq)) * complex_gamma(1.0 - z) *
           reciprocal_gamma(z) * gt;
}

// ---------------------------------------------------------------------------
// CubicAfeContext
// ---------------------------------------------------------------------------

CubicAfeContext::CubicAfeContext(cplx z, double max_norm, double max_x,
                                 const AfeOptions& opt,
                                 std::shared_ptr<const PrimaryTable> table)
    : z_(z), opt_(opt) {
    if (z.real() < 0.0 || z.real() > 1.0)
        throw std::domain_error("CubicAfeContext: Re(z) must lie in [0, 1]");
    cplx z1 = 1.0 - z;
    ycut_z_ = v_truncation_radius(GammaKernel::Cubic, z, opt.v_eps);
    ycut_1z_ = v_truncation_radius(GammaKernel::Cubic, z1, opt.v_eps);
    double S = std::sqrt(3.0 * max_norm);
    double bound = std::max(ycut_z_ * max_x * S, ycut_1z_ * S / std::min(1.0, max_x)) + 16.0;
    if (table && double(table->bound()) >= bound) {
        table_ = std::move(table);
    } else {
        table_ = std::make_shared<const PrimaryTable>(std::int64_t(bound));
    }
    vz_ = std::make_unique<VTable>(GammaKernel::Cubic, z, ycut_z_ * 1.02);
    v1z_ = std::make_unique<VTable>(GammaKernel::Cubic, z1, ycut_1z_ * 1.02);
}

CubicAfeContext::Parts CubicAfeContext::evaluate_parts(
    const EisensteinInt& q, double X, bool conj_char,
    std::vector<std::uint8_t>& scratch) const {
    if (!in_cubic_family(q)) throw std::domain_error("hecke_L_afe: q not in the family");
    const double S = std::sqrt(3.0 * double(q.norm64()));
    const double Tp = ycut_z_ * X * S;   // principal cutoff on N(m) 3^k
    const double Td = ycut_1z_ * S / X;  // dual cutoff
    if (std::max(Tp, Td) > double(table_->bound()))
        throw std::domain_error("hecke_L_afe: context table too small for this q/X");
    table_->fill_cubic_character(
        [&](const EisensteinInt& pi) {
            CubicSymbol s = cubic_symbol(pi, q);
            return s.is_zero ? 3 : s.exponent;
        },
        scratch);
    const bool real_z = (z_.imag() == 0.0);
    cplx principal{0.0, 0.0}, dual{0.0, 0.0};
    const std::size_t n = table_->size();
    for (double p3 = 1.0, l3 = 0.0; p3 <= std::max(Tp, Td); p3 *= 3.0, l3 += std::log(3.0)) {
        for (std::size_t i = 0; i < n; ++i) {
            double nm = double(table_->norm(i)) * p3;
            if (nm > Tp && nm > Td) break;  // norms ascend within the table
            std::uint8_t e = scratch[i];
            if (e == 3) continue;
            if (conj_char) e = std::uint8_t((3 - e) % 3);
            double lnm = table_->log_norm(i) + l3;
            if (nm <= Tp) {
                cplx v = vz_->value(nm / (X * S));
                cplx wgt = real_z ? cplx(std::exp(-z_.real() * lnm), 0.0)
                                  : std::exp(-z_ * lnm);
                principal += kOmegaC[e] * wgt * v;
            }
            if (nm <= Td) {
                cplx v = v1z_->value(X * nm / S);
                cplx wgt = real_z ? cplx(std::exp((z_.real() - 1.0) * lnm), 0.0)
                                  : std::exp((z_ - 1.0) * lnm);
                dual += kOmegaC[(3 - e) % 3] * wgt * v;
            }
        }
    }
    cplx eps = conj_char ? std::conj(root_number_cubic(std::conj(z_), q, gauss_))
                         : root_number_cubic(z_, q, gauss_);
    Parts out;
    out.principal = principal;
    out.dual_with_eps = eps * dual;
    const double rho = kCountSlack * kIdealDensity;
    double tail = vz_->tail_bound(X * S, z_.real(), Tp, rho) +
                  std::abs(eps) * v1z_->tail_bound(S / X, 1.0 - z_.real(), Td, rho);
    out.est_error = tail + 1e-12 * (std::abs(principal) + std::abs(dual) + 1.0);
    return out;
}

LValueResult CubicAfeContext::evaluate(const EisensteinInt& q, double X, bool conj_char) {
    auto parts = evaluate_parts(q, X, conj_char || opt_.conj_char, chi_scratch_);
    LValueResult out;
    out.z = z_;
    out.conductor_norm = q.norm64();
    out.method = (X == 1.0) ? "afe-balanced" : "afe-split";
    out.value = parts.principal + parts.dual_with_eps;
    out.est_error = parts.est_error;
    return out;
}

LValueResult hecke_L_afe(cplx z, const EisensteinInt& q, double X, const AfeOptions& opt) {
    CubicAfeContext ctx(z, double(q.norm64()), std::max(X, 1.0), opt);
    return ctx.evaluate(q, X);
}

// ---------------------------------------------------------------------------
// Quadratic side
// ---------------------------------------------------------------------------

LValueResult quad_L_direct(cplx z, std::int64_t q, double cutoff) {
    if (z.real() < 1.1) throw std::domain_error("quad_L_direct: Re(z) >= 1.1 required");
    LValueResult out;
    out.z = z;
    out.conductor_norm = q;
    out.method = "direct";
    cplx acc{0.0, 0.0};
    for (std::int64_t n = 1; double(n) <= cutoff; ++n) {
        int chi = kronecker(n, q);
        if (chi == 0) continue;
        acc += double(chi) * std::exp(-z * std::log(double(n)));
    }
    out.value = acc;
    double sigma = z.real();
    out.est_error = std::pow(cutoff, 1.0 - sigma) / (sigma - 1.0);
    return out;
}

cplx root_number_quadratic(cplx z, std::int64_t q) {
    return std::exp((0.5 - z) * std::log(double(q) / kPi)) *
           complex_gamma(0.5 * (1.0 - z)) * reciprocal_gamma(0.5 * z);
}

QuadAfeContext::QuadAfeContext(cplx z, double max_q, const AfeOptions& opt)
    : z_(z), opt_(opt) {
    cplx z1 = 1.0 - z;
    ycut_z_ = v_truncation_radius(GammaKernel::Quadratic, z, opt.v_eps);
    ycut_1z_ = v_truncation_radius(GammaKernel::Quadratic, z1, opt.v_eps);
    double S = std::sqrt(max_q);
    nmax_ = std::int64_t(std::max(ycut_z_, ycut_1z_) * S) + 2;
    spf_ = spf_table(std::int32_t(nmax_));
    vz_ = std::make_unique<VTable>(GammaKernel::Quadratic, z, ycut_z_ * 1.02);
    v1z_ = std::make_unique<VTable>(GammaKernel::Quadratic, z1, ycut_1z_ * 1.02);
}

LValueResult QuadAfeContext::evaluate_with_scratch(std::int64_t q,
                                                   std::vector<std::int8_t>& scratch) const {
    LValueResult out;
    out.z = z_;
    out.conductor_norm = q;
    out.method = "afe-balanced";
    const double S = std::sqrt(double(q));
    const std::int64_t Tp = std::int64_t(ycut_z_ * S);
    const std::int64_t Td = std::int64_t(ycut_1z_ * S);
    const std::int64_t T = std::max(Tp, Td);
    if (T > nmax_) throw std::domain_error("quad_L_afe: context table too small");
    // chi_q(n) is completely multiplicative in n
    scratch.assign(std::size_t(T) + 1, 0);
    if (T >= 1) scratch[1] = 1;
    for (std::int64_t n = 2; n <= T; ++n) {
        std::int32_t p = spf_[n];
        scratch[n] = (n == p) ? std::int8_t(kronecker(p, q))
                              : std::int8_t(scratch[n / p] * scratch[p]);
    }
    const bool real_z = (z_.imag() == 0.0);
    cplx principal{0.0, 0.0}, dual{0.0, 0.0};
    cplx eps = root_number_quadratic(z_, q);
    for (std::int64_t n = 1; n <= T; ++n) {
        int chi = scratch[n];
        if (chi == 0) continue;
        double ln = std::log(double(n));
        if (n <= Tp) {
            cplx v = vz_->value(double(n) / S);
            cplx wgt = real_z ? cplx(std::exp(-z_.real() * ln), 0.0) : std::exp(-z_ * ln);
            principal += double(chi) * wgt * v;
        }
        if (n <= Td) {
            cplx v = v1z_->value(double(n) / S);
            cplx wgt = real_z ? cplx(std::exp((z_.real() - 1.0) * ln), 0.0)
                              : std::exp((z_ - 1.0) * ln);
            dual += double(chi) * wgt * v;
        }
    }
    out.value = principal + eps * dual;
    double tail = vz_->tail_bound(S, z_.real(), double(Tp), 1.0) +
                  std::abs(eps) * v1z_->tail_bound(S, 1.0 - z_.real(), double(Td), 1.0);
    out.est_error = tail + 1e-12 * (std::abs(principal) + std::abs(dual) + 1.0);
    return out;
}

LValueResult QuadAfeContext::evaluate(std::int64_t q) {
    return evaluate_with_scratch(q, chi_scratch_);
}

LValueResult quad_L_afe(cplx z, std::int64_t q, const AfeOptions& opt) {
    QuadAfeContext ctx(z, double(q), opt);
    return ctx.evaluate(q);
}

std::vector<std::int64_t> enumerate_quad_family(double Q) {
    std::vector<std::int64_t> out;
    if (Q < 5) return out;
    std::int64_t n = std::int64_t(Q);
    auto spf = spf_table(std::int32_t(n));
    for (std::int64_t q = 5; q <= n; q += 4) {
        std::int64_t m = q;
        bool sf = true;
        while (m > 1) {
            std::int32_t p = spf[m];
            m /= p;
            if (m % p == 0) { sf = false; break; }
        }
        if (sf) out.push_back(q);
    }
    return out;
}

}  // namespace em
