#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "em/moments.hpp"
#include "em/runconfig.hpp"

#include <cmath>

using namespace em;

TEST_CASE("constants: flagship identities on a small grid") {
    double P = 1e6;
    for (double z : {0.0, 0.2, 0.5, 0.8, 1.0}) {
        double D = constant_D(z, P).value;
        double Dp = constant_Dprime(z, P).value;
        if (z == 0.0) {
            CHECK(D == 0.0);  // 1/Gamma(0) = 0 kills both displays
            CHECK(Dp == 0.0);
        } else {
            CHECK(std::abs(Dp + D) <= 1e-6 * std::abs(D));
        }
    }
    CHECK(std::abs(constant_C13prime(P).value / constant_C13(P).value - 1.0) <= 1e-6);
    CHECK(std::abs(delta_k_sum() -
                   std::pow(3.0, 1.0 / 3.0) / (1.0 - std::pow(3.0, -1.0 / 3.0))) < 1e-12);
    CHECK_THROWS_AS(constant_D(1.0 / 3.0), std::domain_error);
    CHECK_THROWS_AS(constant_C(0.2), std::domain_error);
}

TEST_CASE("delta table moduli") {
    // |delta_{0,0}| = 1, |delta_{a,2}| = 3^{-1/3}, others 0; realized by the
    // k/delta double sum splitting into (1 + 3*3^{-2/3}) per k
    double dsum = delta_k_sum() * (1.0 - std::pow(3.0, -2.0 / 3.0));
    CHECK(std::abs(dsum - (1.0 + 3.0 * std::pow(3.0, -2.0 / 3.0))) < 1e-12);
}

TEST_CASE("C_z sanity") {
    double P = 1e5;
    double c04 = constant_C(0.4, P).value;
    double c07 = constant_C(0.7, P).value;
    double c10 = constant_C(1.0, P).value;
    CHECK(c04 > c07);
    CHECK(c07 > c10);
    CHECK(c10 > 0.0);
    // truncation stability between P levels
    double a = constant_C(0.5, 1e4).value, b = constant_C(0.5, 1e5).value;
    CHECK(std::abs(a - b) <= constant_C(0.5, 1e4).tail * std::abs(a));
}

TEST_CASE("constant_C2 assembles finite pieces") {
    SmoothWeight w;
    auto c2a = constant_C2(w, 1e4);
    auto c2b = constant_C2(w, 1e5);
    CHECK(std::abs(c2a.value - c2b.value) <= c2a.tail * std::abs(c2a.value) + 1e-12);
}

TEST_CASE("Eprime domain and stability") {
    CHECK_THROWS_AS(constant_Eprime(0.5), std::domain_error);
    CHECK_THROWS_AS(constant_Eprime(1.0 / 6.0), std::domain_error);
    EprimeParams p1;
    p1.c_max = 25.0;
    p1.d_max = 150.0;
    p1.psi_nmax = 4e3;
    EprimeParams p2 = p1;
    p2.psi_nmax = 1.6e4;
    for (double z : {0.0, 0.15}) {
        auto a = constant_Eprime(z, p1);
        auto b = constant_Eprime(z, p2);
        CHECK(std::isfinite(a.value));
        // truncation drift within the combined psi tail estimates
        CHECK(std::abs(a.value - b.value) <= a.tail + b.tail);
    }
}

TEST_CASE("switching exponents (symbolic)") {
    for (double z : {0.0, 0.1, 0.2, 0.3}) CHECK(4.0 / 3.0 - z > 1.0);
    for (double z : {0.4, 0.7, 1.0}) CHECK(4.0 / 3.0 - z < 1.0 + 1e-12);
    for (double z : {0.0, 0.2, 0.4}) CHECK(1.5 - z > 1.0);  // quadratic switch at 1/2
}

TEST_CASE("cubic moment: empty family and reference agreement") {
    SmoothWeight w;
    MomentOptions opt;
    opt.v_eps = 1e-9;
    auto empty = cubic_moment(0.5, 60.0, w, opt);
    CHECK(empty.computed == cplx{0.0, 0.0});
    CHECK(empty.family_size == 0);

    auto rep = cubic_moment(0.5, 900.0, w, opt);
    auto ref = cubic_moment_reference(0.5, 900.0, w, 1e-9);
    CHECK(std::abs(rep.computed - ref) <= 1e-8 * (1.0 + std::abs(ref)));
}

TEST_CASE("split: M1 + M2 equals the balanced moment") {
    SmoothWeight w;
    MomentOptions opt;
    opt.v_eps = 1e-10;
    double Q = 700.0;
    double A = std::pow(Q, 0.6);
    auto bal = cubic_moment(0.45, Q, w, opt);
    auto sp = cubic_moment_split(0.45, Q, A, Q / A, w, opt);
    CHECK(std::abs(sp.M1 + sp.M2 - bal.computed) <= 1e-8 * std::abs(bal.computed));
    CHECK_THROWS_AS(cubic_moment_split(0.45, Q, A, Q / A * 1.5, w, opt), std::domain_error);
}

TEST_CASE("quadratic moment: exact small family") {
    SmoothWeight w;
    MomentOptions opt;
    opt.v_eps = 1e-10;
    auto rep = quadratic_moment(0.5, 30.0, w, opt);
    CHECK(rep.family_size == 5);
    // direct per-q evaluation: support (1/4, 3/4) keeps q in {13, 17, 21}
    AfeOptions aopt;
    aopt.v_eps = 1e-10;
    cplx direct{0.0, 0.0};
    for (std::int64_t q : {13, 17, 21})
        direct += w(double(q) / 30.0) * quad_L_afe({0.5, 0.0}, q, aopt).value;
    CHECK(std::abs(rep.computed - direct) <= 1e-10 * (1.0 + std::abs(direct)));
    auto ref = quadratic_moment_reference(0.5, 30.0, w, 1e-10);
    CHECK(std::abs(rep.computed - ref) <= 1e-9 * (1.0 + std::abs(ref)));
}

TEST_CASE("quad constants record") {
    SmoothWeight w;
    auto qc = quad_constants(0.8, w, 1e5);
    CHECK(qc.C_z > 0.0);
    CHECK(qc.C_half > 0.0);
    CHECK(qc.C == 2.0 * qc.C_half);
    CHECK(qc.D == 2.0 * qc.C2);
    // D_z changes sign across z = 1/2 (the 1/(1/2 - z) factor)
    CHECK(quad_constants(0.3, w).D_z * quad_constants(0.7, w).D_z < 0.0);
}

TEST_CASE("run config round-trips through JSON") {
    RunConfig c;
    c.command = "moment";
    c.moment_case = "quadratic";
    c.z = 0.37;
    c.Q = 12345.0;
    c.A_exponent = 0.61;
    c.split = true;
    c.v_eps = 3e-11;
    c.scan = 3;
    c.output_path = "/tmp/x.csv";
    c.format = "json";
    c.seed = 99;
    c.threads = 4;
    c.report_wallclock = false;
    CHECK(run_config_from_json(run_config_to_json(c)) == c);
}

TEST_CASE("csv row formatting is stable") {
    MomentReport rep;
    rep.family = "cubic";
    rep.z = 0.5;
    rep.Q = 1000.0;
    rep.computed = {1.0 / 3.0, 0.0};
    rep.wallclock_s = 1.234;
    auto row1 = moment_csv_row(rep, false);
    auto row2 = moment_csv_row(rep, false);
    CHECK(row1 == row2);
    CHECK(row1.find("0.33333333333333331") != std::string::npos);
    CHECK(row1.rfind(",0") == row1.size() - 2);  // wallclock zeroed
}
