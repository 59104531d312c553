// Command-line front end: verification suites, moment runs, constants
// tables, and Gauss-sum evaluation.  Data goes to stdout (or --out);
// progress and telemetry go to stderr.

#include "em/moments.hpp"
#include "em/runconfig.hpp"
#include "em/symbols.hpp"
#include "em/verify.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"

namespace {

int default_threads() {
    if (const char* env = std::getenv("EM_THREADS")) {
        int t = std::atoi(env);
        if (t > 0) return t;
    }
    return 0;
}

em::EisensteinInt parse_eis(const std::string& s) {
    auto comma = s.find(',');
    if (comma == std::string::npos)
        return em::EisensteinInt{std::atoll(s.c_str()), 0};
    return em::EisensteinInt{std::atoll(s.substr(0, comma).c_str()),
                             std::atoll(s.substr(comma + 1).c_str())};
}

void emit(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::fputs(text.c_str(), stdout);
    } else {
        std::ofstream f(path, std::ios::binary);
        if (!f) {
            std::fprintf(stderr, "error: cannot open output file '%s'\n", path.c_str());
            std::exit(2);
        }
        f << text;
    }
}

int cmd_verify(const std::string& suite, std::uint64_t seed) {
    em::SuiteReport rep;
    try {
        rep = em::run_suite(suite, seed);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    std::printf("suite %s (seed %llu)\n", rep.suite.c_str(), (unsigned long long)seed);
    for (const auto& c : rep.checks) {
        std::printf("  [%s] %-55s measured %.3e  tol %.3e\n", c.pass ? "PASS" : "FAIL",
                    c.name.c_str(), c.measured, c.tolerance);
    }
    std::printf("%s\n", rep.all_pass() ? "ALL PASS" : "FAILURES PRESENT");
    return rep.all_pass() ? 0 : 1;
}

int cmd_moment(const em::RunConfig& cfg) {
    em::SmoothWeight w;
    em::MomentOptions opt;
    opt.v_eps = cfg.v_eps;
    opt.threads = cfg.threads;
    opt.euler_P = cfg.euler_P;
    std::vector<em::MomentReport> reps;
    for (int i = 0; i < cfg.scan; ++i) {
        // geometric ladder ascending to Q with ratio 4
        double Qi = cfg.Q * std::pow(4.0, i - (cfg.scan - 1));
        std::fprintf(stderr, "moment %s z=%g Q=%g ...\n", cfg.moment_case.c_str(), cfg.z, Qi);
        em::MomentReport rep;
        if (cfg.moment_case == "cubic") {
            if (cfg.split) {
                double A = std::pow(Qi, cfg.A_exponent);
                auto sm = em::cubic_moment_split(cfg.z, Qi, A, Qi / A, w, opt);
                rep = sm.report;
            } else {
                rep = em::cubic_moment(cfg.z, Qi, w, opt);
            }
        } else if (cfg.moment_case == "quadratic") {
            if (cfg.split) {
                std::fprintf(stderr, "error: --split applies to the cubic case only\n");
                return 2;
            }
            rep = em::quadratic_moment(cfg.z, Qi, w, opt);
        } else {
            std::fprintf(stderr, "error: unknown case '%s'\n", cfg.moment_case.c_str());
            return 2;
        }
        std::fprintf(stderr, "  done in %.1fs (family %ld)\n", rep.wallclock_s,
                     rep.family_size);
        reps.push_back(rep);
    }
    std::string text;
    if (cfg.format == "json") {
        text = em::moment_json(reps, cfg.report_wallclock) + "\n";
    } else {
        text = em::moment_csv_header() + "\n";
        for (const auto& r : reps) text += em::moment_csv_row(r, cfg.report_wallclock) + "\n";
    }
    emit(text, cfg.output_path);
    return 0;
}

int cmd_constants(double z, double P, const std::string& out) {
    em::SmoothWeight w;
    std::string text = "name,value,tail\n";
    auto row = [&text](const std::string& n, const em::ConstantValue& v) {
        text += n + ',' + em::fmt17(v.value) + ',' + em::fmt17(v.tail) + '\n';
    };
    if (z > 1.0 / 3.0 + 1e-9) row("cubic_C_z", em::constant_C(z, P));
    if (std::abs(z - 1.0 / 3.0) > 1e-9) {
        row("cubic_D_z", em::constant_D(z, P));
        row("cubic_Dprime_z", em::constant_Dprime(z, P));
    }
    row("cubic_C13", em::constant_C13(P));
    row("cubic_C13prime", em::constant_C13prime(P));
    row("cubic_C2", em::constant_C2(w, P));
    if (z >= 0.0 && z < 1.0 / 6.0) row("cubic_Eprime_z", em::constant_Eprime(z));
    auto qc = em::quad_constants(z, w, P);
    text += "quad_C_z," + em::fmt17(qc.C_z) + ',' + em::fmt17(qc.tail) + '\n';
    text += "quad_Cprime_z," + em::fmt17(qc.Cp_z) + ',' + em::fmt17(qc.tail) + '\n';
    text += "quad_D_z," + em::fmt17(qc.D_z) + ',' + em::fmt17(qc.tail) + '\n';
    text += "quad_C_half," + em::fmt17(qc.C_half) + ',' + em::fmt17(qc.tail) + '\n';
    text += "quad_C2," + em::fmt17(qc.C2) + ',' + em::fmt17(qc.tail) + '\n';
    text += "quad_C," + em::fmt17(qc.C) + ',' + em::fmt17(qc.tail) + '\n';
    text += "quad_D," + em::fmt17(qc.D) + ',' + em::fmt17(qc.tail) + '\n';
    emit(text, out);
    return 0;
}

int cmd_gauss(const std::string& nu_s, const std::string& c_s, const std::string& out) {
    auto nu = parse_eis(nu_s);
    auto c = parse_eis(c_s);
    em::GaussPrimeCache cache;
    auto g = em::gauss_sum(nu, c, cache);
    double nc = double(c.norm64());
    std::string text = "nu,c,re,im,abs_over_sqrtN\n";
    text += nu.str() + ',' + c.str() + ',' + em::fmt17(g.real()) + ',' + em::fmt17(g.imag()) +
            ',' + em::fmt17(std::abs(g) / std::sqrt(nc)) + '\n';
    emit(text, out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cubic and quadratic L-function moment laboratory"};
    app.require_subcommand(1);

    em::RunConfig cfg;
    cfg.threads = default_threads();

    auto* verify = app.add_subcommand("verify", "run a named invariant suite");
    std::string suite = "all";
    verify->add_option("--suite", suite, "ring|symbols|gauss|afe|constants|all");
    verify->add_option("--seed", cfg.seed, "RNG seed for sampled checks");

    auto* moment = app.add_subcommand("moment", "compute a first moment");
    moment->add_option("--case", cfg.moment_case, "cubic|quadratic");
    moment->add_option("--z", cfg.z, "evaluation point in [0,1]");
    moment->add_option("--Q", cfg.Q, "family size");
    moment->add_option("--A-exponent", cfg.A_exponent, "split exponent: A = Q^a");
    moment->add_flag("--split", cfg.split, "use the unbalanced M1/M2 split");
    moment->add_option("--scan", cfg.scan, "geometric Q-ladder row count");
    moment->add_option("--v-eps", cfg.v_eps, "AFE truncation threshold");
    moment->add_option("--euler-P", cfg.euler_P, "Euler product truncation");
    moment->add_option("--threads", cfg.threads, "worker threads (0 = default)");
    moment->add_option("--out", cfg.output_path, "output file (default stdout)");
    moment->add_option("--format", cfg.format, "csv|json");
    bool no_wallclock = false;
    moment->add_flag("--no-wallclock", no_wallclock, "print 0 in the wallclock column");

    auto* constants = app.add_subcommand("constants", "print the constants table");
    double cz = 0.5, cP = 1e5;
    std::string cout_path;
    constants->add_option("--z", cz, "evaluation point");
    constants->add_option("--euler-P", cP, "Euler product truncation");
    constants->add_option("--out", cout_path, "output file");

    auto* gauss = app.add_subcommand("gauss", "evaluate one cubic Gauss sum");
    std::string nu_s = "1", c_s = "1,3", gout_path;
    gauss->add_option("--nu", nu_s, "shift as a,b meaning a+bw");
    gauss->add_option("--c", c_s, "modulus as a,b (must be primary)");
    gauss->add_option("--out", gout_path, "output file");

    CLI11_PARSE(app, argc, argv);
    cfg.report_wallclock = !no_wallclock;

    try {
        if (verify->parsed()) return cmd_verify(suite, cfg.seed);
        if (moment->parsed()) {
            cfg.command = "moment";
            return cmd_moment(cfg);
        }
        if (constants->parsed()) return cmd_constants(cz, cP, cout_path);
        if (gauss->parsed()) return cmd_gauss(nu_s, c_s, gout_path);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 0;
}
