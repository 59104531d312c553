#pragma once

// CLI run configuration and the CSV/JSON writers for moment reports.
// CSV is the canonical interchange; floats are printed with 17 significant
// digits so values round-trip exactly.

#include "em/moments.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace em {

struct RunConfig {
    std::string command;        // moment | verify | constants | gauss
    std::string moment_case{"cubic"};  // cubic | quadratic
    double z{0.5};
    double Q{10000.0};
    double A_exponent{0.6};
    bool split{false};
    std::string weight{"bump-quarter"};
    double v_eps{1e-12};
    double euler_P{1e5};
    int scan{1};
    std::string output_path;
    std::string format{"csv"};  // csv | json
    std::uint64_t seed{1};
    int threads{0};
    bool report_wallclock{true};

    bool operator==(const RunConfig&) const = default;
};

std::string run_config_to_json(const RunConfig& c);
RunConfig run_config_from_json(const std::string& text);

// One formatted value, 17 significant digits.
std::string fmt17(double v);

std::string moment_csv_header();
std::string moment_csv_row(const MomentReport& rep, bool with_wallclock);
std::string moment_json(const std::vector<MomentReport>& reps, bool with_wallclock);

}  // namespace em
