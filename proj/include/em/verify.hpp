#pragma once

// Named invariant suites runnable from the CLI: each check reports a
// measured error against its tolerance.

#include <cstdint>
#include <string>
#include <vector>

namespace em {

struct CheckResult {
    std::string name;
    double measured{0.0};
    double tolerance{0.0};
    bool pass{false};
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;
    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

// suite in {ring, symbols, gauss, afe, constants, all}
SuiteReport run_suite(const std::string& suite, std::uint64_t seed);
std::vector<std::string> suite_names();

}  // namespace em
