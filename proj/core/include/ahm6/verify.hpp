#pragma once

#include <string>
#include <vector>

namespace ahm6 {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail; // failure context, empty on pass
};

struct SuiteResult {
    std::string suite;
    std::vector<CheckResult> checks;
    long long elapsed_ms = 0;
    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

/// Suites in their fixed execution order (excluding "all").
const std::vector<std::string>& verify_suites();

/// Runs one suite ("algebra", "decomposition", "clifford", "isotropy",
/// "models") or "all". Checks run in a deterministic order; a check that
/// throws is reported as failed with the exception text.
SuiteResult run_verify_suite(const std::string& suite);

/// Check names of a suite, in execution order.
std::vector<std::string> checks_in_suite(const std::string& suite);

/// Runs a single named check.
CheckResult run_check(const std::string& name);

} // namespace ahm6
