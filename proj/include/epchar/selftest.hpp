#pragma once

#include <string>
#include <vector>

namespace epchar {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

// The twelve acceptance checks, exact unless a tolerance is stated in the name.
std::vector<CheckResult> acceptance_checks();

// Property-style invariants across the modules, beyond the acceptance set.
std::vector<CheckResult> invariant_checks();

// Everything; the CLI `selftest` subcommand runs this.
std::vector<CheckResult> run_selftest();

}  // namespace epchar
