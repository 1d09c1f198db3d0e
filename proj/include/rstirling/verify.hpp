#pragma once

#include <functional>
#include <string>
#include <vector>

namespace rstirling {

/// quick targets interactive use (seconds); full runs every sweep at its
/// widest configured grid.
enum class VerifyLevel { quick, full };

struct CheckResult {
    std::string name;
    int criterion = 0;  // 1..13 for acceptance checks, 0 for extra invariants
    bool passed = false;
    double seconds = 0.0;
    std::string detail;  // first counterexample when failed
};

struct VerifyOptions {
    VerifyLevel level = VerifyLevel::quick;
    bool acceptance_only = false;  // run only the numbered acceptance checks
    std::string name_filter;       // substring filter on check names
};

/// Runs the verification suites and returns one result per check, in a
/// fixed order. on_result, when set, is invoked as each check finishes.
std::vector<CheckResult> run_verification(
    const VerifyOptions& options,
    const std::function<void(const CheckResult&)>& on_result = {});

}  // namespace rstirling
