#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace wpq::verify {

struct CheckResult {
    std::string name;
    bool pass = false;
    double measured = 0.0;   // the decisive measured quantity (usually worst error)
    double tolerance = 0.0;  // the threshold it was held against
    std::string detail;      // per-check margins / notes
};

/// Run acceptance criterion k (1..11). Returns one result per criterion.
CheckResult run_criterion(int k, uint64_t seed = 2026);

/// Named suites wired to the CLI: oracle, identities, regions, hessian,
/// volume, convergence. Each maps to a subset of the criteria.
std::vector<CheckResult> run_suite(const std::string& suite, uint64_t seed = 2026);

std::vector<std::string> suite_names();

}  // namespace wpq::verify
