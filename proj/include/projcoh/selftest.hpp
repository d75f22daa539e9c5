#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace projcoh::selftest {

/// One verification criterion of the built-in corpus run.
struct CriterionResult {
    int index = 0;
    std::string name;
    bool passed = false;
    double seconds = 0.0;
    double budget_seconds = 0.0;
    std::string detail;
};

/// Runs the full corpus: every criterion at its pinned tolerance and time
/// budget, deterministically derived from `seed`.
std::vector<CriterionResult> run_all(std::uint64_t seed = 0);

bool all_passed(const std::vector<CriterionResult>& results);

/// One line per criterion plus a summary row.
void print_table(std::ostream& out, const std::vector<CriterionResult>& results);

}  // namespace projcoh::selftest
