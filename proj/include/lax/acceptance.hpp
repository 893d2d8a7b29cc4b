#pragma once

#include <functional>
#include <string>
#include <vector>

namespace lax {

struct CriterionResult {
    int id = 0;
    std::string title;
    bool ok = false;
    std::string detail;   // first failures, or a summary of what ran
    double seconds = 0;
    double budget = 0;    // seconds; 0 means unbounded
};

// Runs the fourteen acceptance criteria in order. `on_result` is called as
// each one finishes so long runs can report progress.
std::vector<CriterionResult> run_acceptance_suite(
    const std::function<void(const CriterionResult&)>& on_result = {});

// "PASS  3  RTT suite (1.52 s) - detail"
std::string format_line(const CriterionResult& r);
// Fixed-width summary table, one row per criterion.
std::string summary_table(const std::vector<CriterionResult>& results);

}  // namespace lax
