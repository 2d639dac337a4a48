#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace milnor {

enum class CaseStatus { pass, fail, skip };

struct CriterionResult {
    int id = 0;
    std::string title;
    CaseStatus status = CaseStatus::skip;
    std::string detail;
    double seconds = 0.0;
    double time_limit = 0.0;  ///< 0 means no limit
};

struct SuiteConfig {
    std::vector<std::pair<int, int>> sizes{{1, 4}, {2, 3}, {2, 4}, {2, 5}, {3, 3}};
    int jacobian_forms = 20;
    int ci_tuples = 10;
    int distinct_pairs = 10;
    int non_st_forms = 20;
    int containment_forms = 30;
    int well_defined_pairs = 20;
    std::uint64_t seed = 0;
    /// Wall-clock budget for the whole battery in seconds; 0 disables it.
    double budget = 0.0;
    /// Per-criterion time limits in seconds, indexed by criterion id; 0 disables.
    std::vector<double> time_limits{0, 1, 120, 300, 300, 0, 0, 600, 0, 0};
};

const char* status_name(CaseStatus status);

/// Runs criteria 1..9 in order; on_result is called as each one finishes.
std::vector<CriterionResult> run_suite(const SuiteConfig& config,
                                       const std::function<void(const CriterionResult&)>& on_result = {});

/// Seed for case `index` of a criterion at size (n, d).
std::uint64_t case_seed(std::uint64_t base, int criterion, int n, int d, int index);

}  // namespace milnor
