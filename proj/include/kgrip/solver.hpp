// Greedy link addition, brute-force optimum, and the efficiency ratio.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "kgrip/graph.hpp"
#include "kgrip/resistance.hpp"

namespace kgrip {

enum class GreedyMode { naive, incremental };

std::string to_string(GreedyMode mode);

struct GreedyStep {
    NodePair pair;
    double delta_r = 0.0;
    double r_after = 0.0;
};

struct GreedyTrace {
    double initial_r = 0.0;
    std::vector<GreedyStep> steps;
    GreedyMode mode = GreedyMode::incremental;

    double final_r() const { return steps.empty() ? initial_r : steps.back().r_after; }
};

struct OptimalResult {
    std::vector<NodePair> best_set;
    double r_opt = 0.0;
    std::uint64_t n_evaluated = 0;
};

inline constexpr std::uint64_t kDefaultSubsetBudget = 10'000'000;

// Ties within 1e-12 relative gain resolve to the lexicographically smallest
// pair, so naive and incremental runs select identical links.
GreedyTrace greedy(const Graph& g, int k,
                   std::optional<std::vector<NodePair>> placeable = {},
                   GreedyMode mode = GreedyMode::incremental);

// Exact minimum over all k-subsets of the placeable set, enumerated in
// lexicographic order. Refuses if the subset count exceeds the budget.
OptimalResult brute_force_optimal(const Graph& g, int k,
                                  std::optional<std::vector<NodePair>> placeable = {},
                                  std::uint64_t subset_budget = kDefaultSubsetBudget);

// eta = R_opt / R_greedy in (0, 1]; both endpoints re-evaluated from scratch
// on the augmented graphs so equal link sets give exactly 1.
struct EfficiencyDetail {
    GreedyTrace trace;
    OptimalResult optimal;
    double r_greedy = 0.0;
    double eta = 1.0;
};

EfficiencyDetail efficiency_detail(const Graph& g, int k,
                                   std::uint64_t subset_budget = kDefaultSubsetBudget);
double efficiency(const Graph& g, int k, std::uint64_t subset_budget = kDefaultSubsetBudget);

nlohmann::json solver_report_json(const Graph& g, const GreedyTrace& trace,
                                  const std::optional<OptimalResult>& optimal = {},
                                  std::optional<double> eta = {});

} // namespace kgrip
