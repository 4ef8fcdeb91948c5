#include "kgrip/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace kgrip {

namespace {

constexpr double kTieBand = 1e-12;

std::vector<NodePair> resolve_placeable(const Graph& g, int k,
                                        std::optional<std::vector<NodePair>> placeable) {
    std::vector<NodePair> pairs = placeable ? std::move(*placeable) : complement_links(g);
    std::sort(pairs.begin(), pairs.end());
    if (std::adjacent_find(pairs.begin(), pairs.end()) != pairs.end())
        throw std::invalid_argument("duplicate pair in placeable set");
    for (const auto& p : pairs) {
        if (p.u < 0 || p.v >= g.node_count())
            throw std::invalid_argument("placeable pair out of range");
        if (g.has_link(p.u, p.v))
            throw InfeasibleError("placeable pair (" + std::to_string(p.u) + "," +
                                  std::to_string(p.v) + ") already present");
    }
    if (k < 0)
        throw std::invalid_argument("k must be non-negative");
    if (static_cast<std::size_t>(k) > pairs.size())
        throw InfeasibleError("k=" + std::to_string(k) + " exceeds placeable set of size " +
                              std::to_string(pairs.size()));
    return pairs;
}

// Largest gain wins; candidates within the relative tie band of the maximum
// resolve to the smallest index (candidates arrive sorted).
std::size_t argmax_with_ties(const std::vector<double>& gains) {
    double best = -std::numeric_limits<double>::infinity();
    for (double v : gains)
        best = std::max(best, v);
    double cutoff = best - kTieBand * std::abs(best);
    for (std::size_t idx = 0; idx < gains.size(); ++idx)
        if (gains[idx] >= cutoff)
            return idx;
    return 0;
}

std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t k, std::uint64_t cap) {
    if (k > n)
        return 0;
    k = std::min(k, n - k);
    std::uint64_t result = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        if (result > cap)
            return cap + 1;
        result = result * (n - k + i) / i;
    }
    return result;
}

} // namespace

std::string to_string(GreedyMode mode) {
    return mode == GreedyMode::naive ? "naive" : "incremental";
}

GreedyTrace greedy(const Graph& g, int k, std::optional<std::vector<NodePair>> placeable,
                   GreedyMode mode) {
    if (!is_connected(g))
        throw InfeasibleError("greedy needs a connected graph");
    std::vector<NodePair> candidates = resolve_placeable(g, k, std::move(placeable));

    GreedyTrace trace;
    trace.mode = mode;

    Graph current = g;
    ResistanceState state = resistance_state(g);
    trace.initial_r = state.r_total;

    double r_current = trace.initial_r;
    std::vector<double> gains;
    for (int step = 0; step < k; ++step) {
        gains.assign(candidates.size(), 0.0);
        if (mode == GreedyMode::incremental) {
            for (std::size_t c = 0; c < candidates.size(); ++c)
                gains[c] = link_gain(state, {candidates[c].u, candidates[c].v, 1.0});
        } else {
            for (std::size_t c = 0; c < candidates.size(); ++c) {
                Graph with = add_links(current, std::span(&candidates[c], 1));
                gains[c] = r_current - resistance_state(with).r_total;
            }
        }

        std::size_t pick = argmax_with_ties(gains);
        NodePair chosen = candidates[pick];
        candidates.erase(candidates.begin() + static_cast<std::ptrdiff_t>(pick));

        if (mode == GreedyMode::incremental) {
            state = apply_link(state, {chosen.u, chosen.v, 1.0});
            r_current = state.r_total;
        } else {
            current = add_links(current, std::span(&chosen, 1));
            r_current = resistance_state(current).r_total;
        }
        trace.steps.push_back({chosen, gains[pick], r_current});
    }
    return trace;
}

OptimalResult brute_force_optimal(const Graph& g, int k,
                                  std::optional<std::vector<NodePair>> placeable,
                                  std::uint64_t subset_budget) {
    if (!is_connected(g))
        throw InfeasibleError("brute force needs a connected graph");
    std::vector<NodePair> candidates = resolve_placeable(g, k, std::move(placeable));

    std::uint64_t subsets = binomial_capped(candidates.size(), static_cast<std::uint64_t>(k),
                                            subset_budget);
    if (subsets > subset_budget)
        throw BudgetError("subset count C(" + std::to_string(candidates.size()) + "," +
                          std::to_string(k) + ") exceeds budget of " + std::to_string(subset_budget));

    ResistanceState base = resistance_state(g);

    OptimalResult result;
    result.r_opt = base.r_total;
    if (k == 0) {
        result.n_evaluated = 1;
        return result;
    }

    // Lexicographic DFS over k-subsets, sharing prefix states. The first
    // subset not beaten by a strictly better one (beyond the tie band) wins,
    // which is the lexicographically smallest minimizer.
    std::vector<int> chosen;
    chosen.reserve(static_cast<std::size_t>(k));
    double best_r = std::numeric_limits<double>::infinity();
    std::vector<int> best_chosen;
    std::uint64_t evaluated = 0;

    auto dfs = [&](auto&& self, const ResistanceState& state, std::size_t start) -> void {
        for (std::size_t c = start; c < candidates.size(); ++c) {
            if (candidates.size() - c < static_cast<std::size_t>(k) - chosen.size())
                break;
            ResistanceState next = apply_link(state, {candidates[c].u, candidates[c].v, 1.0});
            chosen.push_back(static_cast<int>(c));
            if (chosen.size() == static_cast<std::size_t>(k)) {
                ++evaluated;
                if (next.r_total < best_r * (1.0 - kTieBand)) {
                    best_r = next.r_total;
                    best_chosen = chosen;
                }
            } else {
                self(self, next, c + 1);
            }
            chosen.pop_back();
        }
    };
    dfs(dfs, base, 0);

    result.n_evaluated = evaluated;
    result.best_set.reserve(best_chosen.size());
    for (int idx : best_chosen)
        result.best_set.push_back(candidates[static_cast<std::size_t>(idx)]);

    // Final value from a fresh solve so identical sets compare exactly.
    result.r_opt = resistance_state(add_links(g, result.best_set)).r_total;
    return result;
}

EfficiencyDetail efficiency_detail(const Graph& g, int k, std::uint64_t subset_budget) {
    EfficiencyDetail detail;
    detail.trace = greedy(g, k);
    detail.optimal = brute_force_optimal(g, k, {}, subset_budget);

    std::vector<NodePair> greedy_set;
    greedy_set.reserve(detail.trace.steps.size());
    for (const auto& s : detail.trace.steps)
        greedy_set.push_back(s.pair);
    detail.r_greedy = resistance_state(add_links(g, greedy_set)).r_total;

    if (k == 0) {
        detail.eta = 1.0;
        return detail;
    }
    double eta = detail.optimal.r_opt / detail.r_greedy;
    if (eta > 1.0 + 1e-9)
        throw NumericalError("efficiency exceeded 1: eta=" + std::to_string(eta));
    detail.eta = std::min(eta, 1.0);
    return detail;
}

double efficiency(const Graph& g, int k, std::uint64_t subset_budget) {
    return efficiency_detail(g, k, subset_budget).eta;
}

nlohmann::json solver_report_json(const Graph& g, const GreedyTrace& trace,
                                  const std::optional<OptimalResult>& optimal,
                                  std::optional<double> eta) {
    nlohmann::json steps = nlohmann::json::array();
    for (const auto& s : trace.steps)
        steps.push_back({{"u", s.pair.u},
                         {"v", s.pair.v},
                         {"delta_R", s.delta_r},
                         {"R_after", s.r_after}});
    nlohmann::json doc{{"graph", encode_graph6(g)},
                       {"k", trace.steps.size()},
                       {"mode", to_string(trace.mode)},
                       {"initial_R", trace.initial_r},
                       {"steps", std::move(steps)}};
    if (optimal) {
        doc["R_opt"] = optimal->r_opt;
        nlohmann::json set = nlohmann::json::array();
        for (const auto& p : optimal->best_set)
            set.push_back({p.u, p.v});
        doc["best_set"] = std::move(set);
        doc["n_evaluated"] = optimal->n_evaluated;
    }
    if (eta)
        doc["eta"] = *eta;
    return doc;
}

} // namespace kgrip
