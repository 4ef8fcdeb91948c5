// Efficiency sweeps over graph catalogs: exhaustive for built-in or ingested
// catalogs, seeded sampling for larger n, with CSV/JSON reports.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "kgrip/graph.hpp"
#include "kgrip/solver.hpp"

namespace kgrip {

struct SweepRecord {
    int n = 0;
    int k = 0;
    std::string graph_id; // graph6
    double r_initial = 0.0;
    double r_greedy = 0.0;
    double r_opt = 0.0;
    double eta = 1.0;
};

struct SweepSummary {
    int n = 0;
    int k = 0;
    std::uint64_t n_graphs = 0;  // evaluated
    std::uint64_t n_skipped = 0; // fewer than k absent links
    double eta_min = 1.0;
    std::string argmin_graph;
    std::string mode; // "exhaustive" or "sampled"
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> sample_count;
};

struct SweepResult {
    SweepSummary summary;
    std::vector<SweepRecord> records; // sorted by (eta, graph6)
};

// Newline-delimited graph6 lines; parse failures report the line number.
std::vector<Graph> load_graph6_catalog(std::istream& in);
std::vector<Graph> load_graph6_file(const std::string& path);

// Efficiency of every catalog graph with at least k absent links. Minimum
// ties break to the lexicographically smallest graph6.
SweepResult sweep(int n, int k, const std::vector<Graph>& catalog, int jobs = 1,
                  std::uint64_t subset_budget = kDefaultSubsetBudget);

// Built-in isomorph-free catalog, n <= 7.
SweepResult sweep_builtin(int n, int k, int jobs = 1,
                          std::uint64_t subset_budget = kDefaultSubsetBudget);

// Exactly `count` seeded uniform connected graphs (rejection-sampled, redrawn
// while fewer than k links are absent). Identical (seed, count, n, k) reruns
// produce identical records.
SweepResult sample_sweep(int n, int k, std::uint64_t count, std::uint64_t seed, int jobs = 1,
                         std::uint64_t subset_budget = kDefaultSubsetBudget);

enum class ReportFormat { csv, json };

void write_report(const SweepResult& result, std::ostream& out, ReportFormat format);
nlohmann::json sweep_json(const SweepResult& result);

} // namespace kgrip
