#include "kgrip/sweep.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "kgrip/parallel.hpp"
#include "kgrip/resistance.hpp"
#include "kgrip/util.hpp"

namespace kgrip {

namespace {

constexpr double kEtaTieBand = 1e-12;

struct Evaluation {
    bool skipped = false;
    SweepRecord record;
};

Evaluation evaluate_graph(const Graph& g, int n, int k, std::uint64_t subset_budget) {
    Evaluation ev;
    if (static_cast<int>(complement_links(g).size()) < k) {
        ev.skipped = true;
        return ev;
    }

    EfficiencyDetail detail = efficiency_detail(g, k, subset_budget);
    ev.record = {n, k, encode_graph6(g), detail.trace.initial_r,
                 detail.r_greedy, detail.optimal.r_opt, detail.eta};
    return ev;
}

SweepResult collect(int n, int k, const std::vector<Graph>& catalog, int jobs,
                    std::uint64_t subset_budget, SweepSummary summary) {
    std::vector<Evaluation> evaluations(catalog.size());
    parallel_for(catalog.size(), jobs, [&](std::size_t i) {
        evaluations[i] = evaluate_graph(catalog[i], n, k, subset_budget);
    });

    SweepResult result;
    result.summary = std::move(summary);
    result.summary.n = n;
    result.summary.k = k;

    bool have_min = false;
    for (const auto& ev : evaluations) {
        if (ev.skipped) {
            ++result.summary.n_skipped;
            continue;
        }
        ++result.summary.n_graphs;
        result.records.push_back(ev.record);
        const SweepRecord& rec = ev.record;
        if (!have_min || rec.eta < result.summary.eta_min * (1.0 - kEtaTieBand) ||
            (std::abs(rec.eta - result.summary.eta_min) <=
                 kEtaTieBand * result.summary.eta_min &&
             rec.graph_id < result.summary.argmin_graph)) {
            have_min = true;
            result.summary.eta_min = rec.eta;
            result.summary.argmin_graph = rec.graph_id;
        }
    }

    std::sort(result.records.begin(), result.records.end(),
              [](const SweepRecord& a, const SweepRecord& b) {
                  return a.eta != b.eta ? a.eta < b.eta : a.graph_id < b.graph_id;
              });
    return result;
}

} // namespace

std::vector<Graph> load_graph6_catalog(std::istream& in) {
    std::vector<Graph> catalog;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#')
            continue;
        try {
            catalog.push_back(parse_graph6(line));
        } catch (const ParseError& e) {
            throw ParseError("catalog line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    return catalog;
}

std::vector<Graph> load_graph6_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open catalog file: " + path);
    return load_graph6_catalog(in);
}

SweepResult sweep(int n, int k, const std::vector<Graph>& catalog, int jobs,
                  std::uint64_t subset_budget) {
    for (const auto& g : catalog)
        if (g.node_count() != n)
            throw InfeasibleError("catalog graph has " + std::to_string(g.node_count()) +
                                  " nodes, expected " + std::to_string(n));
    SweepSummary summary;
    summary.mode = "exhaustive";
    return collect(n, k, catalog, jobs, subset_budget, std::move(summary));
}

SweepResult sweep_builtin(int n, int k, int jobs, std::uint64_t subset_budget) {
    return sweep(n, k, enumerate_connected_graphs(n), jobs, subset_budget);
}

SweepResult sample_sweep(int n, int k, std::uint64_t count, std::uint64_t seed, int jobs,
                         std::uint64_t subset_budget) {
    if (n < 2)
        throw InfeasibleError("sample sweep needs n >= 2");
    std::mt19937_64 rng(seed);
    std::vector<Graph> catalog;
    catalog.reserve(count);
    while (catalog.size() < count) {
        Graph g = random_connected_graph(n, rng);
        if (static_cast<int>(complement_links(g).size()) < k)
            continue;
        catalog.push_back(std::move(g));
    }

    SweepSummary summary;
    summary.mode = "sampled";
    summary.seed = seed;
    summary.sample_count = count;
    return collect(n, k, catalog, jobs, subset_budget, std::move(summary));
}

nlohmann::json sweep_json(const SweepResult& result) {
    const SweepSummary& s = result.summary;
    nlohmann::json summary{{"n", s.n},
                           {"k", s.k},
                           {"n_graphs", s.n_graphs},
                           {"n_skipped", s.n_skipped},
                           {"eta_min", s.eta_min},
                           {"argmin_graph", s.argmin_graph},
                           {"mode", s.mode}};
    if (s.seed)
        summary["seed"] = *s.seed;
    if (s.sample_count)
        summary["sample_count"] = *s.sample_count;

    nlohmann::json records = nlohmann::json::array();
    for (const auto& rec : result.records)
        records.push_back({{"n", rec.n},
                           {"k", rec.k},
                           {"graph6", rec.graph_id},
                           {"R_initial", rec.r_initial},
                           {"R_greedy", rec.r_greedy},
                           {"R_opt", rec.r_opt},
                           {"eta", rec.eta}});
    return nlohmann::json{{"summary", std::move(summary)}, {"records", std::move(records)}};
}

void write_report(const SweepResult& result, std::ostream& out, ReportFormat format) {
    if (format == ReportFormat::json) {
        out << sweep_json(result).dump(2) << '\n';
        return;
    }
    out << "n,k,graph6,R_initial,R_greedy,R_opt,eta\n";
    for (const auto& rec : result.records) {
        out << rec.n << ',' << rec.k << ',' << rec.graph_id << ','
            << format_double(rec.r_initial) << ',' << format_double(rec.r_greedy) << ','
            << format_double(rec.r_opt) << ',' << format_double(rec.eta) << '\n';
    }
    if (result.summary.n_graphs > 0)
        out << "# eta_min=" << format_double(result.summary.eta_min)
            << " graph=" << result.summary.argmin_graph << '\n';
}

} // namespace kgrip
