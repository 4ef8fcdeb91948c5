// kgrip: command-line front end for the k-GRIP toolkit.
//
// Exit codes: 0 success, 1 usage error, 2 input parse error, 3 infeasible
// request, 4 numerical failure, 5 budget exceeded.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "kgrip/family.hpp"
#include "kgrip/graph.hpp"
#include "kgrip/parallel.hpp"
#include "kgrip/resistance.hpp"
#include "kgrip/solver.hpp"
#include "kgrip/submodularity.hpp"
#include "kgrip/sweep.hpp"
#include "kgrip/util.hpp"

namespace {

using nlohmann::json;

struct GlobalOpts {
    std::string output;
    std::string format = "csv";
    int jobs = 0; // 0 = resolve from KGRIP_JOBS / hardware
    std::uint64_t subset_budget = kgrip::kDefaultSubsetBudget;
    int triple_cap = kgrip::kDefaultGroundCap;
    bool force_g6 = false;
    bool force_edgelist = false;

    int resolve_jobs() const {
        if (jobs > 0)
            return jobs;
        if (const char* env = std::getenv("KGRIP_JOBS")) {
            int parsed = std::atoi(env);
            if (parsed > 0)
                return parsed;
        }
        return kgrip::default_jobs();
    }
};

// graph6 token or edge-list file path, auto-detected by content.
kgrip::Graph load_graph_argument(const std::string& arg, const GlobalOpts& opts) {
    if (opts.force_g6)
        return kgrip::parse_graph6(arg);
    if (!opts.force_edgelist) {
        try {
            return kgrip::parse_graph6(arg);
        } catch (const kgrip::ParseError&) {
            // fall through to the file path route
        }
    }
    std::ifstream in(arg);
    if (!in)
        throw kgrip::ParseError("argument is neither valid graph6 nor a readable file: " + arg);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return kgrip::parse_edge_list(buffer.str());
}

void emit_json(const json& doc, const GlobalOpts& opts) {
    if (opts.output.empty()) {
        std::cout << doc.dump(2) << '\n';
        return;
    }
    std::ofstream out(opts.output);
    if (!out)
        throw kgrip::ParseError("cannot open output file: " + opts.output);
    out << doc.dump(2) << '\n';
}

void emit_text(const std::string& text, const json& config, const GlobalOpts& opts) {
    if (opts.output.empty()) {
        for (const auto& [key, value] : config.items())
            std::cout << "# " << key << "=" << (value.is_string() ? value.get<std::string>() : value.dump())
                      << '\n';
        std::cout << text;
        return;
    }
    std::ofstream out(opts.output);
    if (!out)
        throw kgrip::ParseError("cannot open output file: " + opts.output);
    out << text;
    for (const auto& [key, value] : config.items())
        std::cout << "# " << key << "=" << (value.is_string() ? value.get<std::string>() : value.dump())
                  << '\n';
    std::cout << "# written to " << opts.output << '\n';
}

void add_common(CLI::App* sub, GlobalOpts& opts) {
    sub->add_option("-o,--output", opts.output, "Write the report to this file instead of stdout");
    sub->add_option("--jobs", opts.jobs, "Worker count (default: KGRIP_JOBS or hardware)");
    sub->add_option("--subset-budget", opts.subset_budget,
                    "Maximum number of k-subsets the brute force may enumerate");
    sub->add_option("--triple-cap", opts.triple_cap,
                    "Maximum ground-set size for exhaustive gamma/curvature");
    sub->add_flag("--g6", opts.force_g6, "Treat the graph argument as graph6");
    sub->add_flag("--edgelist", opts.force_edgelist, "Treat the graph argument as an edge-list file");
}

json base_config(const std::string& subcommand, const GlobalOpts& opts) {
    return json{{"subcommand", subcommand},
                {"jobs", opts.resolve_jobs()},
                {"subset_budget", opts.subset_budget},
                {"output", opts.output.empty() ? "-" : opts.output}};
}

int run(int argc, char** argv) {
    CLI::App app{"k-GRIP toolkit: effective graph resistance minimization by link addition"};
    app.require_subcommand(1);
    GlobalOpts opts;

    std::string graph_arg;
    int k = 1;
    std::string mode_name = "incremental";
    int sweep_n = 5;
    std::string catalog_path;
    std::uint64_t sample_count = 10;
    std::uint64_t sample_seed = 1;
    double bound_gamma = 1.0;
    double bound_alpha = 1.0;
    int max_nodes = 5;
    int family_n = 6;
    bool family_verify = false;
    int curve_from = 4;
    int curve_to = 200;

    auto* cmd_resistance = app.add_subcommand("resistance", "Kirchhoff index and r_G of one graph");
    cmd_resistance->add_option("graph", graph_arg, "graph6 string or edge-list file")->required();
    add_common(cmd_resistance, opts);

    auto* cmd_greedy = app.add_subcommand("greedy", "Greedy k-link addition trace");
    cmd_greedy->add_option("graph", graph_arg)->required();
    cmd_greedy->add_option("-k", k, "Number of links to add")->required();
    cmd_greedy->add_option("--mode", mode_name, "naive | incremental")
        ->check(CLI::IsMember({"naive", "incremental"}));
    add_common(cmd_greedy, opts);

    auto* cmd_optimal = app.add_subcommand("optimal", "Brute-force optimal k-subset");
    cmd_optimal->add_option("graph", graph_arg)->required();
    cmd_optimal->add_option("-k", k)->required();
    add_common(cmd_optimal, opts);

    auto* cmd_eta = app.add_subcommand("eta", "Efficiency of greedy vs brute force");
    cmd_eta->add_option("graph", graph_arg)->required();
    cmd_eta->add_option("-k", k)->required();
    add_common(cmd_eta, opts);

    auto* cmd_sweep = app.add_subcommand("sweep", "Exhaustive efficiency sweep over a catalog");
    cmd_sweep->add_option("--n", sweep_n, "Node count")->required();
    cmd_sweep->add_option("-k", k)->required();
    cmd_sweep->add_option("--catalog", catalog_path, "graph6 catalog file (default: built-in, n <= 7)");
    cmd_sweep->add_option("--format", opts.format)->check(CLI::IsMember({"csv", "json"}));
    add_common(cmd_sweep, opts);

    auto* cmd_sample = app.add_subcommand("sample-sweep", "Seeded random-graph efficiency sweep");
    cmd_sample->add_option("--n", sweep_n)->required();
    cmd_sample->add_option("-k", k)->required();
    cmd_sample->add_option("--count", sample_count, "Number of sampled graphs")->required();
    cmd_sample->add_option("--seed", sample_seed, "RNG seed")->required();
    cmd_sample->add_option("--format", opts.format)->check(CLI::IsMember({"csv", "json"}));
    add_common(cmd_sample, opts);

    auto* cmd_gamma = app.add_subcommand("gamma", "Exhaustive submodularity ratio");
    cmd_gamma->add_option("graph", graph_arg)->required();
    add_common(cmd_gamma, opts);

    auto* cmd_curv = app.add_subcommand("curvature", "Exhaustive curvature of r_G");
    cmd_curv->add_option("graph", graph_arg)->required();
    add_common(cmd_curv, opts);

    auto* cmd_bounds = app.add_subcommand("bounds", "Greedy guarantee factors from gamma and alpha");
    cmd_bounds->add_option("--gamma", bound_gamma)->required();
    cmd_bounds->add_option("--alpha", bound_alpha)->required();
    add_common(cmd_bounds, opts);

    auto* cmd_witness = app.add_subcommand("witness", "Smallest non-submodularity witness");
    cmd_witness->add_option("--max-nodes", max_nodes, "Scan connected graphs up to this size");
    add_common(cmd_witness, opts);

    auto* cmd_family = app.add_subcommand("family", "Counterexample family graph and verification");
    cmd_family->add_option("--n", family_n, "Family parameter N (even, >= 4)")->required();
    cmd_family->add_flag("--verify", family_verify, "Check all closed forms numerically");
    add_common(cmd_family, opts);

    auto* cmd_curve = app.add_subcommand("gamma-curve", "Gamma upper bound vs its 6/N asymptote");
    cmd_curve->add_option("--n-from", curve_from)->required();
    cmd_curve->add_option("--n-to", curve_to)->required();
    add_common(cmd_curve, opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    if (cmd_resistance->parsed()) {
        kgrip::Graph g = load_graph_argument(graph_arg, opts);
        kgrip::ResistanceState state = kgrip::resistance_state(g);
        json doc{{"config", base_config("resistance", opts)},
                 {"n", g.node_count()},
                 {"links", g.link_count()},
                 {"R_G", state.r_total},
                 {"R_G_eigen", kgrip::eigen_kirchhoff(g)}};
        if (g.node_count() >= 3)
            doc["r_G"] = kgrip::normalized_resistance(g.node_count(), state.r_total);
        if (g.node_count() <= 62)
            doc["graph"] = kgrip::encode_graph6(g);
        emit_json(doc, opts);
    } else if (cmd_greedy->parsed()) {
        kgrip::Graph g = load_graph_argument(graph_arg, opts);
        auto mode = mode_name == "naive" ? kgrip::GreedyMode::naive : kgrip::GreedyMode::incremental;
        kgrip::GreedyTrace trace = kgrip::greedy(g, k, {}, mode);
        json doc = kgrip::solver_report_json(g, trace);
        doc["config"] = base_config("greedy", opts);
        doc["config"]["mode"] = mode_name;
        doc["config"]["k"] = k;
        emit_json(doc, opts);
    } else if (cmd_optimal->parsed()) {
        kgrip::Graph g = load_graph_argument(graph_arg, opts);
        kgrip::OptimalResult opt = kgrip::brute_force_optimal(g, k, {}, opts.subset_budget);
        kgrip::GreedyTrace empty_trace;
        empty_trace.initial_r = kgrip::resistance_state(g).r_total;
        json doc = kgrip::solver_report_json(g, empty_trace, opt);
        doc["k"] = k;
        doc.erase("steps");
        doc.erase("mode");
        doc["config"] = base_config("optimal", opts);
        doc["config"]["k"] = k;
        emit_json(doc, opts);
    } else if (cmd_eta->parsed()) {
        kgrip::Graph g = load_graph_argument(graph_arg, opts);
        kgrip::EfficiencyDetail detail = kgrip::efficiency_detail(g, k, opts.subset_budget);
        json doc = kgrip::solver_report_json(g, detail.trace, detail.optimal, detail.eta);
        doc["R_greedy"] = detail.r_greedy;
        doc["config"] = base_config("eta", opts);
        doc["config"]["k"] = k;
        emit_json(doc, opts);
    } else if (cmd_sweep->parsed()) {
        kgrip::SweepResult result =
            catalog_path.empty()
                ? kgrip::sweep_builtin(sweep_n, k, opts.resolve_jobs(), opts.subset_budget)
                : kgrip::sweep(sweep_n, k, kgrip::load_graph6_file(catalog_path),
                               opts.resolve_jobs(), opts.subset_budget);
        json config = base_config("sweep", opts);
        config["n"] = sweep_n;
        config["k"] = k;
        config["catalog"] = catalog_path.empty() ? "builtin" : catalog_path;
        config["format"] = opts.format;
        if (opts.format == "json") {
            json doc = kgrip::sweep_json(result);
            doc["config"] = std::move(config);
            emit_json(doc, opts);
        } else {
            std::ostringstream text;
            kgrip::write_report(result, text, kgrip::ReportFormat::csv);
            emit_text(text.str(), config, opts);
        }
    } else if (cmd_sample->parsed()) {
        kgrip::SweepResult result = kgrip::sample_sweep(sweep_n, k, sample_count, sample_seed,
                                                        opts.resolve_jobs(), opts.subset_budget);
        json config = base_config("sample-sweep", opts);
        config["n"] = sweep_n;
        config["k"] = k;
        config["count"] = sample_count;
        config["seed"] = sample_seed;
        config["format"] = opts.format;
        if (opts.format == "json") {
            json doc = kgrip::sweep_json(result);
            doc["config"] = std::move(config);
            emit_json(doc, opts);
        } else {
            std::ostringstream text;
            kgrip::write_report(result, text, kgrip::ReportFormat::csv);
            emit_text(text.str(), config, opts);
        }
    } else if (cmd_gamma->parsed()) {
        kgrip::Graph g = load_graph_argument(graph_arg, opts);
        kgrip::GammaResult res =
            kgrip::submodularity_ratio(g, {}, opts.triple_cap, opts.resolve_jobs());
        json doc{{"config", base_config("gamma", opts)},
                 {"graph", kgrip::encode_graph6(g)},
                 {"gamma", res.gamma},
                 {"min_ratio", res.min_ratio},
                 {"n_triples", res.n_triples},
                 {"n_used", res.n_used}};
        doc["config"]["triple_cap"] = opts.triple_cap;
        emit_json(doc, opts);
    } else if (cmd_curv->parsed()) {
        kgrip::Graph g = load_graph_argument(graph_arg, opts);
        kgrip::CurvatureResult res = kgrip::curvature(g, {}, opts.triple_cap, opts.resolve_jobs());
        json doc{{"config", base_config("curvature", opts)},
                 {"graph", kgrip::encode_graph6(g)},
                 {"alpha", res.alpha},
                 {"n_evaluated", res.n_evaluated}};
        doc["config"]["triple_cap"] = opts.triple_cap;
        emit_json(doc, opts);
    } else if (cmd_bounds->parsed()) {
        json doc{{"config", base_config("bounds", opts)},
                 {"gamma", bound_gamma},
                 {"alpha", bound_alpha},
                 {"bian", kgrip::guarantee_factor(bound_gamma, bound_alpha,
                                                  kgrip::GuaranteeBound::bian)},
                 {"liu", kgrip::guarantee_factor(bound_gamma, bound_alpha,
                                                 kgrip::GuaranteeBound::liu)}};
        emit_json(doc, opts);
    } else if (cmd_witness->parsed()) {
        std::optional<kgrip::Witness> w = kgrip::find_witness(max_nodes, opts.resolve_jobs());
        json doc;
        if (w) {
            doc = kgrip::witness_json(*w);
        } else {
            doc["witness"] = nullptr;
            doc["note"] = "no non-submodularity witness up to " + std::to_string(max_nodes) + " nodes";
        }
        doc["config"] = base_config("witness", opts);
        doc["config"]["max_nodes"] = max_nodes;
        emit_json(doc, opts);
    } else if (cmd_family->parsed()) {
        json config = base_config("family", opts);
        config["n"] = family_n;
        config["verify"] = family_verify;
        if (family_verify) {
            kgrip::FamilyReport report = kgrip::verify_family(family_n);
            std::ostringstream text;
            kgrip::write_family_csv(report, text);
            emit_text(text.str(), config, opts);
            if (!report.all_passed())
                throw kgrip::NumericalError("family verification failed; see report rows");
        } else {
            kgrip::FamilyGraph fam = kgrip::build_family_graph(family_n);
            json doc{{"config", std::move(config)},
                     {"param_n", fam.param_n},
                     {"nodes", fam.graph.node_count()},
                     {"links", fam.graph.link_count()},
                     {"v", {fam.v_pair.u, fam.v_pair.v}},
                     {"r_set",
                      {{fam.r_pairs[0].u, fam.r_pairs[0].v}, {fam.r_pairs[1].u, fam.r_pairs[1].v}}}};
            if (fam.graph.node_count() <= 62)
                doc["graph"] = kgrip::encode_graph6(fam.graph);
            else
                doc["edge_list"] = kgrip::encode_edge_list(fam.graph);
            emit_json(doc, opts);
        }
    } else if (cmd_curve->parsed()) {
        json config = base_config("gamma-curve", opts);
        config["n_from"] = curve_from;
        config["n_to"] = curve_to;
        std::ostringstream text;
        kgrip::write_gamma_curve_csv(curve_from, curve_to, text);
        emit_text(text.str(), config, opts);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const kgrip::ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return 2;
    } catch (const kgrip::InfeasibleError& e) {
        std::cerr << "infeasible: " << e.what() << '\n';
        return 3;
    } catch (const kgrip::BudgetError& e) {
        std::cerr << "budget exceeded: " << e.what() << '\n';
        return 5;
    } catch (const kgrip::NumericalError& e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return 4;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid argument: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    }
}
