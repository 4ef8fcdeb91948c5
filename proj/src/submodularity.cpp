#include "kgrip/submodularity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "kgrip/parallel.hpp"
#include "kgrip/resistance.hpp"

namespace kgrip {

namespace {

constexpr double kGainTolRel = 1e-12;

std::vector<NodePair> resolve_ground(const Graph& g,
                                     std::optional<std::vector<NodePair>> ground, int cap) {
    std::vector<NodePair> pairs = ground ? std::move(*ground) : complement_links(g);
    std::sort(pairs.begin(), pairs.end());
    if (std::adjacent_find(pairs.begin(), pairs.end()) != pairs.end())
        throw std::invalid_argument("duplicate pair in ground set");
    for (const auto& p : pairs)
        if (p.u < 0 || p.v >= g.node_count() || g.has_link(p.u, p.v))
            throw std::invalid_argument("ground pair absent-link requirement violated");
    if (static_cast<int>(pairs.size()) > cap)
        throw BudgetError("ground set of " + std::to_string(pairs.size()) +
                          " links projects to " +
                          std::to_string(static_cast<double>(triple_count(static_cast<int>(pairs.size())))) +
                          " triples, beyond the cap of " + std::to_string(cap));
    return pairs;
}

// Kirchhoff index of g with every subset of the ground links added, indexed
// by subset bitmask. One apply_link per subset.
std::vector<double> subset_kirchhoff_cache(const Graph& g, const std::vector<NodePair>& ground) {
    const std::size_t bits = ground.size();
    std::vector<double> cache(std::size_t{1} << bits, 0.0);
    ResistanceState base = resistance_state(g);

    auto fill = [&](auto&& self, const ResistanceState& state, std::uint32_t mask,
                    std::size_t next) -> void {
        cache[mask] = state.r_total;
        for (std::size_t idx = next; idx < bits; ++idx) {
            ResistanceState grown =
                apply_link(state, {ground[idx].u, ground[idx].v, 1.0});
            self(self, grown, mask | (1u << idx), idx + 1);
        }
    };
    fill(fill, base, 0, 0);
    return cache;
}

} // namespace

std::uint64_t triple_count(int ground_size) {
    if (ground_size <= 0)
        return 0;
    std::uint64_t count = static_cast<std::uint64_t>(ground_size);
    for (int i = 1; i < ground_size; ++i)
        count *= 3;
    return count;
}

std::vector<Triple> enumerate_triples(int ground_size, int cap) {
    if (ground_size < 0)
        throw std::invalid_argument("negative ground size");
    if (ground_size > cap)
        throw BudgetError("ground set of " + std::to_string(ground_size) + " links projects to " +
                          std::to_string(static_cast<double>(ground_size) *
                                         std::pow(3.0, ground_size - 1)) +
                          " triples, beyond the cap of " + std::to_string(cap));
    std::vector<Triple> out;
    out.reserve(triple_count(ground_size));
    const std::uint32_t full = ground_size >= 32 ? UINT32_MAX : (1u << ground_size) - 1;
    for (int v = 0; v < ground_size; ++v) {
        const std::uint32_t rest = full & ~(1u << v);
        std::uint32_t r = rest;
        while (true) { // all subsets of rest, descending
            std::uint32_t s = r;
            while (true) { // all subsets of r, descending
                out.push_back({v, s, r});
                if (s == 0)
                    break;
                s = (s - 1) & r;
            }
            if (r == 0)
                break;
            r = (r - 1) & rest;
        }
    }
    return out;
}

GammaResult submodularity_ratio(const Graph& g, std::optional<std::vector<NodePair>> ground,
                                int cap, int jobs) {
    if (!is_connected(g))
        throw InfeasibleError("submodularity ratio needs a connected graph");
    std::vector<NodePair> pairs = resolve_ground(g, std::move(ground), cap);
    const int size = static_cast<int>(pairs.size());

    GammaResult result;
    result.n_triples = triple_count(size);
    if (size == 0)
        return result;

    std::vector<double> cache = subset_kirchhoff_cache(g, pairs);
    const double tol = kGainTolRel * cache[0];
    const std::uint32_t full = (1u << size) - 1;

    struct PerV {
        double min_ratio = std::numeric_limits<double>::infinity();
        std::uint64_t used = 0;
        Triple argmin{};
        bool has = false;
    };
    std::vector<PerV> partial(static_cast<std::size_t>(size));

    parallel_for(static_cast<std::size_t>(size), jobs, [&](std::size_t vi) {
        PerV& acc = partial[vi];
        const std::uint32_t vbit = 1u << vi;
        const std::uint32_t rest = full & ~vbit;
        std::uint32_t r = rest;
        while (true) {
            double gain_r = cache[r] - cache[r | vbit];
            if (gain_r > tol) {
                std::uint32_t s = r;
                while (true) {
                    double gain_s = cache[s] - cache[s | vbit];
                    double ratio = gain_s / gain_r;
                    ++acc.used;
                    if (ratio < acc.min_ratio) {
                        acc.min_ratio = ratio;
                        acc.argmin = {static_cast<int>(vi), s, r};
                        acc.has = true;
                    }
                    if (s == 0)
                        break;
                    s = (s - 1) & r;
                }
            }
            if (r == 0)
                break;
            r = (r - 1) & rest;
        }
    });

    double min_ratio = std::numeric_limits<double>::infinity();
    for (const auto& acc : partial) {
        result.n_used += acc.used;
        if (acc.has && acc.min_ratio < min_ratio) {
            min_ratio = acc.min_ratio;
            result.argmin = acc.argmin;
        }
    }
    if (std::isfinite(min_ratio)) {
        result.min_ratio = min_ratio;
        result.gamma = std::clamp(std::min(1.0, min_ratio), 0.0, 1.0);
    }
    return result;
}

CurvatureResult curvature(const Graph& g, std::optional<std::vector<NodePair>> ground, int cap,
                          int jobs) {
    if (!is_connected(g))
        throw InfeasibleError("curvature needs a connected graph");
    std::vector<NodePair> pairs = resolve_ground(g, std::move(ground), cap);
    const int size = static_cast<int>(pairs.size());

    CurvatureResult result;
    if (size == 0)
        return result;

    std::vector<double> cache = subset_kirchhoff_cache(g, pairs);
    const double tol = kGainTolRel * cache[0];
    const std::uint32_t full = (1u << size) - 1;

    struct PerV {
        double max_defect = 0.0;
        std::uint64_t used = 0;
    };
    std::vector<PerV> partial(static_cast<std::size_t>(size));

    // f = r_G is an affine decreasing map of the Kirchhoff index, so the
    // defect ratio is computed directly from R differences.
    parallel_for(static_cast<std::size_t>(size), jobs, [&](std::size_t vi) {
        PerV& acc = partial[vi];
        const std::uint32_t vbit = 1u << vi;
        const std::uint32_t rest = full & ~vbit;
        std::uint32_t sbase = rest;
        while (true) { // S = sbase | {v} over all sbase subsets of rest
            const std::uint32_t s = sbase | vbit;
            const double denom = cache[s ^ vbit] - cache[s];
            if (denom > tol) {
                std::uint32_t omega = rest;
                while (true) {
                    double num = cache[(s ^ vbit) | omega] - cache[s | omega];
                    ++acc.used;
                    acc.max_defect = std::max(acc.max_defect, 1.0 - num / denom);
                    if (omega == 0)
                        break;
                    omega = (omega - 1) & rest;
                }
            }
            if (sbase == 0)
                break;
            sbase = (sbase - 1) & rest;
        }
    });

    double max_defect = 0.0;
    for (const auto& acc : partial) {
        result.n_evaluated += acc.used;
        max_defect = std::max(max_defect, acc.max_defect);
    }
    result.alpha = std::clamp(max_defect, 0.0, 1.0);
    return result;
}

double guarantee_factor(double gamma, double alpha, GuaranteeBound which) {
    if (gamma < 0.0 || gamma > 1.0 || alpha < 0.0 || alpha > 1.0)
        throw InfeasibleError("gamma and alpha must lie in [0, 1]");
    if (which == GuaranteeBound::bian) {
        if (alpha < 1e-12)
            return gamma; // limit of (1 - e^(-gamma*alpha)) / alpha
        return -std::expm1(-gamma * alpha) / alpha;
    }
    return 1.0 - (1.0 - gamma + gamma * alpha) * std::exp(-gamma);
}

namespace {

struct GraphWitness {
    bool found = false;
    double ratio = 1.0;
    NodePair v{0, 1};
    NodePair r{0, 1};
    std::array<double, 4> values{};
};

// Best (minimum-ratio) S = empty, |R| = 1 violation within one graph.
GraphWitness scan_graph_for_witness(const Graph& g) {
    GraphWitness best;
    std::vector<NodePair> comp = complement_links(g);
    if (comp.size() < 2)
        return best;

    ResistanceState base = resistance_state(g);
    const double tol = kGainTolRel * base.r_total;

    std::vector<double> gain_bare(comp.size());
    for (std::size_t i = 0; i < comp.size(); ++i)
        gain_bare[i] = link_gain(base, {comp[i].u, comp[i].v, 1.0});

    for (std::size_t ri = 0; ri < comp.size(); ++ri) {
        ResistanceState with_r = apply_link(base, {comp[ri].u, comp[ri].v, 1.0});
        for (std::size_t vi = 0; vi < comp.size(); ++vi) {
            if (vi == ri)
                continue;
            double gain_aug = link_gain(with_r, {comp[vi].u, comp[vi].v, 1.0});
            if (gain_aug <= tol || gain_bare[vi] >= gain_aug * (1.0 - 1e-9))
                continue;
            double ratio = gain_bare[vi] / gain_aug;
            if (!best.found || ratio < best.ratio) {
                best.found = true;
                best.ratio = ratio;
                best.v = comp[vi];
                best.r = comp[ri];
                best.values = {base.r_total, base.r_total - gain_bare[vi], with_r.r_total,
                               with_r.r_total - gain_aug};
            }
        }
    }
    return best;
}

} // namespace

std::optional<Witness> find_witness(int max_nodes, int jobs) {
    for (int n = 2; n <= std::min(max_nodes, 7); ++n) {
        std::vector<Graph> graphs = enumerate_connected_graphs(n);

        std::size_t level_start = 0;
        while (level_start < graphs.size()) {
            int level_links = graphs[level_start].link_count();
            std::size_t level_end = level_start;
            while (level_end < graphs.size() && graphs[level_end].link_count() == level_links)
                ++level_end;

            std::vector<GraphWitness> results(level_end - level_start);
            parallel_for(level_end - level_start, jobs, [&](std::size_t i) {
                results[i] = scan_graph_for_witness(graphs[level_start + i]);
            });

            std::optional<std::size_t> best_idx;
            for (std::size_t i = 0; i < results.size(); ++i) {
                if (!results[i].found)
                    continue;
                if (!best_idx || results[i].ratio < results[*best_idx].ratio)
                    best_idx = i;
            }
            if (best_idx) {
                const GraphWitness& gw = results[*best_idx];
                Witness w{graphs[level_start + *best_idx], gw.v, {gw.r}, gw.values, gw.ratio};
                return w;
            }
            level_start = level_end;
        }
    }
    return std::nullopt;
}

nlohmann::json witness_json(const Witness& w) {
    return nlohmann::json{
        {"graph", encode_graph6(w.graph)},
        {"witness",
         {{"v", {w.v.u, w.v.v}},
          {"r_set", [&] {
               nlohmann::json arr = nlohmann::json::array();
               for (const auto& p : w.r_set)
                   arr.push_back({p.u, p.v});
               return arr;
           }()},
          {"values", w.values},
          {"ratio", w.ratio}}}};
}

} // namespace kgrip
