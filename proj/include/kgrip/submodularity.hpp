// Exhaustive submodularity-ratio and curvature estimation on small ground
// sets, greedy guarantee factors, and the search for minimal
// non-submodularity witnesses.
#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include <json.hpp>

#include "kgrip/graph.hpp"

namespace kgrip {

// (S, R, v) with S and R as bitmasks over a ground-set index space and
// v as a ground-set index, v not in R, S subset of R.
struct Triple {
    int v = 0;
    std::uint32_t s_mask = 0;
    std::uint32_t r_mask = 0;
};

// L * 3^(L-1): each non-v element lands in S, R\S, or outside R.
std::uint64_t triple_count(int ground_size);

// Every triple exactly once, ordered by (v, r_mask, then s_mask descending
// within r). Refuses ground sets beyond the cap.
std::vector<Triple> enumerate_triples(int ground_size, int cap = 12);

struct GammaResult {
    double gamma = 1.0;
    double min_ratio = 1.0; // before clamping
    std::uint64_t n_triples = 0;
    std::uint64_t n_used = 0;
    std::optional<Triple> argmin;
};

struct CurvatureResult {
    double alpha = 0.0;
    std::uint64_t n_evaluated = 0;
};

inline constexpr int kDefaultGroundCap = 12;

// Exact gamma over the full ground set (default: all absent links) by
// exhaustive triple enumeration against a Kirchhoff-index cache over all
// link subsets.
GammaResult submodularity_ratio(const Graph& g,
                                std::optional<std::vector<NodePair>> ground = {},
                                int cap = kDefaultGroundCap, int jobs = 1);

// Exact curvature alpha of r_G over the same ground set.
CurvatureResult curvature(const Graph& g,
                          std::optional<std::vector<NodePair>> ground = {},
                          int cap = kDefaultGroundCap, int jobs = 1);

enum class GuaranteeBound { bian, liu };

// bian: (1/alpha)(1 - e^(-gamma*alpha)), continued as gamma at alpha = 0.
// liu:  1 - (1 - gamma + gamma*alpha) e^(-gamma).
double guarantee_factor(double gamma, double alpha, GuaranteeBound which);

// Certificate that adding v gains less on the bare graph than on the graph
// augmented with r_set: ratio = gain1/gain2 < 1.
struct Witness {
    Graph graph;
    NodePair v;
    std::vector<NodePair> r_set;
    std::array<double, 4> values{}; // R_G of G, G+v, G+R, G+R+v
    double ratio = 1.0;
};

// Scans connected graphs in (n, L, canonical) order, restricted to the
// S = empty, |R| = 1 shape; returns the minimum-ratio witness of the first
// (n, L) level containing one. Empty if none exists up to max_nodes.
std::optional<Witness> find_witness(int max_nodes, int jobs = 1);

nlohmann::json witness_json(const Witness& w);

} // namespace kgrip
