// Undirected simple graphs: construction, text formats (edge list, graph6),
// complements, Laplacians, and isomorph-free enumeration of small connected
// graphs.
#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "kgrip/errors.hpp"

namespace kgrip {

// Unordered node pair stored with u < v.
struct NodePair {
    int u = 0;
    int v = 1;

    NodePair() = default;
    NodePair(int a, int b);

    auto operator<=>(const NodePair&) const = default;
};

// Immutable undirected simple graph. Links are kept sorted and unique;
// adjacency queries binary-search the link list.
class Graph {
public:
    Graph() = default;
    Graph(int n, std::vector<NodePair> links);

    int node_count() const { return n_; }
    int link_count() const { return static_cast<int>(links_.size()); }
    const std::vector<NodePair>& links() const { return links_; }

    bool has_link(int u, int v) const;
    std::vector<int> degrees() const;

    bool operator==(const Graph&) const = default;

private:
    int n_ = 0;
    std::vector<NodePair> links_;
};

// Edge-list text: one "u v" per line, '#' starts a comment, optional leading
// "n=<int>" line. Node count resolution: explicit argument, then the n= line,
// then max index + 1.
Graph parse_edge_list(std::string_view text, std::optional<int> node_count = {});
std::string encode_edge_list(const Graph& g);

// graph6, single-byte header form (n <= 62).
Graph parse_graph6(std::string_view line);
std::string encode_graph6(const Graph& g);

// All non-adjacent pairs, lexicographically sorted.
std::vector<NodePair> complement_links(const Graph& g);

// Copy of g with the given absent pairs added. Throws InfeasibleError if a
// pair is already present or listed twice.
Graph add_links(const Graph& g, std::span<const NodePair> pairs);

bool is_connected(const Graph& g);

// Q = diag(degree) - A. Row sums are exactly zero.
Eigen::MatrixXd laplacian(const Graph& g);

// Upper-triangle adjacency bits in graph6 column order, packed so that the
// first bit is the most significant; minimized over all node permutations.
// Supported through n = 7 (the enumerator cap).
std::uint64_t canonical_upper_bits(const Graph& g);

// One representative per isomorphism class of connected graphs on n nodes,
// sorted by (link count, canonical bit string). Supported for 2 <= n <= 7;
// larger catalogs are ingested from graph6 files.
std::vector<Graph> enumerate_connected_graphs(int n);

// Uniform labeled graph (each pair present with edge_prob), redrawn until
// connected. Bits are taken straight from the engine so identical seeds give
// identical graphs on every platform.
Graph random_connected_graph(int n, std::mt19937_64& rng, double edge_prob = 0.5);

} // namespace kgrip
