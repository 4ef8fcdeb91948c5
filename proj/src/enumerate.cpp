// Isomorph-free enumeration of small connected graphs.
//
// Canonical form: the upper-triangle bit string in graph6 column order,
// minimized over all node permutations with a prefix-pruned search. Graphs on
// n nodes are generated by attaching a new node with every non-empty
// neighborhood to every canonical connected graph on n-1 nodes; every
// connected graph has a non-cut node, so nothing is missed.

#include "kgrip/graph.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <set>

namespace kgrip {

namespace {

constexpr int kEnumCap = 7;

int triangle_bits(int n) { return n * (n - 1) / 2; }

// adjacency as one neighbor bitmask per node
using AdjMask = std::array<std::uint32_t, 8>;

AdjMask unpack(int n, std::uint64_t mask) {
    AdjMask adj{};
    int total = triangle_bits(n);
    int t = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u, ++t) {
            if ((mask >> (total - 1 - t)) & 1) {
                adj[static_cast<std::size_t>(u)] |= 1u << v;
                adj[static_cast<std::size_t>(v)] |= 1u << u;
            }
        }
    }
    return adj;
}

std::uint64_t pack_columns(int n, const std::array<std::uint32_t, 8>& cols) {
    std::uint64_t mask = 0;
    int total = triangle_bits(n);
    int t = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++t)
            if ((cols[static_cast<std::size_t>(v)] >> (v - 1 - u)) & 1)
                mask |= std::uint64_t{1} << (total - 1 - t);
    return mask;
}

struct CanonSearch {
    int n = 0;
    AdjMask adj{};
    std::array<int, 8> perm{};
    std::uint32_t used = 0;
    std::array<std::uint32_t, 8> cur{};
    std::array<std::uint32_t, 8> best{};

    static constexpr std::uint32_t kUnset = UINT32_MAX;

    std::uint32_t column_for(int depth, int node) const {
        std::uint32_t col = 0;
        for (int i = 0; i < depth; ++i)
            col |= ((adj[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] >> node) & 1u)
                   << (depth - 1 - i);
        return col;
    }

    void descend(int depth) {
        if (depth == n)
            return;
        for (int x = 0; x < n; ++x) {
            if ((used >> x) & 1u)
                continue;
            std::uint32_t col = column_for(depth, x);
            if (col > best[static_cast<std::size_t>(depth)])
                continue;
            if (col < best[static_cast<std::size_t>(depth)]) {
                best[static_cast<std::size_t>(depth)] = col;
                const int limit = std::min(n, static_cast<int>(best.size()));
                for (int d = depth + 1; d < limit; ++d)
                    best[static_cast<std::size_t>(d)] = kUnset;
            }
            perm[static_cast<std::size_t>(depth)] = x;
            used |= 1u << x;
            descend(depth + 1);
            used &= ~(1u << x);
        }
    }
};

std::uint64_t canonical_from_adj(int n, const AdjMask& adj) {
    CanonSearch search;
    search.n = n;
    search.adj = adj;
    search.best.fill(CanonSearch::kUnset);
    search.best[0] = 0; // position 0 has no column
    search.descend(0);
    return pack_columns(n, search.best);
}

Graph graph_from_mask(int n, std::uint64_t mask) {
    std::vector<NodePair> links;
    int total = triangle_bits(n);
    int t = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++t)
            if ((mask >> (total - 1 - t)) & 1)
                links.emplace_back(u, v);
    return Graph(n, std::move(links));
}

} // namespace

std::uint64_t canonical_upper_bits(const Graph& g) {
    int n = g.node_count();
    if (n < 1 || n > kEnumCap)
        throw InfeasibleError("canonical form supported for 1 <= n <= 7");
    AdjMask adj{};
    for (const auto& e : g.links()) {
        adj[static_cast<std::size_t>(e.u)] |= 1u << e.v;
        adj[static_cast<std::size_t>(e.v)] |= 1u << e.u;
    }
    return canonical_from_adj(n, adj);
}

std::vector<Graph> enumerate_connected_graphs(int n) {
    if (n < 2 || n > kEnumCap)
        throw InfeasibleError("built-in enumeration covers 2 <= n <= 7; use graph6 ingestion for larger n");

    // K2 is the only connected graph on 2 nodes.
    std::set<std::uint64_t> current{std::uint64_t{1}};
    for (int m = 2; m < n; ++m) {
        std::set<std::uint64_t> next;
        for (std::uint64_t mask : current) {
            AdjMask adj = unpack(m, mask);
            for (std::uint32_t nb = 1; nb < (1u << m); ++nb) {
                AdjMask grown = adj;
                grown[static_cast<std::size_t>(m)] = nb;
                for (int u = 0; u < m; ++u)
                    if ((nb >> u) & 1u)
                        grown[static_cast<std::size_t>(u)] |= 1u << m;
                next.insert(canonical_from_adj(m + 1, grown));
            }
        }
        current = std::move(next);
    }

    std::vector<std::uint64_t> masks(current.begin(), current.end());
    std::sort(masks.begin(), masks.end(), [](std::uint64_t a, std::uint64_t b) {
        int la = std::popcount(a);
        int lb = std::popcount(b);
        return la != lb ? la < lb : a < b;
    });

    std::vector<Graph> graphs;
    graphs.reserve(masks.size());
    for (std::uint64_t mask : masks)
        graphs.push_back(graph_from_mask(n, mask));
    return graphs;
}

} // namespace kgrip
