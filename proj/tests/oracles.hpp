// Test-side oracles, kept independent of the library's incremental update
// paths: closed forms for simple topologies, a weighted-Laplacian spectral
// route, and a tiny permutation-scan canonicalizer.
#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <queue>
#include <vector>

#include "kgrip/graph.hpp"

namespace oracles {

// Effective resistance across a distance-d chord of the n-cycle.
inline double cycle_omega(int n, int d) {
    return static_cast<double>(d) * (n - d) / n;
}

// Kirchhoff index of a tree equals the sum of pairwise hop distances.
inline double tree_kirchhoff(const kgrip::Graph& g) {
    int n = g.node_count();
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (const auto& e : g.links()) {
        adj[static_cast<std::size_t>(e.u)].push_back(e.v);
        adj[static_cast<std::size_t>(e.v)].push_back(e.u);
    }
    double total = 0.0;
    for (int s = 0; s < n; ++s) {
        std::vector<int> dist(static_cast<std::size_t>(n), -1);
        std::queue<int> queue;
        dist[static_cast<std::size_t>(s)] = 0;
        queue.push(s);
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop();
            for (int w : adj[static_cast<std::size_t>(u)]) {
                if (dist[static_cast<std::size_t>(w)] < 0) {
                    dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
                    queue.push(w);
                }
            }
        }
        for (int t = s + 1; t < n; ++t)
            total += dist[static_cast<std::size_t>(t)];
    }
    return total;
}

// Kirchhoff index from the spectrum of an explicitly built weighted
// Laplacian: unit conductances plus extra conductance `delta` between a and b.
inline double weighted_kirchhoff(const kgrip::Graph& g, int a, int b, double delta) {
    int n = g.node_count();
    Eigen::MatrixXd q = kgrip::laplacian(g);
    q(a, a) += delta;
    q(b, b) += delta;
    q(a, b) -= delta;
    q(b, a) -= delta;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(q, Eigen::EigenvaluesOnly);
    double sum = 0.0;
    for (int i = 1; i < n; ++i)
        sum += 1.0 / solver.eigenvalues()(i);
    return n * sum;
}

// Full pairwise resistance matrix of the same weighted graph, through the
// pseudoinverse shift computed from scratch.
inline Eigen::MatrixXd weighted_omega(const kgrip::Graph& g, int a, int b, double delta) {
    int n = g.node_count();
    Eigen::MatrixXd q = kgrip::laplacian(g);
    q(a, a) += delta;
    q(b, b) += delta;
    q(a, b) -= delta;
    q(b, a) -= delta;
    q.array() += 1.0 / n;
    Eigen::MatrixXd m = q.inverse();
    Eigen::MatrixXd omega(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            omega(i, j) = m(i, i) + m(j, j) - 2 * m(i, j);
    return omega;
}

// Upper-triangle bitmask (row-major) minimized over all node permutations by
// exhaustive next_permutation scan; only for tiny n.
inline std::uint32_t brute_canonical(int n, std::uint32_t mask) {
    auto bit_index = [n](int u, int v) {
        if (u > v)
            std::swap(u, v);
        return u * n - u * (u + 1) / 2 + (v - u - 1);
    };
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::uint32_t best = UINT32_MAX;
    do {
        std::uint32_t relabeled = 0;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if ((mask >> bit_index(u, v)) & 1)
                    relabeled |= 1u << bit_index(perm[static_cast<std::size_t>(u)],
                                                 perm[static_cast<std::size_t>(v)]);
        best = std::min(best, relabeled);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

inline kgrip::Graph path_graph(int n) {
    std::vector<kgrip::NodePair> links;
    for (int i = 0; i + 1 < n; ++i)
        links.emplace_back(i, i + 1);
    return kgrip::Graph(n, std::move(links));
}

inline kgrip::Graph cycle_graph(int n) {
    std::vector<kgrip::NodePair> links;
    for (int i = 0; i < n; ++i)
        links.emplace_back(i, (i + 1) % n);
    return kgrip::Graph(n, std::move(links));
}

inline kgrip::Graph complete_graph(int n) {
    std::vector<kgrip::NodePair> links;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            links.emplace_back(u, v);
    return kgrip::Graph(n, std::move(links));
}

inline kgrip::Graph star_graph(int n) {
    std::vector<kgrip::NodePair> links;
    for (int leaf = 1; leaf < n; ++leaf)
        links.emplace_back(0, leaf);
    return kgrip::Graph(n, std::move(links));
}

} // namespace oracles
