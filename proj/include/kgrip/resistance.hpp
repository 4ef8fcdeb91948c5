// Effective resistances, the Kirchhoff index, and the Yang-Klein single-link
// update formulas.
#pragma once

#include <Eigen/Dense>

#include "kgrip/graph.hpp"

namespace kgrip {

// Pairwise effective resistances of a connected graph with unit-conductance
// links, plus row sums and the Kirchhoff index. A value type: updates return
// fresh states.
struct ResistanceState {
    int n = 0;
    Eigen::MatrixXd omega;
    Eigen::VectorXd row_sum;
    double r_total = 0.0;
};

// Conductance delta added between nodes i and j (delta > 0).
struct GainQuery {
    int i = 0;
    int j = 1;
    double delta = 1.0;
};

// Dense route: omega_ij = M_ii + M_jj - 2 M_ij with M = (Q + J/n)^-1.
ResistanceState resistance_state(const Graph& g);

// Spectral route: N * sum of reciprocal nonzero Laplacian eigenvalues.
double eigen_kirchhoff(const Graph& g);

// Kirchhoff index of the path graph, (n^3 - n) / 6: the connected maximum.
double max_kirchhoff(int n);

// r_G in [0, 1]; 1 for the complete graph, 0 for the path. Requires n >= 3.
double normalized_resistance(int n, double r_g);
double normalized_resistance(const Graph& g);

// Kirchhoff-index drop caused by the query, without touching the state.
double link_gain(const ResistanceState& s, const GainQuery& q);

// State of the graph with the query's conductance added, O(n^2).
ResistanceState apply_link(const ResistanceState& s, const GainQuery& q);

} // namespace kgrip
