#include "kgrip/resistance.hpp"

#include <cmath>
#include <string>

namespace kgrip {

namespace {

void check_query(const ResistanceState& s, const GainQuery& q) {
    if (q.i == q.j)
        throw std::invalid_argument("gain query needs i != j");
    if (q.i < 0 || q.j < 0 || q.i >= s.n || q.j >= s.n)
        throw std::invalid_argument("gain query index out of range");
    if (q.delta < 0.0)
        throw std::invalid_argument("negative delta is out of scope (link removal)");
}

void refresh_sums(ResistanceState& s) {
    s.row_sum = s.omega.rowwise().sum();
    s.r_total = 0.5 * s.row_sum.sum();
}

} // namespace

ResistanceState resistance_state(const Graph& g) {
    int n = g.node_count();
    if (n < 2)
        throw InfeasibleError("resistance state needs n >= 2");
    if (!is_connected(g))
        throw InfeasibleError("graph is disconnected");

    Eigen::MatrixXd shifted = laplacian(g);
    shifted.array() += 1.0 / n;
    Eigen::LLT<Eigen::MatrixXd> llt(shifted);
    if (llt.info() != Eigen::Success)
        throw NumericalError("Cholesky factorization of the shifted Laplacian failed");
    Eigen::MatrixXd m = llt.solve(Eigen::MatrixXd::Identity(n, n));

    ResistanceState s;
    s.n = n;
    Eigen::VectorXd diag = m.diagonal();
    s.omega = diag.replicate(1, n) + diag.transpose().replicate(n, 1) - m - m.transpose();
    s.omega.diagonal().setZero();
    refresh_sums(s);
    return s;
}

double eigen_kirchhoff(const Graph& g) {
    int n = g.node_count();
    if (n < 2)
        throw InfeasibleError("Kirchhoff index needs n >= 2");

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(laplacian(g), Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw NumericalError("Laplacian eigensolver failed");
    const Eigen::VectorXd& mu = solver.eigenvalues(); // ascending

    if (mu(1) <= 1e-9 * mu(n - 1))
        throw InfeasibleError("algebraic connectivity below tolerance: graph treated as disconnected");
    double sum = 0.0;
    for (int i = 1; i < n; ++i)
        sum += 1.0 / mu(i);
    return n * sum;
}

double max_kirchhoff(int n) {
    return static_cast<double>(n) * (n - 1.0) * (n + 1.0) / 6.0;
}

double normalized_resistance(int n, double r_g) {
    if (n <= 2)
        throw InfeasibleError("normalized resistance needs n >= 3");
    double r_max = max_kirchhoff(n);
    return (r_max - r_g) / (r_max - (n - 1.0));
}

double normalized_resistance(const Graph& g) {
    return normalized_resistance(g.node_count(), resistance_state(g).r_total);
}

double link_gain(const ResistanceState& s, const GainQuery& q) {
    check_query(s, q);
    Eigen::VectorXd a = s.omega.col(q.i) - s.omega.col(q.j);
    double sum_diff = s.row_sum(q.i) - s.row_sum(q.j);
    double numerator = q.delta * s.n * a.squaredNorm() - q.delta * sum_diff * sum_diff;
    return numerator / (4.0 * (1.0 + q.delta * s.omega(q.i, q.j)));
}

ResistanceState apply_link(const ResistanceState& s, const GainQuery& q) {
    check_query(s, q);
    Eigen::VectorXd a = s.omega.col(q.i) - s.omega.col(q.j);
    double factor = q.delta / (4.0 * (1.0 + q.delta * s.omega(q.i, q.j)));

    ResistanceState out;
    out.n = s.n;
    Eigen::MatrixXd d = a.replicate(1, s.n) - a.transpose().replicate(s.n, 1);
    out.omega = s.omega - factor * d.cwiseProduct(d);
    refresh_sums(out);
    return out;
}

} // namespace kgrip
