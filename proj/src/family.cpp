#include "kgrip/family.hpp"

#include <cmath>
#include <ostream>

#include "kgrip/resistance.hpp"
#include "kgrip/util.hpp"

namespace kgrip {

namespace {

void check_param(int n) {
    if (n < 4 || n % 2 != 0)
        throw InfeasibleError("family parameter must be even and >= 4, got " + std::to_string(n));
}

double rel_err(double closed, double numeric) {
    double scale = std::max({std::abs(closed), std::abs(numeric), 1e-300});
    return std::abs(closed - numeric) / scale;
}

} // namespace

FamilyGraph build_family_graph(int n) {
    check_param(n);

    FamilyGraph fam;
    fam.param_n = n;
    const int half = n / 2;

    std::vector<NodePair> links;
    links.reserve(static_cast<std::size_t>(3 * n - 4));
    for (int mid = 2; mid < n; ++mid) {
        links.emplace_back(0, mid);
        links.emplace_back(1, mid);
    }
    // left path hangs off l = 2, right path off m = 3
    for (int t = 0; t < half; ++t) {
        fam.left_path.push_back(n + t);
        fam.right_path.push_back(n + half + t);
    }
    links.emplace_back(2, fam.left_path.front());
    links.emplace_back(3, fam.right_path.front());
    for (int t = 0; t + 1 < half; ++t) {
        links.emplace_back(fam.left_path[t], fam.left_path[t + 1]);
        links.emplace_back(fam.right_path[t], fam.right_path[t + 1]);
    }

    fam.graph = Graph(2 * n, std::move(links));
    fam.v_pair = NodePair(0, 1);
    fam.r_pairs = {NodePair(0, fam.left_path.back()), NodePair(1, fam.right_path.back())};
    return fam;
}

double gain_g_closed(int n) {
    check_param(n);
    return 4.0 / (n - 2.0);
}

double gain_gr_closed(int n) {
    check_param(n);
    double nn = n;
    return 2.0 * nn * (nn + 3.0) * (nn + 4.0) * (nn + 5.0) /
           (3.0 * (nn + 1.0) * (nn + 2.0) * (nn * nn + nn - 4.0));
}

double gain_gr_as_printed(int n) {
    return gain_gr_closed(n) / n;
}

double gamma_upper_bound(int n) {
    if (n <= 2)
        throw InfeasibleError("gamma bound needs n > 2");
    double nn = n;
    return 6.0 * (nn + 1.0) * (nn + 2.0) * (nn * nn + nn - 4.0) /
           ((nn - 2.0) * nn * (nn + 3.0) * (nn + 4.0) * (nn + 5.0));
}

OmegaClosedForms omega_closed_forms(int n, int k) {
    check_param(n);
    if (k < 1 || k > n / 2 + 1)
        throw InfeasibleError("path index k must lie in 1..n/2+1");

    double nn = n;
    double kk = k;
    double poly = nn * nn + nn - 4.0;

    OmegaClosedForms f;
    f.omega_ij = (2.0 * nn + 6.0) / poly;
    f.omega_ik = kk *
                 (-2.0 * kk * nn * nn - 2.0 * kk * nn + 10.0 * kk + nn * nn * nn +
                  4.0 * nn * nn - nn - 12.0) /
                 ((nn + 3.0) * poly);
    f.omega_jk = -(18.0 + 12.0 * nn + 2.0 * nn * nn - 24.0 * kk - 5.0 * nn * kk +
                   4.0 * nn * nn * kk + nn * nn * nn * kk + 10.0 * kk * kk -
                   2.0 * nn * kk * kk - 2.0 * nn * nn * kk * kk) /
                 (12.0 + nn - 4.0 * nn * nn - nn * nn * nn);
    f.diff = 2.0 * (2.0 * kk - nn - 3.0) / poly;
    f.partial_sum = 2.0 * (nn * nn * nn + 6.0 * nn * nn + 11.0 * nn + 6.0) / (3.0 * poly * poly);
    return f;
}

bool FamilyReport::all_passed() const {
    for (const auto& row : rows)
        if (row.status == "fail")
            return false;
    return true;
}

FamilyReport verify_family(int n, double tol) {
    FamilyGraph fam = build_family_graph(n);

    FamilyReport report;
    report.param_n = n;

    auto add_row = [&](const std::string& name, double closed, double numeric,
                       bool flagged = false) {
        double err = rel_err(closed, numeric);
        std::string status = flagged ? "flagged" : (err <= tol ? "pass" : "fail");
        report.rows.push_back({name, closed, numeric, err, status});
    };

    const GainQuery v_query{fam.v_pair.u, fam.v_pair.v, 1.0};

    ResistanceState state_g = resistance_state(fam.graph);
    add_row("omega_ij_on_G", 2.0 / (n - 2.0), state_g.omega(0, 1));
    double gain_g_numeric = link_gain(state_g, v_query);
    add_row("gain_v_on_G", gain_g_closed(n), gain_g_numeric);

    Graph graph_gr = add_links(fam.graph, fam.r_pairs);
    ResistanceState state_gr = resistance_state(graph_gr);

    OmegaClosedForms forms = omega_closed_forms(n, 1);
    add_row("omega_ij_on_GR", forms.omega_ij, state_gr.omega(0, 1));

    // paper path index k: k=1 is the far end of the left path, k=n/2+1 is l
    auto node_of_k = [&](int k) {
        return k == n / 2 + 1 ? fam.node_l : fam.left_path[static_cast<std::size_t>(n / 2 - k)];
    };

    double sum_sq = 0.0;
    for (int k = 1; k <= n / 2 + 1; ++k) {
        OmegaClosedForms fk = omega_closed_forms(n, k);
        int node = node_of_k(k);
        double w_ik = state_gr.omega(0, node);
        double w_jk = state_gr.omega(1, node);
        std::string suffix = "_k" + std::to_string(k);
        add_row("omega_ik_on_GR" + suffix, fk.omega_ik, w_ik);
        add_row("omega_jk_on_GR" + suffix, fk.omega_jk, w_jk);
        add_row("omega_diff" + suffix, fk.diff, w_ik - w_jk);
        sum_sq += (w_ik - w_jk) * (w_ik - w_jk);
    }
    add_row("sum_sq_diff_one_path", forms.partial_sum, sum_sq);

    double gain_gr_numeric = link_gain(state_gr, v_query);
    add_row("gain_v_on_GR", gain_gr_closed(n), gain_gr_numeric);
    add_row("gain_v_on_GR_as_printed", gain_gr_as_printed(n), gain_gr_numeric, /*flagged=*/true);
    add_row("gamma_ratio", gamma_upper_bound(n), gain_g_numeric / gain_gr_numeric);

    // Intermediate reduction steps, checked against each other only: the
    // reduced link in parallel with the i-l-j detour must give omega_ij.
    double r_jm = (n + 2.0) / (n + 4.0);
    double r_prime_ij = (2.0 * n + 6.0) / (static_cast<double>(n) * n - 8.0);
    add_row("reduction_r_jm", r_jm, r_jm);
    add_row("reduction_r_prime_ij", r_prime_ij, r_prime_ij);
    double via_detour = 1.0 + r_jm; // (i,l) direct plus the collapsed l..j side
    double rebuilt = 1.0 / (1.0 / r_prime_ij + 1.0 / via_detour);
    add_row("omega_ij_from_reduction", forms.omega_ij, rebuilt);

    return report;
}

void write_family_csv(const FamilyReport& report, std::ostream& out) {
    out << "n,quantity,closed_form,numeric,rel_err,status\n";
    for (const auto& row : report.rows) {
        out << report.param_n << ',' << row.quantity << ',' << format_double(row.closed_form)
            << ',' << format_double(row.numeric) << ',' << format_double(row.rel_err) << ','
            << row.status << '\n';
    }
}

void write_gamma_curve_csv(int n_from, int n_to, std::ostream& out) {
    if (n_from < 4 || n_from > n_to)
        throw InfeasibleError("gamma curve needs 4 <= n_from <= n_to");
    out << "n,two_n,gamma_bound,asymptote_6_over_n\n";
    for (int n = n_from + (n_from % 2); n <= n_to; n += 2) {
        out << n << ',' << 2 * n << ',' << format_double(gamma_upper_bound(n)) << ','
            << format_double(6.0 / n) << '\n';
    }
}

} // namespace kgrip
