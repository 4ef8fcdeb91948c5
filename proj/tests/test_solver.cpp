#include <doctest.h>

#include <cmath>

#include "kgrip/solver.hpp"
#include "oracles.hpp"

using namespace kgrip;
using doctest::Approx;

namespace {

// Fresh-recompute gain of a single candidate, used as the greedy oracle.
double single_link_gain_oracle(const Graph& g, NodePair pair) {
    double before = resistance_state(g).r_total;
    double after = resistance_state(add_links(g, std::span(&pair, 1))).r_total;
    return before - after;
}

} // namespace

TEST_CASE("greedy on the 4-node star") {
    Graph star = oracles::star_graph(4);
    GreedyTrace trace = greedy(star, 1);
    REQUIRE(trace.steps.size() == 1);
    CHECK(trace.initial_r == Approx(9.0).epsilon(1e-12));
    CHECK(trace.steps[0].pair == NodePair(1, 2)); // 3-way tie, lexicographic rule
    CHECK(trace.steps[0].delta_r == Approx(8.0 / 3.0).epsilon(1e-10));
    CHECK(trace.steps[0].r_after == Approx(19.0 / 3.0).epsilon(1e-10));

    // every symmetric candidate gains the same per the fresh oracle
    for (const NodePair& cand : complement_links(star))
        CHECK(single_link_gain_oracle(star, cand) == Approx(8.0 / 3.0).epsilon(1e-10));
}

TEST_CASE("greedy trivial and error cases") {
    Graph c5 = oracles::cycle_graph(5);
    GreedyTrace empty = greedy(c5, 0);
    CHECK(empty.steps.empty());
    // cycle formula: five pairs at 4/5 plus five at 6/5
    CHECK(empty.initial_r == Approx(10.0).epsilon(1e-10));
    CHECK(empty.initial_r ==
          Approx(5 * oracles::cycle_omega(5, 1) + 5 * oracles::cycle_omega(5, 2)).epsilon(1e-12));

    GreedyTrace one = greedy(c5, 1);
    CHECK(one.steps[0].pair == NodePair(0, 2)); // five symmetric chords
    double expected = resistance_state(add_links(c5, std::vector{NodePair(0, 2)})).r_total;
    CHECK(one.steps[0].r_after == Approx(expected).epsilon(1e-9));

    CHECK_THROWS_AS(greedy(c5, 6), InfeasibleError); // only 5 chords
    CHECK_THROWS_AS(greedy(Graph(4, {NodePair(0, 1), NodePair(2, 3)}), 1), InfeasibleError);
    std::vector<NodePair> bad{NodePair(0, 1)};
    CHECK_THROWS_AS(greedy(c5, 1, bad), InfeasibleError); // already present
}

TEST_CASE("greedy traces are internally consistent") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 10; ++trial) {
        int n = 6 + static_cast<int>(rng() % 8);
        Graph g = random_connected_graph(n, rng, 0.35);
        int k = std::min<std::size_t>(3, complement_links(g).size());
        GreedyTrace trace = greedy(g, static_cast<int>(k));
        double r = trace.initial_r;
        for (const auto& step : trace.steps) {
            CHECK(step.delta_r > 0.0);
            CHECK(step.r_after < r);
            CHECK(std::abs(r - step.delta_r - step.r_after) <= 1e-9 * r);
            r = step.r_after;
        }
    }
}

TEST_CASE("naive and incremental modes agree") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 25; ++trial) {
        int n = 5 + static_cast<int>(rng() % 16);
        Graph g = random_connected_graph(n, rng, 0.4);
        int k = static_cast<int>(std::min<std::size_t>(1 + rng() % 4, complement_links(g).size()));
        GreedyTrace inc = greedy(g, k, {}, GreedyMode::incremental);
        GreedyTrace nav = greedy(g, k, {}, GreedyMode::naive);
        REQUIRE(inc.steps.size() == nav.steps.size());
        for (std::size_t i = 0; i < inc.steps.size(); ++i) {
            CHECK(inc.steps[i].pair == nav.steps[i].pair);
            CHECK(std::abs(inc.steps[i].delta_r - nav.steps[i].delta_r) <=
                  1e-8 * std::max(1.0, nav.steps[i].delta_r));
        }
    }
}

TEST_CASE("brute force optimum") {
    // adding every absent link completes the graph
    Graph p4 = oracles::path_graph(4);
    auto comp = complement_links(p4);
    OptimalResult full = brute_force_optimal(p4, static_cast<int>(comp.size()));
    CHECK(full.r_opt == Approx(3.0).epsilon(1e-10)); // K4: n - 1
    CHECK(full.n_evaluated == 1);

    Graph star = oracles::star_graph(4);
    OptimalResult best = brute_force_optimal(star, 1);
    REQUIRE(best.best_set.size() == 1);
    CHECK(best.best_set[0] == NodePair(1, 2));
    CHECK(best.r_opt == Approx(19.0 / 3.0).epsilon(1e-10));
    CHECK(best.n_evaluated == 3);

    // C6, k=1: the long diagonal (0,3) wins; oracle checks all 9 candidates
    Graph c6 = oracles::cycle_graph(6);
    OptimalResult c6_best = brute_force_optimal(c6, 1);
    CHECK(c6_best.best_set[0] == NodePair(0, 3));
    for (const NodePair& cand : complement_links(c6)) {
        double value = resistance_state(add_links(c6, std::span(&cand, 1))).r_total;
        CHECK(value >= c6_best.r_opt - 1e-10);
    }

    CHECK_THROWS_AS(brute_force_optimal(c6, 3, {}, 10), BudgetError);
}

TEST_CASE("optimal never exceeds greedy") {
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 12; ++trial) {
        int n = 5 + static_cast<int>(rng() % 5);
        Graph g = random_connected_graph(n, rng, 0.45);
        int k = static_cast<int>(std::min<std::size_t>(2, complement_links(g).size()));
        GreedyTrace trace = greedy(g, k);
        OptimalResult opt = brute_force_optimal(g, k);
        CHECK(opt.r_opt <= trace.final_r() + 1e-9 * trace.final_r());
    }
}

TEST_CASE("efficiency") {
    CHECK(efficiency(oracles::cycle_graph(5), 0) == 1.0);

    // k = 1 greedy is optimal on every 5-node graph
    for (const Graph& g : enumerate_connected_graphs(5)) {
        if (complement_links(g).empty())
            continue;
        EfficiencyDetail detail = efficiency_detail(g, 1);
        CHECK(detail.eta == Approx(1.0).epsilon(1e-12));
        CHECK(detail.trace.steps[0].pair == detail.optimal.best_set[0]);
    }
}

TEST_CASE("argmax by gain equals argmax by normalized resistance") {
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 10; ++trial) {
        int n = 5 + static_cast<int>(rng() % 8);
        Graph g = random_connected_graph(n, rng, 0.4);
        auto cands = complement_links(g);
        if (cands.empty())
            continue;
        GreedyTrace trace = greedy(g, 1);

        double best_rg = -1.0;
        NodePair best_pair = cands[0];
        for (const NodePair& cand : cands) {
            double rg = normalized_resistance(
                n, resistance_state(add_links(g, std::span(&cand, 1))).r_total);
            if (rg > best_rg + 1e-13) {
                best_rg = rg;
                best_pair = cand;
            }
        }
        CHECK(trace.steps[0].pair == best_pair);
    }
}

TEST_CASE("solver JSON document") {
    Graph star = oracles::star_graph(4);
    EfficiencyDetail detail = efficiency_detail(star, 1);
    nlohmann::json doc = solver_report_json(star, detail.trace, detail.optimal, detail.eta);
    CHECK(doc["graph"] == encode_graph6(star));
    CHECK(doc["k"] == 1);
    CHECK(doc["mode"] == "incremental");
    CHECK(doc["steps"].size() == 1);
    CHECK(doc["steps"][0]["u"] == 1);
    CHECK(doc["steps"][0]["v"] == 2);
    CHECK(doc.contains("R_opt"));
    CHECK(doc["eta"] == 1.0);
}
