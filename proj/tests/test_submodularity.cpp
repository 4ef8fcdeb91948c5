#include <doctest.h>

#include <cmath>
#include <map>
#include <set>

#include "kgrip/resistance.hpp"
#include "kgrip/submodularity.hpp"
#include "oracles.hpp"

using namespace kgrip;
using doctest::Approx;

TEST_CASE("triple counting") {
    CHECK(triple_count(1) == 1);
    CHECK(triple_count(2) == 6);
    CHECK(triple_count(3) == 27);
    CHECK(triple_count(4) == 108);

    for (int size = 1; size <= 4; ++size) {
        auto triples = enumerate_triples(size);
        CHECK(triples.size() == triple_count(size));

        std::set<std::tuple<int, std::uint32_t, std::uint32_t>> seen;
        for (const Triple& t : triples) {
            CHECK((t.r_mask & (1u << t.v)) == 0);       // v outside R
            CHECK((t.s_mask & ~t.r_mask) == 0);         // S inside R
            CHECK(seen.insert({t.v, t.s_mask, t.r_mask}).second);
        }
    }

    CHECK_THROWS_AS(enumerate_triples(13), BudgetError);
}

namespace {

// Fresh-recompute Kirchhoff values for every ground subset; the independent
// route the incremental cache is checked against.
std::map<std::uint32_t, double> fresh_subset_values(const Graph& g,
                                                    const std::vector<NodePair>& ground) {
    std::map<std::uint32_t, double> values;
    for (std::uint32_t mask = 0; mask < (1u << ground.size()); ++mask) {
        std::vector<NodePair> subset;
        for (std::size_t i = 0; i < ground.size(); ++i)
            if ((mask >> i) & 1)
                subset.push_back(ground[i]);
        values[mask] = resistance_state(add_links(g, subset)).r_total;
    }
    return values;
}

struct BruteGamma {
    double from_r = 1.0;  // ratios of Kirchhoff-index differences
    double from_rg = 1.0; // ratios of normalized-resistance differences
};

BruteGamma brute_gamma(const Graph& g) {
    auto ground = complement_links(g);
    auto values = fresh_subset_values(g, ground);
    const double tol = 1e-12 * values[0];
    const int n = g.node_count();

    BruteGamma result;
    double min_r = 2.0, min_rg = 2.0;
    bool any = false;
    for (const Triple& t : enumerate_triples(static_cast<int>(ground.size()))) {
        const std::uint32_t vbit = 1u << t.v;
        double gain_r = values[t.r_mask] - values[t.r_mask | vbit];
        if (gain_r <= tol)
            continue;
        double gain_s = values[t.s_mask] - values[t.s_mask | vbit];
        double ratio_r = gain_s / gain_r;

        auto rg = [&](std::uint32_t m) { return normalized_resistance(n, values[m]); };
        double ratio_rg = (rg(t.s_mask | vbit) - rg(t.s_mask)) / (rg(t.r_mask | vbit) - rg(t.r_mask));

        any = true;
        min_r = std::min(min_r, ratio_r);
        min_rg = std::min(min_rg, ratio_rg);
    }
    if (any) {
        result.from_r = std::clamp(std::min(1.0, min_r), 0.0, 1.0);
        result.from_rg = std::clamp(std::min(1.0, min_rg), 0.0, 1.0);
    }
    return result;
}

} // namespace

TEST_CASE("gamma on trivial ground sets") {
    // K_n minus one link and P3 both have a single absent pair: only the
    // vacuous S = R = empty triple exists
    Graph k5_minus(5, complement_links(Graph(5, {NodePair(0, 1)})));
    REQUIRE(complement_links(k5_minus).size() == 1);
    CHECK(submodularity_ratio(k5_minus).gamma == Approx(1.0).epsilon(1e-12));

    CHECK(submodularity_ratio(oracles::path_graph(3)).gamma == Approx(1.0).epsilon(1e-12));
    CHECK(submodularity_ratio(oracles::complete_graph(4)).gamma == 1.0); // empty ground set
}

TEST_CASE("gamma matches the fresh-recompute oracle on tiny graphs") {
    std::mt19937_64 rng(61);
    int done = 0;
    while (done < 8) {
        int n = 4 + static_cast<int>(rng() % 2);
        Graph g = random_connected_graph(n, rng, 0.6);
        auto ground = complement_links(g);
        if (ground.empty() || ground.size() > 4)
            continue;
        ++done;
        BruteGamma brute = brute_gamma(g);
        GammaResult lib = submodularity_ratio(g);
        CHECK(lib.gamma == Approx(brute.from_r).epsilon(1e-9));
        // affine invariance: R_G-difference ratios equal r_G-difference ratios
        CHECK(std::abs(brute.from_r - brute.from_rg) <= 1e-12);
        CHECK(lib.min_ratio >= -1e-12); // monotone gains keep ratios nonnegative
    }
}

TEST_CASE("curvature basics") {
    // single-element ground set: S = {v}, Omega = empty is forced and both
    // sides coincide
    Graph k5_minus(5, complement_links(Graph(5, {NodePair(0, 1)})));
    CHECK(curvature(k5_minus).alpha == Approx(0.0).epsilon(1e-12));
    CHECK(curvature(oracles::path_graph(3)).alpha == Approx(0.0).epsilon(1e-12));
    CHECK(curvature(oracles::complete_graph(4)).alpha == 0.0);
}

TEST_CASE("guarantee factors") {
    double both = 1.0 - std::exp(-1.0);
    CHECK(guarantee_factor(1.0, 1.0, GuaranteeBound::bian) == Approx(both).epsilon(1e-14));
    CHECK(guarantee_factor(1.0, 1.0, GuaranteeBound::liu) == Approx(both).epsilon(1e-14));

    for (double alpha : {0.0, 0.5, 1.0}) {
        CHECK(guarantee_factor(0.0, alpha, GuaranteeBound::bian) == Approx(0.0).epsilon(1e-14));
        CHECK(guarantee_factor(0.0, alpha, GuaranteeBound::liu) == Approx(0.0).epsilon(1e-14));
    }

    // alpha -> 0 limit of (1 - e^(-gamma alpha)) / alpha is gamma
    CHECK(guarantee_factor(0.7, 0.0, GuaranteeBound::bian) == Approx(0.7).epsilon(1e-14));
    CHECK(guarantee_factor(0.7, 1e-13, GuaranteeBound::bian) == Approx(0.7).epsilon(1e-10));

    CHECK_THROWS_AS(guarantee_factor(1.2, 0.5, GuaranteeBound::bian), InfeasibleError);
    CHECK_THROWS_AS(guarantee_factor(0.5, -0.1, GuaranteeBound::liu), InfeasibleError);
}

TEST_CASE("witness search certifies the smallest counterexample") {
    CHECK_FALSE(find_witness(4).has_value());

    auto witness = find_witness(5);
    REQUIRE(witness.has_value());
    CHECK(witness->graph.node_count() == 5);
    CHECK(witness->graph.link_count() == 5);

    CHECK(witness->values[0] == Approx(13.33).epsilon(0.001));
    CHECK(witness->values[1] == Approx(10.25).epsilon(1e-9));
    CHECK(witness->values[2] == Approx(10.25).epsilon(1e-9));
    CHECK(witness->values[3] == Approx(6.95).epsilon(0.001));
    CHECK(std::abs(witness->ratio - 0.935) < 0.001);

    // the rediscovered values are simple rationals
    CHECK(witness->values[0] == Approx(40.0 / 3.0).epsilon(1e-12));
    CHECK(witness->values[3] == Approx(146.0 / 21.0).epsilon(1e-12));
    CHECK(witness->ratio == Approx(259.0 / 277.0).epsilon(1e-12));

    // the four values must reproduce through the eigenvalue route
    Graph g = witness->graph;
    Graph gv = add_links(g, std::vector{witness->v});
    Graph gr = add_links(g, witness->r_set);
    std::vector<NodePair> rv = witness->r_set;
    rv.push_back(witness->v);
    Graph grv = add_links(g, rv);
    CHECK(eigen_kirchhoff(g) == Approx(witness->values[0]).epsilon(1e-9));
    CHECK(eigen_kirchhoff(gv) == Approx(witness->values[1]).epsilon(1e-9));
    CHECK(eigen_kirchhoff(gr) == Approx(witness->values[2]).epsilon(1e-9));
    CHECK(eigen_kirchhoff(grv) == Approx(witness->values[3]).epsilon(1e-9));

    // gains certify non-submodularity
    double gain1 = witness->values[0] - witness->values[1];
    double gain2 = witness->values[2] - witness->values[3];
    CHECK(gain1 >= 0.0);
    CHECK(gain2 > gain1);
    CHECK(witness->ratio == Approx(gain1 / gain2).epsilon(1e-12));
}

TEST_CASE("exhaustive gamma and alpha on the witness graph") {
    auto witness = find_witness(5);
    REQUIRE(witness.has_value());
    GammaResult gamma = submodularity_ratio(witness->graph);
    CHECK(gamma.gamma <= 0.9352 + 1e-4);
    CHECK(gamma.gamma <= witness->ratio + 1e-12); // the witness triple is included
    CHECK(gamma.n_triples == triple_count(static_cast<int>(complement_links(witness->graph).size())));

    CurvatureResult alpha = curvature(witness->graph);
    CHECK(alpha.alpha >= 0.0);
    CHECK(alpha.alpha <= 1.0);

    // definitional consistency: the estimates plug into valid bounds
    for (auto which : {GuaranteeBound::bian, GuaranteeBound::liu}) {
        double factor = guarantee_factor(gamma.gamma, alpha.alpha, which);
        CHECK(factor >= 0.0);
        CHECK(factor <= 1.0);
    }
}

TEST_CASE("witness JSON document") {
    auto witness = find_witness(5);
    REQUIRE(witness.has_value());
    nlohmann::json doc = witness_json(*witness);
    CHECK(doc["graph"] == encode_graph6(witness->graph));
    CHECK(doc["witness"]["values"].size() == 4);
    CHECK(doc["witness"]["r_set"].size() == 1);
    CHECK(doc["witness"]["ratio"].get<double>() < 1.0);
}
