#include <catch2/catch_amalgamated.hpp>

#include "mdc/harness.hpp"
#include "mdc/solver.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace mdc;
using mdc_test::complete_graph;
using mdc_test::cycle_graph;
using mdc_test::empty_graph;
using mdc_test::path_graph;

namespace {

Graph c14_with_chord() {
    auto g = cycle_graph(14);
    auto edges = g.edges();
    edges.emplace_back(6, 13); // v_7 v_14, 1-based
    return build_graph(14, edges);
}

const std::vector<int> kC14FiveColoring{1, 3, 2, 1, 3, 2, 1, 4, 2, 1, 4, 2, 1, 5};

} // namespace

TEST_CASE("coloring construction validates contiguity") {
    CHECK_NOTHROW(Coloring::from_assignment({1, 2, 1}));
    CHECK_THROWS_AS(Coloring::from_assignment({1, 3}), std::invalid_argument);
    CHECK_THROWS_AS(Coloring::from_assignment({0, 1}), std::invalid_argument);
    CHECK(Coloring::from_assignment({2, 1, 2}).num_colors == 2);
}

TEST_CASE("dominated_classes") {
    Graph k3 = complete_graph(3);
    CHECK(dominated_classes(k3, Coloring::from_assignment({1, 2, 3}), 0) == std::vector<int>{1, 2, 3});

    Graph p3 = path_graph(3);
    CHECK(dominated_classes(p3, Coloring::from_assignment({1, 2, 1}), 0) == std::vector<int>{1, 2});

    Graph e3 = empty_graph(3);
    CHECK(dominated_classes(e3, Coloring::from_assignment({1, 1, 2}), 2) == std::vector<int>{2});

    CHECK_THROWS_AS(dominated_classes(p3, Coloring::from_assignment({1, 2, 1}), 3), std::invalid_argument);
}

TEST_CASE("verify_mdc on the published cycle colorings") {
    CHECK(verify_mdc(cycle_graph(14), Coloring::from_assignment(kC14FiveColoring)).empty());
    CHECK(verify_mdc(cycle_graph(6), Coloring::from_assignment({1, 2, 1, 2, 1, 2})).empty());

    auto viols = verify_mdc(path_graph(2), Coloring::from_assignment({1, 1}));
    REQUIRE_FALSE(viols.empty());
    CHECK(viols[0].kind == Violation::Kind::not_proper);
}

TEST_CASE("verify_mdc reports undominated vertices with counts") {
    // alternating 2-coloring of C_10: classes of five, two hits < threshold 3
    std::vector<int> alt(10);
    for (int i = 0; i < 10; ++i) alt[static_cast<std::size_t>(i)] = 1 + i % 2;
    auto viols = verify_mdc(cycle_graph(10), Coloring::from_assignment(alt));
    REQUIRE_FALSE(viols.empty());
    CHECK(viols[0].kind == Violation::Kind::no_dominated_class);
    CHECK(viols[0].class_counts[1].second == 3); // ceil(5/2)
    CHECK_FALSE(viols[0].to_string().empty());
}

TEST_CASE("verify_mdc rejects mismatched sizes") {
    CHECK_THROWS_AS(verify_mdc(path_graph(3), Coloring::from_assignment({1, 2})), std::invalid_argument);
}

TEST_CASE("mdc_feasible") {
    CHECK_FALSE(mdc_feasible(cycle_graph(14), 4).witness.has_value());
    CHECK(mdc_feasible(c14_with_chord(), 4).witness.has_value());
    CHECK_FALSE(mdc_feasible(c14_with_chord(), 3).witness.has_value());
    CHECK_FALSE(mdc_feasible(complete_graph(4), 3).witness.has_value());
    CHECK_THROWS_AS(mdc_feasible(path_graph(3), 0), std::invalid_argument);
    CHECK_THROWS_AS(mdc_feasible(path_graph(3), 4), std::invalid_argument);

    auto w = mdc_feasible(c14_with_chord(), 4).witness;
    REQUIRE(w.has_value());
    CHECK(verify_mdc(c14_with_chord(), *w).empty());
    CHECK(w->num_colors <= 4);
}

TEST_CASE("the published chorded-cycle recoloring is not a valid witness") {
    // recoloring v_14 to color 2 strands v_13: both classes V_1 and V_2 end
    // up with five members while N[v_13] holds at most two of either
    std::vector<int> recolored = kC14FiveColoring;
    recolored[13] = 2;
    auto viols = verify_mdc(c14_with_chord(), Coloring::from_assignment(recolored));
    REQUIRE(viols.size() == 1);
    CHECK(viols[0].kind == Violation::Kind::no_dominated_class);
    CHECK(viols[0].u == 12);

    // the value 4 is still attained, e.g. by this coloring
    Coloring good = Coloring::from_assignment({1, 2, 3, 2, 4, 2, 4, 1, 4, 1, 4, 3, 1, 2});
    CHECK(verify_mdc(c14_with_chord(), good).empty());
}

TEST_CASE("mdc_number on known graphs") {
    CHECK(mdc_number(path_graph(7)).value == 3);
    CHECK(mdc_number(family_graph(FamilySpec::CompleteBipartite(3, 5))).value == 2);
    CHECK(mdc_number(empty_graph(5)).value == 3);
    CHECK(mdc_number(empty_graph(1)).value == 1);
    CHECK(mdc_number(empty_graph(2)).value == 1);
    CHECK_THROWS_AS(mdc_number(Graph{}), std::invalid_argument);
}

TEST_CASE("brute force oracle on known graphs") {
    CHECK(brute_force_mdc(cycle_graph(5)).value == 3);
    CHECK(brute_force_mdc(complete_graph(2)).value == 2);
    CHECK(brute_force_mdc(family_graph(FamilySpec::Wheel(4))).value == 3);
    CHECK_THROWS_AS(brute_force_mdc(family_graph(FamilySpec::Cycle(11))), std::invalid_argument);
}

TEST_CASE("solver, brute force and the independent oracle agree to order 5") {
    for (int n = 1; n <= 5; ++n) {
        for_each_labeled_graph(n, [&](const Graph& g) {
            int x = mdc_number(g).value;
            INFO(encode_graph(g));
            CHECK(x == brute_force_mdc(g).value);
            CHECK(x == mdc_test::naive_chi_md(g));
        });
    }
}

TEST_CASE("solver matches brute force on random graphs of order 6..8") {
    int idx = 0;
    for (int n : {6, 7, 8}) {
        for (double p : {0.2, 0.5, 0.8}) {
            for (int i = 0; i < 10; ++i) {
                Graph g = random_graph(n, p, 31000 + static_cast<std::uint64_t>(idx++));
                INFO(encode_graph(g));
                CHECK(mdc_number(g).value == brute_force_mdc(g).value);
            }
        }
    }
}

TEST_CASE("sandwich chain holds on samples") {
    int idx = 0;
    for (int n : {4, 6, 8, 10}) {
        for (int i = 0; i < 6; ++i) {
            Graph g = random_graph(n, 0.4, 52000 + static_cast<std::uint64_t>(idx++));
            int chi = chromatic_number(g).value;
            int md = mdc_number(g).value;
            int cd = dominator_chromatic_number(g).value;
            INFO(encode_graph(g));
            CHECK(chi <= md);
            CHECK(md <= cd);
            CHECK(cd <= g.order());
        }
    }
}

TEST_CASE("color permutation invariance of verify_mdc") {
    Graph g = random_graph(9, 0.4, 777);
    auto r = mdc_number(g);
    REQUIRE(r.witness.has_value());
    int k = r.witness->num_colors;
    std::vector<int> perm(static_cast<std::size_t>(k) + 1);
    for (int c = 1; c <= k; ++c) perm[static_cast<std::size_t>(c)] = k + 1 - c;
    std::vector<int> relabeled;
    for (int c : r.witness->assignment) relabeled.push_back(perm[static_cast<std::size_t>(c)]);
    CHECK(verify_mdc(g, Coloring::from_assignment(relabeled)).empty());
}

TEST_CASE("universal vertex forces chi_md = chi") {
    for_each_labeled_graph(5, [&](const Graph& g) {
        if (max_degree(g) != g.order() - 1) return;
        CHECK(mdc_number(g).value == chromatic_number(g).value);
    });
}

TEST_CASE("witnesses returned by the solver always verify") {
    int idx = 0;
    for (int n : {5, 7, 9, 11}) {
        for (int i = 0; i < 5; ++i) {
            Graph g = random_graph(n, 0.35, 60000 + static_cast<std::uint64_t>(idx++));
            auto r = mdc_number(g);
            REQUIRE(r.witness.has_value());
            CHECK(verify_mdc(g, *r.witness).empty());
            CHECK(r.witness->num_colors == r.value);
        }
    }
}

TEST_CASE("budget exhaustion is reported, not mis-answered") {
    Graph g = random_graph(12, 0.5, 8);
    auto r = mdc_number(g, 2);
    CHECK(r.status == SearchStatus::budget_exhausted);
    CHECK_FALSE(r.witness.has_value());
    CHECK(r.nodes >= 2);

    auto full = mdc_number(g);
    CHECK(full.status == SearchStatus::solved);
}

TEST_CASE("solver is deterministic") {
    Graph g = random_graph(9, 0.5, 4242);
    auto a = mdc_number(g), b = mdc_number(g);
    REQUIRE(a.witness.has_value());
    CHECK(a.witness->assignment == b.witness->assignment);
    CHECK(a.nodes == b.nodes);
}
