#include <catch2/catch_amalgamated.hpp>

#include "mdc/harness.hpp"
#include "test_util.hpp"

using namespace mdc;
using mdc_test::complete_graph;
using mdc_test::cycle_graph;
using mdc_test::empty_graph;
using mdc_test::path_graph;

TEST_CASE("labeled graph enumeration counts") {
    CHECK(enumerate_graphs(1).size() == 1);
    CHECK(enumerate_graphs(2).size() == 2);
    CHECK(enumerate_graphs(3).size() == 8);
    CHECK(enumerate_graphs(4).size() == 64);
    CHECK_THROWS_AS(enumerate_graphs(7), std::invalid_argument);

    // deterministic order: first the edgeless graph, last the complete one
    auto graphs = enumerate_graphs(3);
    CHECK(graphs.front() == empty_graph(3));
    CHECK(graphs.back() == complete_graph(3));
}

TEST_CASE("random graphs are reproducible and respect p") {
    CHECK(random_graph(5, 0.0, 7) == empty_graph(5));
    CHECK(random_graph(5, 1.0, 7) == complete_graph(5));
    CHECK(random_graph(8, 0.5, 42) == random_graph(8, 0.5, 42));
    CHECK_FALSE(random_graph(8, 0.5, 42) == random_graph(8, 0.5, 43));
    CHECK_THROWS_AS(random_graph(5, 1.5, 1), std::invalid_argument);
}

TEST_CASE("graph encoding round-trips") {
    Graph g = build_graph(5, {{0, 1}, {1, 4}, {2, 3}});
    CHECK(decode_graph(encode_graph(g)) == g);
    CHECK(decode_graph(encode_graph(empty_graph(3))) == empty_graph(3));
    CHECK_THROWS_AS(decode_graph("edges=0-1"), std::invalid_argument);
}

TEST_CASE("bound chain check is clean on small populations") {
    auto rep = check_bound_chain(GraphPopulation::Exhaustive(4));
    CHECK(rep.ok());
    CHECK(rep.tested == 1 + 2 + 8 + 64);
    CHECK(rep.skipped.empty());

    auto rnd = check_bound_chain(GraphPopulation::Random(7, 0.5, 11, 10));
    CHECK(rnd.ok());
    CHECK(rnd.tested == 10);
    CHECK_FALSE(rnd.summary().empty());
}

TEST_CASE("bound chain on K_6 is the full-equality case") {
    Graph k6 = complete_graph(6);
    CHECK(chromatic_number(k6).value == 6);
    CHECK(mdc_number(k6).value == 6);
    CHECK(dominator_chromatic_number(k6).value == 6);
}

TEST_CASE("bound chain and small-value characterizations are clean on all order-6 graphs") {
    auto chain = check_bound_chain(GraphPopulation::Exhaustive(6));
    CHECK(chain.ok());
    CHECK(chain.tested == 33867);
    auto small = check_small_value_characterizations(GraphPopulation::Exhaustive(6));
    CHECK(small.ok());
}

TEST_CASE("alpha bound check records sharpness") {
    auto rep = check_alpha_bound(GraphPopulation::Exhaustive(4));
    CHECK(rep.ok());
    CHECK(rep.equality_hits > 0); // complete graphs attain the bound

    // the corona on an even cycle is the quoted equality case
    Graph c = family_graph(FamilySpec::CoronaCycleK1(4));
    int chi = chromatic_number(c).value;
    int alpha = independence_number(c).value;
    CHECK(mdc_number(c).value == chi + (alpha + 1) / 2 - 1);
}

TEST_CASE("matching bound check is clean on small populations") {
    auto rep = check_matching_bound(GraphPopulation::Exhaustive(4));
    CHECK(rep.ok());
    CHECK(rep.equality_hits > 0); // complete graphs again
    auto rnd = check_matching_bound(GraphPopulation::Random(7, 0.4, 3, 10));
    CHECK(rnd.ok());
}

TEST_CASE("small-value characterizations hold exhaustively to order 5") {
    auto rep = check_small_value_characterizations(GraphPopulation::Exhaustive(5));
    CHECK(rep.ok());
    CHECK(rep.tested == 1 + 2 + 8 + 64 + 1024);
}

TEST_CASE("small-value characterization quoted cases") {
    CHECK(mdc_number(empty_graph(1)).value == 1);
    CHECK(mdc_number(family_graph(FamilySpec::CompleteBipartite(2, 7))).value == 2);
    CHECK(mdc_number(cycle_graph(5)).value == 3);
}

TEST_CASE("large-value characterizations hold exhaustively to order 5") {
    auto rep = check_large_value_characterizations(GraphPopulation::Exhaustive(5));
    CHECK(rep.ok());
}

TEST_CASE("large-value characterization quoted cases") {
    // K_5 minus one edge: complement is a single-edge star
    auto edges = complete_graph(5).edges();
    edges.erase(std::find(edges.begin(), edges.end(), std::pair<int, int>{0, 1}));
    Graph k5_minus_edge = build_graph(5, edges);
    CHECK(mdc_number(k5_minus_edge).value == 4);

    // K_5 minus two disjoint edges: complement edges do not share a vertex
    auto edges2 = k5_minus_edge.edges();
    edges2.erase(std::find(edges2.begin(), edges2.end(), std::pair<int, int>{2, 3}));
    Graph k5_minus_two = build_graph(5, edges2);
    CHECK(mdc_number(k5_minus_two).value != 4);
    CHECK(mdc_number(k5_minus_two).value == chromatic_number(k5_minus_two).value); // Delta = n-1

    // star K_{1,5}: neither complete-minus-star nor chi_md = n-1
    Graph star6 = family_graph(FamilySpec::Star(6));
    CHECK(mdc_number(star6).value == 2);
}

TEST_CASE("disconnected bounds hold on small populations") {
    auto rep = check_disconnected_bounds(GraphPopulation::Exhaustive(5));
    CHECK(rep.ok());
    CHECK(rep.tested > 0);
}

TEST_CASE("disconnected bound tightness cases") {
    Graph lower = disjoint_union(complete_graph(4), disjoint_union(complete_graph(2), complete_graph(2)));
    CHECK(mdc_number(lower).value == 4); // equals max over components

    CHECK(mdc_number(empty_graph(4)).value == 2); // two edgeless pairs: 1 + 1, sum attained
}

TEST_CASE("bipartite corona check on the quoted graphs") {
    std::vector<Graph> graphs{path_graph(3), cycle_graph(4), path_graph(5)};
    auto rep = check_bipartite_corona(graphs);
    CHECK(rep.ok());
    CHECK(rep.tested == 3);

    Graph k1 = empty_graph(1);
    CHECK(mdc_number(corona_product(path_graph(3), k1)).value == 3);
    CHECK(mdc_number(corona_product(cycle_graph(4), k1)).value == 3);
    CHECK(mdc_number(corona_product(path_graph(5), k1)).value == 4);

    CHECK_THROWS_AS(check_bipartite_corona({cycle_graph(5)}), std::invalid_argument);
}

TEST_CASE("explorer reports chi_md = chi_d members") {
    auto res = explore_equality_chi_d(GraphPopulation::Exhaustive(4));
    CHECK_FALSE(res.equal.empty());
    // complete graphs attain equality and must be present
    CHECK(std::find(res.equal.begin(), res.equal.end(), encode_graph(complete_graph(4))) != res.equal.end());
    // the edgeless triple does not: chi_md = 2 but chi_d = 3
    CHECK(std::find(res.equal.begin(), res.equal.end(), encode_graph(empty_graph(3))) == res.equal.end());
}

TEST_CASE("budget-limited checks report skips instead of passes") {
    auto rep = check_bound_chain(GraphPopulation::Random(10, 0.5, 17, 6), 50);
    CHECK(rep.failures.empty());
    CHECK_FALSE(rep.skipped.empty());
    CHECK(rep.tested + static_cast<long>(rep.skipped.size()) == 6);
}

TEST_CASE("checks are deterministic") {
    auto a = check_bound_chain(GraphPopulation::Random(7, 0.5, 123, 8));
    auto b = check_bound_chain(GraphPopulation::Random(7, 0.5, 123, 8));
    CHECK(a.tested == b.tested);
    CHECK(a.failures.size() == b.failures.size());
    auto ea = explore_equality_chi_d(GraphPopulation::Random(6, 0.5, 5, 10));
    auto eb = explore_equality_chi_d(GraphPopulation::Random(6, 0.5, 5, 10));
    CHECK(ea.equal == eb.equal);
}
