#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "mdc/harness.hpp"
#include "mdc/io.hpp"
#include "test_util.hpp"

using namespace mdc;
using mdc_test::complete_graph;
using mdc_test::empty_graph;

TEST_CASE("DIMACS parsing") {
    std::istringstream in("c a triangle\np edge 3 3\ne 1 2\ne 2 3\ne 1 3\n");
    auto parsed = parse_dimacs(in);
    CHECK(parsed.graph == complete_graph(3));
    CHECK(parsed.warnings.empty());
}

TEST_CASE("DIMACS endpoint out of range is fatal") {
    std::istringstream in("p edge 3 1\ne 1 4\n");
    CHECK_THROWS_AS(parse_dimacs(in), std::invalid_argument);
}

TEST_CASE("DIMACS edge-count mismatch is only a warning") {
    std::istringstream in("p edge 3 5\ne 1 2\ne 1 2\ne 2 3\n");
    auto parsed = parse_dimacs(in);
    CHECK(parsed.graph.edge_count() == 2); // duplicate collapsed
    REQUIRE(parsed.warnings.size() == 1);
    CHECK(parsed.warnings[0].find("declares 5") != std::string::npos);
}

TEST_CASE("DIMACS malformed inputs") {
    std::istringstream no_problem("e 1 2\n");
    CHECK_THROWS_AS(parse_dimacs(no_problem), std::invalid_argument);
    std::istringstream bad_tag("p edge 2 0\nx 1 2\n");
    CHECK_THROWS_AS(parse_dimacs(bad_tag), std::invalid_argument);
    std::istringstream empty("");
    CHECK_THROWS_AS(parse_dimacs(empty), std::invalid_argument);
}

TEST_CASE("edge list parsing") {
    std::istringstream in("# comment\n2\n");
    auto parsed = parse_edgelist(in);
    CHECK(parsed.graph == empty_graph(2));

    std::istringstream in2("4\n0 1\n2 3\n");
    CHECK(parse_edgelist(in2).graph.edge_count() == 2);

    std::istringstream bad("3\n0\n");
    CHECK_THROWS_AS(parse_edgelist(bad), std::invalid_argument);
    std::istringstream none("");
    CHECK_THROWS_AS(parse_edgelist(none), std::invalid_argument);
}

TEST_CASE("edge list round trip") {
    int idx = 0;
    for (int n : {1, 4, 9, 14}) {
        for (int i = 0; i < 8; ++i) {
            Graph g = random_graph(n, 0.4, 2200 + static_cast<std::uint64_t>(idx++));
            std::ostringstream out;
            write_edgelist(g, out);
            std::istringstream in(out.str());
            CHECK(parse_edgelist(in).graph == g);
        }
    }
}

TEST_CASE("DIMACS round trip") {
    int idx = 0;
    for (int n : {2, 6, 11}) {
        for (int i = 0; i < 8; ++i) {
            Graph g = random_graph(n, 0.5, 3300 + static_cast<std::uint64_t>(idx++));
            std::ostringstream out;
            write_dimacs(g, out);
            std::istringstream in(out.str());
            auto parsed = parse_dimacs(in);
            CHECK(parsed.graph == g);
            CHECK(parsed.warnings.empty());
        }
    }
}

TEST_CASE("coloring files") {
    std::istringstream in("1 2 1\n");
    auto c = parse_coloring(in, 3);
    CHECK(c.num_colors == 2);

    std::istringstream wrong_count("1 2\n");
    CHECK_THROWS_AS(parse_coloring(wrong_count, 3), std::invalid_argument);
    std::istringstream gap("1 3 1\n");
    CHECK_THROWS_AS(parse_coloring(gap, 3), std::invalid_argument);
}

TEST_CASE("file loading errors") {
    CHECK_THROWS_AS(parse_graph_file("/nonexistent/file.col", GraphFormat::dimacs), std::invalid_argument);
    CHECK_THROWS_AS(parse_coloring_file("/nonexistent/colors.txt", 3), std::invalid_argument);
}
