#pragma once

#include <fstream>
#include <istream>
#include <ostream>

#include "mdc/coloring.hpp"
#include "mdc/graph.hpp"

namespace mdc {

enum class GraphFormat { dimacs, edgelist };

struct ParsedGraph {
    Graph graph;
    std::vector<std::string> warnings;
};

/// DIMACS .col: optional "c" comment lines, one "p edge <n> <m>" header,
/// then "e <u> <v>" lines with 1-based endpoints. A wrong edge count in the
/// header is only a warning.
inline ParsedGraph parse_dimacs(std::istream& in) {
    int n = -1;
    long declared_m = -1;
    std::vector<std::pair<int, int>> edges;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream is(line);
        std::string tag;
        if (!(is >> tag) || tag == "c") continue;
        if (tag == "p") {
            std::string kind;
            if (!(is >> kind >> n >> declared_m) || (kind != "edge" && kind != "edges"))
                throw std::invalid_argument("malformed DIMACS problem line at line " + std::to_string(lineno));
            if (n < 0) throw std::invalid_argument("negative order in DIMACS header");
        } else if (tag == "e") {
            if (n < 0) throw std::invalid_argument("DIMACS edge before problem line");
            int u, v;
            if (!(is >> u >> v))
                throw std::invalid_argument("malformed DIMACS edge at line " + std::to_string(lineno));
            if (u < 1 || u > n || v < 1 || v > n)
                throw std::invalid_argument("DIMACS endpoint out of range at line " + std::to_string(lineno));
            edges.emplace_back(u - 1, v - 1);
        } else {
            throw std::invalid_argument("unrecognized DIMACS line tag '" + tag + "' at line " +
                                        std::to_string(lineno));
        }
    }
    if (n < 0) throw std::invalid_argument("DIMACS input has no problem line");
    ParsedGraph out{Graph::from_edges(n, edges), {}};
    if (declared_m >= 0 && declared_m != static_cast<long>(out.graph.edge_count()))
        out.warnings.push_back("DIMACS header declares " + std::to_string(declared_m) + " edges but " +
                               std::to_string(out.graph.edge_count()) + " distinct edges were read");
    return out;
}

/// Plain edge list: first non-comment line is the order, then "u v" pairs,
/// 0-based. Lines starting with '#' are comments.
inline ParsedGraph parse_edgelist(std::istream& in) {
    std::string line;
    int n = -1;
    std::vector<std::pair<int, int>> edges;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream is(line);
        std::string first;
        if (!(is >> first) || first[0] == '#') continue;
        if (n < 0) {
            n = std::stoi(first);
            int extra;
            if (is >> extra) throw std::invalid_argument("edge list header must be a single integer");
            continue;
        }
        int u = std::stoi(first), v;
        if (!(is >> v)) throw std::invalid_argument("malformed edge at line " + std::to_string(lineno));
        edges.emplace_back(u, v);
    }
    if (n < 0) throw std::invalid_argument("edge list input is empty");
    return {Graph::from_edges(n, edges), {}};
}

inline ParsedGraph parse_graph(std::istream& in, GraphFormat format) {
    return format == GraphFormat::dimacs ? parse_dimacs(in) : parse_edgelist(in);
}

inline ParsedGraph parse_graph_file(const std::string& path, GraphFormat format) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open graph file '" + path + "'");
    return parse_graph(in, format);
}

inline void write_edgelist(const Graph& g, std::ostream& out) {
    out << g.order() << "\n";
    for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
}

inline void write_dimacs(const Graph& g, std::ostream& out) {
    out << "p edge " << g.order() << " " << g.edge_count() << "\n";
    for (auto [u, v] : g.edges()) out << "e " << u + 1 << " " << v + 1 << "\n";
}

/// Coloring file: whitespace-separated integers, one per vertex in index
/// order. Contiguity is validated by Coloring::from_assignment.
inline Coloring parse_coloring(std::istream& in, int order) {
    std::vector<int> colors;
    int c;
    while (in >> c) colors.push_back(c);
    if (static_cast<int>(colors.size()) != order)
        throw std::invalid_argument("coloring has " + std::to_string(colors.size()) + " entries for order " +
                                    std::to_string(order));
    return Coloring::from_assignment(std::move(colors));
}

inline Coloring parse_coloring_file(const std::string& path, int order) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open coloring file '" + path + "'");
    return parse_coloring(in, order);
}

} // namespace mdc
