#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "mdc/graph.hpp"

namespace mdc {

/// Total vertex coloring with colors 1..k, every color used at least once.
struct Coloring {
    std::vector<int> assignment; ///< assignment[v] in 1..k
    int num_colors = 0;

    /// Validates totality and contiguity of color ids.
    static Coloring from_assignment(std::vector<int> colors) {
        int k = 0;
        for (int c : colors) {
            if (c < 1) throw std::invalid_argument("colors must be positive integers");
            k = std::max(k, c);
        }
        std::vector<char> used(static_cast<std::size_t>(k) + 1, 0);
        for (int c : colors) used[static_cast<std::size_t>(c)] = 1;
        for (int c = 1; c <= k; ++c)
            if (!used[static_cast<std::size_t>(c)])
                throw std::invalid_argument("color ids not contiguous: color " + std::to_string(c) + " unused");
        Coloring out;
        out.assignment = std::move(colors);
        out.num_colors = k;
        return out;
    }

    int color(int v) const { return assignment[static_cast<std::size_t>(v)]; }
    int order() const { return static_cast<int>(assignment.size()); }

    /// Members of color class i as a bit mask.
    VertexMask class_mask(int i) const {
        VertexMask m = 0;
        for (int v = 0; v < order(); ++v)
            if (assignment[static_cast<std::size_t>(v)] == i) m |= bit(v);
        return m;
    }

    std::vector<int> class_sizes() const {
        std::vector<int> sz(static_cast<std::size_t>(num_colors) + 1, 0);
        for (int c : assignment) ++sz[static_cast<std::size_t>(c)];
        return sz;
    }

    friend bool operator==(const Coloring& a, const Coloring& b) {
        return a.assignment == b.assignment;
    }
};

struct Violation {
    enum class Kind { not_proper, no_dominated_class };

    Kind kind;
    int u = -1; ///< offending vertex (for not_proper: one edge endpoint)
    int v = -1; ///< second endpoint for not_proper, unused otherwise
    /// For no_dominated_class: per-class |N[u] ∩ V_i| and threshold ceil(|V_i|/2), indexed by color.
    std::vector<std::pair<int, int>> class_counts;

    std::string to_string() const {
        std::ostringstream os;
        if (kind == Kind::not_proper) {
            os << "not proper: edge (" << u << "," << v << ") has both endpoints in one class";
        } else {
            os << "vertex " << u << " dominates no color class;";
            for (std::size_t i = 1; i < class_counts.size(); ++i)
                os << " class " << i << ": " << class_counts[i].first << "/" << class_counts[i].second;
        }
        return os.str();
    }
};

inline bool is_proper_coloring(const Graph& g, const Coloring& c) {
    if (c.order() != g.order()) throw std::invalid_argument("coloring size does not match graph order");
    for (auto [u, v] : g.edges())
        if (c.color(u) == c.color(v)) return false;
    return true;
}

/// Colors i with |N[v] ∩ V_i| >= ceil(|V_i|/2). Diagnostic: does not require properness.
inline std::vector<int> dominated_classes(const Graph& g, const Coloring& c, int v) {
    if (c.order() != g.order()) throw std::invalid_argument("coloring size does not match graph order");
    if (v < 0 || v >= g.order()) throw std::invalid_argument("vertex out of range");
    auto sizes = c.class_sizes();
    std::vector<int> counts(static_cast<std::size_t>(c.num_colors) + 1, 0);
    for_each_bit(g.closed_neighborhood_mask(v), [&](int u) { ++counts[static_cast<std::size_t>(c.color(u))]; });
    std::vector<int> out;
    for (int i = 1; i <= c.num_colors; ++i)
        if (2 * counts[static_cast<std::size_t>(i)] >= sizes[static_cast<std::size_t>(i)]) out.push_back(i);
    return out;
}

/// All violations of the majority dominator condition; empty result means valid.
inline std::vector<Violation> verify_mdc(const Graph& g, const Coloring& c) {
    if (c.order() != g.order()) throw std::invalid_argument("coloring size does not match graph order");
    std::vector<Violation> out;
    for (auto [u, v] : g.edges())
        if (c.color(u) == c.color(v)) out.push_back({Violation::Kind::not_proper, u, v, {}});
    auto sizes = c.class_sizes();
    for (int v = 0; v < g.order(); ++v) {
        std::vector<int> counts(static_cast<std::size_t>(c.num_colors) + 1, 0);
        for_each_bit(g.closed_neighborhood_mask(v),
                     [&](int u) { ++counts[static_cast<std::size_t>(c.color(u))]; });
        bool ok = false;
        for (int i = 1; i <= c.num_colors && !ok; ++i)
            ok = 2 * counts[static_cast<std::size_t>(i)] >= sizes[static_cast<std::size_t>(i)];
        if (!ok) {
            Violation viol{Violation::Kind::no_dominated_class, v, -1, {}};
            viol.class_counts.resize(static_cast<std::size_t>(c.num_colors) + 1);
            for (int i = 1; i <= c.num_colors; ++i)
                viol.class_counts[static_cast<std::size_t>(i)] = {
                    counts[static_cast<std::size_t>(i)],
                    (sizes[static_cast<std::size_t>(i)] + 1) / 2};
            out.push_back(std::move(viol));
        }
    }
    return out;
}

inline bool is_mdc(const Graph& g, const Coloring& c) { return verify_mdc(g, c).empty(); }

/// Dominator coloring check: proper and every vertex has some class entirely
/// inside its closed neighborhood.
inline bool is_dominator_coloring(const Graph& g, const Coloring& c) {
    if (!is_proper_coloring(g, c)) return false;
    std::vector<VertexMask> classes(static_cast<std::size_t>(c.num_colors) + 1, 0);
    for (int v = 0; v < g.order(); ++v) classes[static_cast<std::size_t>(c.color(v))] |= bit(v);
    for (int v = 0; v < g.order(); ++v) {
        VertexMask nb = g.closed_neighborhood_mask(v);
        bool ok = false;
        for (int i = 1; i <= c.num_colors && !ok; ++i)
            ok = (classes[static_cast<std::size_t>(i)] & ~nb) == 0;
        if (!ok) return false;
    }
    return true;
}

} // namespace mdc
