#pragma once

#include <random>

#include "mdc/formulas.hpp"
#include "mdc/solver.hpp"

namespace mdc {

/// Compact reproducible graph encoding for reports.
inline std::string encode_graph(const Graph& g) {
    std::ostringstream os;
    os << "n=" << g.order() << ";edges=";
    bool first = true;
    for (auto [u, v] : g.edges()) {
        os << (first ? "" : ",") << u << "-" << v;
        first = false;
    }
    return os.str();
}

inline Graph decode_graph(const std::string& text) {
    auto semi = text.find(";edges=");
    if (text.rfind("n=", 0) != 0 || semi == std::string::npos)
        throw std::invalid_argument("bad graph encoding '" + text + "'");
    int n = std::stoi(text.substr(2, semi - 2));
    std::vector<std::pair<int, int>> edges;
    std::string rest = text.substr(semi + 7);
    std::istringstream is(rest);
    std::string item;
    while (std::getline(is, item, ',')) {
        auto dash = item.find('-');
        if (dash == std::string::npos) throw std::invalid_argument("bad edge in encoding '" + item + "'");
        edges.emplace_back(std::stoi(item.substr(0, dash)), std::stoi(item.substr(dash + 1)));
    }
    return Graph::from_edges(n, edges);
}

struct CheckFailure {
    std::string graph;    ///< encode_graph of the offending member
    std::string relation; ///< the expected relation
    std::string observed; ///< the values seen
};

struct CheckReport {
    std::string theorem_id;
    std::string population;
    long tested = 0;
    std::vector<CheckFailure> failures;
    std::vector<std::string> skipped; ///< members whose solve ran out of budget
    long equality_hits = 0;           ///< members attaining the bound exactly

    bool ok() const { return failures.empty(); }

    std::string summary() const {
        std::ostringstream os;
        os << theorem_id << " [" << population << "]: tested=" << tested
           << " failures=" << failures.size() << " skipped=" << skipped.size();
        if (equality_hits > 0) os << " equality_hits=" << equality_hits;
        return os.str();
    }
};

/// All labeled simple graphs on n vertices, ascending edge-mask order.
template <typename Fn>
void for_each_labeled_graph(int n, Fn&& fn) {
    if (n > 6) throw std::invalid_argument("exhaustive enumeration capped at order 6");
    if (n < 1) throw std::invalid_argument("enumeration needs n >= 1");
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    std::uint64_t total = std::uint64_t{1} << pairs.size();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        std::vector<std::pair<int, int>> edges;
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if (mask >> i & 1) edges.push_back(pairs[i]);
        fn(Graph::from_edges(n, edges));
    }
}

inline std::vector<Graph> enumerate_graphs(int n) {
    std::vector<Graph> out;
    for_each_labeled_graph(n, [&](const Graph& g) { out.push_back(g); });
    return out;
}

/// Erdos-Renyi style sample, reproducible from the seed. The raw engine
/// output is mapped to [0,1) directly so results do not depend on the
/// standard library's distribution implementation.
inline Graph random_graph(int n, double p, std::uint64_t seed) {
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("edge probability must be in [0,1]");
    std::mt19937_64 rng(seed);
    auto unit = [&]() { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (unit() < p) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

/// Population of graphs a check runs over.
struct GraphPopulation {
    enum class Mode { exhaustive_labeled, random };

    Mode mode = Mode::exhaustive_labeled;
    int max_n = 5;          ///< exhaustive: all labeled graphs of order 1..max_n
    int n = 8;              ///< random: order
    double p = 0.5;         ///< random: edge probability
    std::uint64_t seed = 1; ///< random: base seed; member i uses seed+i
    int count = 50;         ///< random: sample count
    bool connected_only = false;
    int min_components = 0; ///< keep members with at least this many components

    static GraphPopulation Exhaustive(int max_n, bool connected = false) {
        GraphPopulation pop;
        pop.mode = Mode::exhaustive_labeled;
        pop.max_n = max_n;
        pop.connected_only = connected;
        return pop;
    }
    static GraphPopulation Random(int n, double p, std::uint64_t seed, int count, bool connected = false) {
        GraphPopulation pop;
        pop.mode = Mode::random;
        pop.n = n;
        pop.p = p;
        pop.seed = seed;
        pop.count = count;
        pop.connected_only = connected;
        return pop;
    }

    std::string describe() const {
        std::ostringstream os;
        if (mode == Mode::exhaustive_labeled) os << "exhaustive labeled n<=" << max_n;
        else os << "random n=" << n << " p=" << p << " seed=" << seed << " count=" << count;
        if (connected_only) os << " connected";
        if (min_components >= 2) os << " components>=" << min_components;
        return os.str();
    }

    template <typename Fn>
    void for_each(Fn&& fn) const {
        auto emit = [&](const Graph& g) {
            if (connected_only && !is_connected(g)) return;
            if (min_components >= 2 && static_cast<int>(components(g).size()) < min_components) return;
            fn(g);
        };
        if (mode == Mode::exhaustive_labeled) {
            for (int n_i = 1; n_i <= max_n; ++n_i)
                for_each_labeled_graph(n_i, emit);
        } else {
            for (int i = 0; i < count; ++i) emit(random_graph(n, p, seed + static_cast<std::uint64_t>(i)));
        }
    }
};

namespace detail {

struct BudgetedValue {
    bool ok = false;
    int value = 0;
};

inline BudgetedValue solve_mdc(const Graph& g, std::optional<std::uint64_t> budget) {
    auto r = mdc_number(g, budget);
    return {r.status == SearchStatus::solved, r.value};
}

inline BudgetedValue solve_chi_d(const Graph& g, std::optional<std::uint64_t> budget) {
    auto r = dominator_chromatic_number(g, budget);
    return {r.status == SearchStatus::solved, r.value};
}

} // namespace detail

/// chi <= chi_md <= chi_d <= n together with chi_md <= chi + gamma.
inline CheckReport check_bound_chain(const GraphPopulation& pop,
                                     std::optional<std::uint64_t> budget = std::nullopt) {
    CheckReport rep{"bound-chain", pop.describe(), 0, {}, {}, 0};
    pop.for_each([&](const Graph& g) {
        auto md = detail::solve_mdc(g, budget);
        auto dom = detail::solve_chi_d(g, budget);
        if (!md.ok || !dom.ok) {
            rep.skipped.push_back(encode_graph(g));
            return;
        }
        ++rep.tested;
        int chi = chromatic_number(g).value;
        int gamma = domination_number(g).value;
        bool chain = chi <= md.value && md.value <= dom.value && dom.value <= g.order();
        bool gamma_bound = md.value <= chi + gamma;
        if (!chain || !gamma_bound) {
            std::ostringstream os;
            os << "chi=" << chi << " chi_md=" << md.value << " chi_d=" << dom.value << " gamma=" << gamma
               << " n=" << g.order();
            rep.failures.push_back({encode_graph(g), "chi<=chi_md<=chi_d<=n and chi_md<=chi+gamma", os.str()});
        }
    });
    return rep;
}

/// chi_md <= chi + ceil(alpha/2) - 1 on connected members; equality recorded.
inline CheckReport check_alpha_bound(GraphPopulation pop, std::optional<std::uint64_t> budget = std::nullopt) {
    pop.connected_only = true;
    CheckReport rep{"alpha-bound", pop.describe(), 0, {}, {}, 0};
    pop.for_each([&](const Graph& g) {
        auto md = detail::solve_mdc(g, budget);
        if (!md.ok) {
            rep.skipped.push_back(encode_graph(g));
            return;
        }
        ++rep.tested;
        int chi = chromatic_number(g).value;
        int alpha = independence_number(g).value;
        int bound = chi + (alpha + 1) / 2 - 1;
        if (md.value > bound) {
            std::ostringstream os;
            os << "chi_md=" << md.value << " chi=" << chi << " alpha=" << alpha << " bound=" << bound;
            rep.failures.push_back({encode_graph(g), "chi_md <= chi + ceil(alpha/2) - 1", os.str()});
        } else if (md.value == bound) {
            ++rep.equality_hits;
        }
    });
    return rep;
}

/// chi_md <= n + 1 - alpha - nu(complement of g minus I) with the solver's
/// deterministic maximum independent set I.
inline CheckReport check_matching_bound(GraphPopulation pop,
                                        std::optional<std::uint64_t> budget = std::nullopt) {
    pop.connected_only = true;
    CheckReport rep{"matching-bound", pop.describe(), 0, {}, {}, 0};
    pop.for_each([&](const Graph& g) {
        if (g.order() < 2) return;
        auto md = detail::solve_mdc(g, budget);
        if (!md.ok) {
            rep.skipped.push_back(encode_graph(g));
            return;
        }
        ++rep.tested;
        auto alpha = independence_number(g);
        VertexMask iset = 0;
        for (int v : alpha.witness) iset |= bit(v);
        auto rest = induced_subgraph(g, g.vertex_mask() & ~iset);
        int nu = matching_number(complement(rest.graph)).value;
        int bound = g.order() + 1 - alpha.value - nu;
        if (md.value > bound) {
            std::ostringstream os;
            os << "chi_md=" << md.value << " alpha=" << alpha.value << " nu=" << nu << " bound=" << bound;
            rep.failures.push_back({encode_graph(g), "chi_md <= n + 1 - alpha - nu(comp(g-I))", os.str()});
        } else if (md.value == bound) {
            ++rep.equality_hits;
        }
    });
    return rep;
}

namespace detail {

/// Is there a split of V into independent X, Y matching one of the three
/// structural cases that make the two-class coloring majority dominator?
/// Degree thresholds are compared as 2*d >= size so no rounding is involved.
inline bool has_two_class_bipartition(const Graph& g) {
    int n = g.order();
    if (n < 2) return false;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
        VertexMask x = bit(0);
        for (int v = 1; v < n; ++v)
            if (mask >> (v - 1) & 1) x |= bit(v);
        VertexMask y = g.vertex_mask() & ~x;
        if (y == 0) continue;
        if (!is_independent_set(g, x) || !is_independent_set(g, y)) continue;
        VertexMask small = popcount(x) <= popcount(y) ? x : y;
        VertexMask big = small == x ? y : x;
        int ns = popcount(small), nb = popcount(big);
        if (nb <= 2) return true;
        if (ns <= 2) {
            bool all_deg = true;
            for_each_bit(big, [&](int v) { all_deg = all_deg && g.degree(v) >= 1; });
            if (all_deg) return true;
        } else {
            bool ok = true;
            for_each_bit(small, [&](int v) { ok = ok && 2 * g.degree(v) >= nb; });
            for_each_bit(big, [&](int v) { ok = ok && 2 * g.degree(v) >= ns; });
            if (ok) return true;
        }
    }
    return false;
}

inline bool complement_edges_form_star(const Graph& g) {
    Graph co = complement(g);
    auto edges = co.edges();
    if (edges.empty() || static_cast<int>(edges.size()) > g.order() - 2) return false;
    VertexMask common = bit(edges[0].first) | bit(edges[0].second);
    for (auto [u, v] : edges) common &= bit(u) | bit(v);
    return common != 0;
}

} // namespace detail

/// chi_md = 1 iff edgeless of order <= 2; chi_md = 2 iff the structural
/// bipartite condition holds (and the graph is not one of the value-1 cases).
inline CheckReport check_small_value_characterizations(const GraphPopulation& pop,
                                                       std::optional<std::uint64_t> budget = std::nullopt) {
    CheckReport rep{"small-value-characterizations", pop.describe(), 0, {}, {}, 0};
    pop.for_each([&](const Graph& g) {
        auto md = detail::solve_mdc(g, budget);
        if (!md.ok) {
            rep.skipped.push_back(encode_graph(g));
            return;
        }
        ++rep.tested;
        bool trivial = g.order() <= 2 && g.edge_count() == 0;
        bool one_pred = trivial;
        bool two_pred = !trivial && detail::has_two_class_bipartition(g);
        if ((md.value == 1) != one_pred || (md.value == 2) != two_pred) {
            std::ostringstream os;
            os << "chi_md=" << md.value << " value1_pred=" << one_pred << " value2_pred=" << two_pred;
            rep.failures.push_back({encode_graph(g), "chi_md=1 iff edgeless n<=2; chi_md=2 iff bipartite cases",
                                    os.str()});
        }
    });
    return rep;
}

/// chi_md = n iff complete; for connected n >= 3, chi_md = n-1 iff the
/// complement's edges form a star with 1..n-2 edges; Delta >= n-2 forces
/// chi_md = chi on connected members.
inline CheckReport check_large_value_characterizations(const GraphPopulation& pop,
                                                       std::optional<std::uint64_t> budget = std::nullopt) {
    CheckReport rep{"large-value-characterizations", pop.describe(), 0, {}, {}, 0};
    pop.for_each([&](const Graph& g) {
        auto md = detail::solve_mdc(g, budget);
        if (!md.ok) {
            rep.skipped.push_back(encode_graph(g));
            return;
        }
        ++rep.tested;
        int n = g.order();
        bool complete = g.edge_count() == n * (n - 1) / 2;
        bool fail = (md.value == n) != complete;
        std::string relation = "chi_md=n iff K_n";
        bool connected = is_connected(g);
        if (!fail && connected && n >= 3) {
            bool star = detail::complement_edges_form_star(g);
            if ((md.value == n - 1) != star) {
                fail = true;
                relation = "chi_md=n-1 iff complement edges form a star of 1..n-2 edges";
            }
        }
        if (!fail && connected && n >= 1 && max_degree(g) >= n - 2) {
            int chi = chromatic_number(g).value;
            if (md.value != chi) {
                fail = true;
                relation = "Delta >= n-2 forces chi_md = chi";
            }
        }
        if (fail) {
            std::ostringstream os;
            os << "chi_md=" << md.value << " n=" << n << " m=" << g.edge_count();
            rep.failures.push_back({encode_graph(g), relation, os.str()});
        }
    });
    return rep;
}

/// max_j chi_md(G_j) <= chi_md(G) <= sum_j chi_md(G_j) on members with at
/// least two components.
inline CheckReport check_disconnected_bounds(GraphPopulation pop,
                                             std::optional<std::uint64_t> budget = std::nullopt) {
    pop.min_components = 2;
    pop.connected_only = false;
    CheckReport rep{"disconnected-bounds", pop.describe(), 0, {}, {}, 0};
    pop.for_each([&](const Graph& g) {
        auto md = detail::solve_mdc(g, budget);
        if (!md.ok) {
            rep.skipped.push_back(encode_graph(g));
            return;
        }
        int lo = 0, hi = 0;
        for (const auto& comp : components(g)) {
            auto sub = induced_subgraph(g, comp);
            auto sub_md = detail::solve_mdc(sub.graph, budget);
            if (!sub_md.ok) {
                rep.skipped.push_back(encode_graph(g));
                return;
            }
            lo = std::max(lo, sub_md.value);
            hi += sub_md.value;
        }
        ++rep.tested;
        if (!(lo <= md.value && md.value <= hi)) {
            std::ostringstream os;
            os << "max=" << lo << " chi_md=" << md.value << " sum=" << hi;
            rep.failures.push_back({encode_graph(g), "max_j chi_md(G_j) <= chi_md(G) <= sum_j chi_md(G_j)",
                                    os.str()});
        }
    });
    return rep;
}

/// chi_md(G∘K_1) = ceil(n/2)+1 for connected bipartite G of order >= 2.
inline CheckReport check_bipartite_corona(const std::vector<Graph>& graphs,
                                          std::optional<std::uint64_t> budget = std::nullopt) {
    CheckReport rep{"bipartite-corona", "explicit list of " + std::to_string(graphs.size()) + " graphs",
                    0, {}, {}, 0};
    Graph k1 = Graph::from_edges(1, {});
    for (const auto& g : graphs) {
        if (!is_bipartite(g) || !is_connected(g) || g.order() < 2)
            throw std::invalid_argument("bipartite corona check expects connected bipartite graphs of order >= 2");
        Graph h = corona_product(g, k1);
        auto md = detail::solve_mdc(h, budget);
        if (!md.ok) {
            rep.skipped.push_back(encode_graph(g));
            continue;
        }
        ++rep.tested;
        int expect = (g.order() + 1) / 2 + 1;
        if (md.value != expect) {
            std::ostringstream os;
            os << "chi_md(corona)=" << md.value << " expected=" << expect;
            rep.failures.push_back({encode_graph(g), "chi_md(G corona K_1) = ceil(n/2)+1", os.str()});
        }
    }
    return rep;
}

struct ExploreResult {
    std::vector<std::string> equal; ///< encodings with chi_md = chi_d
    long tested = 0;
    long skipped = 0;
};

/// Search aid: members attaining chi_md = chi_d. Asserts nothing.
inline ExploreResult explore_equality_chi_d(const GraphPopulation& pop,
                                            std::optional<std::uint64_t> budget = std::nullopt) {
    ExploreResult out;
    pop.for_each([&](const Graph& g) {
        auto md = detail::solve_mdc(g, budget);
        auto dom = detail::solve_chi_d(g, budget);
        if (!md.ok || !dom.ok) {
            ++out.skipped;
            return;
        }
        ++out.tested;
        if (md.value == dom.value) out.equal.push_back(encode_graph(g));
    });
    return out;
}

} // namespace mdc
