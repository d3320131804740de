#pragma once

#include <numeric>
#include <optional>
#include <queue>

#include "mdc/coloring.hpp"
#include "mdc/graph.hpp"

namespace mdc {

enum class SearchStatus { solved, budget_exhausted };

struct ColoringResult {
    SearchStatus status = SearchStatus::solved;
    int value = 0;
    std::optional<Coloring> witness;
    std::uint64_t nodes = 0;
};

struct VertexSetResult {
    int value = 0;
    std::vector<int> witness;
    std::uint64_t nodes = 0;
};

struct MatchingResult {
    int value = 0;
    std::vector<std::pair<int, int>> witness;
    std::uint64_t nodes = 0;
};

namespace detail {

struct BudgetExceeded {};

enum class ColoringMode { proper, dominator, majority };

/// Backtracking search for a coloring with at most k colors, vertices tried in
/// descending-degree order, color c admitted only once 1..c-1 are in use.
/// Prunes are restricted to ones that stay valid as classes grow:
///  - a vertex whose closed neighborhood is fully colored must already meet
///    the mode's domination test against current class sizes;
///  - once all k colors are in use no new class can appear, so the test also
///    applies with every uncolored neighbor counted as a best-case hit.
template <ColoringMode Mode>
class ColoringSearcher {
public:
    ColoringSearcher(const Graph& g, std::optional<std::uint64_t> budget)
        : g_(g), n_(g.order()), budget_(budget) {
        order_.resize(static_cast<std::size_t>(n_));
        std::iota(order_.begin(), order_.end(), 0);
        std::sort(order_.begin(), order_.end(), [&](int a, int b) {
            int da = g_.degree(a), db = g_.degree(b);
            return da != db ? da > db : a < b;
        });
        closed_.resize(static_cast<std::size_t>(n_));
        for (int v = 0; v < n_; ++v) closed_[static_cast<std::size_t>(v)] = g_.closed_neighborhood_mask(v);
    }

    std::uint64_t nodes() const { return nodes_; }

    std::optional<Coloring> feasible(int k) {
        k_ = k;
        color_.assign(static_cast<std::size_t>(n_), 0);
        class_mask_.assign(static_cast<std::size_t>(k) + 1, 0);
        class_size_.assign(static_cast<std::size_t>(k) + 1, 0);
        uncolored_nb_.resize(static_cast<std::size_t>(n_));
        for (int v = 0; v < n_; ++v)
            uncolored_nb_[static_cast<std::size_t>(v)] = popcount(closed_[static_cast<std::size_t>(v)]);
        if constexpr (Mode == ColoringMode::majority)
            cnt_.assign(static_cast<std::size_t>(n_) * (static_cast<std::size_t>(k) + 1), 0);
        used_ = 0;
        if (rec(0)) return Coloring::from_assignment(color_);
        return std::nullopt;
    }

private:
    int& cnt(int v, int c) {
        return cnt_[static_cast<std::size_t>(v) * (static_cast<std::size_t>(k_) + 1) +
                    static_cast<std::size_t>(c)];
    }

    void assign(int v, int c) {
        color_[static_cast<std::size_t>(v)] = c;
        class_mask_[static_cast<std::size_t>(c)] |= bit(v);
        ++class_size_[static_cast<std::size_t>(c)];
        for_each_bit(closed_[static_cast<std::size_t>(v)], [&](int w) {
            --uncolored_nb_[static_cast<std::size_t>(w)];
            if constexpr (Mode == ColoringMode::majority) ++cnt(w, c);
        });
    }

    void unassign(int v, int c) {
        color_[static_cast<std::size_t>(v)] = 0;
        class_mask_[static_cast<std::size_t>(c)] &= ~bit(v);
        --class_size_[static_cast<std::size_t>(c)];
        for_each_bit(closed_[static_cast<std::size_t>(v)], [&](int w) {
            ++uncolored_nb_[static_cast<std::size_t>(w)];
            if constexpr (Mode == ColoringMode::majority) --cnt(w, c);
        });
    }

    bool prune_ok() {
        if constexpr (Mode == ColoringMode::proper) return true;
        bool saturated = (used_ == k_);
        for (int v = 0; v < n_; ++v) {
            int unc = uncolored_nb_[static_cast<std::size_t>(v)];
            if constexpr (Mode == ColoringMode::dominator) {
                if (unc != 0 && !saturated) continue;
                // a class with a member outside N[v] never returns inside, and
                // new classes cannot reach N[v] once it is fully colored or all
                // k colors are in use
                bool ok = false;
                VertexMask nb = closed_[static_cast<std::size_t>(v)];
                for (int c = 1; c <= used_ && !ok; ++c)
                    ok = (class_mask_[static_cast<std::size_t>(c)] & ~nb) == 0;
                if (!ok) return false;
            } else { // majority
                if (unc == 0) {
                    bool ok = false;
                    for (int c = 1; c <= used_ && !ok; ++c)
                        ok = 2 * cnt(v, c) >= class_size_[static_cast<std::size_t>(c)];
                    if (!ok) return false;
                } else if (saturated) {
                    bool ok = false;
                    for (int c = 1; c <= k_ && !ok; ++c)
                        ok = 2 * (cnt(v, c) + unc) >= class_size_[static_cast<std::size_t>(c)];
                    if (!ok) return false;
                }
            }
        }
        return true;
    }

    bool leaf_ok() {
        if constexpr (Mode == ColoringMode::proper) return true;
        Coloring c = Coloring::from_assignment(color_);
        if constexpr (Mode == ColoringMode::dominator) return is_dominator_coloring(g_, c);
        else return is_mdc(g_, c);
    }

    bool rec(int depth) {
        if (depth == n_) return leaf_ok();
        int v = order_[static_cast<std::size_t>(depth)];
        int cmax = std::min(used_ + 1, k_);
        for (int c = 1; c <= cmax; ++c) {
            if (class_mask_[static_cast<std::size_t>(c)] & g_.adjacency_mask(v)) continue;
            ++nodes_;
            if (budget_ && nodes_ > *budget_) throw BudgetExceeded{};
            int prev_used = used_;
            used_ = std::max(used_, c);
            assign(v, c);
            if (prune_ok() && rec(depth + 1)) return true;
            unassign(v, c);
            used_ = prev_used;
        }
        return false;
    }

    const Graph& g_;
    int n_;
    std::vector<int> order_;
    std::vector<VertexMask> closed_;
    std::optional<std::uint64_t> budget_;
    std::uint64_t nodes_ = 0;

    int k_ = 0;
    std::vector<int> color_;
    std::vector<VertexMask> class_mask_;
    std::vector<int> class_size_;
    std::vector<int> uncolored_nb_;
    std::vector<int> cnt_;
    int used_ = 0;
};

} // namespace detail

/// Exact chromatic number with a proper-coloring witness.
inline ColoringResult chromatic_number(const Graph& g, std::optional<std::uint64_t> budget = std::nullopt) {
    if (g.order() == 0) throw std::invalid_argument("chromatic number undefined for the empty graph");
    detail::ColoringSearcher<detail::ColoringMode::proper> search(g, budget);
    try {
        for (int k = 1; k <= g.order(); ++k) {
            if (auto w = search.feasible(k)) return {SearchStatus::solved, k, std::move(w), search.nodes()};
        }
    } catch (const detail::BudgetExceeded&) {
        return {SearchStatus::budget_exhausted, 0, std::nullopt, search.nodes()};
    }
    throw std::logic_error("proper coloring with n colors must exist");
}

/// Exact dominator chromatic number; ascending scan from chi(g).
inline ColoringResult dominator_chromatic_number(const Graph& g,
                                                 std::optional<std::uint64_t> budget = std::nullopt) {
    if (g.order() == 0) throw std::invalid_argument("dominator chromatic number undefined for the empty graph");
    auto chi = chromatic_number(g, budget);
    if (chi.status != SearchStatus::solved)
        return {SearchStatus::budget_exhausted, 0, std::nullopt, chi.nodes};
    detail::ColoringSearcher<detail::ColoringMode::dominator> search(g, budget);
    try {
        for (int k = chi.value; k <= g.order(); ++k) {
            if (auto w = search.feasible(k)) return {SearchStatus::solved, k, std::move(w), search.nodes()};
        }
    } catch (const detail::BudgetExceeded&) {
        return {SearchStatus::budget_exhausted, 0, std::nullopt, search.nodes()};
    }
    throw std::logic_error("singleton coloring is always a dominator coloring");
}

inline bool is_independent_set(const Graph& g, VertexMask s) {
    bool ok = true;
    for_each_bit(s, [&](int v) { ok = ok && (g.adjacency_mask(v) & s) == 0; });
    return ok;
}

inline bool is_dominating_set(const Graph& g, VertexMask s) {
    VertexMask covered = 0;
    for_each_bit(s, [&](int v) { covered |= g.closed_neighborhood_mask(v); });
    return covered == g.vertex_mask();
}

inline bool is_matching(const Graph& g, const std::vector<std::pair<int, int>>& m) {
    VertexMask seen = 0;
    for (auto [u, v] : m) {
        if (!g.has_edge(u, v)) return false;
        if (seen & (bit(u) | bit(v))) return false;
        seen |= bit(u) | bit(v);
    }
    return true;
}

namespace detail {

/// Max independent set size within `allowed`, branch and bound.
inline void mis_rec(const Graph& g, VertexMask allowed, int size, int& best, std::uint64_t& nodes) {
    ++nodes;
    if (size + popcount(allowed) <= best) return;
    if (allowed == 0) {
        best = std::max(best, size);
        return;
    }
    // branch on the highest-degree remaining vertex
    int pick = -1, pdeg = -1;
    for_each_bit(allowed, [&](int v) {
        int d = popcount(g.adjacency_mask(v) & allowed);
        if (d > pdeg) { pdeg = d; pick = v; }
    });
    mis_rec(g, allowed & ~g.closed_neighborhood_mask(pick), size + 1, best, nodes);
    mis_rec(g, allowed & ~bit(pick), size, best, nodes);
}

inline int mis_size(const Graph& g, VertexMask allowed, std::uint64_t& nodes) {
    int best = 0;
    mis_rec(g, allowed, 0, best, nodes);
    return best;
}

} // namespace detail

/// Maximum independent set; the witness is the lexicographically least
/// maximum set (as a sorted vertex sequence).
inline VertexSetResult independence_number(const Graph& g) {
    if (g.order() == 0) throw std::invalid_argument("independence number undefined for the empty graph");
    std::uint64_t nodes = 0;
    int alpha = detail::mis_size(g, g.vertex_mask(), nodes);
    std::vector<int> witness;
    VertexMask avail = g.vertex_mask();
    int need = alpha;
    for (int v = 0; v < g.order() && need > 0; ++v) {
        if (!(avail & bit(v))) continue;
        if (1 + detail::mis_size(g, avail & ~g.closed_neighborhood_mask(v), nodes) == need) {
            witness.push_back(v);
            avail &= ~g.closed_neighborhood_mask(v);
            --need;
        } else {
            avail &= ~bit(v);
        }
    }
    return {alpha, std::move(witness), nodes};
}

namespace detail {

inline void dom_rec(const Graph& g, VertexMask covered, std::vector<int>& chosen, std::vector<int>& best,
                    std::uint64_t& nodes) {
    ++nodes;
    if (covered == g.vertex_mask()) {
        if (best.empty() || chosen.size() < best.size()) best = chosen;
        return;
    }
    if (!best.empty() && chosen.size() + 1 >= best.size()) return;
    int v = std::countr_zero(~covered & g.vertex_mask()); // lowest uncovered
    for_each_bit(g.closed_neighborhood_mask(v), [&](int u) {
        if (!best.empty() && chosen.size() + 1 >= best.size()) return;
        chosen.push_back(u);
        dom_rec(g, covered | g.closed_neighborhood_mask(u), chosen, best, nodes);
        chosen.pop_back();
    });
}

} // namespace detail

/// Minimum dominating set via branch and bound on the lowest uncovered vertex.
inline VertexSetResult domination_number(const Graph& g) {
    if (g.order() == 0) throw std::invalid_argument("domination number undefined for the empty graph");
    std::vector<int> chosen, best;
    std::uint64_t nodes = 0;
    detail::dom_rec(g, 0, chosen, best, nodes);
    std::sort(best.begin(), best.end());
    return {static_cast<int>(best.size()), std::move(best), nodes};
}

namespace detail {

/// Maximum matching in a general graph (blossom contraction).
class BlossomMatcher {
public:
    explicit BlossomMatcher(const Graph& g) : g_(g), n_(g.order()) {
        match_.assign(static_cast<std::size_t>(n_), -1);
        p_.assign(static_cast<std::size_t>(n_), -1);
        base_.assign(static_cast<std::size_t>(n_), 0);
    }

    std::vector<std::pair<int, int>> solve() {
        for (int v = 0; v < n_; ++v)
            if (match_[static_cast<std::size_t>(v)] == -1) find_path(v);
        std::vector<std::pair<int, int>> out;
        for (int v = 0; v < n_; ++v)
            if (match_[static_cast<std::size_t>(v)] > v)
                out.emplace_back(v, match_[static_cast<std::size_t>(v)]);
        return out;
    }

private:
    int lca(int a, int b) {
        std::vector<char> mark(static_cast<std::size_t>(n_), 0);
        for (;;) {
            a = base_[static_cast<std::size_t>(a)];
            mark[static_cast<std::size_t>(a)] = 1;
            if (match_[static_cast<std::size_t>(a)] == -1) break;
            a = p_[static_cast<std::size_t>(match_[static_cast<std::size_t>(a)])];
        }
        for (;;) {
            b = base_[static_cast<std::size_t>(b)];
            if (mark[static_cast<std::size_t>(b)]) return b;
            b = p_[static_cast<std::size_t>(match_[static_cast<std::size_t>(b)])];
        }
    }

    void mark_path(int v, int b, int child, std::vector<char>& blossom) {
        while (base_[static_cast<std::size_t>(v)] != b) {
            blossom[static_cast<std::size_t>(base_[static_cast<std::size_t>(v)])] = 1;
            blossom[static_cast<std::size_t>(base_[static_cast<std::size_t>(match_[static_cast<std::size_t>(v)])])] = 1;
            p_[static_cast<std::size_t>(v)] = child;
            child = match_[static_cast<std::size_t>(v)];
            v = p_[static_cast<std::size_t>(child)];
        }
    }

    bool find_path(int root) {
        std::vector<char> used(static_cast<std::size_t>(n_), 0);
        std::fill(p_.begin(), p_.end(), -1);
        std::iota(base_.begin(), base_.end(), 0);
        used[static_cast<std::size_t>(root)] = 1;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int to : g_.neighbors(v)) {
                if (base_[static_cast<std::size_t>(v)] == base_[static_cast<std::size_t>(to)] ||
                    match_[static_cast<std::size_t>(v)] == to)
                    continue;
                if (to == root ||
                    (match_[static_cast<std::size_t>(to)] != -1 &&
                     p_[static_cast<std::size_t>(match_[static_cast<std::size_t>(to)])] != -1)) {
                    int cur_base = lca(v, to);
                    std::vector<char> blossom(static_cast<std::size_t>(n_), 0);
                    mark_path(v, cur_base, to, blossom);
                    mark_path(to, cur_base, v, blossom);
                    for (int i = 0; i < n_; ++i)
                        if (blossom[static_cast<std::size_t>(base_[static_cast<std::size_t>(i)])]) {
                            base_[static_cast<std::size_t>(i)] = cur_base;
                            if (!used[static_cast<std::size_t>(i)]) {
                                used[static_cast<std::size_t>(i)] = 1;
                                q.push(i);
                            }
                        }
                } else if (p_[static_cast<std::size_t>(to)] == -1) {
                    p_[static_cast<std::size_t>(to)] = v;
                    if (match_[static_cast<std::size_t>(to)] == -1) {
                        // augment along the alternating path ending at `to`
                        int u = to;
                        while (u != -1) {
                            int pv = p_[static_cast<std::size_t>(u)];
                            int ppv = match_[static_cast<std::size_t>(pv)];
                            match_[static_cast<std::size_t>(u)] = pv;
                            match_[static_cast<std::size_t>(pv)] = u;
                            u = ppv;
                        }
                        return true;
                    }
                    used[static_cast<std::size_t>(match_[static_cast<std::size_t>(to)])] = 1;
                    q.push(match_[static_cast<std::size_t>(to)]);
                }
            }
        }
        return false;
    }

    const Graph& g_;
    int n_;
    std::vector<int> match_, p_, base_;
};

} // namespace detail

/// Maximum matching size with a witness edge set.
inline MatchingResult matching_number(const Graph& g) {
    detail::BlossomMatcher matcher(g);
    auto edges = matcher.solve();
    return {static_cast<int>(edges.size()), std::move(edges), 0};
}

} // namespace mdc
