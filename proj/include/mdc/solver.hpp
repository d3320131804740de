#pragma once

#include "mdc/invariants.hpp"

namespace mdc {

/// Searches for a majority dominator coloring with at most k colors.
/// Deterministic for a fixed graph; witness passes verify_mdc.
/// Throws detail::BudgetExceeded wrapped as budget_exhausted status via
/// mdc_number; the raw feasibility call reports it through the result.
struct FeasibilityResult {
    SearchStatus status = SearchStatus::solved;
    std::optional<Coloring> witness;
    std::uint64_t nodes = 0;
};

inline FeasibilityResult mdc_feasible(const Graph& g, int k,
                                      std::optional<std::uint64_t> budget = std::nullopt) {
    if (g.order() == 0) throw std::invalid_argument("majority dominator coloring undefined for the empty graph");
    if (k < 1 || k > g.order()) throw std::invalid_argument("color count out of range 1..n");
    detail::ColoringSearcher<detail::ColoringMode::majority> search(g, budget);
    try {
        auto w = search.feasible(k);
        return {SearchStatus::solved, std::move(w), search.nodes()};
    } catch (const detail::BudgetExceeded&) {
        return {SearchStatus::budget_exhausted, std::nullopt, search.nodes()};
    }
}

struct SolveResult {
    SearchStatus status = SearchStatus::solved;
    int value = 0;
    std::optional<Coloring> witness;
    std::uint64_t nodes = 0;
};

/// Exact chi_md: ascending scan (not binary search; feasibility is used with
/// "at most k colors" semantics) starting from chi(g). A coloring into
/// singletons is always valid, so the scan terminates by k = n.
inline SolveResult mdc_number(const Graph& g, std::optional<std::uint64_t> budget = std::nullopt) {
    if (g.order() == 0) throw std::invalid_argument("majority dominator coloring undefined for the empty graph");
    auto chi = chromatic_number(g, budget);
    if (chi.status != SearchStatus::solved)
        return {SearchStatus::budget_exhausted, 0, std::nullopt, chi.nodes};
    detail::ColoringSearcher<detail::ColoringMode::majority> search(g, budget);
    try {
        for (int k = chi.value; k <= g.order(); ++k) {
            if (auto w = search.feasible(k))
                return {SearchStatus::solved, w->num_colors, std::move(w), search.nodes()};
        }
    } catch (const detail::BudgetExceeded&) {
        return {SearchStatus::budget_exhausted, 0, std::nullopt, search.nodes()};
    }
    throw std::logic_error("singleton coloring is always a majority dominator coloring");
}

namespace detail {

/// Enumerates set partitions of 0..n-1 as colorings labeled by first
/// occurrence (restricted growth strings).
template <typename Fn>
void for_each_partition(int n, Fn&& fn) {
    std::vector<int> label(static_cast<std::size_t>(n), 0);
    if (n == 0) {
        fn(label);
        return;
    }
    auto rec = [&](auto&& self, int i, int maxl) -> void {
        if (i == n) {
            fn(label);
            return;
        }
        for (int l = 0; l <= maxl + 1; ++l) {
            label[static_cast<std::size_t>(i)] = l;
            self(self, i + 1, std::max(maxl, l));
        }
    };
    rec(rec, 0, -1);
}

} // namespace detail

/// Unpruned oracle: minimum over all set partitions that verify_mdc accepts.
/// Hard-capped at n <= 10; test use only.
inline SolveResult brute_force_mdc(const Graph& g) {
    if (g.order() == 0) throw std::invalid_argument("majority dominator coloring undefined for the empty graph");
    if (g.order() > 10) throw std::invalid_argument("brute force capped at order 10");
    int n = g.order();
    SolveResult best;
    best.value = n + 1;
    std::uint64_t tried = 0;
    detail::for_each_partition(n, [&](const std::vector<int>& label) {
        ++tried;
        int k = 1 + *std::max_element(label.begin(), label.end());
        if (k >= best.value) return;
        std::vector<int> colors(label.size());
        for (std::size_t i = 0; i < label.size(); ++i) colors[i] = label[i] + 1;
        Coloring c = Coloring::from_assignment(std::move(colors));
        if (verify_mdc(g, c).empty()) {
            best.value = k;
            best.witness = std::move(c);
        }
    });
    best.nodes = tried;
    return best;
}

} // namespace mdc
