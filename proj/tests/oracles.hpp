#pragma once

// Naive exhaustive oracles, deliberately independent of the library's search
// code: partitions are enumerated directly and every condition is recomputed
// from scratch here.

#include <vector>

#include "mdc/graph.hpp"

namespace mdc_test {

template <typename Fn>
void for_each_partition_labels(int n, Fn&& fn) {
    std::vector<int> label(static_cast<std::size_t>(n), 0);
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
    if (n == 0) return;
    rec(rec, 0, -1);
}

inline bool labels_proper(const mdc::Graph& g, const std::vector<int>& label) {
    for (auto [u, v] : g.edges())
        if (label[static_cast<std::size_t>(u)] == label[static_cast<std::size_t>(v)]) return false;
    return true;
}

inline int naive_chromatic(const mdc::Graph& g) {
    int best = g.order() + 1;
    for_each_partition_labels(g.order(), [&](const std::vector<int>& label) {
        int k = 1 + *std::max_element(label.begin(), label.end());
        if (k < best && labels_proper(g, label)) best = k;
    });
    return best;
}

inline int naive_domination(const mdc::Graph& g) {
    int n = g.order();
    int best = n;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
        mdc::VertexMask covered = 0;
        mdc::for_each_bit(s, [&](int v) { covered |= g.closed_neighborhood_mask(v); });
        if (covered == g.vertex_mask()) best = std::min(best, mdc::popcount(s));
    }
    return best;
}

inline int naive_independence(const mdc::Graph& g) {
    int n = g.order();
    int best = 0;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
        bool ok = true;
        mdc::for_each_bit(s, [&](int v) { ok = ok && (g.adjacency_mask(v) & s) == 0; });
        if (ok) best = std::max(best, mdc::popcount(s));
    }
    return best;
}

inline int naive_matching(const mdc::Graph& g) {
    auto edges = g.edges();
    int m = static_cast<int>(edges.size());
    int best = 0;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << m); ++s) {
        mdc::VertexMask touched = 0;
        bool ok = true;
        int size = 0;
        for (int i = 0; i < m && ok; ++i) {
            if (!(s >> i & 1)) continue;
            auto [u, v] = edges[static_cast<std::size_t>(i)];
            if (touched & (mdc::bit(u) | mdc::bit(v))) ok = false;
            touched |= mdc::bit(u) | mdc::bit(v);
            ++size;
        }
        if (ok) best = std::max(best, size);
    }
    return best;
}

inline int naive_chi_d(const mdc::Graph& g) {
    int n = g.order();
    int best = n + 1;
    for_each_partition_labels(n, [&](const std::vector<int>& label) {
        int k = 1 + *std::max_element(label.begin(), label.end());
        if (k >= best || !labels_proper(g, label)) return;
        std::vector<mdc::VertexMask> cls(static_cast<std::size_t>(k), 0);
        for (int v = 0; v < n; ++v) cls[static_cast<std::size_t>(label[static_cast<std::size_t>(v)])] |= mdc::bit(v);
        for (int v = 0; v < n; ++v) {
            mdc::VertexMask nb = g.closed_neighborhood_mask(v);
            bool dominated = false;
            for (int c = 0; c < k && !dominated; ++c) dominated = (cls[static_cast<std::size_t>(c)] & ~nb) == 0;
            if (!dominated) return;
        }
        best = k;
    });
    return best;
}

inline int naive_chi_md(const mdc::Graph& g) {
    int n = g.order();
    int best = n + 1;
    for_each_partition_labels(n, [&](const std::vector<int>& label) {
        int k = 1 + *std::max_element(label.begin(), label.end());
        if (k >= best || !labels_proper(g, label)) return;
        std::vector<int> size(static_cast<std::size_t>(k), 0);
        for (int l : label) ++size[static_cast<std::size_t>(l)];
        for (int v = 0; v < n; ++v) {
            std::vector<int> cnt(static_cast<std::size_t>(k), 0);
            mdc::for_each_bit(g.closed_neighborhood_mask(v),
                              [&](int u) { ++cnt[static_cast<std::size_t>(label[static_cast<std::size_t>(u)])]; });
            bool dominated = false;
            for (int c = 0; c < k && !dominated; ++c)
                dominated = 2 * cnt[static_cast<std::size_t>(c)] >= size[static_cast<std::size_t>(c)];
            if (!dominated) return;
        }
        best = k;
    });
    return best;
}

} // namespace mdc_test
