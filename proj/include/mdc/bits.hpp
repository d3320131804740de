#pragma once

#include <bit>
#include <cstdint>

namespace mdc {

using VertexMask = std::uint64_t;

constexpr VertexMask bit(int v) { return VertexMask{1} << v; }

constexpr VertexMask low_bits(int n) {
    return n >= 64 ? ~VertexMask{0} : (VertexMask{1} << n) - 1;
}

constexpr int popcount(VertexMask m) { return std::popcount(m); }

/// Calls fn(v) for every set bit of m, lowest first.
template <typename Fn>
void for_each_bit(VertexMask m, Fn&& fn) {
    while (m != 0) {
        int v = std::countr_zero(m);
        fn(v);
        m &= m - 1;
    }
}

} // namespace mdc
