#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace bei {

/// Bit (v - 1) set for vertex v.  Vertices are 1-based.
using VertexSet = std::uint64_t;

inline constexpr int kMaxVertices = 64;

constexpr VertexSet vertex_bit(int v) { return VertexSet{1} << (v - 1); }

constexpr VertexSet first_vertices(int n)
{
    return n >= 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

constexpr int popcount(std::uint64_t m) { return std::popcount(m); }

constexpr int lowest_index(std::uint64_t m) { return std::countr_zero(m); }

/// Calls f(bit_index) for every set bit, lowest first.
template <class F>
constexpr void for_each_bit(std::uint64_t m, F&& f)
{
    while (m != 0) {
        const int b = std::countr_zero(m);
        f(b);
        m &= m - 1;
    }
}

inline std::vector<int> to_vertex_list(VertexSet s)
{
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(popcount(s)));
    for_each_bit(s, [&](int b) { out.push_back(b + 1); });
    return out;
}

inline VertexSet from_vertex_list(const std::vector<int>& vs)
{
    VertexSet s = 0;
    for (int v : vs) s |= vertex_bit(v);
    return s;
}

/// Strict order on vertex sets: by size, then lexicographic on sorted members.
inline bool size_lex_less(VertexSet a, VertexSet b)
{
    const int pa = popcount(a), pb = popcount(b);
    if (pa != pb) return pa < pb;
    // Lexicographic on increasing member lists: the first differing position
    // is decided by the lowest bit of the symmetric difference.
    const std::uint64_t diff = a ^ b;
    if (diff == 0) return false;
    return (a & (diff & (~diff + 1))) != 0;
}

} // namespace bei
