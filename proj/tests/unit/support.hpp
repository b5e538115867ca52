#pragma once

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "bei/graph.hpp"
#include "bei/graph6.hpp"

namespace bei::testing {

inline std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// Connected graphs on exactly n vertices, one per isomorphism class.
inline std::vector<Graph> connected_corpus(int n)
{
    return parse_graph6_stream(read_file(std::string(BEI_CORPUS_DIR) + "/connected_n" + std::to_string(n) + ".g6"));
}

/// Connected graphs on 1..max_n vertices.
inline std::vector<Graph> connected_upto(int max_n)
{
    std::vector<Graph> out;
    for (int n = 1; n <= max_n; ++n) {
        auto part = connected_corpus(n);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

// The twelve-vertex example whose only cut vertices are 2, 6, 8 and 11.
inline Graph figure_one()
{
    return Graph(12, {{8, 9}, {6, 8}, {4, 8}, {2, 6}, {2, 4}, {2, 3}, {1, 2}, {5, 6},
                      {3, 6}, {6, 7}, {4, 5}, {3, 5}, {9, 10}, {10, 11}, {8, 11}, {11, 12}});
}

inline Graph random_graph(int n, double p, std::mt19937_64& rng)
{
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (coin(rng)) edges.emplace_back(i, j);
    return Graph(n, edges);
}

inline Relabeling random_permutation(int n, std::mt19937_64& rng)
{
    std::vector<int> images(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) images[static_cast<std::size_t>(i)] = i + 1;
    std::shuffle(images.begin(), images.end(), rng);
    return Relabeling::from_images(images);
}

// Plain adjacency-matrix BFS, kept apart from the bit-mask code under test.
inline int bfs_component_count(const Graph& g, VertexSet removed)
{
    const int n = g.order();
    std::vector<int> seen(static_cast<std::size_t>(n + 1), 0);
    int count = 0;
    for (int s = 1; s <= n; ++s) {
        if ((removed >> (s - 1)) & 1 || seen[static_cast<std::size_t>(s)]) continue;
        ++count;
        std::vector<int> stack{s};
        seen[static_cast<std::size_t>(s)] = 1;
        while (!stack.empty()) {
            const int u = stack.back();
            stack.pop_back();
            for (int w = 1; w <= n; ++w)
                if (!((removed >> (w - 1)) & 1) && !seen[static_cast<std::size_t>(w)] && g.adjacent(u, w)) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    stack.push_back(w);
                }
        }
    }
    return count;
}

} // namespace bei::testing
