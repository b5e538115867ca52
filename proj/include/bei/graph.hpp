#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bei/bits.hpp"

namespace bei {

using Edge = std::pair<int, int>;

/// Simple undirected graph on the vertex labels 1..n (n <= 64).
///
/// Adjacency is kept as one bit mask per vertex, so set-valued queries
/// (neighbourhoods, induced subgraphs, component sweeps) are word operations.
/// Values are immutable once built; every construction returns a new graph.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    Graph(int n, const std::vector<Edge>& edges);

    int order() const { return n_; }
    std::size_t size() const;

    VertexSet vertices() const { return first_vertices(n_); }
    VertexSet neighbors(int v) const { return adj_[static_cast<std::size_t>(v - 1)]; }
    bool adjacent(int u, int v) const { return (neighbors(u) & vertex_bit(v)) != 0; }
    int degree(int v) const { return popcount(neighbors(v)); }

    /// Edges {i, j} with i < j, sorted lexicographically.
    std::vector<Edge> edges() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    friend class GraphBuilder;
    int n_ = 0;
    std::vector<VertexSet> adj_;
};

/// Mutable staging area for a Graph.  Rejects loops and out-of-range labels;
/// repeated edges collapse.
class GraphBuilder {
public:
    explicit GraphBuilder(int n);
    explicit GraphBuilder(const Graph& g);

    GraphBuilder& add_edge(int u, int v);
    GraphBuilder& add_vertex();
    int order() const { return g_.n_; }
    Graph build() const { return g_; }

private:
    Graph g_;
};

/// Order-preserving partial map between two labelings.  A zero entry marks a
/// vertex that has no image (deleted) or no preimage (freshly added).
struct Relabeling {
    std::vector<int> old_to_new; // index 0 unused
    std::vector<int> new_to_old; // index 0 unused

    int to_new(int old_label) const { return old_to_new.at(static_cast<std::size_t>(old_label)); }
    int to_old(int new_label) const { return new_to_old.at(static_cast<std::size_t>(new_label)); }
    VertexSet map_set(VertexSet old_set) const;

    /// Bijection built from the image of each old label.
    static Relabeling from_images(const std::vector<int>& images_1_based);
    bool is_bijection() const;
};

struct InducedSubgraph {
    Graph graph;
    Relabeling relabeling;
};

struct BlockDecomposition {
    std::vector<VertexSet> blocks; // sorted by size_lex_less
    VertexSet cut_vertices = 0;
};

/// Output of decompose_at.  `relabeled` is the input graph under `relabeling`
/// with the cut vertex at label `cut` = m; `first` is G_1 on 1..m and `second`
/// is G_2, whose vertex k stands for relabeled vertex k + m - 1.
struct CutDecomposition {
    Graph relabeled;
    Relabeling relabeling;
    int cut = 0;
    Graph first;
    Graph second;
    int first_degree = 0;  // r = |N_{G_1}(m)|
    int second_degree = 0; // s = |N_{G_2}(m)|
};

// Standard families.
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph star_graph(int leaves);
Graph edgeless_graph(int n);

std::vector<VertexSet> connected_components(const Graph& g);
int component_count(const Graph& g, VertexSet removed = 0);
bool is_connected(const Graph& g);

VertexSet cut_vertices(const Graph& g);
/// Maximal biconnected pieces; throws std::invalid_argument on a disconnected graph.
BlockDecomposition blocks(const Graph& g);

/// Length of a shortest cycle, or nullopt for a forest.
std::optional<int> girth(const Graph& g);

inline constexpr int kDefaultInducedCycleCap = 16;
/// Sorted lengths of all chordless cycles.  Throws CapExceeded when order() > cap.
std::vector<int> induced_cycle_lengths(const Graph& g, int cap = kDefaultInducedCycleCap);

bool is_free_vertex(const Graph& g, int v);
Graph saturate(const Graph& g, int v);
InducedSubgraph delete_vertices(const Graph& g, VertexSet removed);
InducedSubgraph induced_subgraph(const Graph& g, VertexSet kept);
Graph add_whisker(const Graph& g, int v);
Graph relabel(const Graph& g, const Relabeling& r);
Graph disjoint_union(const Graph& g, const Graph& h);

/// Two-sided split at cut vertex v, relabeled so that G_1 = 1..m, v = m,
/// N_{G_1}(m) = {m-r..m-1} and N_{G_2}(m) = {m+1..m+s}.  When G \ v has more
/// than two components, G_1 is the component holding the smallest label plus v.
/// Returns nullopt when v is not a cut vertex; throws on a disconnected graph.
std::optional<CutDecomposition> decompose_at(const Graph& g, int v);

/// The block-with-whiskers graph: block B, every branch hanging off a cut
/// vertex outside W kept, every cut vertex in W given a fresh whisker tip.
/// Retained vertices keep their relative order; tips take the top labels.
Graph block_with_whiskers(const Graph& g, VertexSet block, VertexSet whiskered);

/// Identify v in g with w in h.  g keeps labels 1..n_g; the other vertices of h
/// follow in their original order.
Graph glue_at(const Graph& g, int v, const Graph& h, int w);

/// "n m" header then one "u v" line per edge.
std::string to_edge_list(const Graph& g);

} // namespace bei
