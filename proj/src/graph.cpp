#include "bei/graph.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "bei/errors.hpp"

namespace bei {

namespace {

void check_vertex(const Graph& g, int v)
{
    if (v < 1 || v > g.order())
        throw std::out_of_range("vertex " + std::to_string(v) + " outside 1.." +
                                std::to_string(g.order()));
}

/// Vertices reachable from `start` inside `allowed`.
VertexSet reach(const Graph& g, int start, VertexSet allowed)
{
    VertexSet seen = vertex_bit(start);
    VertexSet frontier = seen;
    while (frontier != 0) {
        VertexSet next = 0;
        for_each_bit(frontier, [&](int b) { next |= g.neighbors(b + 1); });
        next &= allowed & ~seen;
        seen |= next;
        frontier = next;
    }
    return seen;
}

} // namespace

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n), 0)
{
    if (n < 0 || n > kMaxVertices)
        throw std::invalid_argument("graph order must lie in 0.." + std::to_string(kMaxVertices));
}

Graph::Graph(int n, const std::vector<Edge>& edges)
{
    GraphBuilder b(n);
    for (const auto& [u, v] : edges) b.add_edge(u, v);
    *this = b.build();
}

std::size_t Graph::size() const
{
    std::size_t twice = 0;
    for (VertexSet a : adj_) twice += static_cast<std::size_t>(popcount(a));
    return twice / 2;
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    for (int u = 1; u <= n_; ++u) {
        for_each_bit(neighbors(u) & ~first_vertices(u), [&](int b) { out.emplace_back(u, b + 1); });
    }
    return out;
}

GraphBuilder::GraphBuilder(int n) : g_(n) {}
GraphBuilder::GraphBuilder(const Graph& g) : g_(g) {}

GraphBuilder& GraphBuilder::add_edge(int u, int v)
{
    check_vertex(g_, u);
    check_vertex(g_, v);
    if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
    g_.adj_[static_cast<std::size_t>(u - 1)] |= vertex_bit(v);
    g_.adj_[static_cast<std::size_t>(v - 1)] |= vertex_bit(u);
    return *this;
}

GraphBuilder& GraphBuilder::add_vertex()
{
    if (g_.n_ == kMaxVertices) throw std::invalid_argument("graph order limit reached");
    ++g_.n_;
    g_.adj_.push_back(0);
    return *this;
}

VertexSet Relabeling::map_set(VertexSet old_set) const
{
    VertexSet out = 0;
    for_each_bit(old_set, [&](int b) {
        const int nv = to_new(b + 1);
        if (nv != 0) out |= vertex_bit(nv);
    });
    return out;
}

Relabeling Relabeling::from_images(const std::vector<int>& images)
{
    Relabeling r;
    const int n = static_cast<int>(images.size());
    r.old_to_new.assign(static_cast<std::size_t>(n + 1), 0);
    r.new_to_old.assign(static_cast<std::size_t>(n + 1), 0);
    for (int old = 1; old <= n; ++old) {
        const int nv = images[static_cast<std::size_t>(old - 1)];
        if (nv < 1 || nv > n || r.new_to_old[static_cast<std::size_t>(nv)] != 0)
            throw std::invalid_argument("relabeling is not a permutation");
        r.old_to_new[static_cast<std::size_t>(old)] = nv;
        r.new_to_old[static_cast<std::size_t>(nv)] = old;
    }
    return r;
}

bool Relabeling::is_bijection() const
{
    if (old_to_new.size() != new_to_old.size()) return false;
    for (std::size_t i = 1; i < old_to_new.size(); ++i) {
        const int nv = old_to_new[i];
        if (nv == 0 || new_to_old.at(static_cast<std::size_t>(nv)) != static_cast<int>(i)) return false;
    }
    return true;
}

Graph path_graph(int n)
{
    GraphBuilder b(n);
    for (int i = 1; i < n; ++i) b.add_edge(i, i + 1);
    return b.build();
}

Graph cycle_graph(int n)
{
    if (n < 3) throw std::invalid_argument("a cycle needs at least 3 vertices");
    GraphBuilder b(n);
    for (int i = 1; i < n; ++i) b.add_edge(i, i + 1);
    b.add_edge(n, 1);
    return b.build();
}

Graph complete_graph(int n)
{
    GraphBuilder b(n);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) b.add_edge(i, j);
    return b.build();
}

Graph star_graph(int leaves)
{
    GraphBuilder b(leaves + 1);
    for (int i = 2; i <= leaves + 1; ++i) b.add_edge(1, i);
    return b.build();
}

Graph edgeless_graph(int n) { return Graph(n); }

std::vector<VertexSet> connected_components(const Graph& g)
{
    std::vector<VertexSet> out;
    VertexSet left = g.vertices();
    while (left != 0) {
        const VertexSet comp = reach(g, lowest_index(left) + 1, left);
        out.push_back(comp);
        left &= ~comp;
    }
    return out;
}

int component_count(const Graph& g, VertexSet removed)
{
    int count = 0;
    VertexSet left = g.vertices() & ~removed;
    while (left != 0) {
        left &= ~reach(g, lowest_index(left) + 1, left);
        ++count;
    }
    return count;
}

bool is_connected(const Graph& g) { return component_count(g) <= 1; }

namespace {

/// Tarjan low-point DFS shared by cut_vertices and blocks.
struct LowPoint {
    const Graph& g;
    std::vector<int> disc, low;
    std::vector<Edge> edge_stack;
    std::vector<VertexSet> found_blocks;
    VertexSet cuts = 0;
    int timer = 0;

    explicit LowPoint(const Graph& graph)
        : g(graph), disc(static_cast<std::size_t>(graph.order() + 1), 0),
          low(static_cast<std::size_t>(graph.order() + 1), 0) {}

    void run(int u, int parent)
    {
        disc[static_cast<std::size_t>(u)] = low[static_cast<std::size_t>(u)] = ++timer;
        int children = 0;
        for_each_bit(g.neighbors(u), [&](int b) {
            const int w = b + 1;
            auto& du = disc[static_cast<std::size_t>(u)];
            auto& lu = low[static_cast<std::size_t>(u)];
            if (disc[static_cast<std::size_t>(w)] == 0) {
                ++children;
                edge_stack.emplace_back(u, w);
                run(w, u);
                lu = std::min(lu, low[static_cast<std::size_t>(w)]);
                if (low[static_cast<std::size_t>(w)] >= du) {
                    if (parent != 0) cuts |= vertex_bit(u);
                    VertexSet blk = 0;
                    while (true) {
                        const Edge e = edge_stack.back();
                        edge_stack.pop_back();
                        blk |= vertex_bit(e.first) | vertex_bit(e.second);
                        if (e == Edge{u, w}) break;
                    }
                    found_blocks.push_back(blk);
                }
            } else if (w != parent && disc[static_cast<std::size_t>(w)] < du) {
                edge_stack.emplace_back(u, w);
                lu = std::min(lu, disc[static_cast<std::size_t>(w)]);
            }
        });
        if (parent == 0 && children > 1) cuts |= vertex_bit(u);
        if (parent == 0 && children == 0) found_blocks.push_back(vertex_bit(u));
    }

    void run_all()
    {
        for (int v = 1; v <= g.order(); ++v)
            if (disc[static_cast<std::size_t>(v)] == 0) run(v, 0);
    }
};

} // namespace

VertexSet cut_vertices(const Graph& g)
{
    LowPoint lp(g);
    lp.run_all();
    return lp.cuts;
}

BlockDecomposition blocks(const Graph& g)
{
    if (!is_connected(g)) throw std::invalid_argument("blocks: graph is disconnected");
    LowPoint lp(g);
    lp.run_all();
    BlockDecomposition out;
    out.blocks = std::move(lp.found_blocks);
    std::sort(out.blocks.begin(), out.blocks.end(), size_lex_less);
    out.cut_vertices = lp.cuts;
    return out;
}

std::optional<int> girth(const Graph& g)
{
    const int n = g.order();
    int best = 0;
    std::vector<int> dist(static_cast<std::size_t>(n + 1)), parent(static_cast<std::size_t>(n + 1));
    for (int root = 1; root <= n; ++root) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[static_cast<std::size_t>(root)] = 0;
        parent[static_cast<std::size_t>(root)] = 0;
        std::vector<int> queue{root};
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const int u = queue[head];
            const int du = dist[static_cast<std::size_t>(u)];
            if (best != 0 && 2 * du + 1 >= best) break;
            for_each_bit(g.neighbors(u), [&](int b) {
                const int w = b + 1;
                if (dist[static_cast<std::size_t>(w)] < 0) {
                    dist[static_cast<std::size_t>(w)] = du + 1;
                    parent[static_cast<std::size_t>(w)] = u;
                    queue.push_back(w);
                } else if (w != parent[static_cast<std::size_t>(u)]) {
                    const int len = du + dist[static_cast<std::size_t>(w)] + 1;
                    if (best == 0 || len < best) best = len;
                }
            });
        }
    }
    if (best == 0) return std::nullopt;
    return best;
}

std::vector<int> induced_cycle_lengths(const Graph& g, int cap)
{
    if (g.order() > cap)
        throw CapExceeded("induced cycle enumeration capped at " + std::to_string(cap) + " vertices");
    std::vector<bool> seen(static_cast<std::size_t>(g.order() + 1), false);
    // Chordless cycles whose smallest vertex is s: grow induced paths
    // s, p1, ..., pk over vertices above s; a vertex adjacent to s closes one.
    for (int s = 1; s <= g.order(); ++s) {
        const VertexSet above = g.vertices() & ~first_vertices(s);
        const VertexSet ns = g.neighbors(s);
        std::function<void(int, VertexSet, VertexSet, int)> grow =
            [&](int last, VertexSet path, VertexSet interior_nbhd, int len) {
                // interior_nbhd: neighbours of path vertices other than s and last.
                for_each_bit(g.neighbors(last) & above & ~path & ~interior_nbhd, [&](int b) {
                    const int u = b + 1;
                    if (ns & vertex_bit(u)) {
                        if (len + 1 >= 3) seen[static_cast<std::size_t>(len + 1)] = true;
                        return;
                    }
                    grow(u, path | vertex_bit(u), interior_nbhd | g.neighbors(last), len + 1);
                });
            };
        for_each_bit(ns & above, [&](int b) { grow(b + 1, vertex_bit(s) | vertex_bit(b + 1), 0, 2); });
    }
    std::vector<int> out;
    for (int len = 3; len <= g.order(); ++len)
        if (seen[static_cast<std::size_t>(len)]) out.push_back(len);
    return out;
}

bool is_free_vertex(const Graph& g, int v)
{
    check_vertex(g, v);
    const VertexSet nb = g.neighbors(v);
    bool clique = true;
    for_each_bit(nb, [&](int b) {
        if ((nb & ~(g.neighbors(b + 1) | vertex_bit(b + 1))) != 0) clique = false;
    });
    return clique;
}

Graph saturate(const Graph& g, int v)
{
    check_vertex(g, v);
    GraphBuilder b(g);
    const auto nb = to_vertex_list(g.neighbors(v));
    for (std::size_t i = 0; i < nb.size(); ++i)
        for (std::size_t j = i + 1; j < nb.size(); ++j) b.add_edge(nb[i], nb[j]);
    return b.build();
}

InducedSubgraph induced_subgraph(const Graph& g, VertexSet kept)
{
    kept &= g.vertices();
    InducedSubgraph out;
    auto& r = out.relabeling;
    r.old_to_new.assign(static_cast<std::size_t>(g.order() + 1), 0);
    r.new_to_old.assign(1, 0);
    int next = 0;
    for_each_bit(kept, [&](int b) {
        r.old_to_new[static_cast<std::size_t>(b + 1)] = ++next;
        r.new_to_old.push_back(b + 1);
    });
    GraphBuilder builder(next);
    for (const auto& [u, v] : g.edges()) {
        const int nu = r.to_new(u), nv = r.to_new(v);
        if (nu != 0 && nv != 0) builder.add_edge(nu, nv);
    }
    out.graph = builder.build();
    return out;
}

InducedSubgraph delete_vertices(const Graph& g, VertexSet removed)
{
    return induced_subgraph(g, g.vertices() & ~removed);
}

Graph add_whisker(const Graph& g, int v)
{
    check_vertex(g, v);
    GraphBuilder b(g);
    b.add_vertex();
    b.add_edge(v, b.order());
    return b.build();
}

Graph relabel(const Graph& g, const Relabeling& r)
{
    if (!r.is_bijection() || static_cast<int>(r.old_to_new.size()) != g.order() + 1)
        throw std::invalid_argument("relabel: not a permutation of the vertex set");
    GraphBuilder b(g.order());
    for (const auto& [u, v] : g.edges()) b.add_edge(r.to_new(u), r.to_new(v));
    return b.build();
}

Graph disjoint_union(const Graph& g, const Graph& h)
{
    GraphBuilder b(g.order() + h.order());
    for (const auto& [u, v] : g.edges()) b.add_edge(u, v);
    for (const auto& [u, v] : h.edges()) b.add_edge(u + g.order(), v + g.order());
    return b.build();
}

std::optional<CutDecomposition> decompose_at(const Graph& g, int v)
{
    check_vertex(g, v);
    if (!is_connected(g)) throw std::invalid_argument("decompose_at: graph is disconnected");
    const VertexSet rest = g.vertices() & ~vertex_bit(v);
    if (rest == 0) return std::nullopt;
    const VertexSet side1 = reach(g, lowest_index(rest) + 1, rest);
    const VertexSet side2 = rest & ~side1;
    if (side2 == 0) return std::nullopt;

    const VertexSet nb = g.neighbors(v);
    std::vector<int> images(static_cast<std::size_t>(g.order()), 0);
    int next = 0;
    auto assign = [&](VertexSet s) { for_each_bit(s, [&](int b) { images[static_cast<std::size_t>(b)] = ++next; }); };
    assign(side1 & ~nb);
    assign(side1 & nb);
    images[static_cast<std::size_t>(v - 1)] = ++next;
    assign(side2 & nb);
    assign(side2 & ~nb);

    CutDecomposition out;
    out.relabeling = Relabeling::from_images(images);
    out.relabeled = relabel(g, out.relabeling);
    const int m = popcount(side1) + 1;
    out.cut = m;
    out.first_degree = popcount(side1 & nb);
    out.second_degree = popcount(side2 & nb);
    out.first = induced_subgraph(out.relabeled, first_vertices(m)).graph;
    out.second = induced_subgraph(out.relabeled, out.relabeled.vertices() & ~first_vertices(m - 1)).graph;
    return out;
}

Graph block_with_whiskers(const Graph& g, VertexSet block, VertexSet whiskered)
{
    const BlockDecomposition bd = blocks(g);
    if (std::find(bd.blocks.begin(), bd.blocks.end(), block) == bd.blocks.end())
        throw std::invalid_argument("block_with_whiskers: not a block of the graph");
    const VertexSet attach = bd.cut_vertices & block;
    if ((whiskered & ~attach) != 0)
        throw std::invalid_argument("block_with_whiskers: W holds a vertex that is not a cut vertex of the block");

    // Branch G_i at v_i: v_i plus whatever it reaches without entering the block.
    VertexSet kept = block;
    for_each_bit(attach & ~whiskered, [&](int b) {
        const int vi = b + 1;
        kept |= reach(g, vi, (g.vertices() & ~block) | vertex_bit(vi));
    });
    InducedSubgraph core = induced_subgraph(g, kept);
    GraphBuilder builder(core.graph);
    for_each_bit(whiskered, [&](int b) {
        builder.add_vertex();
        builder.add_edge(core.relabeling.to_new(b + 1), builder.order());
    });
    return builder.build();
}

Graph glue_at(const Graph& g, int v, const Graph& h, int w)
{
    check_vertex(g, v);
    check_vertex(h, w);
    std::vector<int> image(static_cast<std::size_t>(h.order() + 1), 0);
    int next = g.order();
    for (int u = 1; u <= h.order(); ++u) image[static_cast<std::size_t>(u)] = (u == w) ? v : ++next;
    GraphBuilder b(next);
    for (const auto& [x, y] : g.edges()) b.add_edge(x, y);
    for (const auto& [x, y] : h.edges())
        b.add_edge(image[static_cast<std::size_t>(x)], image[static_cast<std::size_t>(y)]);
    return b.build();
}

std::string to_edge_list(const Graph& g)
{
    std::ostringstream os;
    const auto es = g.edges();
    os << g.order() << ' ' << es.size() << '\n';
    for (const auto& [u, v] : es) os << u << ' ' << v << '\n';
    return os.str();
}

} // namespace bei
