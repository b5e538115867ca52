#include "doctest.h"

#include <set>

#include "bei/errors.hpp"
#include "bei/graph.hpp"
#include "bei/graph6.hpp"
#include "support.hpp"

using namespace bei;
using bei::testing::bfs_component_count;
using bei::testing::figure_one;

namespace {

// Decoder written straight from the format description, for cross-checking.
std::vector<Edge> decode_reference(const std::string& rec)
{
    const int n = rec[0] - 63;
    std::vector<int> bits;
    for (std::size_t i = 1; i < rec.size(); ++i)
        for (int k = 5; k >= 0; --k) bits.push_back(((rec[i] - 63) >> k) & 1);
    std::vector<Edge> edges;
    std::size_t pos = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (bits[pos++]) edges.emplace_back(i + 1, j + 1);
    std::sort(edges.begin(), edges.end());
    return edges;
}

bool is_chordless_cycle(const Graph& g, VertexSet s)
{
    if (popcount(s) < 3) return false;
    bool ok = true;
    for_each_bit(s, [&](int b) { ok = ok && popcount(g.neighbors(b + 1) & s) == 2; });
    return ok && bfs_component_count(g, g.vertices() & ~s) == 1;
}

bool biconnected(const Graph& g, VertexSet s)
{
    if (popcount(s) == 2) return true;
    if (bfs_component_count(g, g.vertices() & ~s) != 1) return false;
    bool ok = true;
    for_each_bit(s, [&](int b) { ok = ok && bfs_component_count(g, (g.vertices() & ~s) | vertex_bit(b + 1)) == 1; });
    return ok;
}

} // namespace

TEST_CASE("graph6 decoding")
{
    CHECK(parse_graph6("@").order() == 1);
    CHECK(parse_graph6("@").size() == 0);
    const Graph k2 = parse_graph6("A_");
    CHECK(k2.order() == 2);
    CHECK(k2.edges() == std::vector<Edge>{{1, 2}});
    CHECK(parse_graph6(">>graph6<<A_") == k2);
    CHECK(parse_graph6("A_\r\n") == k2);

    const Graph d = parse_graph6("D?{");
    CHECK(d.order() == 5);
    CHECK(d.edges() == decode_reference("D?{"));
    CHECK(to_graph6(d) == "D?{");
}

TEST_CASE("graph6 agrees with the reference decoder on the corpus")
{
    for (int n = 1; n <= 7; ++n) {
        const std::string text = bei::testing::read_file(std::string(BEI_CORPUS_DIR) + "/connected_n" +
                                                         std::to_string(n) + ".g6");
        std::istringstream lines(text);
        std::string rec;
        while (std::getline(lines, rec)) {
            if (rec.empty()) continue;
            const Graph g = parse_graph6(rec);
            CHECK(g.edges() == decode_reference(rec));
            CHECK(to_graph6(g) == rec);
        }
    }
}

TEST_CASE("graph6 long size field round trip")
{
    std::mt19937_64 rng(7);
    for (int n : {62, 63, 64}) {
        const Graph g = bei::testing::random_graph(n, 0.1, rng);
        const std::string rec = to_graph6(g);
        CHECK((n <= 62 ? rec[0] != '~' : rec[0] == '~'));
        CHECK(parse_graph6(rec) == g);
    }
}

TEST_CASE("graph6 errors name byte offsets")
{
    CHECK_THROWS_AS(parse_graph6(""), ParseError);
    try {
        parse_graph6("A_x");
        FAIL("trailing bytes accepted");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 2);
    }
    try {
        parse_graph6("B\x01");
        FAIL("control byte accepted");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 1);
    }
    CHECK_THROWS_AS(parse_graph6("B"), ParseError);
    CHECK_THROWS_AS(parse_graph6("A`"), ParseError); // padding bit set
}

TEST_CASE("edge lists and format detection")
{
    CHECK(detect_format("3 2\n1 2\n2 3\n") == InputFormat::EdgeList);
    CHECK(detect_format(">>graph6<<A_\n") == InputFormat::Graph6);
    CHECK(detect_format("Bw\n") == InputFormat::Graph6);
    CHECK(detect_format("\n  \n") == InputFormat::Empty);
    CHECK(parse_graphs("").empty());

    const auto gs = parse_edge_lists("3 2\n1 2\n2 3\n2 1\n1 2\n");
    REQUIRE(gs.size() == 2);
    CHECK(gs[0] == path_graph(3));
    CHECK(gs[1] == path_graph(2));
    CHECK(parse_edge_lists(to_edge_list(figure_one())).front() == figure_one());

    try {
        parse_edge_lists("3 2\n1 2\n3 3\n");
        FAIL("loop accepted");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 3);
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_edge_lists("3 2\n1 2\n"), ParseError);
    CHECK_THROWS_AS(parse_graphs("hello world\n"), ParseError);
}

TEST_CASE("connected components")
{
    CHECK(connected_components(path_graph(3)).size() == 1);
    CHECK(connected_components(edgeless_graph(3)) == std::vector<VertexSet>{1, 2, 4});
    const auto parts = connected_components(delete_vertices(figure_one(), vertex_bit(8)).graph);
    REQUIRE(parts.size() == 2);
    // After deleting 8, labels 9..12 move down to 8..11.
    CHECK(parts[0] == first_vertices(7));
    CHECK(parts[1] == (first_vertices(11) & ~first_vertices(7)));

    std::mt19937_64 rng(11);
    for (int t = 0; t < 200; ++t) {
        const Graph g = bei::testing::random_graph(9, 0.2, rng);
        const VertexSet removed = rng() & g.vertices();
        CHECK(component_count(g, removed) == bfs_component_count(g, removed));
    }
}

TEST_CASE("cut vertices against delete-and-count")
{
    CHECK(cut_vertices(path_graph(3)) == vertex_bit(2));
    CHECK(cut_vertices(complete_graph(4)) == 0);
    CHECK(to_vertex_list(cut_vertices(figure_one())) == std::vector<int>{2, 6, 8, 11});
    for (const Graph& g : bei::testing::connected_upto(7)) {
        VertexSet expected = 0;
        const int c = bfs_component_count(g, 0);
        for (int v = 1; v <= g.order(); ++v)
            if (bfs_component_count(g, vertex_bit(v)) > c) expected |= vertex_bit(v);
        CHECK(cut_vertices(g) == expected);
    }
}

TEST_CASE("blocks")
{
    const auto p3 = blocks(path_graph(3));
    CHECK(p3.blocks == std::vector<VertexSet>{0b011, 0b110});
    CHECK(p3.cut_vertices == vertex_bit(2));
    CHECK(blocks(complete_graph(4)).blocks == std::vector<VertexSet>{0b1111});

    std::set<std::vector<int>> fig;
    for (VertexSet b : blocks(figure_one()).blocks) fig.insert(to_vertex_list(b));
    CHECK(fig == std::set<std::vector<int>>{{1, 2}, {2, 3, 4, 5, 6, 8}, {6, 7}, {8, 9, 10, 11}, {11, 12}});
    CHECK_THROWS_AS(blocks(edgeless_graph(2)), std::invalid_argument);
}

TEST_CASE("block structure properties on the corpus")
{
    for (const Graph& g : bei::testing::connected_upto(7)) {
        if (g.order() < 2) continue;
        const auto bd = blocks(g);
        for (const auto& [u, v] : g.edges()) {
            int holders = 0;
            for (VertexSet b : bd.blocks) holders += (b & vertex_bit(u)) && (b & vertex_bit(v));
            CHECK(holders == 1);
        }
        for (std::size_t i = 0; i < bd.blocks.size(); ++i) {
            CHECK(biconnected(g, bd.blocks[i]));
            for (std::size_t j = i + 1; j < bd.blocks.size(); ++j) {
                const VertexSet meet = bd.blocks[i] & bd.blocks[j];
                CHECK(popcount(meet) <= 1);
                CHECK((meet & ~bd.cut_vertices) == 0);
                if (meet) CHECK_FALSE(biconnected(g, bd.blocks[i] | bd.blocks[j]));
            }
        }
    }
}

TEST_CASE("girth and induced cycles")
{
    CHECK(girth(cycle_graph(5)) == 5);
    CHECK_FALSE(girth(star_graph(4)).has_value());
    CHECK_FALSE(girth(path_graph(6)).has_value());
    CHECK(girth(figure_one()) == 3);
    CHECK(induced_cycle_lengths(cycle_graph(6)) == std::vector<int>{6});
    CHECK(induced_cycle_lengths(complete_graph(4)) == std::vector<int>{3});
    const auto fig = induced_cycle_lengths(figure_one());
    CHECK(std::find(fig.begin(), fig.end(), 4) != fig.end());
    CHECK_THROWS_AS(induced_cycle_lengths(edgeless_graph(20), 16), CapExceeded);

    for (const Graph& g : bei::testing::connected_upto(7)) {
        std::set<int> expected;
        for (VertexSet s = 1; s <= g.vertices(); ++s)
            if (is_chordless_cycle(g, s)) expected.insert(popcount(s));
        const auto got = induced_cycle_lengths(g);
        CHECK(std::vector<int>(expected.begin(), expected.end()) == got);
        if (got.empty())
            CHECK_FALSE(girth(g).has_value());
        else
            CHECK(girth(g) == got.front());
    }
}

TEST_CASE("free vertices and saturation")
{
    for (int v = 1; v <= 3; ++v) CHECK(is_free_vertex(complete_graph(3), v));
    CHECK_FALSE(is_free_vertex(path_graph(3), 2));
    CHECK_FALSE(is_free_vertex(cycle_graph(4), 1));

    const Graph c4 = saturate(cycle_graph(4), 1);
    CHECK(c4.size() == 5);
    CHECK(c4.adjacent(2, 4));
    CHECK(saturate(complete_graph(5), 3) == complete_graph(5));
    CHECK(girth(saturate(cycle_graph(6), 1)) == 3);
    // The other chordless cycle left behind has length n - 1.
    CHECK(induced_cycle_lengths(saturate(cycle_graph(6), 1)) == std::vector<int>{3, 5});

    for (const Graph& g : bei::testing::connected_upto(6))
        for (int v = 1; v <= g.order(); ++v) {
            const Graph s = saturate(g, v);
            CHECK(is_free_vertex(s, v));
            CHECK(saturate(s, v) == s);
        }
}

TEST_CASE("deletion relabels in order")
{
    const auto p = delete_vertices(path_graph(3), vertex_bit(2));
    CHECK(p.graph == edgeless_graph(2));
    CHECK(p.relabeling.to_new(3) == 2);
    CHECK(p.relabeling.to_new(2) == 0);
    CHECK(delete_vertices(complete_graph(4), vertex_bit(1)).graph == complete_graph(3));
    const auto sub = induced_subgraph(figure_one(), from_vertex_list({8, 9, 10, 11}));
    CHECK(sub.graph == cycle_graph(4));
}

TEST_CASE("whiskers")
{
    CHECK(add_whisker(Graph(1), 1) == complete_graph(2));
    CHECK(add_whisker(path_graph(2), 2) == path_graph(3));
    std::mt19937_64 rng(3);
    for (int t = 0; t < 50; ++t) {
        const Graph g = bei::testing::random_graph(7, 0.4, rng);
        const int v = 1 + static_cast<int>(rng() % 7);
        const Graph w = add_whisker(g, v);
        CHECK(w.order() == 8);
        CHECK(w.neighbors(8) == vertex_bit(v));
        CHECK(is_free_vertex(w, 8));
    }
}

TEST_CASE("decompose_at")
{
    const auto p3 = decompose_at(path_graph(3), 2);
    REQUIRE(p3);
    CHECK(p3->cut == 2);
    CHECK(p3->first == path_graph(2));
    CHECK(p3->second == path_graph(2));
    CHECK_FALSE(decompose_at(path_graph(3), 1));

    const auto fig = decompose_at(figure_one(), 8);
    REQUIRE(fig);
    CHECK(fig->cut == 8);
    CHECK(fig->first.order() == 8);
    CHECK(fig->second.order() == 5);
    CHECK(fig->first_degree == 2);
    CHECK(fig->second_degree == 2);

    std::mt19937_64 rng(5);
    int checked = 0;
    while (checked < 100) {
        const Graph g = bei::testing::random_graph(8, 0.3, rng);
        if (!is_connected(g) || cut_vertices(g) == 0) continue;
        const int v = 1 + lowest_index(cut_vertices(g));
        const auto d = decompose_at(g, v);
        REQUIRE(d);
        const int m = d->cut, r = d->first_degree, s = d->second_degree;
        CHECK(d->relabeling.to_new(v) == m);
        CHECK(d->first.neighbors(m) == (first_vertices(m - 1) & ~first_vertices(m - 1 - r)));
        CHECK(d->second.neighbors(1) == (first_vertices(s + 1) & ~first_vertices(1)));
        CHECK(relabel(g, d->relabeling) == d->relabeled);
        CHECK(glue_at(d->first, m, d->second, 1) == d->relabeled);
        ++checked;
    }
}

TEST_CASE("block with whiskers")
{
    const Graph g = figure_one();
    const Graph c4w = block_with_whiskers(g, from_vertex_list({8, 9, 10, 11}), from_vertex_list({8, 11}));
    CHECK(c4w.order() == 6);
    CHECK(c4w.size() == 6);
    CHECK(girth(c4w) == 4);
    CHECK(c4w.degree(5) == 1);
    CHECK(c4w.degree(6) == 1);
    CHECK(induced_subgraph(c4w, first_vertices(4)).graph == cycle_graph(4));

    const auto bd = blocks(g);
    for (VertexSet b : bd.blocks) CHECK(block_with_whiskers(g, b, 0) == g);
    CHECK(block_with_whiskers(path_graph(3), 0b011, 0b010) == path_graph(3));
    CHECK_THROWS(block_with_whiskers(g, from_vertex_list({1, 2, 3}), 0));
    CHECK_THROWS(block_with_whiskers(g, from_vertex_list({8, 9, 10, 11}), vertex_bit(9)));
}

TEST_CASE("glue_at")
{
    CHECK(glue_at(complete_graph(2), 2, complete_graph(2), 1) == path_graph(3));
    std::mt19937_64 rng(9);
    for (int t = 0; t < 50; ++t) {
        const Graph a = bei::testing::random_graph(5, 0.5, rng);
        const Graph b = bei::testing::random_graph(4, 0.5, rng);
        const int v = 1 + static_cast<int>(rng() % 5), w = 1 + static_cast<int>(rng() % 4);
        const Graph f = glue_at(a, v, b, w);
        CHECK(f.order() == 8);
        CHECK(f.size() == a.size() + b.size());
        const Graph apart = disjoint_union(delete_vertices(a, vertex_bit(v)).graph,
                                           delete_vertices(b, vertex_bit(w)).graph);
        CHECK(delete_vertices(f, vertex_bit(v)).graph == apart);
    }
}
