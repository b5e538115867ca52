#include "doctest.h"

#include "bei/cutsets.hpp"
#include "bei/errors.hpp"
#include "support.hpp"

using namespace bei;
using bei::testing::bfs_component_count;
using bei::testing::figure_one;

namespace {

bool cutset_oracle(const Graph& g, VertexSet t)
{
    const int c = bfs_component_count(g, t);
    bool ok = true;
    for_each_bit(t, [&](int b) { ok = ok && bfs_component_count(g, t & ~vertex_bit(b + 1)) < c; });
    return ok;
}

std::vector<VertexSet> members(const std::vector<Cutset>& cs)
{
    std::vector<VertexSet> out;
    for (const auto& c : cs) out.push_back(c.members);
    return out;
}

} // namespace

TEST_CASE("component counts")
{
    CHECK(component_count_after(path_graph(3), vertex_bit(2)) == 2);
    CHECK(component_count_after(cycle_graph(4), from_vertex_list({1, 3})) == 2);
    // {1}, {7}, {3,4,5} and {9..12} remain.
    CHECK(component_count_after(figure_one(), from_vertex_list({2, 6, 8})) == 4);
    CHECK(component_count_after(figure_one(), from_vertex_list({2, 6, 8, 11})) == 5);
}

TEST_CASE("is_cutset")
{
    CHECK(is_cutset(figure_one(), 0));
    CHECK_FALSE(is_cutset(complete_graph(3), vertex_bit(1)));
    CHECK(is_cutset(cycle_graph(4), from_vertex_list({1, 3})));
    CHECK_FALSE(is_cutset(cycle_graph(4), from_vertex_list({1, 2})));
}

TEST_CASE("enumerate_cutsets examples")
{
    CHECK(members(enumerate_cutsets(path_graph(3))) == std::vector<VertexSet>{0, vertex_bit(2)});
    for (int n = 1; n <= 7; ++n) CHECK(members(enumerate_cutsets(complete_graph(n))) == std::vector<VertexSet>{0});
    CHECK(members(enumerate_cutsets(cycle_graph(4))) ==
          std::vector<VertexSet>{0, from_vertex_list({1, 3}), from_vertex_list({2, 4})});
    CHECK_THROWS_AS(enumerate_cutsets(path_graph(25)), CapExceeded);
    CHECK_NOTHROW(enumerate_cutsets(path_graph(25), 25));
}

TEST_CASE("enumerate_cutsets matches the subset brute force")
{
    std::vector<Graph> graphs = bei::testing::connected_upto(7);
    std::mt19937_64 rng(17);
    for (int t = 0; t < 100; ++t) graphs.push_back(bei::testing::random_graph(8, 0.3, rng)); // some disconnected
    for (const Graph& g : graphs) {
        std::vector<VertexSet> expected;
        for (VertexSet t = 0; t <= g.vertices(); ++t)
            if (cutset_oracle(g, t)) expected.push_back(t);
        std::sort(expected.begin(), expected.end(), size_lex_less);
        const auto got = enumerate_cutsets(g);
        CHECK(members(got) == expected);
        for (const auto& c : got) {
            CHECK(c.components == bfs_component_count(g, c.members));
            CHECK(is_cutset(g, c.members));
        }
    }
}

TEST_CASE("unmixedness examples")
{
    const auto p3 = is_unmixed(path_graph(3));
    CHECK(p3.unmixed);
    CHECK(p3.dim == 4);
    CHECK_FALSE(p3.witness);

    const auto c4 = is_unmixed(cycle_graph(4));
    CHECK_FALSE(c4.unmixed);
    REQUIRE(c4.witness);
    CHECK(c4.witness->members == from_vertex_list({1, 3}));
    CHECK(c4.witness->components == 2);

    const auto star = is_unmixed(star_graph(3));
    CHECK_FALSE(star.unmixed);
    REQUIRE(star.witness);
    CHECK(star.witness->members == vertex_bit(1));
    CHECK(star.dim == 6);

    const auto two = is_unmixed(edgeless_graph(2));
    CHECK(two.unmixed);
    CHECK(two.graph_components == 2);
    CHECK(two.dim == 4);
}

TEST_CASE("accessibility examples")
{
    CHECK(is_accessible(path_graph(3)).accessible);
    CHECK_FALSE(is_accessible(cycle_graph(5)).accessible);
    CHECK_FALSE(is_accessible(cycle_graph(5)).unmixed);
    for (int n = 1; n <= 7; ++n) CHECK(is_accessible(complete_graph(n)).accessible);
    const auto c4 = is_accessible(cycle_graph(4));
    CHECK_FALSE(c4.accessible);
    CHECK_FALSE(c4.unmixed);
}

TEST_CASE("accessible graphs have one-step chains; free-vertex law")
{
    for (const Graph& g : bei::testing::connected_upto(7)) {
        const auto cs = enumerate_cutsets(g);
        VertexSet seen = 0;
        for (const auto& c : cs) seen |= c.members;
        for (int v = 1; v <= g.order(); ++v) CHECK(is_free_vertex(g, v) == !(seen & vertex_bit(v)));

        const auto acc = is_accessible(g, cs);
        const auto un = is_unmixed(g, cs);
        CHECK(acc.unmixed == un.unmixed);
        if (!acc.accessible) continue;
        for (const auto& c : cs) {
            const auto chain = accessible_chain(cs, c.members);
            REQUIRE(chain);
            REQUIRE(chain->size() == static_cast<std::size_t>(c.size()) + 1);
            CHECK(chain->front() == c.members);
            CHECK(chain->back() == 0);
            for (std::size_t k = 0; k + 1 < chain->size(); ++k) {
                CHECK(((*chain)[k + 1] & ~(*chain)[k]) == 0);
                CHECK(popcount((*chain)[k]) == popcount((*chain)[k + 1]) + 1);
                CHECK(is_cutset(g, (*chain)[k + 1]));
            }
        }
    }
}

TEST_CASE("unmixedness of disjoint unions")
{
    const auto small = bei::testing::connected_upto(4);
    for (const Graph& a : small)
        for (const Graph& b : small) {
            const bool both = is_unmixed(a).unmixed && is_unmixed(b).unmixed;
            CHECK(is_unmixed(disjoint_union(a, b)).unmixed == both);
        }
}
