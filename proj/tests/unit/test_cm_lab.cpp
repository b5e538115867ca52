#include "doctest.h"

#include "bei/cm_lab.hpp"
#include "support.hpp"

using namespace bei;
using bei::testing::figure_one;

TEST_CASE("analyze examples")
{
    const auto p5 = analyze(path_graph(5));
    REQUIRE(p5.unmixed);
    REQUIRE(p5.accessible);
    CHECK(p5.unmixed->unmixed);
    CHECK(p5.accessible->accessible);
    CHECK(p5.cm.is_cm());
    CHECK_FALSE(p5.indeterminate());
    CHECK_FALSE(p5.girth);

    const auto c5 = analyze(cycle_graph(5));
    CHECK(c5.girth == 5);
    CHECK_FALSE(c5.accessible->accessible);
    CHECK(c5.cm.status == Verdict::No);

    const auto j = to_json(analyze(figure_one()));
    CHECK(j["girth"] == 3);
    CHECK(j["cut_vertices"] == Json::array({2, 6, 8, 11}));
    CHECK(j["cm"] == false);
    CHECK(j["field"] == "QQ");
    CHECK(j.contains("witnesses"));
}

TEST_CASE("JSON encodes forests and unknowns")
{
    const auto j = to_json(analyze(path_graph(4)));
    CHECK(j["girth"] == "infinity");
    CHECK(j["depth"] == 5);
    CHECK(j["dim"] == 5);
    CHECK_FALSE(j.contains("inconsistencies"));

    LabConfig cfg;
    cfg.budget.faces = 1;
    cfg.budget.lattice = 1;
    cfg.accessibility_prefilter = false;
    const auto r = analyze(complete_graph(5), cfg);
    CHECK(r.indeterminate());
    const auto k = to_json(r);
    CHECK(k["cm"].is_null());
    CHECK(k["depth"].is_null());
    CHECK(k.contains("budget"));
    CHECK(k["witnesses"]["depth"].contains("interval"));
}

TEST_CASE("known classifications")
{
    for (int n = 2; n <= 7; ++n) {
        CHECK(cm_check(path_graph(n)).is_cm());
        CHECK(cm_check(complete_graph(n)).is_cm());
    }
    for (int n = 3; n <= 8; ++n) CHECK(cm_check(cycle_graph(n)).is_cm() == (n == 3));
    const auto c5 = cm_check(cycle_graph(5));
    CHECK(c5.route == "unmixedness");
    CHECK(c5.cutset_witness);
}

TEST_CASE("depth of J_G")
{
    const auto p3 = depth_JG(path_graph(3));
    CHECK(p3.exact());
    CHECK(p3.depth.depth() == 4);
    CHECK(p3.dim == 4);

    const auto two_edges = depth_JG(disjoint_union(path_graph(2), path_graph(2)));
    CHECK(two_edges.depth.depth() == 6);

    const auto split = decompose_at(figure_one(), 8);
    REQUIRE(split);
    const Graph second_bar = add_whisker(split->second, 1);
    CHECK(second_bar.order() == 6);
    const auto d = depth_JG(second_bar);
    CHECK(d.depth.depth() == brute_depth_oracle(initial_ideal(second_bar), FieldSpec::rationals()).depth());
    CHECK(d.depth.depth() == 7);
}

TEST_CASE("engine self-consistency on the corpus")
{
    std::mt19937_64 rng(83);
    LabConfig no_prefilter;
    no_prefilter.accessibility_prefilter = false;
    for (const Graph& g : bei::testing::connected_upto(6)) {
        const auto r = analyze(g);
        INFO(r.graph6);
        CHECK(r.inconsistencies.empty());
        CHECK_FALSE(r.indeterminate());
        if (r.cm.is_cm()) {
            CHECK(r.unmixed->unmixed);
            CHECK(r.accessible->accessible);
            CHECK(r.depth->depth.depth() == g.order() + 1);
        }
        // The homological route alone reaches the same verdict.
        CHECK(cm_check(g, no_prefilter).status == r.cm.status);
        // Relabeling never changes the verdict.
        const Graph h = relabel(g, bei::testing::random_permutation(g.order(), rng));
        CHECK(cm_check(h).status == r.cm.status);
        CHECK(depth_JG(h).depth.depth() == r.depth->depth.depth());
    }
}

TEST_CASE("depth is additive over disjoint unions")
{
    const auto small = bei::testing::connected_upto(4);
    for (std::size_t i = 0; i < small.size(); i += 2)
        for (std::size_t j = 0; j < small.size(); j += 3) {
            const int a = depth_JG(small[i]).depth.depth();
            const int b = depth_JG(small[j]).depth.depth();
            CHECK(depth_JG(disjoint_union(small[i], small[j])).depth.depth() == a + b);
        }
}

TEST_CASE("depth equality across a split")
{
    const auto p5 = depth_equality_check(path_graph(5), 3);
    CHECK(p5.equal == Verdict::Yes);
    CHECK(p5.decomposable);

    // Two triangles sharing a vertex: decomposable.
    const Graph bowtie = glue_at(complete_graph(3), 3, complete_graph(3), 1);
    const auto bt = depth_equality_check(bowtie, 3);
    CHECK(bt.decomposable);
    CHECK(bt.equal == Verdict::Yes);

    // A square glued to an edge at a vertex: 1 is not free in the square.
    const Graph sq = glue_at(cycle_graph(4), 1, complete_graph(2), 1);
    const auto s = depth_equality_check(sq, 1);
    CHECK_FALSE(s.decomposable);
    CHECK(s.rhs_lower == s.rhs_upper);
    CHECK(to_json(s)["equal"].is_boolean());

    CHECK_THROWS_AS(depth_equality_check(path_graph(5), 1), std::invalid_argument);
}

TEST_CASE("verifiers are clean on the small corpus")
{
    const auto corpus = bei::testing::connected_upto(5);
    for (const auto& id : theorem_ids()) {
        INFO(id);
        const auto v = run_verifier(id, corpus, "n<=5");
        CHECK(v.graphs == static_cast<long>(corpus.size()));
        CHECK(v.violations() == 0);
        CHECK(v.findings.empty());
        CHECK(v.exit_code() == 0);
        CHECK(v.instances() > 0);
    }
    CHECK_THROWS_AS(run_verifier("nope", corpus, "n<=5"), std::invalid_argument);
}

TEST_CASE("verifier findings are classified")
{
    // C4 with a pendant edge is neither unmixed nor CM; gluing verdicts stay vacuous.
    std::vector<Graph> corpus{glue_at(cycle_graph(4), 1, complete_graph(2), 1), edgeless_graph(2), path_graph(20)};
    const auto v = run_verifier("gluing", corpus, "mixed");
    CHECK(v.skipped == 2);
    CHECK(v.violations() == 0);

    TheoremVerdict synthetic;
    synthetic.findings.push_back({FindingKind::HypothesisRelevant, "s", "A_", Json::object()});
    CHECK(synthetic.exit_code() == 3);
    synthetic.findings.push_back({FindingKind::Violation, "s", "A_", Json::object()});
    CHECK(synthetic.exit_code() == 1);
    CHECK(to_json(synthetic)["violations"].size() == 2);
}

TEST_CASE("verdicts do not depend on the thread count")
{
    const auto corpus = bei::testing::connected_upto(5);
    LabConfig one, many;
    many.threads = 4;
    for (const auto& id : theorem_ids())
        CHECK(to_json(run_verifier(id, corpus, "c", one)).dump() == to_json(run_verifier(id, corpus, "c", many)).dump());
}

TEST_CASE("random generators")
{
    std::mt19937_64 a(5), b(5);
    for (int t = 0; t < 20; ++t) {
        const Graph g = random_connected_graph(7, 3, a);
        CHECK(is_connected(g));
        CHECK(g == random_connected_graph(7, 3, b));
        const auto [h, v] = random_gluing(9, a);
        CHECK(h.order() <= 9);
        CHECK(is_connected(h));
        CHECK((cut_vertices(h) & vertex_bit(v)) != 0);
        random_gluing(9, b);
    }
}
