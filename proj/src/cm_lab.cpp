#include "bei/cm_lab.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <unordered_map>

#include "bei/errors.hpp"
#include "bei/graph6.hpp"

namespace bei {

namespace {

using Tri = std::optional<bool>;

Tri tri_and(Tri a, Tri b)
{
    if (a == false || b == false) return false;
    if (!a || !b) return std::nullopt;
    return true;
}

Tri tri_iff(Tri a, Tri b)
{
    if (!a || !b) return std::nullopt;
    return *a == *b;
}

Json vertex_json(VertexSet s) { return Json(to_vertex_list(s)); }

Json monomial_json(Monomial m)
{
    Json out = Json::array();
    for_each_bit(m, [&](int b) { out.push_back(monomial_to_string(Monomial{1} << b)); });
    return out;
}

Json tri_json(Tri t) { return t ? Json(*t) : Json(nullptr); }

Json verdict_json(Verdict v)
{
    switch (v) {
    case Verdict::Yes: return true;
    case Verdict::No: return false;
    case Verdict::Indeterminate: return nullptr;
    }
    return nullptr;
}

Tri tri(Verdict v) { return v == Verdict::Indeterminate ? Tri() : Tri(v == Verdict::Yes); }

Json cutset_json(const Cutset& c) { return Json{{"cutset", vertex_json(c.members)}, {"components", c.components}}; }

} // namespace

// ---------------------------------------------------------------------------
// Decisions.

CMCertificate monomial_cm(const MonomialIdeal& ideal, const LabConfig& config)
{
    return reisner_cm(stanley_reisner(ideal), config.field, config.budget);
}

CMDecision cm_check(const Graph& g, const LabConfig& config)
{
    CMDecision d;
    d.field = config.field;
    if (g.order() > kMaxVariableIndex) {
        d.note = "graph exceeds " + std::to_string(kMaxVariableIndex) + " vertices";
        return d;
    }
    try {
        const auto cutsets = enumerate_cutsets(g);
        const UnmixednessReport un = is_unmixed(g, cutsets);
        if (!un.unmixed) {
            d.status = Verdict::No;
            d.route = "unmixedness";
            d.cutset_witness = un.witness;
            return d;
        }
        if (config.accessibility_prefilter && is_connected(g)) {
            const AccessibilityReport acc = is_accessible(g, cutsets);
            if (!acc.accessible) {
                d.status = Verdict::No;
                d.route = "accessibility";
                d.cutset_witness = acc.witness;
                return d;
            }
        }
    } catch (const CapExceeded&) {
        // Fall through to the homological test.
    }
    try {
        const CMCertificate cert = monomial_cm(initial_ideal(g, g.order()), config);
        d.status = cert.status;
        d.route = "reisner";
        d.link_witness = cert.witness;
        d.note = cert.note;
    } catch (const CapExceeded& e) {
        d.note = e.what();
    }
    return d;
}

DepthReport depth_JG(const Graph& g, const LabConfig& config)
{
    DepthReport rep;
    const MonomialIdeal ideal = initial_ideal(g, std::max(config.max_n, g.order()));
    rep.dim = is_unmixed(g).dim;
    rep.depth = hochster_depth(ideal, config.field, config.budget);
    rep.route = "hochster";
    if (!rep.depth.exact()) {
        const DepthResult links = local_cohomology_depth(ideal, config.field, config.budget);
        rep.route = "hochster+links";
        rep.depth.depth_lower = std::max(rep.depth.depth_lower, links.depth_lower);
        rep.depth.depth_upper = std::min(rep.depth.depth_upper, links.depth_upper);
        rep.depth.link_witness = links.link_witness;
        if (rep.depth.exact())
            rep.depth.note.clear();
        else if (!links.note.empty() && links.note != rep.depth.note)
            rep.depth.note += "; " + links.note;
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Analysis.

bool AnalysisReport::indeterminate() const
{
    return !unmixed || !accessible || cm.status == Verdict::Indeterminate || !depth || !depth->exact();
}

AnalysisReport analyze(const Graph& g, const LabConfig& config)
{
    AnalysisReport r;
    r.graph6 = to_graph6(g);
    r.n = g.order();
    r.edges = g.size();
    r.girth = girth(g);
    if (is_connected(g))
        r.blocks = blocks(g);
    else
        r.blocks.cut_vertices = cut_vertices(g);
    if (g.order() > config.max_n) {
        r.cm.field = config.field;
        r.notes.push_back("n exceeds max-n " + std::to_string(config.max_n));
        return r;
    }
    try {
        const auto cutsets = enumerate_cutsets(g);
        r.cutset_count = cutsets.size();
        r.unmixed = is_unmixed(g, cutsets);
        r.accessible = is_accessible(g, cutsets);
    } catch (const CapExceeded& e) {
        r.notes.push_back(e.what());
    }
    r.cm = cm_check(g, config);
    if (!r.cm.note.empty()) r.notes.push_back(r.cm.note);
    try {
        r.depth = depth_JG(g, config);
        if (!r.depth->depth.note.empty()) r.notes.push_back(r.depth->depth.note);
    } catch (const CapExceeded& e) {
        r.notes.push_back(e.what());
    }
    if (r.cm.is_cm()) {
        if (r.unmixed && !r.unmixed->unmixed) r.inconsistencies.push_back("cm but not unmixed");
        if (r.accessible && !r.accessible->accessible) r.inconsistencies.push_back("cm but not accessible");
    }
    if (r.depth && r.depth->exact() && r.cm.status != Verdict::Indeterminate &&
        (r.depth->depth.depth() == r.depth->dim) != r.cm.is_cm())
        r.inconsistencies.push_back("cm verdict disagrees with depth = dim");
    return r;
}

Json to_json(const AnalysisReport& r)
{
    Json j;
    j["graph"] = r.graph6;
    j["n"] = r.n;
    j["edges"] = r.edges;
    j["girth"] = r.girth ? Json(*r.girth) : Json("infinity");
    j["unmixed"] = r.unmixed ? Json(r.unmixed->unmixed) : Json(nullptr);
    j["accessible"] = r.accessible ? Json(r.accessible->accessible) : Json(nullptr);
    j["cm"] = verdict_json(r.cm.status);
    j["field"] = r.cm.field.name();
    j["depth"] = r.depth && r.depth->exact() ? Json(r.depth->depth.depth()) : Json(nullptr);
    j["dim"] = r.depth ? Json(r.depth->dim) : r.unmixed ? Json(r.unmixed->dim) : Json(nullptr);
    j["cut_vertices"] = vertex_json(r.blocks.cut_vertices);
    Json bl = Json::array();
    for (VertexSet b : r.blocks.blocks) bl.push_back(vertex_json(b));
    j["blocks"] = bl;
    j["cutsets"] = r.cutset_count ? Json(*r.cutset_count) : Json(nullptr);

    Json w = Json::object();
    if (r.unmixed && r.unmixed->witness) w["unmixed"] = cutset_json(*r.unmixed->witness);
    if (r.accessible && r.accessible->witness) w["accessible"] = cutset_json(*r.accessible->witness);
    if (r.cm.status == Verdict::No) {
        Json c{{"route", r.cm.route}};
        if (r.cm.cutset_witness) c.update(cutset_json(*r.cm.cutset_witness));
        if (r.cm.link_witness) {
            c["face"] = monomial_json(r.cm.link_witness->face);
            c["degree"] = r.cm.link_witness->degree;
            c["rank"] = r.cm.link_witness->rank;
        }
        w["cm"] = c;
    }
    if (r.depth) {
        Json d{{"route", r.depth->route}};
        if (r.depth->depth.witness) {
            d["subset"] = monomial_json(r.depth->depth.witness->subset);
            d["degree"] = r.depth->depth.witness->degree;
        }
        if (!r.depth->exact()) d["interval"] = {r.depth->depth.depth_lower, r.depth->depth.depth_upper};
        w["depth"] = d;
    }
    j["witnesses"] = w;
    if (!r.notes.empty()) j["budget"] = r.notes;
    if (!r.inconsistencies.empty()) j["inconsistencies"] = r.inconsistencies;
    return j;
}

// ---------------------------------------------------------------------------
// Depth equality.

namespace {

/// Some cutset of `side` minus `v` contains every neighbour of v in `side`.
bool neighbourhood_in_cutset(const Graph& side, int v)
{
    const InducedSubgraph rest = delete_vertices(side, vertex_bit(v));
    const VertexSet nb = rest.relabeling.map_set(side.neighbors(v));
    for (const Cutset& c : enumerate_cutsets(rest.graph))
        if ((nb & ~c.members) == 0) return true;
    return false;
}

} // namespace

DepthEquality depth_equality_check(const Graph& g, int v, const LabConfig& config)
{
    const auto split = decompose_at(g, v);
    if (!split) throw std::invalid_argument("depth_equality_check: " + std::to_string(v) + " is not a cut vertex");
    DepthEquality rec;
    rec.vertex = v;
    const int m = split->cut;
    const bool free1 = is_free_vertex(split->first, m);
    const bool free2 = is_free_vertex(split->second, 1);
    rec.decomposable = free1 && free2;
    rec.two_sided_condition = (!neighbourhood_in_cutset(split->first, m) || free2) &&
                              (!neighbourhood_in_cutset(split->second, 1) || free1);
    rec.whole = depth_JG(g, config);
    rec.first = depth_JG(add_whisker(split->first, m), config);
    rec.second = depth_JG(add_whisker(split->second, 1), config);
    rec.rhs_lower = rec.first.depth.depth_lower + rec.second.depth.depth_lower - 4;
    rec.rhs_upper = rec.first.depth.depth_upper + rec.second.depth.depth_upper - 4;
    const int lo = rec.whole.depth.depth_lower, hi = rec.whole.depth.depth_upper;
    if (hi < rec.rhs_lower || rec.rhs_upper < lo)
        rec.equal = Verdict::No;
    else if (lo == hi && rec.rhs_lower == rec.rhs_upper)
        rec.equal = Verdict::Yes;
    return rec;
}

Json to_json(const DepthEquality& r)
{
    auto side = [](const DepthReport& d) {
        Json j{{"depth", d.exact() ? Json(d.depth.depth()) : Json(nullptr)}, {"dim", d.dim}};
        if (!d.exact()) j["interval"] = {d.depth.depth_lower, d.depth.depth_upper};
        return j;
    };
    Json j;
    j["vertex"] = r.vertex;
    j["lhs"] = side(r.whole);
    j["first_whiskered"] = side(r.first);
    j["second_whiskered"] = side(r.second);
    j["rhs"] = r.rhs_lower == r.rhs_upper ? Json(r.rhs_lower) : Json(nullptr);
    if (r.rhs_lower != r.rhs_upper) j["rhs_interval"] = {r.rhs_lower, r.rhs_upper};
    j["equal"] = verdict_json(r.equal);
    j["decomposable"] = r.decomposable;
    j["two_sided_condition"] = r.two_sided_condition;
    return j;
}

// ---------------------------------------------------------------------------
// Verifiers.

std::string to_string(FindingKind k)
{
    switch (k) {
    case FindingKind::Violation: return "violation";
    case FindingKind::HypothesisRelevant: return "hypothesis-relevant";
    case FindingKind::Finding: return "finding";
    }
    return "?";
}

long TheoremVerdict::instances() const
{
    long n = 0;
    for (const auto& s : statements) n += s.instances;
    return n;
}

long TheoremVerdict::violations() const
{
    return std::count_if(findings.begin(), findings.end(),
                         [](const Finding& f) { return f.kind == FindingKind::Violation; });
}

int TheoremVerdict::exit_code() const
{
    if (violations() > 0) return 1;
    return findings.empty() ? 0 : 3;
}

Json to_json(const TheoremVerdict& v)
{
    Json j;
    j["theorem"] = v.theorem;
    j["corpus"] = v.corpus;
    j["field"] = v.field.name();
    j["graphs"] = v.graphs;
    j["skipped"] = v.skipped;
    j["instances"] = v.instances();
    Json st = Json::array();
    for (const auto& s : v.statements)
        st.push_back({{"id", s.id}, {"instances", s.instances}, {"indeterminate", s.indeterminate}, {"failures", s.failures}});
    j["statements"] = st;
    Json fs = Json::array();
    for (const auto& f : v.findings)
        fs.push_back({{"kind", to_string(f.kind)}, {"statement", f.statement}, {"graph", f.graph}, {"detail", f.detail}});
    j["violations"] = fs;
    return j;
}

const std::vector<std::string>& theorem_ids()
{
    static const std::vector<std::string> ids{"saturation", "deletion",   "gluing",        "blocks",
                                              "girth",      "hypothesis", "depth-equality"};
    return ids;
}

namespace {

/// Memoized CM verdicts per labeled graph, shared by the workers of one run.
class CMCache {
public:
    explicit CMCache(const LabConfig& config) : config_(config) {}

    Tri operator()(const Graph& g)
    {
        const std::string key = to_graph6(g);
        {
            std::lock_guard lock(mutex_);
            if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        }
        const Tri v = tri(cm_check(g, config_).status);
        std::lock_guard lock(mutex_);
        memo_.emplace(key, v);
        return v;
    }

private:
    const LabConfig& config_;
    std::mutex mutex_;
    std::unordered_map<std::string, Tri> memo_;
};

Tri unmixed(const Graph& g)
{
    try {
        return is_unmixed(g).unmixed;
    } catch (const CapExceeded&) {
        return std::nullopt;
    }
}

Tri accessible(const Graph& g)
{
    try {
        return is_accessible(g).accessible;
    } catch (const CapExceeded&) {
        return std::nullopt;
    }
}

struct Statement {
    std::string id;
    FindingKind kind;
};

/// Per-graph (or per-pair) results, merged in input order.
struct Partial {
    std::vector<StatementTally> tallies;
    std::vector<Finding> findings;
    bool skipped = false;
};

class Recorder {
public:
    Recorder(const std::vector<Statement>& statements, std::string graph6)
        : statements_(statements), graph_(std::move(graph6))
    {
        part_.tallies.resize(statements.size());
    }

    /// Material implication hyp => concl for statement s.  `concl` runs only
    /// when the hypothesis holds.
    void implies(std::size_t s, Tri hyp, const std::function<Tri()>& concl, const std::function<Json()>& detail)
    {
        auto& t = part_.tallies[s];
        if (!hyp) {
            ++t.indeterminate;
            return;
        }
        if (!*hyp) return;
        const Tri c = concl();
        if (!c) {
            ++t.indeterminate;
            return;
        }
        ++t.instances;
        if (!*c) {
            ++t.failures;
            part_.findings.push_back({statements_[s].kind, statements_[s].id, graph_, detail()});
        }
    }

    Partial take() { return std::move(part_); }

private:
    const std::vector<Statement>& statements_;
    std::string graph_;
    Partial part_;
};

bool eligible(const Graph& g, const LabConfig& config) { return g.order() <= config.max_n && is_connected(g); }

TheoremVerdict merge(const std::string& id, const std::string& corpus, const LabConfig& config,
                     const std::vector<Statement>& statements, std::vector<Partial>& parts, long graphs)
{
    TheoremVerdict v;
    v.theorem = id;
    v.corpus = corpus;
    v.field = config.field;
    v.graphs = graphs;
    for (const auto& s : statements) v.statements.push_back({s.id});
    for (auto& p : parts) {
        if (p.skipped) ++v.skipped;
        for (std::size_t k = 0; k < p.tallies.size(); ++k) {
            v.statements[k].instances += p.tallies[k].instances;
            v.statements[k].indeterminate += p.tallies[k].indeterminate;
            v.statements[k].failures += p.tallies[k].failures;
        }
        for (auto& f : p.findings) v.findings.push_back(std::move(f));
    }
    return v;
}

using PerGraph = std::function<void(const Graph&, Recorder&, CMCache&)>;

TheoremVerdict scan(const std::string& id, const std::vector<Statement>& statements, const std::vector<Graph>& corpus,
                    const std::string& corpus_name, const LabConfig& config, const PerGraph& body)
{
    CMCache cm(config);
    auto parts = parallel_map<Partial>(corpus.size(), config.threads, [&](std::size_t i) {
        const Graph& g = corpus[i];
        if (!eligible(g, config)) {
            Partial p;
            p.tallies.resize(statements.size());
            p.skipped = true;
            return p;
        }
        Recorder rec(statements, to_graph6(g));
        body(g, rec, cm);
        return rec.take();
    });
    return merge(id, corpus_name, config, statements, parts, static_cast<long>(corpus.size()));
}

Json vertex_detail(int v) { return Json{{"vertex", v}}; }

TheoremVerdict verify_saturation(const std::vector<Graph>& corpus, const std::string& name, const LabConfig& config)
{
    static const std::vector<Statement> st{{"cm-implies-saturation-cm", FindingKind::Violation}};
    return scan("saturation", st, corpus, name, config, [](const Graph& g, Recorder& rec, CMCache& cm) {
        const Tri base = cm(g);
        for (int v = 1; v <= g.order(); ++v)
            rec.implies(0, base, [&] { return cm(saturate(g, v)); }, [&] { return vertex_detail(v); });
    });
}

TheoremVerdict verify_deletion(const std::vector<Graph>& corpus, const std::string& name, const LabConfig& config)
{
    static const std::vector<Statement> st{
        {"unmixed-nonfree-deletion-unmixed", FindingKind::Violation},
        {"cm-nonfree-deletion-cm", FindingKind::Violation},
        {"cm-implies-side-saturations-cm", FindingKind::Violation},
        {"cm-deletion-cm-implies-saturated-deletion-cm", FindingKind::Violation},
        {"cm-nonfree-deletion-saturation-cm", FindingKind::Violation},
        {"cm-one-side-free-pieces-cm", FindingKind::Violation},
        {"cm-free-vertex-unmixed-deletion-cm", FindingKind::Violation},
        {"unmixed-saturation-deletion-unmixed", FindingKind::Violation},
    };
    return scan("deletion", st, corpus, name, config, [&config](const Graph& g, Recorder& rec, CMCache& cm) {
        const Tri g_cm = cm(g);
        const Tri g_unmixed = unmixed(g);
        const VertexSet cuts = cut_vertices(g);
        for (int v = 1; v <= g.order(); ++v) {
            const Graph minus_v = delete_vertices(g, vertex_bit(v)).graph;
            const Graph sat = saturate(g, v);
            const Graph sat_minus_v = delete_vertices(sat, vertex_bit(v)).graph;
            auto detail = [&] { return vertex_detail(v); };
            if (cuts & vertex_bit(v)) {
                const SetupReport setup = setup_identities(g, v);
                const auto& split = setup.split;
                const int m = split.cut;
                const bool both_nonfree = !setup.free_in_first && !setup.free_in_second;
                rec.implies(0, tri_and(g_unmixed, both_nonfree), [&] { return unmixed(minus_v); }, detail);
                rec.implies(1, tri_and(g_cm, both_nonfree), [&] { return cm(minus_v); }, detail);
                rec.implies(
                    2, g_cm,
                    [&] { return tri_and(cm(saturate(split.first, m)), cm(saturate(split.second, 1))); }, detail);
                rec.implies(3, tri_and(g_cm, cm(minus_v)), [&] { return cm(sat_minus_v); }, detail);
                rec.implies(
                    4, tri_and(g_cm, both_nonfree),
                    [&] { return tri_and(cm(minus_v), tri_and(cm(sat), cm(sat_minus_v))); }, detail);
                rec.implies(
                    5, tri_and(g_cm, !setup.free_in_first && setup.free_in_second),
                    [&] {
                        const Monomial ring = vertex_variables(first_vertices(m - 1)) | y_var(m);
                        const Tri first = tri(monomial_cm(setup.first_prime.with_universe(ring), config).status);
                        return tri_and(first, cm(delete_vertices(split.second, vertex_bit(1)).graph));
                    },
                    detail);
            } else {
                rec.implies(7, tri_and(unmixed(sat), unmixed(minus_v)), [&] { return unmixed(sat_minus_v); }, detail);
            }
            if (is_free_vertex(g, v))
                rec.implies(6, tri_and(g_cm, unmixed(minus_v)), [&] { return cm(minus_v); }, detail);
        }
    });
}

struct Eligible {
    std::size_t graph = 0;
    int vertex = 0;
    std::array<Graph, 2> sides; // G_1, G_2 with the glue vertex at sides_vertex
    std::array<int, 2> sides_vertex{};
};

TheoremVerdict verify_gluing(const std::vector<Graph>& corpus, const std::string& name, const LabConfig& config)
{
    static const std::vector<Statement> st{
        {"cm-implies-whiskered-pieces-cm", FindingKind::Violation},
        {"whiskered-pieces-cm-unmixed-implies-cm", FindingKind::HypothesisRelevant},
        {"decomposable-gluing", FindingKind::Violation},
        {"identification-gluing-cm", FindingKind::HypothesisRelevant},
    };
    CMCache cm(config);
    auto parts = parallel_map<Partial>(corpus.size(), config.threads, [&](std::size_t i) {
        const Graph& g = corpus[i];
        if (!eligible(g, config)) {
            Partial p;
            p.tallies.resize(st.size());
            p.skipped = true;
            return p;
        }
        Recorder rec(st, to_graph6(g));
        const Tri g_cm = cm(g);
        const Tri g_unmixed = unmixed(g);
        for_each_bit(cut_vertices(g), [&](int b) {
            const int v = b + 1;
            const auto split = *decompose_at(g, v);
            const int m = split.cut;
            const Graph bar1 = add_whisker(split.first, m);
            const Graph bar2 = add_whisker(split.second, 1);
            auto detail = [&] {
                return Json{{"vertex", v}, {"first_whiskered_cm", tri_json(cm(bar1))},
                            {"second_whiskered_cm", tri_json(cm(bar2))}, {"cm", tri_json(g_cm)}};
            };
            rec.implies(0, g_cm, [&] { return tri_and(cm(bar1), cm(bar2)); }, detail);
            rec.implies(1, tri_and(tri_and(cm(bar1), cm(bar2)), g_unmixed), [&] { return g_cm; }, detail);
            const bool decomposable = is_free_vertex(split.first, m) && is_free_vertex(split.second, 1);
            rec.implies(
                2, decomposable,
                [&] {
                    const Tri u = tri_iff(g_unmixed, tri_and(unmixed(split.first), unmixed(split.second)));
                    const Tri c = tri_iff(g_cm, tri_and(cm(split.first), cm(split.second)));
                    return tri_and(u, c);
                },
                [&] { return vertex_detail(v); });
        });
        return rec.take();
    });

    // Identification: glue pieces of two distinct CM graphs whose deletions are unmixed.
    std::vector<Eligible> pool;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const Graph& g = corpus[i];
        if (!eligible(g, config) || cm(g) != true) continue;
        for_each_bit(cut_vertices(g), [&](int b) {
            const int v = b + 1;
            if (unmixed(delete_vertices(g, vertex_bit(v)).graph) != true) return;
            const auto split = *decompose_at(g, v);
            pool.push_back({i, v, {split.first, split.second}, {split.cut, 1}});
        });
    }
    auto pair_parts = parallel_map<Partial>(pool.size(), config.threads, [&](std::size_t a) {
        Recorder rec(st, to_graph6(corpus[pool[a].graph]));
        for (std::size_t b = a + 1; b < pool.size(); ++b) {
            if (pool[b].graph == pool[a].graph) continue;
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) {
                    const Graph& gi = pool[a].sides[static_cast<std::size_t>(i)];
                    const Graph& hj = pool[b].sides[static_cast<std::size_t>(j)];
                    if (gi.order() + hj.order() - 1 > config.max_pair_order) continue;
                    const Graph f = glue_at(gi, pool[a].sides_vertex[static_cast<std::size_t>(i)], hj,
                                            pool[b].sides_vertex[static_cast<std::size_t>(j)]);
                    rec.implies(3, true, [&] { return cm(f); }, [&] {
                        return Json{{"vertex", pool[a].vertex}, {"other_graph", to_graph6(corpus[pool[b].graph])},
                                    {"other_vertex", pool[b].vertex}, {"i", i + 1}, {"j", j + 1}, {"glued", to_graph6(f)}};
                    });
                }
        }
        return rec.take();
    });
    parts.insert(parts.end(), std::make_move_iterator(pair_parts.begin()), std::make_move_iterator(pair_parts.end()));
    return merge("gluing", name, config, st, parts, static_cast<long>(corpus.size()));
}

TheoremVerdict verify_blocks(const std::vector<Graph>& corpus, const std::string& name, const LabConfig& config)
{
    static const std::vector<Statement> st{
        {"cm-implies-block-whiskers-cm", FindingKind::Violation},
        {"block-whiskers-cm-unmixed-implies-cm", FindingKind::HypothesisRelevant},
    };
    return scan("blocks", st, corpus, name, config, [](const Graph& g, Recorder& rec, CMCache& cm) {
        const BlockDecomposition bd = blocks(g);
        if (bd.cut_vertices == 0) return;
        Tri all = true;
        Json per_block = Json::array();
        for (VertexSet b : bd.blocks) {
            const Tri c = cm(block_with_whiskers(g, b, b & bd.cut_vertices));
            all = tri_and(all, c);
            per_block.push_back({{"block", vertex_json(b)}, {"cm", tri_json(c)}});
        }
        const Tri g_cm = cm(g);
        auto detail = [&] { return Json{{"cm", tri_json(g_cm)}, {"blocks", per_block}}; };
        rec.implies(0, g_cm, [&] { return all; }, detail);
        rec.implies(1, tri_and(all, unmixed(g)), [&] { return g_cm; }, detail);
    });
}

TheoremVerdict verify_girth(const std::vector<Graph>& corpus, const std::string& name, const LabConfig& config)
{
    static const std::vector<Statement> st{
        {"cm-girth-at-most-four", FindingKind::Violation},
        {"accessible-girth-at-most-four", FindingKind::Violation},
    };
    return scan("girth", st, corpus, name, config, [](const Graph& g, Recorder& rec, CMCache& cm) {
        const auto gi = girth(g);
        const bool ok = !gi || *gi <= 4;
        auto detail = [&] { return Json{{"girth", gi ? Json(*gi) : Json("infinity")}}; };
        rec.implies(0, cm(g), [&] { return ok; }, detail);
        rec.implies(1, accessible(g), [&] { return ok; }, detail);
    });
}

TheoremVerdict verify_hypothesis(const std::vector<Graph>& corpus, const std::string& name, const LabConfig& config)
{
    static const std::vector<Statement> st{
        {"cm-unmixed-deletion-cm", FindingKind::HypothesisRelevant},
        {"girth-four-cm-without-long-induced-cycle", FindingKind::Finding},
        {"accessible-without-induced-cycle-six", FindingKind::Finding},
    };
    return scan("hypothesis", st, corpus, name, config, [](const Graph& g, Recorder& rec, CMCache& cm) {
        const Tri g_cm = cm(g);
        for_each_bit(cut_vertices(g), [&](int b) {
            const int v = b + 1;
            const Graph minus_v = delete_vertices(g, vertex_bit(v)).graph;
            rec.implies(0, tri_and(g_cm, unmixed(minus_v)), [&] { return cm(minus_v); }, [&] {
                return Json{{"vertex", v}, {"deletion", to_graph6(minus_v)}};
            });
        });
        const auto gi = girth(g);
        Tri cycles_known = true;
        std::vector<int> lengths;
        try {
            lengths = induced_cycle_lengths(g);
        } catch (const CapExceeded&) {
            cycles_known = std::nullopt;
        }
        const int longest = lengths.empty() ? 0 : lengths.back();
        auto detail = [&] { return Json{{"girth", gi ? Json(*gi) : Json("infinity")}, {"induced_cycles", lengths}}; };
        rec.implies(1, tri_and(g_cm, gi && *gi == 4), [&] { return tri_and(cycles_known, longest < 5); }, detail);
        rec.implies(2, accessible(g), [&] { return tri_and(cycles_known, longest < 6); }, detail);
    });
}

TheoremVerdict verify_depth_equality(const std::vector<Graph>& corpus, const std::string& name, const LabConfig& config)
{
    static const std::vector<Statement> st{
        {"cm-depth-equality", FindingKind::Violation},
        {"decomposable-depth-equality", FindingKind::Violation},
        {"two-sided-condition-depth-equality", FindingKind::Finding},
    };
    return scan("depth-equality", st, corpus, name, config, [&config](const Graph& g, Recorder& rec, CMCache& cm) {
        const Tri g_cm = cm(g);
        for_each_bit(cut_vertices(g), [&](int b) {
            const DepthEquality r = depth_equality_check(g, b + 1, config);
            const Tri eq = tri(r.equal);
            auto detail = [&] { return to_json(r); };
            rec.implies(0, g_cm, [&] { return eq; }, detail);
            rec.implies(1, r.decomposable, [&] { return eq; }, detail);
            rec.implies(2, r.two_sided_condition && !r.decomposable, [&] { return eq; }, detail);
        });
    });
}

} // namespace

TheoremVerdict run_verifier(const std::string& id, const std::vector<Graph>& corpus, const std::string& corpus_name,
                            const LabConfig& config)
{
    if (id == "saturation") return verify_saturation(corpus, corpus_name, config);
    if (id == "deletion") return verify_deletion(corpus, corpus_name, config);
    if (id == "gluing") return verify_gluing(corpus, corpus_name, config);
    if (id == "blocks") return verify_blocks(corpus, corpus_name, config);
    if (id == "girth") return verify_girth(corpus, corpus_name, config);
    if (id == "hypothesis") return verify_hypothesis(corpus, corpus_name, config);
    if (id == "depth-equality") return verify_depth_equality(corpus, corpus_name, config);
    throw std::invalid_argument("unknown theorem id '" + id + "'");
}

// ---------------------------------------------------------------------------
// Random graphs.

Graph random_connected_graph(int n, int extra_edges, std::mt19937_64& rng)
{
    GraphBuilder b(n);
    for (int v = 2; v <= n; ++v) b.add_edge(v, 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(v - 1)));
    for (int e = 0; e < extra_edges && n > 1; ++e) {
        const int u = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n));
        const int w = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n));
        if (u != w) b.add_edge(u, w);
    }
    // Random labels, so the structure is not biased towards low vertices.
    std::vector<int> images(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) images[static_cast<std::size_t>(i)] = i + 1;
    for (int i = n - 1; i > 0; --i)
        std::swap(images[static_cast<std::size_t>(i)], images[rng() % static_cast<std::uint64_t>(i + 1)]);
    return relabel(b.build(), Relabeling::from_images(images));
}

std::pair<Graph, int> random_gluing(int max_n, std::mt19937_64& rng)
{
    if (max_n < 3) throw std::invalid_argument("random_gluing needs max_n >= 3");
    const int total = 3 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_n - 2)); // 3..max_n
    const int a = 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(total - 2));    // 2..total-1
    const int b = total + 1 - a;
    const Graph g = random_connected_graph(a, static_cast<int>(rng() % static_cast<std::uint64_t>(a + 1)), rng);
    const Graph h = random_connected_graph(b, static_cast<int>(rng() % static_cast<std::uint64_t>(b + 1)), rng);
    const int v = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(a));
    const int w = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(b));
    return {glue_at(g, v, h, w), v};
}

} // namespace bei
