#include "bei/cutsets.hpp"

#include <algorithm>
#include <unordered_set>

#include "bei/errors.hpp"

namespace bei {

int component_count_after(const Graph& g, VertexSet removed) { return component_count(g, removed); }

bool is_cutset(const Graph& g, VertexSet t)
{
    const int c = component_count(g, t);
    bool ok = true;
    for_each_bit(t, [&](int b) {
        if (ok && component_count(g, t & ~(VertexSet{1} << b)) >= c) ok = false;
    });
    return ok;
}

std::vector<Cutset> enumerate_cutsets(const Graph& g, int cap)
{
    if (g.order() > cap)
        throw CapExceeded("cutset enumeration capped at " + std::to_string(cap) + " vertices");
    VertexSet candidates = 0;
    for (int v = 1; v <= g.order(); ++v)
        if (!is_free_vertex(g, v)) candidates |= vertex_bit(v);

    std::vector<Cutset> out;
    // Walk every submask of the non-free vertices.
    VertexSet t = 0;
    while (true) {
        if (is_cutset(g, t)) out.push_back({t, component_count(g, t)});
        if (t == candidates) break;
        t = (t - candidates) & candidates;
    }
    std::sort(out.begin(), out.end(), [](const Cutset& a, const Cutset& b) { return size_lex_less(a.members, b.members); });
    return out;
}

UnmixednessReport is_unmixed(const Graph& g, const std::vector<Cutset>& cutsets)
{
    UnmixednessReport r;
    r.graph_components = component_count(g);
    int best = r.graph_components; // the empty cutset
    for (const Cutset& t : cutsets) {
        best = std::max(best, t.components - t.size());
        if (r.unmixed && t.components != t.size() + r.graph_components) {
            r.unmixed = false;
            r.witness = t;
        }
    }
    r.dim = g.order() + best;
    return r;
}

UnmixednessReport is_unmixed(const Graph& g, int cap) { return is_unmixed(g, enumerate_cutsets(g, cap)); }

AccessibilityReport is_accessible(const Graph& g, const std::vector<Cutset>& cutsets)
{
    AccessibilityReport r;
    const UnmixednessReport u = is_unmixed(g, cutsets);
    if (!u.unmixed) {
        r.accessible = false;
        r.unmixed = false;
        r.witness = u.witness;
        return r;
    }
    std::unordered_set<VertexSet> family;
    for (const Cutset& t : cutsets) family.insert(t.members);
    for (const Cutset& t : cutsets) {
        if (t.members == 0) continue;
        bool reachable = false;
        for_each_bit(t.members, [&](int b) {
            if (family.count(t.members & ~(VertexSet{1} << b))) reachable = true;
        });
        if (!reachable) {
            r.accessible = false;
            r.witness = t;
            return r;
        }
    }
    return r;
}

AccessibilityReport is_accessible(const Graph& g, int cap) { return is_accessible(g, enumerate_cutsets(g, cap)); }

std::optional<std::vector<VertexSet>> accessible_chain(const std::vector<Cutset>& cutsets, VertexSet t)
{
    std::unordered_set<VertexSet> family;
    for (const Cutset& c : cutsets) family.insert(c.members);
    if (!family.count(t)) return std::nullopt;
    std::unordered_set<VertexSet> dead;
    std::vector<VertexSet> chain{t};
    // Depth-first descent; dead-ends are remembered so each set is tried once.
    auto descend = [&](auto&& self, VertexSet cur) -> bool {
        if (cur == 0) return true;
        bool done = false;
        for_each_bit(cur, [&](int b) {
            if (done) return;
            const VertexSet next = cur & ~(VertexSet{1} << b);
            if (!family.count(next) || dead.count(next)) return;
            chain.push_back(next);
            if (self(self, next)) { done = true; return; }
            chain.pop_back();
            dead.insert(next);
        });
        return done;
    };
    if (!descend(descend, t)) return std::nullopt;
    return chain;
}

} // namespace bei
