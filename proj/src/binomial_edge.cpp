#include "bei/binomial_edge.hpp"

#include <algorithm>
#include <stdexcept>

#include "bei/errors.hpp"

namespace bei {

std::vector<AdmissiblePath> admissible_paths(const Graph& g, int cap)
{
    const int n = g.order();
    if (n > cap) throw CapExceeded("admissible paths capped at " + std::to_string(cap) + " vertices");
    std::vector<AdmissiblePath> out;
    std::vector<int> path;
    // `upper` is the smallest interior vertex above i0 so far (n + 1 if none);
    // the far endpoint must lie strictly between i0 and upper.
    auto dfs = [&](auto&& self, VertexSet on, int upper) -> void {
        const int i0 = path.front();
        const int last = path.back();
        if (upper <= i0 + 1) return;
        for_each_bit(g.neighbors(last) & ~on, [&](int b) {
            const int u = b + 1;
            if ((g.neighbors(u) & on & ~vertex_bit(last)) != 0) return; // chord
            path.push_back(u);
            if (u > i0 && u < upper) out.push_back({path});
            self(self, on | vertex_bit(u), u > i0 ? std::min(upper, u) : upper);
            path.pop_back();
        });
    };
    for (int i0 = 1; i0 <= n; ++i0) {
        path.assign(1, i0);
        dfs(dfs, vertex_bit(i0), n + 1);
    }
    std::sort(out.begin(), out.end(), [](const AdmissiblePath& a, const AdmissiblePath& b) {
        if (a.first() != b.first()) return a.first() < b.first();
        if (a.last() != b.last()) return a.last() < b.last();
        return a.vertices < b.vertices;
    });
    return out;
}

Monomial path_monomial(const AdmissiblePath& path)
{
    const int i = path.first(), j = path.last();
    Monomial m = x_var(i) | y_var(j);
    for (std::size_t k = 1; k + 1 < path.vertices.size(); ++k) {
        const int w = path.vertices[k];
        m |= w > j ? x_var(w) : y_var(w);
    }
    return m;
}

MonomialIdeal initial_ideal(const Graph& g, int cap)
{
    if (g.order() > kMaxVariableIndex)
        throw CapExceeded("monomial ideals support at most " + std::to_string(kMaxVariableIndex) + " vertices");
    std::vector<Monomial> gens;
    for (const auto& p : admissible_paths(g, cap)) gens.push_back(path_monomial(p));
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    MonomialIdeal ideal(ring_variables(g.order()), gens);
    if (ideal.generators() != gens) throw std::logic_error("admissible path monomials are not an antichain");
    return ideal;
}

BinomialPrime prime_PT(const Graph& g, VertexSet t)
{
    if (!is_cutset(g, t)) throw std::invalid_argument("prime_PT: not a cutset");
    BinomialPrime p;
    p.components = connected_components(induced_subgraph(g, g.vertices() & ~t).graph);
    // Map the components back to the original labels.
    const auto kept = to_vertex_list(g.vertices() & ~t);
    for (auto& comp : p.components) {
        VertexSet mapped = 0;
        for_each_bit(comp, [&](int b) { mapped |= vertex_bit(kept[static_cast<std::size_t>(b)]); });
        comp = mapped;
    }
    std::sort(p.components.begin(), p.components.end(),
              [](VertexSet a, VertexSet b) { return lowest_index(a) < lowest_index(b); });
    p.cutset = {t, static_cast<int>(p.components.size())};
    p.height = g.order() + popcount(t) - p.cutset.components;
    return p;
}

namespace {

Monomial prime_variables(VertexSet t, const std::vector<VertexSet>& components, const std::vector<int>& choice)
{
    Monomial vars = vertex_variables(t);
    for (std::size_t k = 0; k < components.size(); ++k) {
        const int v = choice[k];
        for_each_bit(components[k], [&](int b) {
            const int i = b + 1;
            if (i < v) vars |= x_var(i);
            if (i > v) vars |= y_var(i);
        });
    }
    return vars;
}

} // namespace

InitialPrime prime_PTv(const Graph& g, VertexSet t, const std::vector<int>& choice)
{
    const BinomialPrime p = prime_PT(g, t);
    if (choice.size() != p.components.size()) throw std::invalid_argument("prime_PTv: one vertex per component required");
    for (std::size_t k = 0; k < choice.size(); ++k)
        if (choice[k] < 1 || choice[k] > g.order() || (p.components[k] & vertex_bit(choice[k])) == 0)
            throw std::invalid_argument("prime_PTv: vertex " + std::to_string(choice[k]) + " is not in component " +
                                        std::to_string(k + 1));
    return {t, choice, prime_variables(t, p.components, choice)};
}

std::vector<InitialPrime> ass_initial(const Graph& g, int cap)
{
    std::vector<InitialPrime> out;
    for (const Cutset& c : enumerate_cutsets(g, cap)) {
        const BinomialPrime p = prime_PT(g, c.members);
        std::vector<std::vector<int>> options;
        for (VertexSet comp : p.components) options.push_back(to_vertex_list(comp));
        std::vector<std::size_t> idx(options.size(), 0);
        while (true) {
            std::vector<int> choice;
            for (std::size_t k = 0; k < options.size(); ++k) choice.push_back(options[k][idx[k]]);
            out.push_back({c.members, choice, prime_variables(c.members, p.components, choice)});
            std::size_t k = options.size();
            while (k > 0 && ++idx[k - 1] == options[k - 1].size()) idx[--k] = 0;
            if (k == 0) break;
        }
    }
    for (std::size_t a = 0; a < out.size(); ++a)
        for (std::size_t b = 0; b < out.size(); ++b)
            if (a != b && (out[a].variables & ~out[b].variables) == 0)
                throw std::logic_error("ass_initial: nested primes");
    return out;
}

bool verify_decomposition(const Graph& g)
{
    const MonomialIdeal ideal = initial_ideal(g);
    MonomialIdeal acc = MonomialIdeal::unit(ideal.universe());
    for (const InitialPrime& p : ass_initial(g))
        acc = intersect(acc, MonomialIdeal::generated_by_variables(ideal.universe(), p.variables));
    return equal(acc, ideal);
}

bool colon_saturation_identity(const Graph& g, int v)
{
    const int n = g.order();
    if (v < 1 || v > n) throw std::out_of_range("vertex out of range");
    std::vector<int> images(static_cast<std::size_t>(n) + 1, 0);
    int next = 0;
    for (int u = 1; u <= n; ++u)
        if (u != v && !g.adjacent(u, v)) images[static_cast<std::size_t>(u)] = ++next;
    for (int u = 1; u <= n; ++u)
        if (g.adjacent(u, v)) images[static_cast<std::size_t>(u)] = ++next;
    images[static_cast<std::size_t>(v)] = n;
    const Graph h = relabel(g, Relabeling::from_images({images.begin() + 1, images.end()}));
    return equal(colon(initial_ideal(h), x_var(n)), initial_ideal(saturate(h, n)));
}

std::string to_string(IdentityStatus s)
{
    switch (s) {
    case IdentityStatus::Holds: return "holds";
    case IdentityStatus::Fails: return "fails";
    }
    return "?";
}

bool SetupReport::all_hold() const
{
    return std::none_of(identities.begin(), identities.end(), [](IdentityStatus s) { return s == IdentityStatus::Fails; });
}

namespace {

Graph edges_on(int n, const std::vector<Edge>& edges)
{
    GraphBuilder b(n);
    for (const auto& [u, w] : edges) b.add_edge(u, w);
    return b.build();
}

std::vector<Edge> shifted(const Graph& g, int offset, int skip = 0)
{
    std::vector<Edge> out;
    for (const auto& [u, w] : g.edges())
        if (u != skip && w != skip) out.emplace_back(u + offset, w + offset);
    return out;
}

IdentityStatus status(bool ok) { return ok ? IdentityStatus::Holds : IdentityStatus::Fails; }

bool supported_in(const MonomialIdeal& ideal, Monomial vars) { return (ideal.support() & ~vars) == 0; }

std::vector<Monomial> without_divisible(const std::vector<Monomial>& gens, Monomial var)
{
    std::vector<Monomial> out;
    for (Monomial g : gens)
        if ((g & var) == 0) out.push_back(g);
    return out;
}

} // namespace

SetupReport setup_identities(const Graph& g, int v)
{
    auto split = decompose_at(g, v);
    if (!split) throw std::invalid_argument("setup_identities: " + std::to_string(v) + " is not a cut vertex");
    SetupReport rep;
    rep.split = *split;
    const int n = g.order();
    const int m = split->cut;
    const int r = split->first_degree;
    const int s = split->second_degree;
    const Monomial ring = ring_variables(n);
    const Monomial xm = x_var(m), ym = y_var(m);
    const Monomial a1 = vertex_variables(first_vertices(m - 1));
    const Monomial a2 = vertex_variables(first_vertices(n) & ~first_vertices(m));
    rep.free_in_first = is_free_vertex(split->first, m);
    rep.free_in_second = is_free_vertex(split->second, 1);

    // Every graph below lives on labels 1..n; isolated vertices add no generators.
    const auto g1_edges = shifted(split->first, 0);
    const auto g2_edges = shifted(split->second, m - 1);
    auto with = [](std::vector<Edge> es, Edge e) {
        es.push_back(e);
        return es;
    };
    auto in = [&](const std::vector<Edge>& es) { return initial_ideal(edges_on(n, es), n).with_universe(ring); };
    auto in_graph = [&](const Graph& h, int offset, int skip = 0) { return in(shifted(h, offset, skip)); };

    const MonomialIdeal ideal = initial_ideal(split->relabeled, n);
    const MonomialIdeal i1 = in(with(g1_edges, {m, m + 1}));
    const MonomialIdeal i2 = in(with(g2_edges, {m - 1, m}));
    const MonomialIdeal j1 = in_graph(split->first, 0, m);
    const MonomialIdeal j2 = in_graph(split->second, m - 1, 1);
    const MonomialIdeal sat1 = in_graph(saturate(split->first, m), 0);           // in(J_{(G_1)_m})
    const MonomialIdeal sat2 = in_graph(saturate(split->second, 1), m - 1);      // in(J_{(G_2)_m})
    const MonomialIdeal sat2_del = in_graph(saturate(split->second, 1), m - 1, 1); // in(J_{(G_2)_m \ m})

    auto plus = [&](const MonomialIdeal& a, Monomial vars) { return add_variables(a, vars); };

    // (1) G(I) is the union of G(in J_{G_1}) and G(in J_{G_2}).
    {
        std::vector<Monomial> u = in(g1_edges).generators();
        const MonomialIdeal second = in(g2_edges);
        const auto& b = second.generators();
        u.insert(u.end(), b.begin(), b.end());
        std::sort(u.begin(), u.end());
        u.erase(std::unique(u.begin(), u.end()), u.end());
        rep.identities[0] = status(u == ideal.generators());
    }
    // (2) <I_1, x_m> = <I_1', x_m> with I_1' in A_1[y_m].
    const MonomialIdeal i1_xm = plus(i1, xm);
    rep.first_prime = MonomialIdeal(ring, without_divisible(i1.generators(), xm));
    rep.identities[1] = status(supported_in(rep.first_prime, a1 | ym) && equal(plus(rep.first_prime, xm), i1_xm));
    // (3) (I_1 : x_m) = in(J_{(G_1)_m}) + <y_{m+1}>.
    rep.identities[2] = status(equal(colon(i1, xm), plus(sat1, y_var(m + 1))));
    // (4) (<I_1, x_m> : y_m) = I_1'' + <x_m>, I_1'' in A_1 containing x_{m-1..m-r}.
    {
        const MonomialIdeal lhs = colon(i1_xm, ym);
        rep.first_second = MonomialIdeal(ring, without_divisible(lhs.generators(), xm));
        Monomial xs = 0;
        for (int k = 1; k <= r; ++k) xs |= x_var(m - k);
        rep.first_membership = true;
        for_each_bit(xs, [&](int b) { rep.first_membership &= rep.first_second.contains(Monomial{1} << b); });
        const bool alt = equal(lhs, plus(colon(i1, ym), xm));
        rep.identities[3] = status(supported_in(rep.first_second, a1) && rep.first_membership && alt &&
                                   equal(lhs, plus(rep.first_second, xm)));
    }
    // (5) <I_1, x_m, y_m> = J_1 + <x_m, y_m>.
    rep.identities[4] = status(equal(plus(i1, xm | ym), plus(j1, xm | ym)));
    // (6) <I_2, x_m> = <I_2', x_m>, I_2' in A_2[x_{m-1}, y_m].
    const MonomialIdeal i2_xm = plus(i2, xm);
    rep.second_prime = MonomialIdeal(ring, without_divisible(i2.generators(), xm));
    rep.identities[5] = status(supported_in(rep.second_prime, a2 | x_var(m - 1) | ym) &&
                               equal(plus(rep.second_prime, xm), i2_xm));
    // (7) (I_2 : x_m) = <x_{m-1} y_m> + I_2'', I_2'' in A_2 containing y_{m+1..m+s}.
    {
        const MonomialIdeal lhs = colon(i2, xm);
        std::vector<Monomial> rest;
        for (Monomial gen : lhs.generators())
            if (gen != (x_var(m - 1) | ym)) rest.push_back(gen);
        rep.second_second = MonomialIdeal(ring, rest);
        rep.second_membership = true;
        for (int k = 1; k <= s; ++k) rep.second_membership &= rep.second_second.contains(y_var(m + k));
        const MonomialIdeal rhs = sum(MonomialIdeal(ring, {x_var(m - 1) | ym}), rep.second_second);
        rep.identities[6] =
            status(supported_in(rep.second_second, a2) && rep.second_membership && equal(lhs, rhs));
    }
    // (8) (<I_2, x_m> : y_m) = in(J_{(G_2)_m \ m}) + <x_{m-1}, x_m>.
    rep.identities[7] = status(equal(colon(i2_xm, ym), plus(sat2_del, x_var(m - 1) | xm)));
    // (9) <I_2, x_m, y_m> = J_2 + <x_m, y_m>.
    rep.identities[8] = status(equal(plus(i2, xm | ym), plus(j2, xm | ym)));
    // (10) (I : y_m) = I_1'' + in(J_{(G_2)_m}).
    rep.identities[9] = status(equal(colon(ideal, ym), sum(rep.first_second, sat2)));
    // (11) (I : x_m) = I_2'' + in(J_{(G_1)_m}).
    rep.identities[10] = status(equal(colon(ideal, xm), sum(rep.second_second, sat1)));
    return rep;
}

} // namespace bei
