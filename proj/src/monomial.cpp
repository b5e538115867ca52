#include "bei/monomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace bei {

Monomial var_bit(Variable v)
{
    if (v.index < 1 || v.index > kMaxVariableIndex) throw std::out_of_range("variable index out of range");
    return v.kind == VarKind::X ? x_var(v.index) : y_var(v.index);
}

Variable variable_at(int bit) { return {bit % 2 == 0 ? VarKind::X : VarKind::Y, bit / 2 + 1}; }

Monomial vertex_variables(VertexSet s)
{
    Monomial out = 0;
    for_each_bit(s, [&](int b) { out |= x_var(b + 1) | y_var(b + 1); });
    return out;
}

std::string monomial_to_string(Monomial m)
{
    if (m == 0) return "1";
    std::string out;
    auto emit = [&](int parity, char letter) {
        for_each_bit(m, [&](int b) {
            if (b % 2 != parity) return;
            if (!out.empty()) out += '*';
            out += letter;
            out += std::to_string(b / 2 + 1);
        });
    };
    emit(0, 'x');
    emit(1, 'y');
    return out;
}

Monomial parse_monomial(const std::string& text)
{
    if (text == "1") return 0;
    Monomial out = 0;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, '*')) {
        if (tok.size() < 2 || (tok[0] != 'x' && tok[0] != 'y'))
            throw std::invalid_argument("bad variable '" + tok + "'");
        std::size_t used = 0;
        const int idx = std::stoi(tok.substr(1), &used);
        if (used != tok.size() - 1) throw std::invalid_argument("bad variable '" + tok + "'");
        out |= var_bit({tok[0] == 'x' ? VarKind::X : VarKind::Y, idx});
    }
    return out;
}

std::vector<Monomial> minimal_antichain(std::vector<Monomial> ms)
{
    std::sort(ms.begin(), ms.end(), [](Monomial a, Monomial b) {
        const int pa = popcount(a), pb = popcount(b);
        return pa != pb ? pa < pb : a < b;
    });
    ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
    std::vector<Monomial> kept;
    for (Monomial m : ms) {
        bool absorbed = false;
        for (Monomial k : kept) {
            if ((k & ~m) == 0) { absorbed = true; break; }
        }
        if (!absorbed) kept.push_back(m);
    }
    std::sort(kept.begin(), kept.end());
    return kept;
}

MonomialIdeal minimalize(Monomial universe, std::vector<Monomial> monomials)
{
    for (Monomial m : monomials)
        if ((m & ~universe) != 0) throw std::invalid_argument("monomial " + monomial_to_string(m) + " outside the universe");
    return MonomialIdeal(universe, std::move(monomials));
}

MonomialIdeal::MonomialIdeal(Monomial universe, std::vector<Monomial> gens) : universe_(universe)
{
    for (Monomial g : gens)
        if ((g & ~universe) != 0)
            throw std::invalid_argument("generator " + monomial_to_string(g) + " outside the universe");
    gens_ = minimal_antichain(std::move(gens));
}

MonomialIdeal MonomialIdeal::generated_by_variables(Monomial universe, Monomial vars)
{
    std::vector<Monomial> gens;
    for_each_bit(vars, [&](int b) { gens.push_back(Monomial{1} << b); });
    return MonomialIdeal(universe, std::move(gens));
}

Monomial MonomialIdeal::support() const
{
    Monomial s = 0;
    for (Monomial g : gens_) s |= g;
    return s;
}

bool MonomialIdeal::contains(Monomial m) const
{
    return std::any_of(gens_.begin(), gens_.end(), [&](Monomial g) { return (g & ~m) == 0; });
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const
{
    return std::all_of(other.gens_.begin(), other.gens_.end(), [&](Monomial g) { return contains(g); });
}

MonomialIdeal MonomialIdeal::with_universe(Monomial universe) const
{
    return MonomialIdeal(universe, gens_);
}

std::string MonomialIdeal::to_string() const
{
    std::string out;
    for (Monomial g : gens_) {
        out += monomial_to_string(g);
        out += '\n';
    }
    return out;
}

MonomialIdeal colon(const MonomialIdeal& ideal, Monomial m)
{
    if ((m & ~ideal.universe()) != 0) throw std::invalid_argument("colon: monomial outside the universe");
    std::vector<Monomial> gens;
    gens.reserve(ideal.size());
    for (Monomial g : ideal.generators()) gens.push_back(g & ~m);
    return MonomialIdeal(ideal.universe(), std::move(gens));
}

MonomialIdeal add_variables(const MonomialIdeal& ideal, Monomial vars)
{
    std::vector<Monomial> gens = ideal.generators();
    for_each_bit(vars, [&](int b) { gens.push_back(Monomial{1} << b); });
    return MonomialIdeal(ideal.universe(), std::move(gens));
}

namespace {

void require_same_universe(const MonomialIdeal& a, const MonomialIdeal& b, const char* op)
{
    if (a.universe() != b.universe()) throw std::invalid_argument(std::string(op) + ": mixed universes");
}

} // namespace

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b)
{
    require_same_universe(a, b, "sum");
    std::vector<Monomial> gens = a.generators();
    gens.insert(gens.end(), b.generators().begin(), b.generators().end());
    return MonomialIdeal(a.universe(), std::move(gens));
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b)
{
    require_same_universe(a, b, "intersect");
    std::vector<Monomial> gens;
    gens.reserve(a.size() * b.size());
    for (Monomial g : a.generators())
        for (Monomial h : b.generators()) gens.push_back(g | h);
    return MonomialIdeal(a.universe(), std::move(gens));
}

bool equal(const MonomialIdeal& a, const MonomialIdeal& b) { return a.generators() == b.generators(); }

namespace {

/// Minimal transversal search.  Each branch picks an unhit generator and one
/// of its admissible variables, excluding the variables tried in earlier
/// sibling branches, so no transversal is produced twice.  A partial cover is
/// dropped once one of its variables loses every private generator, because
/// no extension of it can be minimal.
struct TransversalSearch {
    const std::vector<Monomial>& gens;
    std::vector<Monomial> found;

    bool has_private_edges(Monomial cover) const
    {
        Monomial need = cover;
        for (Monomial g : gens) {
            const Monomial hit = g & cover;
            if (hit != 0 && (hit & (hit - 1)) == 0) need &= ~hit;
            if (need == 0) return true;
        }
        return need == 0;
    }

    void run(Monomial cover, Monomial excluded)
    {
        // Unhit generator with the fewest admissible variables.
        Monomial pick = 0;
        int best = 65;
        for (Monomial g : gens) {
            if ((g & cover) != 0) continue;
            const Monomial avail = g & ~excluded;
            const int k = popcount(avail);
            if (k == 0) return;
            if (k < best) {
                best = k;
                pick = avail;
            }
        }
        if (best == 65) {
            found.push_back(cover);
            return;
        }
        Monomial tried = 0;
        for_each_bit(pick, [&](int b) {
            const Monomial v = Monomial{1} << b;
            const Monomial next = cover | v;
            if (has_private_edges(next)) run(next, excluded | tried);
            tried |= v;
        });
    }
};

} // namespace

std::vector<Monomial> minimal_primes(const MonomialIdeal& ideal)
{
    if (ideal.is_unit()) return {};
    TransversalSearch search{ideal.generators(), {}};
    search.run(0, 0);
    std::sort(search.found.begin(), search.found.end());
    return search.found;
}

int SimplicialComplex::dimension() const
{
    if (facets.empty()) return -2;
    int best = 0;
    for (Monomial f : facets) best = std::max(best, popcount(f));
    return best - 1;
}

bool SimplicialComplex::contains_face(Monomial face) const
{
    return std::any_of(facets.begin(), facets.end(), [&](Monomial f) { return (face & ~f) == 0; });
}

SimplicialComplex stanley_reisner(const MonomialIdeal& ideal)
{
    if (ideal.is_unit()) throw std::invalid_argument("stanley_reisner: the unit ideal has the void complex");
    SimplicialComplex out;
    out.universe = ideal.universe();
    for (Monomial p : minimal_primes(ideal)) out.facets.push_back(ideal.universe() & ~p);
    std::sort(out.facets.begin(), out.facets.end());
    return out;
}

} // namespace bei
