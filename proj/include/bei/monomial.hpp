#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bei/bits.hpp"

namespace bei {

/// A square-free monomial over K[x_1..x_32, y_1..y_32], stored as its support.
/// x_i sits at bit 2(i-1) and y_i at bit 2(i-1)+1, so the variables of one
/// vertex are adjacent and relabel-free subgraphs share bit positions.
using Monomial = std::uint64_t;

inline constexpr int kMaxVariableIndex = 32;

enum class VarKind { X, Y };

struct Variable {
    VarKind kind = VarKind::X;
    int index = 1;
    friend bool operator==(const Variable&, const Variable&) = default;
};

constexpr Monomial x_var(int i) { return Monomial{1} << (2 * (i - 1)); }
constexpr Monomial y_var(int i) { return Monomial{1} << (2 * (i - 1) + 1); }
Monomial var_bit(Variable v);
Variable variable_at(int bit);

/// Both variables of every vertex in s.
Monomial vertex_variables(VertexSet s);
/// x_1..x_n, y_1..y_n.
constexpr Monomial ring_variables(int n)
{
    return n >= 32 ? ~Monomial{0} : (Monomial{1} << (2 * n)) - 1;
}

/// "x1*y3"; variables sorted x before y, then by index.  The unit monomial is "1".
std::string monomial_to_string(Monomial m);
/// Inverse of monomial_to_string; throws std::invalid_argument.
Monomial parse_monomial(const std::string& text);

/// Square-free monomial ideal with its minimal generators, sorted as integers.
///
/// The ambient polynomial ring is given by `universe`, a mask of variables.
/// The zero ideal has no generators; the unit ideal has the single generator 1
/// (the empty support).
class MonomialIdeal {
public:
    MonomialIdeal() = default;
    /// Minimalizes `gens`; every generator must lie inside `universe`.
    MonomialIdeal(Monomial universe, std::vector<Monomial> gens);

    static MonomialIdeal zero(Monomial universe) { return MonomialIdeal(universe, {}); }
    static MonomialIdeal unit(Monomial universe) { return MonomialIdeal(universe, {0}); }
    /// Ideal generated by the variables in `vars`.
    static MonomialIdeal generated_by_variables(Monomial universe, Monomial vars);

    Monomial universe() const { return universe_; }
    int universe_size() const { return popcount(universe_); }
    const std::vector<Monomial>& generators() const { return gens_; }
    std::size_t size() const { return gens_.size(); }
    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const { return gens_.size() == 1 && gens_.front() == 0; }
    /// Union of all generator supports.
    Monomial support() const;

    bool contains(Monomial m) const;
    bool contains(const MonomialIdeal& other) const;

    /// Same ideal over a larger (or equal) ring.
    MonomialIdeal with_universe(Monomial universe) const;

    /// One generator per line, in the canonical order.
    std::string to_string() const;

    friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

private:
    Monomial universe_ = 0;
    std::vector<Monomial> gens_;
};

/// Minimal elements of `monomials` under divisibility, sorted.
std::vector<Monomial> minimal_antichain(std::vector<Monomial> monomials);

/// Checked minimalization: throws std::invalid_argument when some monomial
/// leaves the universe.
MonomialIdeal minimalize(Monomial universe, std::vector<Monomial> monomials);

MonomialIdeal colon(const MonomialIdeal& ideal, Monomial m);
MonomialIdeal add_variables(const MonomialIdeal& ideal, Monomial vars);
/// Both ideals must share a universe (std::invalid_argument otherwise).
MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);
/// Equality of minimal generating sets (the universes are not compared).
bool equal(const MonomialIdeal& a, const MonomialIdeal& b);

/// Inclusion-minimal variable sets meeting every generator, sorted.  The zero
/// ideal has the single prime {}; the unit ideal has none.
std::vector<Monomial> minimal_primes(const MonomialIdeal& ideal);

/// Simplicial complex on a finite vertex universe given by its facets.
/// No facets: the void complex.  Facet list {0}: the irrelevant complex {{}}.
struct SimplicialComplex {
    Monomial universe = 0;
    std::vector<Monomial> facets; // antichain under inclusion, sorted

    bool is_void() const { return facets.empty(); }
    /// Largest facet size minus one; -1 for {{}}, and -2 for the void complex.
    int dimension() const;
    bool contains_face(Monomial face) const;
    friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;
};

/// Facets are complements (inside the universe) of the minimal primes.
/// Throws std::invalid_argument on the unit ideal, whose complex is void.
SimplicialComplex stanley_reisner(const MonomialIdeal& ideal);

} // namespace bei
