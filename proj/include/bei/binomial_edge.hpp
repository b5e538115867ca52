#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "bei/cutsets.hpp"
#include "bei/graph.hpp"
#include "bei/monomial.hpp"

namespace bei {

/// Induced path i_0, ..., i_r with i_0 < i_r whose interior vertices all lie
/// outside the interval [i_0, i_r].
struct AdmissiblePath {
    std::vector<int> vertices;

    int first() const { return vertices.front(); }
    int last() const { return vertices.back(); }
    friend bool operator==(const AdmissiblePath&, const AdmissiblePath&) = default;
};

inline constexpr int kDefaultPathCap = 14;

/// Every admissible path, ordered by (first, last, vertex sequence).
/// Throws CapExceeded when order() > cap.
std::vector<AdmissiblePath> admissible_paths(const Graph& g, int cap = kDefaultPathCap);

/// u_pi x_i y_j.
Monomial path_monomial(const AdmissiblePath& path);

/// Lex initial ideal of J_G (x_1 > ... > x_n > y_1 > ... > y_n) over the
/// ring of G.  Throws std::logic_error if the path monomials are not already
/// an antichain, CapExceeded above the cap or above 32 vertices.
MonomialIdeal initial_ideal(const Graph& g, int cap = kDefaultPathCap);

/// P_T(G) described by its cutset and the components of G \ T.
struct BinomialPrime {
    Cutset cutset;
    std::vector<VertexSet> components;
    int height = 0; // n + |T| - c(T)
};

/// Throws std::invalid_argument when T is not a cutset.
BinomialPrime prime_PT(const Graph& g, VertexSet t);

/// P_T(v): one chosen vertex per component of G \ T (components ordered by
/// their smallest vertex).
struct InitialPrime {
    VertexSet cutset = 0;
    std::vector<int> choice;
    Monomial variables = 0;

    int height() const { return popcount(variables); }
};

/// Throws std::invalid_argument when T is not a cutset or the choice does
/// not pick exactly one vertex from each component.
InitialPrime prime_PTv(const Graph& g, VertexSet t, const std::vector<int>& choice);

/// All P_T(v), ordered by cutset (size, then lexicographic) and then by the
/// choice vector.  Pairwise non-containment is checked (std::logic_error).
std::vector<InitialPrime> ass_initial(const Graph& g, int cap = kDefaultCutsetCap);

/// initial_ideal(G) equals the intersection of all P_T(v).
bool verify_decomposition(const Graph& g);

/// Relabels so that v = n and N(v) = {n-r..n-1}, then checks
/// (in(J_G) : x_n) = in(J_{G_n}).
bool colon_saturation_identity(const Graph& g, int v);

enum class IdentityStatus { Holds, Fails };
std::string to_string(IdentityStatus s);

/// The eleven cut-vertex identities for the split of G at v, evaluated in the
/// relabeled graph.  Identity k sits at index k - 1.
struct SetupReport {
    CutDecomposition split;
    bool free_in_first = false;  // m free in G_1
    bool free_in_second = false; // m free in G_2
    std::array<IdentityStatus, 11> identities{};
    MonomialIdeal first_prime;   // I_1'
    MonomialIdeal first_second;  // I_1''
    MonomialIdeal second_prime;  // I_2'
    MonomialIdeal second_second; // I_2''
    bool first_membership = false;  // x_{m-1..m-r} in I_1''
    bool second_membership = false; // y_{m+1..m+s} in I_2''

    bool all_hold() const;
};

/// Throws std::invalid_argument when v is not a cut vertex of connected G.
SetupReport setup_identities(const Graph& g, int v);

} // namespace bei
