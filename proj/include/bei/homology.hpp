#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bei/monomial.hpp"

namespace bei {

/// Coefficient field for homology: characteristic 0 means the rationals.
struct FieldSpec {
    std::uint32_t characteristic = 0;

    static FieldSpec rationals() { return {0}; }
    /// Throws std::invalid_argument unless p is a prime below 2^31.
    static FieldSpec prime(std::uint32_t p);
    /// "QQ", "Q" or "0" for the rationals, otherwise "p" or "GF(p)".
    static FieldSpec parse(const std::string& text);
    bool is_rational() const { return characteristic == 0; }
    std::string name() const;
    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

inline constexpr std::uint32_t kDefaultModularPrime = 32003;

struct Budget {
    std::uint64_t faces = 5'000'000;   // faces enumerated for any one complex
    std::uint64_t lattice = 1'000'000; // lattice points per decision
};

/// Face counter for one complex; throws BudgetExceeded when exhausted.
class FaceMeter {
public:
    explicit FaceMeter(std::uint64_t limit) : limit_(limit) {}
    void charge(std::uint64_t n);
    std::uint64_t used() const { return used_; }

private:
    std::uint64_t limit_;
    std::uint64_t used_ = 0;
};

/// faces[k] holds the faces with k vertices, sorted.  faces[0] is {0} unless
/// the complex is void.
using FaceLevels = std::vector<std::vector<Monomial>>;

/// Every face of the complex with at most max_size vertices.
FaceLevels faces_from_facets(const std::vector<Monomial>& facets, int max_size, FaceMeter& meter);

/// Faces of the complex { F subset of W : F contains no generator } with at most
/// max_size vertices.  Generators not inside W are ignored.
FaceLevels faces_avoiding(const std::vector<Monomial>& gens, Monomial w, int max_size, FaceMeter& meter);

/// Ranks of reduced homology H~_i, i = -1 .. top, stored at index i + 1.
/// `top` defaults to the complex's dimension; when it is lower the result
/// covers degrees -1..top only.  The void complex yields an empty vector.
std::vector<long> homology_ranks(const FaceLevels& faces, FieldSpec field, int top = -2);

/// Reduced homology of a complex given by facets.  Every call checks the
/// Euler characteristic identity and throws std::logic_error on mismatch.
std::vector<long> reduced_homology_ranks(const SimplicialComplex& complex, FieldSpec field,
                                         const Budget& budget = {});

/// Link of a face: facets F \ face over all facets F containing face.
SimplicialComplex link(const SimplicialComplex& complex, Monomial face);

enum class Verdict { Yes, No, Indeterminate };

struct ReisnerWitness {
    Monomial face = 0; // sigma
    int degree = 0;    // i < dim lk(sigma) with H~_i(lk sigma) != 0
    long rank = 0;
};

struct CMCertificate {
    Verdict status = Verdict::Indeterminate;
    FieldSpec field;
    std::optional<ReisnerWitness> witness;
    std::string note; // budget message, or a non-homological reason

    bool is_cm() const { return status == Verdict::Yes; }
};

/// Reisner's criterion: Cohen-Macaulay iff H~_i(lk sigma) = 0 for every face
/// sigma and every i < dim lk sigma.  Links of faces that are not
/// intersections of facets are cones, so only the facet-intersection lattice
/// is scanned, in order of decreasing link dimension and then increasing
/// mask; the first failure is returned as the witness.
CMCertificate reisner_cm(const SimplicialComplex& complex, FieldSpec field, const Budget& budget = {});

struct HochsterWitness {
    Monomial subset = 0; // W
    int degree = 0;      // i with H~_i(Delta|_W) != 0 and pd = |W| - i - 1
};

struct DepthResult {
    int universe_size = 0;
    int depth_lower = 0;
    int depth_upper = 0;
    std::optional<HochsterWitness> witness;    // attains pd_lower (Hochster route)
    std::optional<ReisnerWitness> link_witness; // attains depth_upper (link route)
    std::string note;

    bool exact() const { return depth_lower == depth_upper; }
    int depth() const { return depth_lower; }
    int pd_lower() const { return universe_size - depth_upper; }
    int pd_upper() const { return universe_size - depth_lower; }
};

/// depth(R/I) for R the polynomial ring on I.universe(), through Hochster's
/// formula pd = max |W| - i - 1 over H~_i(Delta|_W) != 0.  W ranges over the
/// lcm lattice of the generators (plus the empty set), largest first, and the
/// scan stops once no remaining W can raise pd.  When a budget runs out the
/// result is an interval.  Throws std::invalid_argument on the unit ideal.
DepthResult hochster_depth(const MonomialIdeal& ideal, FieldSpec field, const Budget& budget = {});

/// depth(R/I) from the links: depth = min |sigma| + 1 + i over faces sigma with
/// H~_i(lk sigma) != 0.  Only facet intersections are scanned (other links
/// are cones), smallest first; a facet F contributes |F| through H~_{-1}.
/// Same interval semantics as hochster_depth.
DepthResult local_cohomology_depth(const MonomialIdeal& ideal, FieldSpec field, const Budget& budget = {});

inline constexpr int kBruteDepthVariableCap = 12;

/// Same contract as hochster_depth, scanning every subset W of the universe.
/// Throws CapExceeded above kBruteDepthVariableCap variables.
DepthResult brute_depth_oracle(const MonomialIdeal& ideal, FieldSpec field);

struct DepthSplitting {
    bool holds = false;
    int depth = 0;
    std::optional<int> after_adding;        // depth R/<I, x_1..x_k>
    std::vector<std::optional<int>> colons; // depth R/(<I, x_1..x_{j-1}> : x_j); nullopt for the unit ideal
};

/// Checks that depth(R/I) equals depth(R/<I, vars>) or one of the colon
/// depths, taking the variables in the given order.  Exact depths only.
DepthSplitting depth_splitting_check(const MonomialIdeal& ideal, const std::vector<Monomial>& vars,
                                     FieldSpec field = FieldSpec::rationals());

/// Exact rank of a 0/+-1 style integer matrix given column-wise as
/// (row, value) lists with rows sorted ascending, over the field.
std::size_t matrix_rank(std::vector<std::vector<std::pair<int, std::int64_t>>> columns, FieldSpec field);

} // namespace bei
