#include "doctest.h"

#include <random>
#include <stdexcept>

#include "bei/binomial_edge.hpp"
#include "bei/monomial.hpp"

using namespace bei;

namespace {

Monomial m(const std::string& s) { return parse_monomial(s); }

MonomialIdeal ideal(Monomial universe, std::initializer_list<const char*> gens)
{
    std::vector<Monomial> g;
    for (const char* s : gens) g.push_back(m(s));
    return MonomialIdeal(universe, g);
}

std::vector<std::string> names(const std::vector<Monomial>& ms)
{
    std::vector<std::string> out;
    for (Monomial x : ms) out.push_back(monomial_to_string(x));
    return out;
}

MonomialIdeal random_ideal(Monomial universe, int gens, std::mt19937_64& rng)
{
    std::vector<Monomial> out;
    for (int k = 0; k < gens; ++k) {
        Monomial g = rng() & rng() & universe;
        if (g == 0) g = universe & (~universe + 1);
        out.push_back(g);
    }
    return MonomialIdeal(universe, out);
}

// Membership straight from the definition: some generator divides x.
bool member(const std::vector<Monomial>& gens, Monomial x)
{
    for (Monomial g : gens)
        if ((g & ~x) == 0) return true;
    return false;
}

// Minimal covers by scanning every subset of the universe.
std::vector<Monomial> cover_oracle(const MonomialIdeal& I)
{
    const Monomial u = I.universe();
    std::vector<Monomial> covers;
    for (Monomial s = u;; s = (s - 1) & u) {
        bool hits = true;
        for (Monomial g : I.generators()) hits = hits && (g & s) != 0;
        if (hits) covers.push_back(s);
        if (s == 0) break;
    }
    std::vector<Monomial> minimal;
    for (Monomial c : covers) {
        bool is_min = true;
        for (Monomial d : covers) is_min = is_min && !(d != c && (d & ~c) == 0);
        if (is_min) minimal.push_back(c);
    }
    std::sort(minimal.begin(), minimal.end());
    return minimal;
}

} // namespace

TEST_CASE("monomial text form")
{
    CHECK(monomial_to_string(x_var(1) | y_var(2)) == "x1*y2");
    CHECK(monomial_to_string(y_var(1) | x_var(3) | x_var(1)) == "x1*x3*y1");
    CHECK(monomial_to_string(0) == "1");
    CHECK(m("x1*x3*y1") == (x_var(1) | x_var(3) | y_var(1)));
    CHECK(m("1") == 0);
    CHECK_THROWS_AS(m("z1"), std::invalid_argument);
    CHECK_THROWS(m("x0"));
    CHECK_THROWS(m("x33"));
}

TEST_CASE("minimalize")
{
    const Monomial u = ring_variables(3);
    CHECK(names(minimalize(u, {m("x1*y2"), m("x1*x3*y2")}).generators()) == std::vector<std::string>{"x1*y2"});
    CHECK(minimalize(u, {}).is_zero());
    const auto p3 = minimalize(u, {m("x1*y3"), m("x2*y3"), m("x1*x3*y2")});
    CHECK(p3.size() == 3);
    CHECK_THROWS_AS(minimalize(ring_variables(1), {m("x2")}), std::invalid_argument);
}

TEST_CASE("colon")
{
    const Monomial u = ring_variables(3);
    CHECK(colon(ideal(u, {"x1*y2"}), m("x1")) == ideal(u, {"y2"}));
    const auto p3 = initial_ideal(path_graph(3));
    CHECK(colon(p3, 0) == p3);
    CHECK(colon(p3, m("x2")) == ideal(u, {"x1*y2", "y3"}));
    CHECK(colon(ideal(u, {"x1"}), m("x1")).is_unit());
}

TEST_CASE("add_variables, sum and intersect")
{
    const Monomial u = ring_variables(3);
    CHECK(add_variables(ideal(u, {"x1*y2"}), m("x1")) == ideal(u, {"x1"}));
    CHECK(add_variables(MonomialIdeal::zero(u), m("x1")) == ideal(u, {"x1"}));
    CHECK(add_variables(initial_ideal(path_graph(3)), m("x2*y2")) == ideal(u, {"x2", "y2"}));
    CHECK(intersect(ideal(u, {"x1"}), ideal(u, {"y1"})) == ideal(u, {"x1*y1"}));
    const auto p3 = initial_ideal(path_graph(3));
    CHECK(intersect(p3, MonomialIdeal::unit(u)) == p3);
    CHECK(intersect(p3, MonomialIdeal::zero(u)).is_zero());
    CHECK(sum(ideal(u, {"x1*y2"}), ideal(u, {"x1"})) == ideal(u, {"x1"}));
    CHECK_THROWS_AS(sum(ideal(u, {"x1"}), ideal(ring_variables(2), {"x1"})), std::invalid_argument);
    CHECK(equal(p3, p3));
    CHECK_FALSE(equal(ideal(u, {"x1"}), ideal(u, {"y1"})));
}

TEST_CASE("minimal primes")
{
    const Monomial u = ring_variables(2);
    CHECK(names(minimal_primes(ideal(u, {"x1*y2"}))) == std::vector<std::string>{"x1", "y2"});
    CHECK(names(minimal_primes(ideal(u, {"x1*y1"}))) == std::vector<std::string>{"x1", "y1"});
    CHECK(minimal_primes(MonomialIdeal::zero(u)) == std::vector<Monomial>{0});
    CHECK(minimal_primes(MonomialIdeal::unit(u)).empty());
    std::vector<std::string> p3 = names(minimal_primes(initial_ideal(path_graph(3))));
    std::sort(p3.begin(), p3.end());
    CHECK(p3 == std::vector<std::string>{"x1*x2", "x1*y3", "x2*y2", "y2*y3"});
}

TEST_CASE("stanley_reisner")
{
    const Monomial u = ring_variables(2);
    const auto sr = stanley_reisner(ideal(u, {"x1*y2"}));
    CHECK(sr.universe == u);
    auto facet_names = names(sr.facets);
    std::sort(facet_names.begin(), facet_names.end());
    CHECK(facet_names == std::vector<std::string>{"x1*x2*y1", "x2*y1*y2"});
    CHECK(stanley_reisner(MonomialIdeal::zero(u)).facets == std::vector<Monomial>{u});
    CHECK(stanley_reisner(MonomialIdeal::generated_by_variables(u, u)).facets == std::vector<Monomial>{0});
    CHECK_THROWS_AS(stanley_reisner(MonomialIdeal::unit(u)), std::invalid_argument);
    const auto p3 = stanley_reisner(initial_ideal(path_graph(3)));
    CHECK(p3.facets.size() == 4);
    for (Monomial f : p3.facets) CHECK(popcount(f) == 4);
}

TEST_CASE("algebraic laws on random ideals")
{
    std::mt19937_64 rng(20240601);
    for (int t = 0; t < 300; ++t) {
        const int nvars = 4 + static_cast<int>(rng() % 9); // up to 12 variables
        const Monomial u = (Monomial{1} << nvars) - 1;
        const auto I = random_ideal(u, 1 + static_cast<int>(rng() % 5), rng);
        const auto J = random_ideal(u, 1 + static_cast<int>(rng() % 5), rng);
        const auto K = random_ideal(u, 1 + static_cast<int>(rng() % 4), rng);
        const Monomial a = rng() & rng() & u, b = rng() & rng() & u;

        CHECK(colon(I, a | b) == colon(colon(I, a), b));
        CHECK(intersect(I, J) == intersect(J, I));
        CHECK(intersect(intersect(I, J), K) == intersect(I, intersect(J, K)));
        CHECK(intersect(I, MonomialIdeal::unit(u)) == I);

        // Membership tests against the definitions, over every monomial.
        const auto IJ = intersect(I, J);
        const auto Ia = colon(I, a);
        for (Monomial x = u;; x = (x - 1) & u) {
            CHECK(IJ.contains(x) == (member(I.generators(), x) && member(J.generators(), x)));
            CHECK(Ia.contains(x) == member(I.generators(), x | a));
            if (x == 0) break;
        }

        const auto primes = minimal_primes(I);
        CHECK(primes == cover_oracle(I));
        MonomialIdeal back = MonomialIdeal::unit(u);
        for (Monomial p : primes) back = intersect(back, MonomialIdeal::generated_by_variables(u, p));
        CHECK(back == I);

        // Facets are the complements of the minimal primes.
        const auto sr = stanley_reisner(I);
        std::vector<Monomial> complements;
        for (Monomial p : primes) complements.push_back(u & ~p);
        std::sort(complements.begin(), complements.end());
        auto facets = sr.facets;
        std::sort(facets.begin(), facets.end());
        CHECK(facets == complements);

        // I contained in I + J reverses to face containment.
        const auto big = sum(I, J);
        if (!big.is_unit()) {
            const auto small_complex = stanley_reisner(big);
            for (Monomial f : small_complex.facets) CHECK(sr.contains_face(f));
        }
    }
}
