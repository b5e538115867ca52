#include "bei/homology.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include "bei/errors.hpp"

namespace bei {

FieldSpec FieldSpec::prime(std::uint32_t p)
{
    if (p < 2 || p >= (1u << 31)) throw std::invalid_argument("field characteristic must be a prime below 2^31");
    for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= p; ++d)
        if (p % d == 0) throw std::invalid_argument(std::to_string(p) + " is not prime");
    return {p};
}

FieldSpec FieldSpec::parse(const std::string& text)
{
    if (text == "QQ" || text == "Q" || text == "0") return rationals();
    std::string digits = text;
    if (digits.rfind("GF(", 0) == 0 && digits.back() == ')') digits = digits.substr(3, digits.size() - 4);
    std::size_t used = 0;
    unsigned long p = 0;
    try {
        p = std::stoul(digits, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != digits.size() || p > 0xffffffffUL)
        throw std::invalid_argument("bad field '" + text + "' (QQ, p or GF(p))");
    return prime(static_cast<std::uint32_t>(p));
}

std::string FieldSpec::name() const
{
    return is_rational() ? std::string("QQ") : "GF(" + std::to_string(characteristic) + ")";
}

void FaceMeter::charge(std::uint64_t n)
{
    used_ += n;
    if (used_ > limit_)
        throw BudgetExceeded("face budget of " + std::to_string(limit_) + " exhausted");
}

// ---------------------------------------------------------------------------
// Sparse column reduction.

namespace {

template <class T>
using Column = std::vector<std::pair<int, T>>;

struct Overflow {};

/// Fraction-free elimination over the integers with checked 64-bit entries.
struct CheckedIntOps {
    using T = std::int64_t;
    static T mul(T a, T b)
    {
        T r;
        if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
        return r;
    }
    static T sub(T a, T b)
    {
        T r;
        if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
        return r;
    }
    static T gcd(T a, T b) { return std::gcd(a, b); }
    static bool is_zero(const T& a) { return a == 0; }
};

struct BigIntOps {
    using T = boost::multiprecision::cpp_int;
    static T mul(const T& a, const T& b) { return a * b; }
    static T sub(const T& a, const T& b) { return a - b; }
    static T gcd(const T& a, const T& b) { return boost::multiprecision::gcd(a, b); }
    static bool is_zero(const T& a) { return a == 0; }
};

/// col <- p * col - a * piv, where p and a are the low entries of piv and col;
/// the result is divided by the gcd of its entries.
template <class Ops>
void eliminate_integer(Column<typename Ops::T>& col, const Column<typename Ops::T>& piv)
{
    using T = typename Ops::T;
    const T a = col.back().second;
    const T p = piv.back().second;
    Column<T> out;
    out.reserve(col.size() + piv.size());
    std::size_t i = 0, j = 0;
    while (i < col.size() || j < piv.size()) {
        if (j == piv.size() || (i < col.size() && col[i].first < piv[j].first)) {
            out.emplace_back(col[i].first, Ops::mul(p, col[i].second));
            ++i;
        } else if (i == col.size() || piv[j].first < col[i].first) {
            out.emplace_back(piv[j].first, Ops::sub(T(0), Ops::mul(a, piv[j].second)));
            ++j;
        } else {
            T v = Ops::sub(Ops::mul(p, col[i].second), Ops::mul(a, piv[j].second));
            if (!Ops::is_zero(v)) out.emplace_back(col[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    if (!out.empty()) {
        T g = 0;
        for (const auto& e : out) {
            g = Ops::gcd(g, e.second < 0 ? T(-e.second) : e.second);
            if (g == 1) break;
        }
        if (g > 1)
            for (auto& e : out) e.second /= g;
    }
    col.swap(out);
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p)
{
    std::uint64_t result = 1, base = a % p, e = p - 2;
    while (e) {
        if (e & 1) result = result * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return result;
}

/// col <- col - a * piv over GF(p), with piv normalized to low entry 1.
void eliminate_modular(Column<std::uint64_t>& col, const Column<std::uint64_t>& piv, std::uint64_t p)
{
    const std::uint64_t a = col.back().second;
    Column<std::uint64_t> out;
    out.reserve(col.size() + piv.size());
    std::size_t i = 0, j = 0;
    while (i < col.size() || j < piv.size()) {
        if (j == piv.size() || (i < col.size() && col[i].first < piv[j].first)) {
            out.push_back(col[i++]);
        } else if (i == col.size() || piv[j].first < col[i].first) {
            out.emplace_back(piv[j].first, (p - a * piv[j].second % p) % p);
            ++j;
        } else {
            const std::uint64_t v = (col[i].second + p - a * piv[j].second % p) % p;
            if (v != 0) out.emplace_back(col[i].first, v);
            ++i;
            ++j;
        }
    }
    col.swap(out);
}

/// Standard left-to-right reduction.  Returns the rank; pivot rows are
/// recorded in `pivot_rows` (for clearing in the next lower dimension).
template <class T, class Elim>
std::size_t reduce(std::vector<Column<T>>& cols, int rows, std::vector<char>& pivot_rows, Elim&& elim,
                   bool normalize_mod = false, std::uint64_t p = 0)
{
    std::vector<int> pivot_of(static_cast<std::size_t>(rows), -1);
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols.size(); ++c) {
        auto& col = cols[c];
        while (!col.empty()) {
            const int low = col.back().first;
            const int k = pivot_of[static_cast<std::size_t>(low)];
            if (k < 0) {
                pivot_of[static_cast<std::size_t>(low)] = static_cast<int>(c);
                pivot_rows[static_cast<std::size_t>(low)] = 1;
                if constexpr (std::is_same_v<T, std::uint64_t>) {
                    if (normalize_mod && col.back().second != 1) {
                        const std::uint64_t inv = mod_inverse(col.back().second, p);
                        for (auto& e : col) e.second = e.second * inv % p;
                    }
                }
                ++rank;
                break;
            }
            elim(col, cols[static_cast<std::size_t>(k)]);
        }
    }
    return rank;
}

using IntColumns = std::vector<Column<std::int64_t>>;

std::size_t rank_of(const IntColumns& columns, int rows, FieldSpec field, std::vector<char>& pivot_rows)
{
    if (!field.is_rational()) {
        const std::uint64_t p = field.characteristic;
        std::vector<Column<std::uint64_t>> cols(columns.size());
        for (std::size_t c = 0; c < columns.size(); ++c)
            for (const auto& [r, v] : columns[c]) {
                const std::int64_t m = v % static_cast<std::int64_t>(p);
                const auto u = static_cast<std::uint64_t>(m < 0 ? m + static_cast<std::int64_t>(p) : m);
                if (u != 0) cols[c].emplace_back(r, u);
            }
        return reduce(cols, rows, pivot_rows, [p](auto& col, const auto& piv) { eliminate_modular(col, piv, p); },
                      true, p);
    }
    try {
        IntColumns cols = columns;
        std::vector<char> rows_mark(pivot_rows.size(), 0);
        const std::size_t r = reduce(cols, rows, rows_mark,
                                     [](auto& col, const auto& piv) { eliminate_integer<CheckedIntOps>(col, piv); });
        pivot_rows = std::move(rows_mark);
        return r;
    } catch (const Overflow&) {
        std::vector<Column<BigIntOps::T>> cols(columns.size());
        for (std::size_t c = 0; c < columns.size(); ++c)
            for (const auto& [r, v] : columns[c]) cols[c].emplace_back(r, BigIntOps::T(v));
        std::fill(pivot_rows.begin(), pivot_rows.end(), 0);
        return reduce(cols, rows, pivot_rows, [](auto& col, const auto& piv) { eliminate_integer<BigIntOps>(col, piv); });
    }
}

} // namespace

std::size_t matrix_rank(std::vector<std::vector<std::pair<int, std::int64_t>>> columns, FieldSpec field)
{
    int rows = 0;
    for (auto& col : columns) {
        std::sort(col.begin(), col.end());
        col.erase(std::remove_if(col.begin(), col.end(), [](const auto& e) { return e.second == 0; }), col.end());
        if (!col.empty()) rows = std::max(rows, col.back().first + 1);
    }
    std::vector<char> pivots(static_cast<std::size_t>(rows), 0);
    return rank_of(columns, rows, field, pivots);
}

// ---------------------------------------------------------------------------
// Face enumeration.

namespace {

void sort_unique(std::vector<Monomial>& v)
{
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

/// k-subsets of `set`, appended to out.
void subsets_of_size(Monomial set, int k, std::vector<Monomial>& out)
{
    std::vector<int> bits;
    for_each_bit(set, [&](int b) { bits.push_back(b); });
    const int n = static_cast<int>(bits.size());
    if (k > n) return;
    std::vector<int> idx(static_cast<std::size_t>(k));
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        Monomial m = 0;
        for (int i : idx) m |= Monomial{1} << bits[static_cast<std::size_t>(i)];
        out.push_back(m);
        int i = k - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) break;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
}

} // namespace

FaceLevels faces_from_facets(const std::vector<Monomial>& facets, int max_size, FaceMeter& meter)
{
    if (facets.empty()) return {};
    int top = 0;
    for (Monomial f : facets) top = std::max(top, popcount(f));
    top = std::min(top, max_size);
    FaceLevels levels(static_cast<std::size_t>(top + 1));
    for (Monomial f : facets)
        if (popcount(f) >= top) subsets_of_size(f, top, levels[static_cast<std::size_t>(top)]);
    sort_unique(levels[static_cast<std::size_t>(top)]);
    meter.charge(levels[static_cast<std::size_t>(top)].size());
    for (int k = top - 1; k >= 0; --k) {
        auto& cur = levels[static_cast<std::size_t>(k)];
        for (Monomial f : facets)
            if (popcount(f) == k) cur.push_back(f);
        for (Monomial f : levels[static_cast<std::size_t>(k + 1)])
            for_each_bit(f, [&](int b) { cur.push_back(f & ~(Monomial{1} << b)); });
        sort_unique(cur);
        meter.charge(cur.size());
    }
    return levels;
}

FaceLevels faces_avoiding(const std::vector<Monomial>& gens, Monomial w, int max_size, FaceMeter& meter)
{
    std::vector<std::vector<Monomial>> through(64);
    for (Monomial g : gens) {
        if ((g & ~w) != 0) continue;
        if (g == 0) return {}; // unit ideal: void complex
        for_each_bit(g, [&](int b) { through[static_cast<std::size_t>(b)].push_back(g); });
    }
    std::vector<int> verts;
    for_each_bit(w, [&](int b) {
        const auto& gs = through[static_cast<std::size_t>(b)];
        const bool is_generator = std::any_of(gs.begin(), gs.end(), [&](Monomial g) { return g == (Monomial{1} << b); });
        if (!is_generator) verts.push_back(b);
    });
    FaceLevels levels(1, std::vector<Monomial>{0});
    meter.charge(1);
    std::uint64_t pending = 0;
    auto dfs = [&](auto&& self, Monomial face, std::size_t from, int size) -> void {
        if (size == max_size) return;
        for (std::size_t i = from; i < verts.size(); ++i) {
            const int b = verts[i];
            const Monomial next = face | (Monomial{1} << b);
            bool ok = true;
            for (Monomial g : through[static_cast<std::size_t>(b)])
                if ((g & ~next) == 0) { ok = false; break; }
            if (!ok) continue;
            if (static_cast<int>(levels.size()) <= size + 1) levels.emplace_back();
            levels[static_cast<std::size_t>(size + 1)].push_back(next);
            if (++pending == 4096) {
                meter.charge(pending);
                pending = 0;
            }
            self(self, next, i + 1, size + 1);
        }
    };
    dfs(dfs, 0, 0, 0);
    meter.charge(pending);
    for (auto& lvl : levels) std::sort(lvl.begin(), lvl.end());
    return levels;
}

// ---------------------------------------------------------------------------
// Homology.

std::vector<long> homology_ranks(const FaceLevels& faces, FieldSpec field, int top)
{
    if (faces.empty() || faces[0].empty()) return {};
    const int dim = static_cast<int>(faces.size()) - 2;
    if (top == -2 || top > dim) top = dim;
    // rank_d[k] = rank of the boundary from k-faces (size k+1) to (k-1)-faces.
    const int max_k = std::min(top + 1, dim);
    std::vector<std::size_t> rank_d(static_cast<std::size_t>(max_k + 2), 0);
    std::vector<char> cleared; // rows of the previous (higher) matrix that were pivots
    for (int k = max_k; k >= 0; --k) {
        const auto& cols_faces = faces[static_cast<std::size_t>(k + 1)];
        const auto& row_faces = faces[static_cast<std::size_t>(k)];
        IntColumns cols;
        cols.reserve(cols_faces.size());
        for (std::size_t c = 0; c < cols_faces.size(); ++c) {
            if (!cleared.empty() && cleared[c]) continue;
            const Monomial f = cols_faces[c];
            Column<std::int64_t> col;
            int sign = 1;
            for_each_bit(f, [&](int b) {
                const Monomial face = f & ~(Monomial{1} << b);
                const auto it = std::lower_bound(row_faces.begin(), row_faces.end(), face);
                col.emplace_back(static_cast<int>(it - row_faces.begin()), sign);
                sign = -sign;
            });
            std::sort(col.begin(), col.end());
            cols.push_back(std::move(col));
        }
        std::vector<char> pivots(row_faces.size(), 0);
        rank_d[static_cast<std::size_t>(k)] = rank_of(cols, static_cast<int>(row_faces.size()), field, pivots);
        cleared = std::move(pivots);
    }
    std::vector<long> ranks(static_cast<std::size_t>(top + 2), 0);
    for (int i = -1; i <= top; ++i) {
        const long f = static_cast<long>(faces[static_cast<std::size_t>(i + 1)].size());
        const long in = i >= 0 ? static_cast<long>(rank_d[static_cast<std::size_t>(i)]) : 0;
        const long out = (i + 1 <= max_k) ? static_cast<long>(rank_d[static_cast<std::size_t>(i + 1)]) : 0;
        ranks[static_cast<std::size_t>(i + 1)] = f - in - out;
    }
    return ranks;
}

namespace {

void check_euler(const FaceLevels& faces, const std::vector<long>& ranks)
{
    long chi_faces = 0, chi_homology = 0;
    for (std::size_t k = 0; k < faces.size(); ++k) {
        const long sign = (k % 2 == 0) ? -1 : 1; // degree k - 1
        chi_faces += sign * static_cast<long>(faces[k].size());
    }
    for (std::size_t k = 0; k < ranks.size(); ++k) {
        const long sign = (k % 2 == 0) ? -1 : 1;
        chi_homology += sign * ranks[k];
    }
    if (chi_faces != chi_homology) throw std::logic_error("Euler characteristic mismatch in homology computation");
}

std::vector<long> full_homology(const FaceLevels& faces, FieldSpec field)
{
    auto ranks = homology_ranks(faces, field);
    check_euler(faces, ranks);
    return ranks;
}

} // namespace

std::vector<long> reduced_homology_ranks(const SimplicialComplex& complex, FieldSpec field, const Budget& budget)
{
    FaceMeter meter(budget.faces);
    return full_homology(faces_from_facets(complex.facets, 64, meter), field);
}

SimplicialComplex link(const SimplicialComplex& complex, Monomial face)
{
    SimplicialComplex out;
    out.universe = complex.universe & ~face;
    for (Monomial f : complex.facets)
        if ((face & ~f) == 0) out.facets.push_back(f & ~face);
    std::sort(out.facets.begin(), out.facets.end());
    return out;
}

// ---------------------------------------------------------------------------
// Reisner.

namespace {

/// Closure of the facets under intersection.
std::vector<Monomial> facet_intersections(const std::vector<Monomial>& facets, std::uint64_t limit)
{
    std::unordered_set<Monomial> seen(facets.begin(), facets.end());
    std::vector<Monomial> lattice(facets.begin(), facets.end());
    for (std::size_t head = 0; head < lattice.size(); ++head) {
        const Monomial a = lattice[head];
        for (Monomial f : facets) {
            const Monomial b = a & f;
            if (seen.insert(b).second) {
                lattice.push_back(b);
                if (lattice.size() > limit)
                    throw BudgetExceeded("lattice budget of " + std::to_string(limit) + " exhausted");
            }
        }
    }
    return lattice;
}

int largest_facet_over(const std::vector<Monomial>& facets, Monomial face)
{
    int top = 0;
    for (Monomial f : facets)
        if ((face & ~f) == 0) top = std::max(top, popcount(f));
    return top;
}

} // namespace

CMCertificate reisner_cm(const SimplicialComplex& complex, FieldSpec field, const Budget& budget)
{
    if (complex.is_void()) throw std::invalid_argument("reisner_cm: void complex");
    CMCertificate cert;
    cert.field = field;
    try {
        const std::vector<Monomial> lattice = facet_intersections(complex.facets, budget.lattice);
        struct Item {
            Monomial face;
            int link_dim;
        };
        std::vector<Item> items;
        items.reserve(lattice.size());
        for (Monomial s : lattice) {
            const int ld = largest_facet_over(complex.facets, s) - popcount(s) - 1;
            if (ld >= 1) items.push_back({s, ld}); // H~_{-1} vanishes for non-empty links
        }
        std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) {
            return a.link_dim != b.link_dim ? a.link_dim > b.link_dim : a.face < b.face;
        });
        for (const Item& it : items) {
            const SimplicialComplex lk = link(complex, it.face);
            FaceMeter meter(budget.faces);
            const auto ranks = full_homology(faces_from_facets(lk.facets, 64, meter), field);
            for (int i = -1; i < it.link_dim; ++i) {
                const long r = ranks[static_cast<std::size_t>(i + 1)];
                if (r != 0) {
                    cert.status = Verdict::No;
                    cert.witness = ReisnerWitness{it.face, i, r};
                    return cert;
                }
            }
        }
        cert.status = Verdict::Yes;
    } catch (const BudgetExceeded& e) {
        cert.status = Verdict::Indeterminate;
        cert.note = e.what();
    }
    return cert;
}

// ---------------------------------------------------------------------------
// Depth.

namespace {

/// Depth can never exceed dim R/P for an associated prime P.
int prime_depth_bound(const MonomialIdeal& ideal)
{
    int best = 0;
    for (Monomial p : minimal_primes(ideal)) best = std::max(best, popcount(p));
    return ideal.universe_size() - best;
}

Monomial linear_part(const MonomialIdeal& ideal)
{
    Monomial l = 0;
    for (Monomial g : ideal.generators())
        if (popcount(g) == 1) l |= g;
    return l;
}

} // namespace

DepthResult hochster_depth(const MonomialIdeal& ideal, FieldSpec field, const Budget& budget)
{
    if (ideal.is_unit()) throw std::invalid_argument("depth of the zero ring is undefined");
    DepthResult res;
    const int u = ideal.universe_size();
    res.universe_size = u;

    // W = the linear generators has Delta|_W = {{}} and contributes |W|.
    const Monomial lin = linear_part(ideal);
    int best_pd = popcount(lin);
    res.witness = HochsterWitness{lin, -1};

    auto finish_interval = [&](int pd_hi, std::string note) {
        res.depth_lower = u - pd_hi;
        res.depth_upper = std::min(u - best_pd, prime_depth_bound(ideal));
        if (res.depth_lower > res.depth_upper) res.depth_lower = res.depth_upper;
        res.note = std::move(note);
        return res;
    };

    std::unordered_set<Monomial> seen{0};
    std::vector<Monomial> lattice{0};
    for (Monomial g : ideal.generators()) {
        const std::size_t sz = lattice.size();
        for (std::size_t i = 0; i < sz; ++i) {
            const Monomial w = lattice[i] | g;
            if (seen.insert(w).second) {
                lattice.push_back(w);
                if (lattice.size() > budget.lattice) {
                    const int pd_hi = std::min<int>(static_cast<int>(ideal.size()), popcount(ideal.support()));
                    return finish_interval(std::max(pd_hi, best_pd), "lattice budget of " +
                                                                         std::to_string(budget.lattice) + " exhausted");
                }
            }
        }
    }
    std::sort(lattice.begin(), lattice.end(), [](Monomial a, Monomial b) {
        const int pa = popcount(a), pb = popcount(b);
        return pa != pb ? pa > pb : a < b;
    });

    for (Monomial w : lattice) {
        const int size = popcount(w);
        if (size - 1 <= best_pd) break;
        if ((w & ~lin) == 0) continue;
        const int top = size - 2 - best_pd; // only degrees that could raise pd
        try {
            FaceMeter meter(budget.faces);
            const FaceLevels faces = faces_avoiding(ideal.generators(), w, top + 2, meter);
            const auto ranks = homology_ranks(faces, field, top);
            for (int i = 0; i <= top && i + 1 < static_cast<int>(ranks.size()); ++i) {
                if (ranks[static_cast<std::size_t>(i + 1)] != 0) {
                    best_pd = size - i - 1;
                    res.witness = HochsterWitness{w, i};
                    break;
                }
            }
        } catch (const BudgetExceeded& e) {
            return finish_interval(std::max(best_pd, size), e.what());
        }
    }
    res.depth_lower = res.depth_upper = u - best_pd;
    return res;
}

DepthResult local_cohomology_depth(const MonomialIdeal& ideal, FieldSpec field, const Budget& budget)
{
    const SimplicialComplex complex = stanley_reisner(ideal);
    DepthResult res;
    const int u = ideal.universe_size();
    res.universe_size = u;
    int best = 65;
    for (Monomial f : complex.facets)
        if (popcount(f) < best) {
            best = popcount(f);
            res.link_witness = ReisnerWitness{f, -1, 1};
        }
    // Until the lattice is listed, only the empty face is known to bound the depth.
    int lower = std::min(best, 1);
    try {
        std::vector<Monomial> lattice = facet_intersections(complex.facets, budget.lattice);
        std::sort(lattice.begin(), lattice.end(), [](Monomial a, Monomial b) {
            const int pa = popcount(a), pb = popcount(b);
            return pa != pb ? pa < pb : a < b;
        });
        for (Monomial s : lattice) {
            const int size = popcount(s);
            lower = std::min(best, size + 1);
            if (size + 1 >= best) break;
            const int top = best - size - 2; // degrees that could lower the depth
            const SimplicialComplex lk = link(complex, s);
            FaceMeter meter(budget.faces);
            const auto ranks = homology_ranks(faces_from_facets(lk.facets, top + 2, meter), field, top);
            for (int i = 0; i <= top && i + 1 < static_cast<int>(ranks.size()); ++i) {
                if (ranks[static_cast<std::size_t>(i + 1)] != 0) {
                    best = size + 1 + i;
                    res.link_witness = ReisnerWitness{s, i, ranks[static_cast<std::size_t>(i + 1)]};
                    break;
                }
            }
        }
        lower = best;
    } catch (const BudgetExceeded& e) {
        res.note = e.what();
    }
    res.depth_lower = lower;
    res.depth_upper = best;
    return res;
}

DepthResult brute_depth_oracle(const MonomialIdeal& ideal, FieldSpec field)
{
    if (ideal.is_unit()) throw std::invalid_argument("depth of the zero ring is undefined");
    const int u = ideal.universe_size();
    if (u > kBruteDepthVariableCap)
        throw CapExceeded("brute depth oracle capped at " + std::to_string(kBruteDepthVariableCap) + " variables");
    DepthResult res;
    res.universe_size = u;
    int best_pd = -1;
    const Monomial universe = ideal.universe();
    // Enumerate W as submasks of the universe; faces of Delta|_W as submasks of W.
    Monomial w = 0;
    while (true) {
        FaceLevels levels(static_cast<std::size_t>(popcount(w) + 1));
        Monomial s = 0;
        while (true) {
            bool face = true;
            for (Monomial g : ideal.generators())
                if ((g & ~s) == 0) { face = false; break; }
            if (face) levels[static_cast<std::size_t>(popcount(s))].push_back(s);
            if (s == w) break;
            s = (s - w) & w;
        }
        while (levels.size() > 1 && levels.back().empty()) levels.pop_back();
        for (auto& lvl : levels) std::sort(lvl.begin(), lvl.end());
        const auto ranks = full_homology(levels, field);
        for (std::size_t k = 0; k < ranks.size(); ++k) {
            if (ranks[k] == 0) continue;
            const int i = static_cast<int>(k) - 1;
            const int pd = popcount(w) - i - 1;
            if (pd > best_pd || (pd == best_pd && popcount(w) > popcount(res.witness->subset))) {
                best_pd = pd;
                res.witness = HochsterWitness{w, i};
            }
        }
        if (w == universe) break;
        w = (w - universe) & universe;
    }
    res.depth_lower = res.depth_upper = u - best_pd;
    return res;
}

DepthSplitting depth_splitting_check(const MonomialIdeal& ideal, const std::vector<Monomial>& vars, FieldSpec field)
{
    auto exact_depth = [&](const MonomialIdeal& i) {
        const DepthResult d = hochster_depth(i, field);
        if (!d.exact()) throw BudgetExceeded("depth_splitting_check: " + d.note);
        return d.depth();
    };
    DepthSplitting out;
    out.depth = exact_depth(ideal);
    MonomialIdeal acc = ideal;
    for (Monomial v : vars) {
        if (popcount(v) != 1) throw std::invalid_argument("depth_splitting_check expects single variables");
        const MonomialIdeal c = colon(acc, v);
        out.colons.push_back(c.is_unit() ? std::nullopt : std::optional<int>(exact_depth(c)));
        acc = add_variables(acc, v);
    }
    out.after_adding = exact_depth(acc);
    out.holds = out.after_adding == out.depth ||
                std::any_of(out.colons.begin(), out.colons.end(), [&](const auto& c) { return c == out.depth; });
    return out;
}

} // namespace bei
