#pragma once

#include <optional>
#include <vector>

#include "bei/graph.hpp"

namespace bei {

/// A member of the cutset family: every t in `members` is a cut vertex of
/// G \ (members \ {t}).  `components` caches c_G(members).
struct Cutset {
    VertexSet members = 0;
    int components = 0;

    int size() const { return popcount(members); }
    friend bool operator==(const Cutset&, const Cutset&) = default;
};

struct UnmixednessReport {
    bool unmixed = true;
    std::optional<Cutset> witness; // first cutset with c(T) != |T| + c
    int graph_components = 0;      // c
    int dim = 0;                   // n + max_T (c(T) - |T|)
};

struct AccessibilityReport {
    bool accessible = true;
    bool unmixed = true;
    /// When not unmixed: the unmixedness witness.  Otherwise the first
    /// non-empty cutset with no removable element.
    std::optional<Cutset> witness;
};

inline constexpr int kDefaultCutsetCap = 24;

int component_count_after(const Graph& g, VertexSet removed);
bool is_cutset(const Graph& g, VertexSet t);

/// All cutsets ordered by size, then lexicographically.  Vertices that are
/// free never occur in a cutset, so only subsets of the non-free vertices
/// are examined.  Throws CapExceeded when order() > cap.
std::vector<Cutset> enumerate_cutsets(const Graph& g, int cap = kDefaultCutsetCap);

UnmixednessReport is_unmixed(const Graph& g, int cap = kDefaultCutsetCap);
UnmixednessReport is_unmixed(const Graph& g, const std::vector<Cutset>& cutsets);

AccessibilityReport is_accessible(const Graph& g, int cap = kDefaultCutsetCap);
AccessibilityReport is_accessible(const Graph& g, const std::vector<Cutset>& cutsets);

/// Descending chain T = T_k, T_{k-1}, ..., T_0 = {} inside the cutset family,
/// each step dropping one vertex; nullopt when no such chain exists.
std::optional<std::vector<VertexSet>> accessible_chain(const std::vector<Cutset>& cutsets, VertexSet t);

} // namespace bei
