#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"

#include "bei/binomial_edge.hpp"
#include "bei/cutsets.hpp"
#include "bei/graph.hpp"
#include "bei/homology.hpp"
#include "bei/parallel.hpp"

namespace bei {

using Json = nlohmann::ordered_json;

struct LabConfig {
    FieldSpec field = FieldSpec::rationals();
    Budget budget;
    int max_n = kDefaultPathCap;    // larger corpus graphs are skipped
    int threads = 1;
    std::uint64_t seed = 20240601;
    bool accessibility_prefilter = true;
    int max_pair_order = 7;         // largest F_ij built by the identification check
};

/// CM decision for J_G.  `route` names the step that decided it:
/// "unmixedness" or "accessibility" (necessary conditions, with a cutset
/// witness) or "reisner" (homology of the Stanley-Reisner complex of in(J_G)).
struct CMDecision {
    Verdict status = Verdict::Indeterminate;
    FieldSpec field;
    std::string route;
    std::optional<Cutset> cutset_witness;
    std::optional<ReisnerWitness> link_witness;
    std::string note;

    bool is_cm() const { return status == Verdict::Yes; }
};

CMDecision cm_check(const Graph& g, const LabConfig& config = {});

/// CM test for an arbitrary square-free ideal over its own universe.
CMCertificate monomial_cm(const MonomialIdeal& ideal, const LabConfig& config = {});

struct DepthReport {
    DepthResult depth; // of S/in(J_G), equal to depth S/J_G
    int dim = 0;       // n + max_T (c(T) - |T|)
    std::string route; // "hochster", or "hochster+links" when the link route was needed

    bool exact() const { return depth.exact(); }
};

DepthReport depth_JG(const Graph& g, const LabConfig& config = {});

struct AnalysisReport {
    std::string graph6;
    int n = 0;
    std::size_t edges = 0;
    std::optional<int> girth; // nullopt: forest
    BlockDecomposition blocks;
    std::optional<std::size_t> cutset_count;
    std::optional<UnmixednessReport> unmixed;
    std::optional<AccessibilityReport> accessible;
    CMDecision cm;
    std::optional<DepthReport> depth;
    std::vector<std::string> inconsistencies;
    std::vector<std::string> notes;

    bool indeterminate() const;
};

AnalysisReport analyze(const Graph& g, const LabConfig& config = {});
Json to_json(const AnalysisReport& report);

/// depth(S/J_G) against depth(S_1/J_{G1bar}) + depth(S_2/J_{G2bar}) - 4.
struct DepthEquality {
    int vertex = 0;
    DepthReport whole, first, second;
    int rhs_lower = 0, rhs_upper = 0;
    Verdict equal = Verdict::Indeterminate;
    bool decomposable = false;      // v free in both sides
    bool two_sided_condition = false; // the filter of the open question on this equality
};

/// Throws std::invalid_argument when v is not a cut vertex.
DepthEquality depth_equality_check(const Graph& g, int v, const LabConfig& config = {});
Json to_json(const DepthEquality& record);

enum class FindingKind { Violation, HypothesisRelevant, Finding };
std::string to_string(FindingKind k);

struct Finding {
    FindingKind kind = FindingKind::Violation;
    std::string statement;
    std::string graph; // graph6
    Json detail;
};

struct StatementTally {
    std::string id;
    long instances = 0;     // hypothesis held and the conclusion was decided
    long indeterminate = 0; // a budget left the hypothesis or conclusion open
    long failures = 0;
};

struct TheoremVerdict {
    std::string theorem;
    std::string corpus;
    FieldSpec field;
    long graphs = 0;
    long skipped = 0; // disconnected or above max_n
    std::vector<StatementTally> statements;
    std::vector<Finding> findings;

    long instances() const;
    long violations() const;
    /// 0 clean, 1 violations, 3 only hypothesis-relevant findings.
    int exit_code() const;
};

Json to_json(const TheoremVerdict& verdict);

/// saturation, deletion, gluing, blocks, girth, hypothesis, depth-equality.
const std::vector<std::string>& theorem_ids();

/// Throws std::invalid_argument for an unknown id.
TheoremVerdict run_verifier(const std::string& id, const std::vector<Graph>& corpus, const std::string& corpus_name,
                            const LabConfig& config = {});

/// Connected graph: random spanning tree plus extra random edges.
Graph random_connected_graph(int n, int extra_edges, std::mt19937_64& rng);

/// Two random connected graphs glued at one vertex each; returns the graph
/// and the glue vertex.  Total order at most max_n (>= 3).
std::pair<Graph, int> random_gluing(int max_n, std::mt19937_64& rng);

} // namespace bei
