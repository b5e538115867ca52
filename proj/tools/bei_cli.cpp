// bei: command-line front end for the binomial edge ideal lab.
//
// Exit codes:
//   0   success
//   1   parse error (analyze, initial-ideal), or violations found (verify)
//   2   some result INDETERMINATE (analyze, depth-equality), or a size cap exceeded (initial-ideal)
//   3   verify: only hypothesis-relevant findings or search findings
//   64  usage error, including an unknown theorem id

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "bei/binomial_edge.hpp"
#include "bei/cm_lab.hpp"
#include "bei/errors.hpp"
#include "bei/graph6.hpp"

namespace {

constexpr int kExitUsage = 64;

struct Options {
    std::string field = "QQ";
    std::uint64_t face_budget = bei::Budget{}.faces;
    std::uint64_t lattice_budget = bei::Budget{}.lattice;
    int max_n = bei::kDefaultPathCap;
    int threads = 1;
    std::uint64_t seed = 20240601;
    std::string format = "json";
    bool no_prefilter = false;
};

bei::LabConfig make_config(const Options& o)
{
    bei::LabConfig c;
    c.field = bei::FieldSpec::parse(o.field);
    c.budget.faces = o.face_budget;
    c.budget.lattice = o.lattice_budget;
    c.max_n = o.max_n;
    c.threads = o.threads;
    c.seed = o.seed;
    c.accessibility_prefilter = !o.no_prefilter;
    return c;
}

std::string read_input(const std::string& path)
{
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string cell(const bei::Json& j)
{
    if (j.is_null()) return "?";
    if (j.is_boolean()) return j.get<bool>() ? "yes" : "no";
    if (j.is_string()) return j.get<std::string>();
    return j.dump();
}

int cmd_analyze(const std::string& input, const Options& opts)
{
    const bei::LabConfig config = make_config(opts);
    std::vector<bei::Graph> graphs;
    try {
        graphs = bei::parse_graphs(read_input(input));
    } catch (const bei::ParseError& e) {
        std::cerr << "bei: " << input << ": " << e.what() << "\n";
        return 1;
    }
    auto reports = bei::parallel_map<bei::AnalysisReport>(graphs.size(), config.threads, [&](std::size_t i) {
        return bei::analyze(graphs[i], config);
    });
    bool indeterminate = false;
    if (opts.format == "table")
        std::printf("%-16s %3s %8s %8s %10s %6s %6s %4s\n", "graph", "n", "girth", "unmixed", "accessible", "cm",
                    "depth", "dim");
    for (const auto& r : reports) {
        indeterminate = indeterminate || r.indeterminate();
        const bei::Json j = bei::to_json(r);
        if (opts.format == "table")
            std::printf("%-16s %3d %8s %8s %10s %6s %6s %4s\n", r.graph6.c_str(), r.n, cell(j["girth"]).c_str(),
                        cell(j["unmixed"]).c_str(), cell(j["accessible"]).c_str(), cell(j["cm"]).c_str(),
                        cell(j["depth"]).c_str(), cell(j["dim"]).c_str());
        else
            std::cout << j.dump() << "\n";
    }
    return indeterminate ? 2 : 0;
}

int cmd_verify(const std::string& id, const std::string& corpus_path, const Options& opts)
{
    const auto& ids = bei::theorem_ids();
    if (std::find(ids.begin(), ids.end(), id) == ids.end()) {
        std::cerr << "bei: unknown theorem id '" << id << "'; expected one of:";
        for (const auto& k : ids) std::cerr << " " << k;
        std::cerr << "\n";
        return kExitUsage;
    }
    const bei::LabConfig config = make_config(opts);
    std::vector<bei::Graph> corpus;
    try {
        corpus = bei::parse_graphs(read_input(corpus_path));
    } catch (const bei::ParseError& e) {
        std::cerr << "bei: " << corpus_path << ": " << e.what() << "\n";
        return 1;
    }
    const bei::TheoremVerdict v = bei::run_verifier(id, corpus, corpus_path, config);
    if (opts.format == "table") {
        std::printf("%s on %s (%ld graphs, %ld skipped, field %s)\n", v.theorem.c_str(), v.corpus.c_str(), v.graphs,
                    v.skipped, v.field.name().c_str());
        std::printf("%-48s %10s %14s %9s\n", "statement", "instances", "indeterminate", "failures");
        for (const auto& s : v.statements)
            std::printf("%-48s %10ld %14ld %9ld\n", s.id.c_str(), s.instances, s.indeterminate, s.failures);
        for (const auto& f : v.findings)
            std::printf("%s %s %s %s\n", bei::to_string(f.kind).c_str(), f.statement.c_str(), f.graph.c_str(),
                        f.detail.dump().c_str());
    } else {
        std::cout << bei::to_json(v).dump(2) << "\n";
    }
    return v.exit_code();
}

int cmd_initial_ideal(const std::string& input, const Options& opts)
{
    std::vector<bei::Graph> graphs;
    try {
        graphs = bei::parse_graphs(read_input(input));
    } catch (const bei::ParseError& e) {
        std::cerr << "bei: " << input << ": " << e.what() << "\n";
        return 1;
    }
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        try {
            if (i > 0) std::cout << "\n";
            const std::string text = bei::initial_ideal(graphs[i], opts.max_n).to_string();
            std::cout << text;
            if (!text.empty() && text.back() != '\n') std::cout << "\n";
        } catch (const bei::CapExceeded& e) {
            std::cerr << "bei: graph " << i + 1 << ": " << e.what() << "\n";
            return 2;
        }
    }
    return 0;
}

int cmd_depth_equality(const std::string& input, int vertex, const Options& opts)
{
    const bei::LabConfig config = make_config(opts);
    std::vector<bei::Graph> graphs;
    try {
        graphs = bei::parse_graphs(read_input(input));
    } catch (const bei::ParseError& e) {
        std::cerr << "bei: " << input << ": " << e.what() << "\n";
        return 1;
    }
    bool indeterminate = false;
    for (const auto& g : graphs) {
        const bei::VertexSet cuts = bei::cut_vertices(g);
        if (vertex != 0 && !(cuts & bei::vertex_bit(vertex))) {
            std::cerr << "bei: vertex " << vertex << " is not a cut vertex of " << bei::to_graph6(g) << "\n";
            return kExitUsage;
        }
        bei::Json out{{"graph", bei::to_graph6(g)}, {"checks", bei::Json::array()}};
        bei::for_each_bit(cuts, [&](int b) {
            if (vertex != 0 && b + 1 != vertex) return;
            const bei::DepthEquality r = bei::depth_equality_check(g, b + 1, config);
            indeterminate = indeterminate || r.equal == bei::Verdict::Indeterminate;
            out["checks"].push_back(bei::to_json(r));
        });
        std::cout << out.dump(opts.format == "table" ? 2 : -1) << "\n";
    }
    return indeterminate ? 2 : 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Binomial edge ideals: unmixedness, accessibility, Cohen-Macaulayness and depth"};
    app.require_subcommand(1);
    Options opts;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--field", opts.field, "QQ (default), a prime p, or GF(p)")->envname("BEI_FIELD");
        sub->add_option("--face-budget", opts.face_budget, "faces enumerated for any one complex")
            ->envname("BEI_FACE_BUDGET")
            ->check(CLI::PositiveNumber);
        sub->add_option("--lattice-budget", opts.lattice_budget, "lattice points per decision")
            ->envname("BEI_LATTICE_BUDGET")
            ->check(CLI::PositiveNumber);
        sub->add_option("--max-n", opts.max_n, "vertex cap for exhaustive work")
            ->envname("BEI_MAX_N")
            ->check(CLI::Range(1, 32));
        sub->add_option("--threads", opts.threads, "worker threads")->envname("BEI_THREADS")->check(CLI::Range(1, 1024));
        sub->add_option("--seed", opts.seed, "seed for randomized work")->envname("BEI_SEED");
        sub->add_option("--format", opts.format, "json or table")
            ->envname("BEI_FORMAT")
            ->check(CLI::IsMember({"json", "table"}));
        sub->add_flag("--no-accessibility-prefilter", opts.no_prefilter,
                      "decide CM by homology even when the graph is not accessible");
    };

    std::string input, theorem, corpus;
    int vertex = 0;

    auto* analyze = app.add_subcommand("analyze", "one JSON report per graph");
    analyze->add_option("input", input, "graph6 or edge-list file, '-' for stdin")->required();
    add_common(analyze);

    auto* verify = app.add_subcommand("verify", "run one theorem verifier over a corpus");
    verify->add_option("theorem", theorem, "saturation, deletion, gluing, blocks, girth, hypothesis, depth-equality")
        ->required();
    verify->add_option("corpus", corpus, "graph6 or edge-list corpus, '-' for stdin")->required();
    add_common(verify);

    auto* initial = app.add_subcommand("initial-ideal", "generators of the lex initial ideal");
    initial->add_option("input", input, "graph6 or edge-list file, '-' for stdin")->required();
    add_common(initial);

    auto* depth_eq = app.add_subcommand("depth-equality", "compare depths across a cut-vertex split");
    depth_eq->add_option("input", input, "graph6 or edge-list file, '-' for stdin")->required();
    depth_eq->add_option("--vertex", vertex, "cut vertex to split at (default: every cut vertex)");
    add_common(depth_eq);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        if (*analyze) return cmd_analyze(input, opts);
        if (*verify) return cmd_verify(theorem, corpus, opts);
        if (*initial) return cmd_initial_ideal(input, opts);
        if (*depth_eq) return cmd_depth_equality(input, vertex, opts);
    } catch (const std::invalid_argument& e) {
        std::cerr << "bei: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "bei: " << e.what() << "\n";
        return 1;
    }
    return kExitUsage;
}
