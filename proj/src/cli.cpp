#include "grundy/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "grundy/acceptance.hpp"
#include "grundy/cameron.hpp"
#include "grundy/errors.hpp"
#include "grundy/generators.hpp"
#include "grundy/graph_io.hpp"
#include "grundy/grundy_dp.hpp"
#include "grundy/marriage.hpp"
#include "grundy/oracle.hpp"
#include "grundy/rng.hpp"
#include "grundy/switching.hpp"

namespace grundy::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;

/// Raised for bad flag values that CLI11 cannot check on its own.
struct UsageError : Error {
    using Error::Error;
};

/// Options shared by every subcommand that reads a graph.
struct GraphInput {
    std::string path;
    std::string format;  // empty = pick by extension
    std::string inline_graph6;
};

struct Common {
    bool json = true;
    bool timing = false;
};

void add_graph_input(CLI::App* sub, GraphInput& in) {
    sub->add_option("input", in.path, "graph file, or - for standard input");
    sub->add_option("--format", in.format, "input format (default: graph6 for .g6, edgelist otherwise)")
        ->check(CLI::IsMember({"graph6", "edgelist"}));
    sub->add_option("--graph6", in.inline_graph6, "graph given inline as a graph6 string");
}

std::string read_all(std::istream& is) {
    std::ostringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

Graph load_graph(const GraphInput& in) {
    if (!in.inline_graph6.empty()) {
        if (!in.path.empty()) throw UsageError("give either an input file or --graph6, not both");
        return parse_graph6(in.inline_graph6);
    }
    if (in.path.empty()) throw UsageError("missing input graph (file, - or --graph6)");
    std::string text;
    if (in.path == "-") {
        text = read_all(std::cin);
    } else {
        std::ifstream file(in.path, std::ios::binary);
        if (!file) throw UsageError("cannot open " + in.path);
        text = read_all(file);
    }
    std::string format = in.format;
    if (format.empty()) {
        const bool g6 = in.path.size() >= 3 && in.path.ends_with(".g6");
        format = g6 ? "graph6" : "edgelist";
    }
    Graph g = format == "graph6" ? parse_graph6(text) : parse_edge_list(text);
    if (g.order() > kGraph6MaxOrder) {
        throw SizeLimitExceeded("command-line input", g.order(), kGraph6MaxOrder);
    }
    return g;
}

Json colors_json(const BWColoring& c) {
    Json arr = Json::array();
    for (int v = 0; v < c.size(); ++v) arr.push_back(to_string(c[v]));
    return arr;
}

Json set_json(VertexSet s) {
    Json arr = Json::array();
    for (int v : s) arr.push_back(v);
    return arr;
}

Json classes_json(const FirstFitColoring& c) {
    Json arr = Json::array();
    for (VertexSet cls : c.classes) arr.push_back(set_json(cls));
    return arr;
}

Json witness_json(const std::optional<cameron::ForbiddenSubgraph>& w) {
    if (!w) return nullptr;
    return Json{{"name", cameron::to_string(w->kind)}, {"vertices", set_json(w->vertices)}};
}

Json header(const std::string& command) { return Json{{"schema", kSchemaVersion}, {"command", command}}; }

std::string text_value(const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

void emit(const Json& report, const Common& common, std::ostream& out) {
    if (common.json) {
        out << report.dump(2) << '\n';
        return;
    }
    for (const auto& [key, value] : report.items()) {
        if (value.is_array() && !value.empty() && value.front().is_object()) {
            out << key << ":\n";
            for (const auto& item : value) {
                out << " ";
                for (const auto& [k, v] : item.items()) out << ' ' << k << '=' << text_value(v);
                out << '\n';
            }
        } else {
            out << key << ": " << text_value(value) << '\n';
        }
    }
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

int run_recognize(const GraphInput& in, const Common& common, std::ostream& out) {
    const Graph g = load_graph(in);
    Json report = header("recognize");
    report["n"] = g.order();
    if (g.order() == 0) throw InvalidInput("the empty graph has no decomposition");
    const auto decomposition = cameron::recognize_cameron(g);
    report["accepted"] = decomposition.has_value();
    if (decomposition) {
        report["coloring"] = colors_json(decomposition->coloring);
        report["tree"] = Json::parse(decomposition->tree.to_json().dump());
        report["witness"] = nullptr;
    } else {
        report["coloring"] = nullptr;
        report["tree"] = nullptr;
        report["witness"] = witness_json(cameron::find_forbidden_subgraph_through(g, 0));
    }
    emit(report, common, out);
    return decomposition ? kOk : kRejected;
}

int run_grundy(const GraphInput& in, bool certificate, const Common& common, std::ostream& out) {
    const Graph g = load_graph(in);
    const auto start = std::chrono::steady_clock::now();
    Json report = header("grundy");
    report["n"] = g.order();
    try {
        const dp::GrundyResult r = dp::grundy_number(g);
        report["gamma"] = r.gamma;
        if (certificate) report["classes"] = classes_json(r.certificate);
        report["states_explored"] = r.states_explored;
        report["route"] = r.cograph_route ? "cotree" : "cameron";
        if (common.timing) report["runtime_ms"] = elapsed_ms(start);
        emit(report, common, out);
        return kOk;
    } catch (const cameron::NotCameron& e) {
        report["accepted"] = false;
        report["witness"] = witness_json(e.witness());
        emit(report, common, out);
        return kRejected;
    }
}

int run_oracle(const GraphInput& in, const Common& common, std::ostream& out) {
    const Graph g = load_graph(in);
    const auto start = std::chrono::steady_clock::now();
    const FirstFitColoring c = oracle::grundy_bf_coloring(g);
    Json report = header("oracle");
    report["exponential"] = true;
    report["n"] = g.order();
    report["gamma"] = c.size();
    report["classes"] = classes_json(c);
    if (common.timing) report["runtime_ms"] = elapsed_ms(start);
    emit(report, common, out);
    return kOk;
}

VertexSet parse_vertex_list(const std::string& text, int n) {
    VertexSet s;
    std::string token;
    std::istringstream ss(text);
    while (std::getline(ss, token, ',')) {
        token.erase(std::remove_if(token.begin(), token.end(), ::isspace), token.end());
        if (token.empty()) continue;
        int v = -1;
        try {
            std::size_t used = 0;
            v = std::stoi(token, &used);
            if (used != token.size()) v = -1;
        } catch (const std::exception&) {
            v = -1;
        }
        if (v < 0 || v >= n) throw UsageError("bad vertex '" + token + "' in --set");
        s.insert(v);
    }
    return s;
}

int run_switch(const GraphInput& in, const std::string& set_text, bool triples, const Common& common,
               std::ostream& out) {
    const Graph g = load_graph(in);
    const VertexSet s = parse_vertex_list(set_text, g.order());
    const Graph h = switching::seidel_switch(g, s);
    Json report = header("switch");
    report["n"] = g.order();
    report["set"] = set_json(s);
    report["graph6"] = encode_graph6(h);
    Json edges = Json::array();
    for (const auto& [u, v] : h.edges()) edges.push_back({u, v});
    report["edges"] = edges;
    if (triples) {
        Json arr = Json::array();
        for (const auto& t : switching::odd_triples(h).triples) arr.push_back({t[0], t[1], t[2]});
        report["triples"] = arr;
    }
    emit(report, common, out);
    return kOk;
}

int run_marriage(const std::string& villages, const Common& common, std::ostream& out) {
    const marriage::VillageSpec spec = marriage::parse_villages(villages);
    const marriage::MarriageResult r = marriage::min_marriages(spec);
    Json report = header("marriage");
    report["villages"] = villages;
    report["marriages"] = r.marriages;
    report["population"] = r.population;
    report["gamma"] = r.gamma;
    emit(report, common, out);
    return kOk;
}

struct GenOptions {
    std::string kind = "cameron";
    int n = 10;
    double p_join = 0.5;
    double p_white = 0.5;
    double p = 0.5;
    std::uint64_t seed = acceptance::kDefaultSeed;
    std::string format = "graph6";
};

int run_gen(const GenOptions& o, const Common& common, std::ostream& out) {
    if (o.n < 1 || o.n > kGraph6MaxOrder) throw SizeLimitExceeded("gen", o.n, kGraph6MaxOrder);
    Json report = header("gen");
    report["kind"] = o.kind;
    report["n"] = o.n;
    Graph g;
    std::optional<BWColoring> coloring;
    if (o.kind == "cameron" || o.kind == "cograph") {
        const RandomCameron r = o.kind == "cameron" ? gen_random_cameron(o.n, o.p_join, o.p_white, o.seed)
                                                    : gen_random_cograph(o.n, o.p_join, o.seed);
        g = r.graph;
        coloring = r.coloring;
        report["seed"] = o.seed;
        report["prng"] = Rng::kName;
        report["p_join"] = o.p_join;
        if (o.kind == "cameron") report["p_white"] = o.p_white;
    } else if (o.kind == "random") {
        g = gen_random_graph(o.n, o.p, o.seed);
        report["seed"] = o.seed;
        report["prng"] = Rng::kName;
        report["p"] = o.p;
    } else {
        g = gen_named(parse_family(o.kind), o.n);
    }
    if (!common.json) {
        out << (o.format == "graph6" ? encode_graph6(g) + "\n" : to_edge_list(g));
        return kOk;
    }
    report["graph6"] = encode_graph6(g);
    Json edges = Json::array();
    for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
    report["edges"] = edges;
    if (coloring) report["coloring"] = colors_json(*coloring);
    emit(report, common, out);
    return kOk;
}

int run_selftest(std::uint64_t seed, const std::vector<int>& only, const Common& common, std::ostream& out,
                 std::ostream& err) {
    acceptance::Config config;
    config.seed = seed;
    config.only = std::set<int>(only.begin(), only.end());
    config.progress = common.json ? &err : &out;
    const auto results = acceptance::run(config);
    if (common.json) {
        Json report = header("selftest");
        const nlohmann::json summary = acceptance::to_json(results, config);
        for (const auto& [k, v] : summary.items()) report[k] = Json::parse(v.dump());
        out << report.dump(2) << '\n';
    } else {
        out << (acceptance::all_passed(results) ? "all criteria passed" : "some criteria failed") << '\n';
    }
    return acceptance::all_passed(results) ? kOk : kRejected;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Cameron-graph recognition and exact Grundy numbers", "cameron-grundy"};
    app.require_subcommand(1);
    app.fallthrough();

    Common common;
    bool text = false;
    app.add_flag("--text", text, "plain text output instead of JSON");
    app.add_flag("--json", "JSON output (default)");
    app.add_flag("--timing", common.timing, "add runtime_ms to reports (breaks byte-identical output)");

    GraphInput recognize_in;
    auto* recognize = app.add_subcommand("recognize", "decide whether a graph is a Cameron graph");
    add_graph_input(recognize, recognize_in);

    GraphInput grundy_in;
    bool certificate = false;
    auto* grundy = app.add_subcommand("grundy", "exact Grundy number of a Cameron graph");
    add_graph_input(grundy, grundy_in);
    grundy->add_flag("--certificate", certificate, "include the first-fit color classes");

    GraphInput oracle_in;
    auto* oracle_cmd = app.add_subcommand("oracle", "exponential brute-force Grundy number (n <= 12)");
    add_graph_input(oracle_cmd, oracle_in);

    GraphInput switch_in;
    std::string switch_set;
    bool triples = false;
    auto* switch_cmd = app.add_subcommand("switch", "Seidel switch with respect to a vertex set");
    add_graph_input(switch_cmd, switch_in);
    switch_cmd->add_option("--set", switch_set, "comma-separated vertices")->required();
    switch_cmd->add_flag("--triples", triples, "also list the odd triples of the result");

    std::string villages;
    auto* marriage_cmd = app.add_subcommand("marriage", "minimum number of marriages for a village spec");
    marriage_cmd->add_option("--villages", villages, "\"b1,g1 b2,g2 ...\"")->required();

    GenOptions gen;
    auto* gen_cmd = app.add_subcommand("gen", "generate a graph");
    gen_cmd->add_option("--kind", gen.kind, "cameron, cograph, random, path, cycle, complete or empty")
        ->check(CLI::IsMember({"cameron", "cograph", "random", "path", "cycle", "complete", "empty"}));
    gen_cmd->add_option("-n", gen.n, "number of vertices");
    gen_cmd->add_option("--p-join", gen.p_join, "probability of a join node")->check(CLI::Range(0.0, 1.0));
    gen_cmd->add_option("--p-white", gen.p_white, "probability of a white vertex")->check(CLI::Range(0.0, 1.0));
    gen_cmd->add_option("--p", gen.p, "edge probability for --kind random")->check(CLI::Range(0.0, 1.0));
    gen_cmd->add_option("--seed", gen.seed, "PRNG seed");
    gen_cmd->add_option("--format", gen.format, "text output format")
        ->check(CLI::IsMember({"graph6", "edgelist"}));

    std::uint64_t selftest_seed = acceptance::kDefaultSeed;
    std::vector<int> only;
    auto* selftest = app.add_subcommand("selftest", "run the acceptance criteria");
    selftest->add_option("--seed", selftest_seed, "base seed");
    selftest->add_option("--only", only, "criterion ids to run")->check(CLI::Range(1, 10));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kUsage;
    }
    common.json = !text;

    try {
        if (*recognize) return run_recognize(recognize_in, common, out);
        if (*grundy) return run_grundy(grundy_in, certificate, common, out);
        if (*oracle_cmd) return run_oracle(oracle_in, common, out);
        if (*switch_cmd) return run_switch(switch_in, switch_set, triples, common, out);
        if (*marriage_cmd) return run_marriage(villages, common, out);
        if (*gen_cmd) return run_gen(gen, common, out);
        if (*selftest) return run_selftest(selftest_seed, only, common, out, err);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return kUsage;
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << '\n';
        return kInternal;
    } catch (const Error& e) {
        err << "rejected: " << e.what() << '\n';
        return kRejected;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kInternal;
    }
    return kUsage;
}

}  // namespace grundy::cli
