#include "cli_app.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <sstream>

#include "monosep/abstract.hpp"
#include "monosep/errors.hpp"
#include "monosep/json_io.hpp"
#include "monosep/monophonic.hpp"
#include "monosep/random_instances.hpp"
#include "monosep/separation.hpp"

namespace monosep::cli {

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ContractError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

VertexSet parse_id_list(const std::string& text, int universe, const std::string& flag) {
    VertexSet out(universe);
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        size_t begin = token.find_first_not_of(" \t");
        if (begin == std::string::npos) continue;
        size_t end = token.find_last_not_of(" \t");
        token = token.substr(begin, end - begin + 1);
        size_t used = 0;
        int v;
        try {
            v = std::stoi(token, &used);
        } catch (const std::exception&) {
            throw ContractError(flag + ": not a vertex id: '" + token + "'");
        }
        if (used != token.size()) throw ContractError(flag + ": not a vertex id: '" + token + "'");
        if (v < 0 || v >= universe) {
            throw ContractError(flag + ": vertex " + std::to_string(v) + " out of range; graph has " +
                                std::to_string(universe) + " vertices");
        }
        out.insert(v);
    }
    return out;
}

std::string format_ids(const VertexSet& s) {
    std::string out = "[";
    bool first = true;
    for (int v : s) {
        out += (first ? "" : ", ") + std::to_string(v);
        first = false;
    }
    return out + "]";
}

void write_dot(std::ostream& out, const Graph& g, const std::optional<VertexSet>& witness) {
    out << "graph G {\n";
    if (witness) out << "  node [style=filled];\n";
    for (int v = 0; v < g.vertex_count(); ++v) {
        out << "  " << v;
        if (witness) {
            out << " [fillcolor=" << (witness->contains(v) ? "palegreen" : "lightblue") << "]";
        }
        out << ";\n";
    }
    for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
}

struct CommonOptions {
    std::string graph_path;
    std::string a_text;
    std::string b_text;
    std::string format = "json";
};

int cmd_separate(const CommonOptions& opt, std::ostream& out) {
    Graph g = parse_graph(read_file(opt.graph_path));
    VertexSet a = parse_id_list(opt.a_text, g.vertex_count(), "--a");
    VertexSet b = parse_id_list(opt.b_text, g.vertex_count(), "--b");
    if (a.empty()) throw ContractError("set A must be non-empty");
    if (b.empty()) throw ContractError("set B must be non-empty");

    SeparationResult result = decide(g, a, b);
    if (opt.format == "json") {
        out << to_json(result).dump(2) << "\n";
    } else if (opt.format == "dot") {
        write_dot(out, g, result.witness);
    } else {
        out << (result.separable ? "separable" : "not separable") << "\n";
        if (result.witness) {
            out << "witness: " << format_ids(*result.witness) << " / "
                << format_ids(result.witness->complement()) << "\n";
        }
        if (!result.reason.empty()) out << "reason: " << result.reason << "\n";
        for (const ComponentTrace& trace : result.components) {
            out << "component {" << trace.component.front() << "..}, path";
            for (int v : trace.path) out << " " << v;
            out << ":";
            for (const CandidateTrace& c : trace.candidates) {
                out << " i=" << c.index << ":" << to_string(c.outcome);
                if (c.outcome != CandidateOutcome::NotEvaluated) out << "(" << c.rounds << "r)";
            }
            out << "\n";
        }
    }
    return kExitOk;
}

int cmd_hull(const CommonOptions& opt, std::ostream& out) {
    Graph g = parse_graph(read_file(opt.graph_path));
    VertexSet x = parse_id_list(opt.a_text, g.vertex_count(), "--a");
    HullTrace trace;
    VertexSet result = hull(g, x, &trace);
    if (opt.format == "json") {
        json j;
        j["hull"] = to_json(result);
        j["steps"] = to_json(trace);
        out << j.dump(2) << "\n";
    } else if (opt.format == "dot") {
        write_dot(out, g, result);
    } else {
        out << "hull: " << format_ids(result) << "\n";
        for (const HullStep& step : trace.steps) {
            out << "repair: component " << format_ids(step.component) << " pair ("
                << step.pair.first << ", " << step.pair.second << ") added "
                << format_ids(step.added) << "\n";
        }
    }
    return kExitOk;
}

int cmd_convex_check(const CommonOptions& opt, std::ostream& out) {
    Graph g = parse_graph(read_file(opt.graph_path));
    VertexSet x = parse_id_list(opt.a_text, g.vertex_count(), "--a");
    bool convex = is_convex(g, x);
    if (opt.format == "json") {
        out << json{{"convex", convex}}.dump(2) << "\n";
    } else {
        out << (convex ? "convex" : "not convex") << "\n";
    }
    return kExitOk;
}

int cmd_two_partition(const CommonOptions& opt, std::ostream& out) {
    Graph g = parse_graph(read_file(opt.graph_path));
    auto partition = two_partition(g);
    if (opt.format == "json") {
        json j;
        j["partition"] = partition ? json::array({to_json(partition->first), to_json(partition->second)})
                                   : json(nullptr);
        out << j.dump(2) << "\n";
    } else if (opt.format == "dot") {
        write_dot(out, g, partition ? std::optional<VertexSet>(partition->first) : std::nullopt);
    } else {
        if (partition) {
            out << format_ids(partition->first) << " / " << format_ids(partition->second) << "\n";
        } else {
            out << "none\n";
        }
    }
    return kExitOk;
}

struct FuzzOptions {
    uint64_t seed = 42;
    int count = 100;
    int n_lo = 4;
    int n_hi = 8;
    std::optional<double> p;
    int oracle_cap = kSeparableOracleCap;
    int hull_corpus_cap = 9;
};

struct FuzzFailure {
    int index;
    std::string check;
    std::string detail;
    Graph graph;
    VertexSet a, b;
};

int cmd_fuzz(const FuzzOptions& opt, std::ostream& out) {
    if (opt.n_lo < 4 || opt.n_hi < opt.n_lo) throw ContractError("--n-range must satisfy 4 <= lo <= hi");
    if (opt.n_hi > opt.oracle_cap) {
        throw ContractError("--n-range upper bound " + std::to_string(opt.n_hi) +
                            " exceeds the oracle cap " + std::to_string(opt.oracle_cap));
    }
    if (opt.count < 1) throw ContractError("--count must be positive");

    const std::vector<double> probs =
        opt.p ? std::vector<double>{*opt.p} : std::vector<double>{0.2, 0.35, 0.5};

    out << "fuzz: seed=" << opt.seed << " count=" << opt.count << " n=" << opt.n_lo << ".."
        << opt.n_hi << " p=";
    for (size_t i = 0; i < probs.size(); ++i) out << (i ? "," : "") << probs[i];
    out << " oracle-cap=" << opt.oracle_cap << "\n";

    int passed = 0;
    std::optional<FuzzFailure> first_failure;
    for (int idx = 0; idx < opt.count; ++idx) {
        Rng rng = Rng::for_instance(opt.seed, uint64_t(idx));
        int n = rng.uniform_int(opt.n_lo, opt.n_hi);
        double p = probs[size_t(idx) % probs.size()];
        Graph g = random_connected_graph(rng, n, p);
        auto [a, b] = random_disjoint_sets(rng, n, 1, 2);

        std::string check, detail;
        try {
            SeparationResult result = decide(g, a, b);
            auto oracle = separable_oracle(g, a, b, opt.oracle_cap);
            if (result.separable != oracle.has_value()) {
                check = "oracle agreement";
                detail = "decide says " + std::string(result.separable ? "separable" : "not separable") +
                         ", oracle says the opposite";
            } else if (result.separable && !verify_witness(g, a, b, *result.witness)) {
                check = "witness soundness";
                detail = "witness " + format_ids(*result.witness);
            } else if (result.separable) {
                const std::vector<int>& path = result.components.at(0).path;
                int boundary = 0;
                bool prefix = true;
                for (size_t j = 0; j < path.size(); ++j) {
                    bool inside = result.witness->contains(path[j]);
                    if (inside && int(j) != boundary) prefix = false;
                    if (inside) boundary = int(j) + 1;
                }
                if (!prefix || boundary < 1 || boundary >= int(path.size())) {
                    check = "prefix property";
                    detail = "witness does not cut the linkage path into a prefix and a suffix";
                }
            }
            if (check.empty() && n <= opt.hull_corpus_cap) {
                for (int k = 0; k < 3 && check.empty(); ++k) {
                    VertexSet x = random_subset(rng, n, rng.uniform_int(1, std::min(4, n)));
                    if (hull(g, x) != hull_oracle(g, x)) {
                        check = "hull agreement";
                        detail = "seed set " + format_ids(x);
                    }
                }
            }
        } catch (const std::exception& e) {
            check = "exception";
            detail = e.what();
        }

        if (check.empty()) {
            ++passed;
        } else if (!first_failure) {
            first_failure = FuzzFailure{idx, check, detail, g, a, b};
        }
    }

    out << passed << "/" << opt.count << " agree\n";
    if (first_failure) {
        out << "first counterexample: seed=" << opt.seed << " index=" << first_failure->index
            << " check=" << first_failure->check << "\n";
        if (!first_failure->detail.empty()) out << "  " << first_failure->detail << "\n";
        out << "  a=" << format_ids(first_failure->a) << " b=" << format_ids(first_failure->b)
            << "\n";
        std::istringstream lines(format_graph(first_failure->graph));
        std::string line;
        while (std::getline(lines, line)) out << "  " << line << "\n";
        return kExitMismatch;
    }
    return kExitOk;
}

int cmd_hypergraph(const CommonOptions& opt, std::ostream& out) {
    Hypergraph3 h = parse_hypergraph(read_file(opt.graph_path));
    HullOracle oracle = hypergraph_hull(h);
    auto [pa, pb] = hypergraph_poles(h);
    VertexSet a(oracle.groundset, {pa});
    VertexSet b(oracle.groundset, {pb});

    bool colorable = two_colorable(h);
    auto witness = generic_separable(oracle, a, b);
    std::optional<int> caratheodory;
    if (oracle.groundset <= kCaratheodoryCap) caratheodory = caratheodory_number(oracle);

    if (opt.format == "json") {
        json j;
        j["two_colorable"] = colorable;
        j["separable"] = witness.has_value();
        j["witness"] = witness ? to_json(*witness) : json(nullptr);
        j["caratheodory"] = caratheodory ? json(*caratheodory) : json(nullptr);
        out << j.dump(2) << "\n";
    } else {
        out << "two-colorable: " << (colorable ? "true" : "false") << "\n";
        out << "separable: " << (witness ? "true" : "false") << "\n";
        if (witness) out << "witness: " << format_ids(*witness) << "\n";
        if (caratheodory) out << "caratheodory: " << *caratheodory << "\n";
    }
    if (colorable != witness.has_value()) {
        out << "MISMATCH: 2-colorability and separability disagree\n";
        return kExitMismatch;
    }
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Half-space separation in the chordless-path convexity of a graph"};
    app.require_subcommand(1);

    CommonOptions common;
    FuzzOptions fuzz;
    std::string n_range = "4..8";

    auto add_common = [&](CLI::App* sub, bool wants_a, bool wants_b) {
        sub->add_option("--graph", common.graph_path, "input file")->required();
        if (wants_a) sub->add_option("--a", common.a_text, "comma-separated vertex ids");
        if (wants_b) sub->add_option("--b", common.b_text, "comma-separated vertex ids");
        sub->add_option("--format", common.format, "json | dot | plain")
            ->check(CLI::IsMember({"json", "dot", "plain"}));
    };

    CLI::App* separate = app.add_subcommand("separate", "decide half-space separability of A and B");
    add_common(separate, true, true);

    CLI::App* hull_cmd = app.add_subcommand("hull", "convex hull of a vertex set");
    add_common(hull_cmd, true, false);

    CLI::App* convex = app.add_subcommand("convex-check", "test whether a vertex set is convex");
    add_common(convex, true, false);

    CLI::App* two_part = app.add_subcommand("two-partition", "partition all vertices into two convex sets");
    add_common(two_part, false, false);

    CLI::App* fuzz_cmd = app.add_subcommand("fuzz", "cross-check the decision pipeline against brute force");
    fuzz_cmd->add_option("--seed", fuzz.seed, "RNG seed");
    fuzz_cmd->add_option("--count", fuzz.count, "number of instances");
    fuzz_cmd->add_option("--n-range", n_range, "vertex count range LO..HI");
    double p_value = -1;
    CLI::Option* p_opt = fuzz_cmd->add_option("--p", p_value, "edge probability (default: cycle 0.2, 0.35, 0.5)");
    fuzz_cmd->add_option("--oracle-cap", fuzz.oracle_cap, "max n for the exhaustive oracle");

    CLI::App* hyper = app.add_subcommand("hypergraph", "2-coloring vs separation in the induced space");
    add_common(hyper, false, false);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            // --help and friends print through CLI11's machinery.
            std::ostringstream help;
            int code = app.exit(e, help, help);
            out << help.str();
            return code;
        }
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (separate->parsed()) return cmd_separate(common, out);
        if (hull_cmd->parsed()) return cmd_hull(common, out);
        if (convex->parsed()) return cmd_convex_check(common, out);
        if (two_part->parsed()) return cmd_two_partition(common, out);
        if (hyper->parsed()) return cmd_hypergraph(common, out);
        if (fuzz_cmd->parsed()) {
            if (p_opt->count() > 0) fuzz.p = p_value;
            size_t sep = n_range.find("..");
            if (sep == std::string::npos) throw ContractError("--n-range must look like LO..HI");
            fuzz.n_lo = std::stoi(n_range.substr(0, sep));
            fuzz.n_hi = std::stoi(n_range.substr(sep + 2));
            return cmd_fuzz(fuzz, out);
        }
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitMismatch;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    err << "error: no subcommand\n";
    return kExitUsage;
}

}  // namespace monosep::cli
