// Acceptance suite: end-to-end checks of the separation pipeline against
// its exhaustive oracles, with the thresholds pinned in code. Prints one
// PASS/FAIL line per criterion; exits non-zero if any fails.

#include <array>
#include <chrono>
#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "monosep/abstract.hpp"
#include "monosep/monophonic.hpp"
#include "monosep/random_instances.hpp"
#include "monosep/separation.hpp"

using namespace monosep;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Criterion {
    explicit Criterion(std::string name) : name(std::move(name)) {}
    std::string name;
    bool pass = true;
    std::string detail;
};

int failures = 0;

void report(const Criterion& c, int index) {
    std::cout << (c.pass ? "PASS" : "FAIL") << "  criterion " << index << ": " << c.name;
    if (!c.detail.empty()) std::cout << " — " << c.detail;
    std::cout << "\n";
    if (!c.pass) ++failures;
}

std::string describe_instance(const Graph& g, const VertexSet& a, const VertexSet& b) {
    std::ostringstream out;
    out << "graph " << format_graph(g) << "a=";
    for (int v : a) out << v << " ";
    out << "b=";
    for (int v : b) out << v << " ";
    return out.str();
}

// Criteria 1, 3, 4, 5 share one pass over the seeded decision corpus:
// oracle agreement, witness soundness (with a brute-force convexity
// re-check for n <= 9), the prefix property along the linkage path, and
// preservation of the oracle decision under saturation.
void run_decision_corpus(Criterion& agreement, Criterion& soundness, Criterion& prefix,
                         Criterion& saturation_pres) {
    constexpr int kCount = 540;
    constexpr uint64_t kSeed = 2026;
    const std::array<double, 3> probs{0.2, 0.35, 0.5};

    auto start = Clock::now();
    int separable_count = 0, saturation_pairs = 0;
    for (int idx = 0; idx < kCount; ++idx) {
        Rng rng = Rng::for_instance(kSeed, uint64_t(idx));
        int n = rng.uniform_int(4, 10);
        double p = probs[size_t(idx) % probs.size()];
        Graph g = random_connected_graph(rng, n, p);
        auto [a, b] = random_disjoint_sets(rng, n, 1, 2);

        SeparationResult result = decide(g, a, b);
        auto oracle = separable_oracle(g, a, b);
        if (result.separable != oracle.has_value()) {
            agreement.pass = false;
            agreement.detail = "disagreement on " + describe_instance(g, a, b);
            return;
        }

        if (result.separable) {
            ++separable_count;
            const VertexSet& h = *result.witness;
            bool sound = verify_witness(g, a, b, h);
            if (sound && n <= 9) {
                sound = hull_oracle(g, h) == h &&
                        hull_oracle(g, h.complement()) == h.complement();
            }
            if (!sound && soundness.pass) {
                soundness.pass = false;
                soundness.detail = "unsound witness on " + describe_instance(g, a, b);
            }

            const std::vector<int>& path = result.components.at(0).path;
            int boundary = 0;
            bool is_prefix = true;
            for (size_t j = 0; j < path.size(); ++j) {
                if (h.contains(path[j])) {
                    if (int(j) != boundary) is_prefix = false;
                    boundary = int(j) + 1;
                }
            }
            if (!(is_prefix && boundary >= 1 && boundary < int(path.size())) && prefix.pass) {
                prefix.pass = false;
                prefix.detail = "witness is not a path prefix on " + describe_instance(g, a, b);
            }
        }

        // Saturating any linked convex candidate pair
        // with disjoint saturation must not change the oracle's answer.
        VertexSet ha = hull(g, a), hb = hull(g, b);
        if (!ha.intersects(hb)) {
            for (const auto& [left, right] : linkage_candidates(g, ha, hb)) {
                if (left.intersects(right)) continue;
                SaturationResult sat = saturate(g, left, right);
                if (sat.intersecting) continue;
                ++saturation_pairs;
                if (separable_oracle(g, left, right).has_value() !=
                        separable_oracle(g, sat.a, sat.b).has_value() &&
                    saturation_pres.pass) {
                    saturation_pres.pass = false;
                    saturation_pres.detail =
                        "saturation changed the decision on " + describe_instance(g, left, right);
                }
            }
        }
    }

    std::ostringstream stats;
    stats << kCount << "/" << kCount << " instances agree (" << separable_count << " separable) in "
          << int(seconds_since(start)) << "s";
    if (agreement.pass) agreement.detail = stats.str();
    if (soundness.pass) {
        soundness.detail = std::to_string(separable_count) + " witnesses verified, 0 failures";
    }
    if (prefix.pass) prefix.detail = std::to_string(separable_count) + " paths checked, 0 failures";
    if (saturation_pres.pass) {
        saturation_pres.detail = std::to_string(saturation_pairs) + " saturated pairs checked";
    }
    if (seconds_since(start) > 300.0) {
        agreement.pass = false;
        agreement.detail = "corpus exceeded the five-minute budget";
    }
}

Criterion criterion_hull() {
    Criterion c("hull fixpoint equals the interval-iteration oracle");
    constexpr int kGraphs = 500;
    constexpr int kSetsPerGraph = 5;
    for (int idx = 0; idx < kGraphs; ++idx) {
        Rng rng = Rng::for_instance(777, uint64_t(idx));
        int n = rng.uniform_int(2, 9);
        double p = idx % 3 == 0 ? 0.2 : (idx % 3 == 1 ? 0.35 : 0.5);
        Graph g = random_connected_graph(rng, n, p);
        for (int k = 0; k < kSetsPerGraph; ++k) {
            VertexSet x = random_subset(rng, n, rng.uniform_int(1, n));
            if (hull(g, x) != hull_oracle(g, x)) {
                c.pass = false;
                std::ostringstream out;
                out << "hulls differ on seed set of " << format_graph(g);
                c.detail = out.str();
                return c;
            }
        }
    }
    c.detail = std::to_string(kGraphs * kSetsPerGraph) + " hull comparisons, 100% equal";
    return c;
}

struct NamedOutcome {
    bool ok;
    std::string detail;
};

NamedOutcome check_named(const std::string& text, std::initializer_list<int> a_ids,
                         std::initializer_list<int> b_ids, bool expect_separable,
                         const std::vector<int>* expected_witness) {
    Graph g = parse_graph(text);
    VertexSet a(g.vertex_count()), b(g.vertex_count());
    for (int v : a_ids) a.insert(v);
    for (int v : b_ids) b.insert(v);

    auto oracle = separable_oracle(g, a, b);
    if (oracle.has_value() != expect_separable) {
        return {false, "oracle disagrees with the frozen outcome"};
    }
    SeparationResult result = decide(g, a, b);
    if (result.separable != expect_separable) return {false, "decide disagrees"};
    if (expect_separable) {
        if (!verify_witness(g, a, b, *result.witness)) return {false, "witness is unsound"};
        if (expected_witness && result.witness->to_vector() != *expected_witness) {
            return {false, "witness differs from the frozen one"};
        }
    }
    return {true, ""};
}

Criterion criterion_named_instances() {
    Criterion c("named instances produce their frozen outcomes");
    const std::string p4 = "4 3\n0 1\n1 2\n2 3\n";
    const std::string c4 = "4 4\n0 1\n1 2\n2 3\n3 0\n";
    const std::string c5 = "5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n";
    const std::string join = "5 7\n0 1\n0 2\n0 3\n0 4\n1 2\n1 3\n1 4\n";
    const std::string tail = "5 8\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n2 4\n3 4\n";

    std::vector<std::pair<std::string, NamedOutcome>> results;
    std::vector<int> c4_witness{0, 1};
    std::vector<int> tail_witness{0};
    results.push_back({"P4 {0} vs {3}", check_named(p4, {0}, {3}, true, nullptr)});
    results.push_back({"C4 {0} vs {2}", check_named(c4, {0}, {2}, true, &c4_witness)});
    results.push_back({"C5 {0} vs {1}", check_named(c5, {0}, {1}, false, nullptr)});
    results.push_back({"join {0} vs {1}", check_named(join, {0}, {1}, false, nullptr)});
    results.push_back({"tail {0} vs {1}", check_named(tail, {0}, {1}, true, &tail_witness)});

    // The join graph must fail through an odd class-graph cycle.
    {
        Graph g = parse_graph(join);
        SeparationResult r = decide(g, VertexSet(5, {0}), VertexSet(5, {1}));
        bool odd = !r.components.empty() && !r.components[0].candidates.empty() &&
                   r.components[0].candidates[0].outcome == CandidateOutcome::OddCycleInClassGraph;
        results.push_back({"join failure reason", {odd, odd ? "" : "expected an odd cycle"}});
    }

    // Two-partition outcomes.
    {
        auto none = two_partition(parse_graph(c5));
        results.push_back({"C5 two-partition", {!none.has_value(), none ? "found one" : ""}});
        Graph p4g = parse_graph(p4);
        auto split = two_partition(p4g);
        bool ok = split && !split->first.empty() && !split->second.empty() &&
                  is_convex(p4g, split->first) && is_convex(p4g, split->second) &&
                  split->second == split->first.complement();
        results.push_back({"P4 two-partition", {ok, ok ? "" : "invalid partition"}});
    }

    int ok_count = 0;
    for (const auto& [name, outcome] : results) {
        if (outcome.ok) {
            ++ok_count;
        } else if (c.pass) {
            c.pass = false;
            c.detail = name + ": " + outcome.detail;
        }
    }
    if (c.pass) c.detail = std::to_string(ok_count) + "/" + std::to_string(results.size()) + " outcomes match";
    return c;
}

Criterion criterion_caratheodory() {
    Criterion c("Caratheodory number is 1 exactly on cliques");
    int checked = 0;
    for (int n = 2; n <= 6; ++n) {
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < n; ++u) {
            for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
        }
        Graph g = Graph::from_edges(n, edges);
        if (caratheodory_number(monophonic_oracle(g)) != 1) {
            c.pass = false;
            c.detail = "complete graph on " + std::to_string(n) + " vertices";
            return c;
        }
        ++checked;
    }
    for (int idx = 0; idx < 100; ++idx) {
        Rng rng = Rng::for_instance(4242, uint64_t(idx));
        int n = rng.uniform_int(2, 7);
        double p = idx % 2 == 0 ? 0.4 : 0.7;
        Graph g = random_connected_graph(rng, n, p);
        bool clique = is_clique(g, g.all_vertices());
        if (caratheodory_number(monophonic_oracle(g)) != (clique ? 1 : 2)) {
            c.pass = false;
            c.detail = "wrong number on " + format_graph(g);
            return c;
        }
        ++checked;
    }
    c.detail = std::to_string(checked) + " spaces checked, 100% correct";
    return c;
}

Criterion criterion_reduction() {
    Criterion c("pole separability matches 3-uniform 2-colorability");
    Hypergraph3 fano = Hypergraph3::make(
        7, {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5}});
    if (two_colorable(fano)) {
        c.pass = false;
        c.detail = "Fano plane reported 2-colorable";
        return c;
    }
    HullOracle fano_oracle = hypergraph_hull(fano);
    if (generic_separable(fano_oracle, VertexSet(9, {7}), VertexSet(9, {8})).has_value()) {
        c.pass = false;
        c.detail = "Fano plane poles reported separable";
        return c;
    }

    int checked = 1;
    for (int idx = 0; idx < 200; ++idx) {
        Rng rng = Rng::for_instance(31337, uint64_t(idx));
        int n = rng.uniform_int(3, 7);
        int max_edges = n * (n - 1) * (n - 2) / 6;
        Hypergraph3 h = random_hypergraph3(rng, n, rng.uniform_int(1, max_edges));
        HullOracle oracle = hypergraph_hull(h);
        auto [pa, pb] = hypergraph_poles(h);
        bool colorable = two_colorable(h);
        bool separable =
            generic_separable(oracle, VertexSet(oracle.groundset, {pa}),
                              VertexSet(oracle.groundset, {pb}))
                .has_value();
        if (colorable != separable) {
            c.pass = false;
            c.detail = "reduction mismatch on a hypergraph with " +
                       std::to_string(h.edges.size()) + " edges";
            return c;
        }
        ++checked;
    }
    c.detail = std::to_string(checked) + " hypergraphs checked, 100% equivalent";
    return c;
}

Criterion criterion_scaling() {
    Criterion c("decision on n=100, m~1000 finishes inside 120s");
    Rng rng(991);
    // p chosen so the expected edge count is about a thousand.
    Graph g = random_connected_graph(rng, 100, 1000.0 / 4950.0);
    VertexSet a(100), b(100);
    a.insert(rng.uniform_int(0, 99));
    int other;
    do {
        other = rng.uniform_int(0, 99);
    } while (a.contains(other));
    b.insert(other);

    auto start = Clock::now();
    SeparationResult result = decide(g, a, b);
    double elapsed = seconds_since(start);
    if (result.separable && !verify_witness(g, a, b, *result.witness)) {
        c.pass = false;
        c.detail = "witness failed verification";
        return c;
    }
    c.pass = elapsed < 120.0;
    std::ostringstream out;
    out << "m=" << g.edge_count() << ", " << (result.separable ? "separable" : "not separable")
        << ", " << elapsed << "s";
    c.detail = out.str();
    return c;
}

}  // namespace

int main() {
    Criterion agreement("polynomial decision agrees with the exhaustive oracle");
    Criterion soundness("every separable verdict carries a verified witness");
    Criterion prefix("witnesses cut the linkage path into a prefix and suffix");
    Criterion saturation_pres("saturation preserves the oracle decision");
    run_decision_corpus(agreement, soundness, prefix, saturation_pres);

    report(agreement, 1);
    report(criterion_hull(), 2);
    report(soundness, 3);
    report(prefix, 4);
    report(saturation_pres, 5);
    report(criterion_named_instances(), 6);
    report(criterion_caratheodory(), 7);
    report(criterion_reduction(), 8);
    report(criterion_scaling(), 9);

    if (failures) {
        std::cout << failures << " criteria failed\n";
        return 1;
    }
    std::cout << "all 9 criteria passed\n";
    return 0;
}
