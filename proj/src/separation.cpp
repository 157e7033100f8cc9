#include "monosep/separation.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_set>

#include "monosep/errors.hpp"

namespace monosep {

namespace {

void check_sets(const Graph& g, const VertexSet& a, const VertexSet& b) {
    if (a.universe() != g.vertex_count() || b.universe() != g.vertex_count()) {
        throw ContractError("set universe does not match the graph");
    }
}

// cl({u, v}) is independent of the sides being separated, and the pipeline
// asks for the same pair hulls over and over (every presaturation round, on
// both sides). One cache per graph amortizes them.
class PairHullCache {
public:
    explicit PairHullCache(const Graph& g) : g_(&g), hulls_(size_t(g.vertex_count()) * g.vertex_count()) {}

    const VertexSet& pair_hull(int u, int v) {
        if (u > v) std::swap(u, v);
        auto& slot = hulls_[size_t(u) * g_->vertex_count() + v];
        if (!slot) {
            VertexSet seed(g_->vertex_count());
            seed.insert(u);
            seed.insert(v);
            slot = hull(*g_, seed);
        }
        return *slot;
    }

private:
    const Graph* g_;
    std::vector<std::optional<VertexSet>> hulls_;
};

// 16 bits per id: enough for any graph this library handles, and four
// of them still fit one key.
uint64_t pack_pair(int u, int v) { return (uint64_t(u + 1) << 16) | uint64_t(v + 1); }

uint64_t pack_members(const std::vector<int>& sorted) {
    uint64_t key = 0;
    for (int v : sorted) key = (key << 16) | uint64_t(v + 1);
    return key;
}

std::vector<int> merge_pairs(const std::pair<int, int>& p, const std::pair<int, int>& q) {
    std::vector<int> out{p.first, p.second, q.first, q.second};
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<VertexSet> minimal_forbidden_sets_cached(const Graph& g, const VertexSet& a,
                                                     const VertexSet& b, PairHullCache& cache) {
    const int n = g.vertex_count();
    VertexSet free = (a | b).complement();

    std::vector<std::pair<int, int>> hits_both, hits_a, hits_b;
    for (int u : free) {
        for (int v : free) {
            if (v <= u) continue;
            const VertexSet& h = cache.pair_hull(u, v);
            bool ma = h.intersects(a);
            bool mb = h.intersects(b);
            if (ma && mb) {
                hits_both.emplace_back(u, v);
            } else if (ma) {
                hits_a.emplace_back(u, v);
            } else if (mb) {
                hits_b.emplace_back(u, v);
            }
        }
    }

    std::unordered_set<uint64_t> both_keys;
    for (auto [u, v] : hits_both) both_keys.insert(pack_pair(u, v));

    // Candidate unions of an a-hitting pair with a b-hitting pair; the two
    // pairs may share one vertex, so candidates have 3 or 4 members.
    std::unordered_set<uint64_t> seen;
    std::vector<std::vector<int>> triples, quads;
    for (const auto& p : hits_a) {
        for (const auto& q : hits_b) {
            std::vector<int> members = merge_pairs(p, q);
            if (!seen.insert(pack_members(members)).second) continue;
            (members.size() == 3 ? triples : quads).push_back(std::move(members));
        }
    }

    auto contains_both_pair = [&](const std::vector<int>& members) {
        for (size_t i = 0; i < members.size(); ++i) {
            for (size_t j = i + 1; j < members.size(); ++j) {
                if (both_keys.count(pack_pair(members[i], members[j]))) return true;
            }
        }
        return false;
    };

    std::unordered_set<uint64_t> triple_keys;
    for (const auto& t : triples) triple_keys.insert(pack_members(t));

    std::vector<std::vector<int>> minimal;
    for (auto [u, v] : hits_both) minimal.push_back({u, v});
    for (const auto& t : triples) {
        if (!contains_both_pair(t)) minimal.push_back(t);
    }
    for (const auto& q : quads) {
        if (contains_both_pair(q)) continue;
        bool has_forbidden_triple = false;
        for (int skip = 0; skip < 4 && !has_forbidden_triple; ++skip) {
            std::vector<int> sub;
            for (int i = 0; i < 4; ++i) {
                if (i != skip) sub.push_back(q[i]);
            }
            has_forbidden_triple = triple_keys.count(pack_members(sub)) > 0;
        }
        if (!has_forbidden_triple) minimal.push_back(q);
    }

    std::sort(minimal.begin(), minimal.end(), [](const auto& x, const auto& y) {
        if (x.size() != y.size()) return x.size() < y.size();
        return x < y;
    });

    std::vector<VertexSet> out;
    out.reserve(minimal.size());
    for (const auto& members : minimal) {
        VertexSet s(n);
        for (int v : members) s.insert(v);
        out.push_back(std::move(s));
    }
    return out;
}

VertexSet presaturate_cached(const Graph& g, const VertexSet& a, const VertexSet& b,
                             PairHullCache& cache) {
    if (a.intersects(b)) return g.all_vertices();

    VertexSet accumulated = shadow(g, a, b);
    std::vector<std::optional<VertexSet>> side_hull(g.vertex_count());
    auto hull_with = [&](int x) -> const VertexSet& {
        if (!side_hull[x]) side_hull[x] = hull(g, a.with(x));
        return *side_hull[x];
    };
    for (const VertexSet& forbidden : minimal_forbidden_sets_cached(g, a, b, cache)) {
        VertexSet forced = g.all_vertices();
        for (int x : forbidden) forced &= hull_with(x);
        accumulated |= forced;
    }
    return hull(g, accumulated);
}

SaturationResult saturate_cached(const Graph& g, const VertexSet& a, const VertexSet& b,
                                 PairHullCache& cache) {
    SaturationResult result{a, b, 0, false};
    if (result.a.intersects(result.b)) {
        result.a = result.b = g.all_vertices();
        result.intersecting = true;
        return result;
    }
    for (;;) {
        VertexSet next_a = presaturate_cached(g, result.a, result.b, cache);
        VertexSet next_b = presaturate_cached(g, result.b, result.a, cache);
        ++result.rounds;
        if (next_a.intersects(next_b)) {
            result.a = result.b = g.all_vertices();
            result.intersecting = true;
            return result;
        }
        if (next_a == result.a && next_b == result.b) return result;
        result.a = std::move(next_a);
        result.b = std::move(next_b);
    }
}

SaturatedDecision decide_saturated_cached(const Graph& g, const VertexSet& a, const VertexSet& b,
                                          PairHullCache& cache);

}  // namespace

VertexSet shadow(const Graph& g, const VertexSet& a, const VertexSet& b) {
    check_sets(g, a, b);
    if (a.empty() || b.empty()) throw ContractError("shadow requires non-empty sets");
    if (a.intersects(b)) return g.all_vertices();
    VertexSet out = a;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (out.contains(v)) continue;
        if (hull(g, b.with(v)).intersects(a)) out.insert(v);
    }
    return out;
}

std::vector<VertexSet> minimal_forbidden_sets(const Graph& g, const VertexSet& a,
                                              const VertexSet& b) {
    check_sets(g, a, b);
    PairHullCache cache(g);
    return minimal_forbidden_sets_cached(g, a, b, cache);
}

VertexSet presaturate(const Graph& g, const VertexSet& a, const VertexSet& b) {
    check_sets(g, a, b);
    if (a.empty() || b.empty()) throw ContractError("presaturate requires non-empty sets");
    PairHullCache cache(g);
    return presaturate_cached(g, a, b, cache);
}

SaturationResult saturate(const Graph& g, const VertexSet& a, const VertexSet& b) {
    check_sets(g, a, b);
    if (a.empty() || b.empty()) throw ContractError("saturate requires non-empty sets");
    PairHullCache cache(g);
    return saturate_cached(g, a, b, cache);
}

std::vector<std::pair<VertexSet, VertexSet>> linkage_candidates(const Graph& g, const VertexSet& a,
                                                                const VertexSet& b,
                                                                std::vector<int>* path_out) {
    check_sets(g, a, b);
    if (a.empty() || b.empty()) throw ContractError("linkage requires non-empty sets");
    if (a.intersects(b)) throw ContractError("linkage requires disjoint sets");
    auto path = shortest_path_between_sets(g, a, b);
    if (!path) throw ContractError("linkage requires sets in one connected component");
    if (path_out) *path_out = *path;

    const int k = int(path->size());
    std::vector<std::pair<VertexSet, VertexSet>> candidates;
    candidates.reserve(k - 1);
    for (int i = 1; i < k; ++i) {
        VertexSet left = a, right = b;
        for (int j = 0; j < i; ++j) left.insert((*path)[j]);
        for (int j = i; j < k; ++j) right.insert((*path)[j]);
        candidates.emplace_back(hull(g, left), hull(g, right));
    }
    return candidates;
}

ClassPartition equivalence_classes(const Graph& g, const VertexSet& a, const VertexSet& b) {
    check_sets(g, a, b);
    const int n = g.vertex_count();
    VertexSet used = a | b;
    VertexSet free = used.complement();
    VertexSet interior = closed_neighborhood(g, used);

    std::vector<int> parent(n);
    for (int v = 0; v < n; ++v) parent[v] = v;
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };

    for (const VertexSet& comp : components(g, interior)) {
        int root = comp.first();
        for (int v : closed_neighborhood(g, comp)) parent[find(v)] = find(root);
    }

    ClassPartition out;
    out.class_of.assign(n, -1);
    for (int v : free) {
        int r = find(v);
        if (out.class_of[r] < 0) {
            out.class_of[r] = int(out.classes.size());
            out.classes.emplace_back(n);
        }
        out.class_of[v] = out.class_of[r];
        out.classes[out.class_of[v]].insert(v);
    }
    return out;
}

Graph class_graph(const ClassPartition& partition, const std::vector<VertexSet>& mfs) {
    std::vector<std::pair<int, int>> edges;
    for (const VertexSet& forbidden : mfs) {
        if (forbidden.size() != 2) {
            throw ContractError("class graph requires pair-sized forbidden sets");
        }
        int u = forbidden.first();
        int v = forbidden.without(u).first();
        int cu = partition.class_of[u];
        int cv = partition.class_of[v];
        if (cu < 0 || cv < 0) throw ContractError("forbidden pair outside the partition");
        if (cu != cv) edges.emplace_back(cu, cv);
    }
    return Graph::from_edges(int(partition.classes.size()), edges);
}

std::string to_string(CandidateOutcome outcome) {
    switch (outcome) {
        case CandidateOutcome::Success: return "success";
        case CandidateOutcome::IntersectingSaturation: return "intersecting_saturation";
        case CandidateOutcome::InClassForbiddenPair: return "in_class_forbidden_pair";
        case CandidateOutcome::OddCycleInClassGraph: return "odd_cycle_in_class_graph";
        case CandidateOutcome::NotEvaluated: return "not_evaluated";
    }
    return "unknown";
}

namespace {

// Structural facts that hold for every linked, disjoint, saturated pair:
// each neighbor of a ∪ b sees both inner frontiers, and the frontier of
// each side toward the rest is a clique. Violations mean the caller's
// input was not saturated (or there is a bug upstream).
void check_saturated_shape(const Graph& g, const VertexSet& a, const VertexSet& b) {
    VertexSet used = a | b;
    VertexSet fab = frontier(g, a, b);
    VertexSet fba = frontier(g, b, a);
    VertexSet both = fab | fba;
    for (int v : neighborhood(g, used)) {
        if (!both.is_subset_of(g.neighbor_set(v))) {
            throw ContractError("instance is not saturated: a neighbor misses a frontier vertex");
        }
    }
    if (!is_clique(g, frontier(g, a, a.complement())) ||
        !is_clique(g, frontier(g, b, b.complement()))) {
        throw ContractError("instance is not saturated: outer frontier is not a clique");
    }
}

SaturatedDecision decide_saturated_cached(const Graph& g, const VertexSet& a, const VertexSet& b,
                                          PairHullCache& cache) {
    if (a.empty() || b.empty()) throw ContractError("decide_saturated requires non-empty sets");
    if (a.intersects(b)) throw ContractError("decide_saturated requires disjoint sets");
    if (!frontier(g, a, b).size()) throw ContractError("decide_saturated requires linked sets");
    check_saturated_shape(g, a, b);

    std::vector<VertexSet> mfs = minimal_forbidden_sets_cached(g, a, b, cache);
    ClassPartition partition = equivalence_classes(g, a, b);

    for (const VertexSet& forbidden : mfs) {
        if (forbidden.size() != 2) {
            throw InternalError("saturated instance produced a non-pair forbidden set");
        }
        int u = forbidden.first();
        int v = forbidden.without(u).first();
        if (partition.class_of[u] == partition.class_of[v]) {
            return {false, std::nullopt, CandidateOutcome::InClassForbiddenPair};
        }
    }

    Graph classes = class_graph(partition, mfs);
    TwoColoring coloring = two_color(classes);
    if (!coloring.bipartite) {
        return {false, std::nullopt, CandidateOutcome::OddCycleInClassGraph};
    }

    std::vector<VertexSet> attempts;
    if (mfs.empty()) {
        attempts.push_back(a);
        attempts.push_back(b.complement());
    } else {
        VertexSet with_a = a, with_b = b;
        for (size_t c = 0; c < partition.classes.size(); ++c) {
            (coloring.color[c] == 0 ? with_a : with_b) |= partition.classes[c];
        }
        attempts.push_back(with_a);
        attempts.push_back(with_b.complement());
    }
    for (const VertexSet& h : attempts) {
        if (verify_witness(g, a, b, h)) return {true, h, CandidateOutcome::Success};
    }
    throw InternalError("constructed witness failed verification");
}

}  // namespace

SaturatedDecision decide_saturated(const Graph& g, const VertexSet& a, const VertexSet& b) {
    check_sets(g, a, b);
    PairHullCache cache(g);
    return decide_saturated_cached(g, a, b, cache);
}

namespace {

// Runs linkage -> saturation -> saturated decision on one connected graph
// whose a and b are both non-empty. Vertex ids are local to that graph.
struct PipelineOutcome {
    bool separable = false;
    VertexSet witness;
    ComponentTrace trace;
};

PipelineOutcome run_pipeline(const Graph& g, const VertexSet& a, const VertexSet& b) {
    PipelineOutcome out;
    out.witness = VertexSet(g.vertex_count());

    VertexSet ha = hull(g, a);
    VertexSet hb = hull(g, b);
    if (ha.intersects(hb)) {
        out.trace.failure = "hulls intersect";
        return out;
    }

    PairHullCache cache(g);
    std::vector<std::pair<VertexSet, VertexSet>> candidates =
        linkage_candidates(g, ha, hb, &out.trace.path);

    // Later linkage positions first: the B side is grown along the path
    // before the A side is.
    for (int i = int(candidates.size()); i >= 1; --i) {
        const auto& [left, right] = candidates[i - 1];
        CandidateTrace ct{i, CandidateOutcome::NotEvaluated, 0};
        if (out.separable) {
            out.trace.candidates.push_back(ct);
            continue;
        }
        if (left.intersects(right)) {
            ct.outcome = CandidateOutcome::IntersectingSaturation;
            out.trace.candidates.push_back(ct);
            continue;
        }
        SaturationResult sat = saturate_cached(g, left, right, cache);
        ct.rounds = sat.rounds;
        if (sat.intersecting) {
            ct.outcome = CandidateOutcome::IntersectingSaturation;
            out.trace.candidates.push_back(ct);
            continue;
        }
        SaturatedDecision decision = decide_saturated_cached(g, sat.a, sat.b, cache);
        ct.outcome = decision.separable ? CandidateOutcome::Success : decision.failure;
        out.trace.candidates.push_back(ct);
        if (decision.separable) {
            out.separable = true;
            out.witness = *decision.witness;
            out.trace.chosen_index = i;
        }
    }
    if (!out.separable) out.trace.failure = "no linkage candidate admits a separation";
    return out;
}

// Induced subgraph over `vertices` with dense local ids in ascending order
// of the original ids.
struct Induced {
    Graph graph;
    std::vector<int> to_global;
    std::vector<int> to_local;
};

Induced induce(const Graph& g, const VertexSet& vertices) {
    Induced out;
    out.to_global = vertices.to_vector();
    out.to_local.assign(g.vertex_count(), -1);
    for (size_t i = 0; i < out.to_global.size(); ++i) out.to_local[out.to_global[i]] = int(i);
    std::vector<std::pair<int, int>> edges;
    for (int u : vertices) {
        for (int v : g.neighbors(u)) {
            if (u < v && vertices.contains(v)) {
                edges.emplace_back(out.to_local[u], out.to_local[v]);
            }
        }
    }
    out.graph = Graph::from_edges(int(out.to_global.size()), edges);
    return out;
}

}  // namespace

SeparationResult decide(const Graph& g, const VertexSet& a, const VertexSet& b) {
    check_sets(g, a, b);
    if (a.empty()) throw ContractError("set A must be non-empty");
    if (b.empty()) throw ContractError("set B must be non-empty");

    SeparationResult result;
    if (a.intersects(b)) {
        result.reason = "input sets intersect";
        return result;
    }

    VertexSet witness(g.vertex_count());
    bool all_separable = true;
    for (const VertexSet& comp : components(g, g.empty_set())) {
        bool meets_a = comp.intersects(a);
        bool meets_b = comp.intersects(b);
        if (!meets_b) {
            // Components touched by a alone, and untouched ones, join the
            // witness side whole; whole components are convex.
            witness |= comp;
            continue;
        }
        if (!meets_a) continue;  // only b: stays on the complement side

        Induced local = induce(g, comp);
        VertexSet la(local.graph.vertex_count()), lb(local.graph.vertex_count());
        for (int v : a & comp) la.insert(local.to_local[v]);
        for (int v : b & comp) lb.insert(local.to_local[v]);

        PipelineOutcome outcome = run_pipeline(local.graph, la, lb);

        ComponentTrace trace = std::move(outcome.trace);
        trace.component = local.to_global;
        for (int& v : trace.path) v = local.to_global[v];
        result.components.push_back(std::move(trace));

        if (!outcome.separable) {
            all_separable = false;
            result.reason = "component containing vertex " + std::to_string(comp.first()) + ": " +
                            result.components.back().failure;
            break;
        }
        for (int v : outcome.witness) witness.insert(local.to_global[v]);
    }

    if (all_separable) {
        result.separable = true;
        result.witness = witness;
        if (!verify_witness(g, a, b, witness)) {
            throw InternalError("assembled witness failed verification");
        }
    }
    return result;
}

bool verify_witness(const Graph& g, const VertexSet& a, const VertexSet& b, const VertexSet& h) {
    if (h.universe() != g.vertex_count()) throw ContractError("witness universe mismatch");
    return a.is_subset_of(h) && !b.intersects(h) && is_convex(g, h) &&
           is_convex(g, h.complement());
}

std::optional<VertexSet> separable_oracle(const Graph& g, const VertexSet& a, const VertexSet& b,
                                          int cap) {
    check_sets(g, a, b);
    if (g.vertex_count() > cap) {
        throw CapExceeded("separation oracle refuses graphs with more than " + std::to_string(cap) +
                          " vertices");
    }
    std::vector<int> free = (a | b).complement().to_vector();
    if (free.size() >= 63) throw CapExceeded("free vertex count too large for enumeration");
    for (uint64_t mask = 0; mask < (uint64_t{1} << free.size()); ++mask) {
        VertexSet h = a;
        for (size_t j = 0; j < free.size(); ++j) {
            if ((mask >> j) & 1) h.insert(free[j]);
        }
        if (verify_witness(g, a, b, h)) return h;
    }
    return std::nullopt;
}

std::optional<std::pair<VertexSet, VertexSet>> two_partition(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 2) return std::nullopt;

    std::vector<VertexSet> comps = components(g, g.empty_set());
    if (comps.size() >= 2) {
        // Whole components are convex, as is any union of them.
        return std::make_pair(comps[0], comps[0].complement());
    }

    VertexSet anchor(n);
    anchor.insert(0);
    for (int v = 1; v < n; ++v) {
        SeparationResult r = decide(g, anchor, VertexSet(n, {v}));
        if (r.separable) return std::make_pair(*r.witness, r.witness->complement());
    }
    return std::nullopt;
}

}  // namespace monosep
