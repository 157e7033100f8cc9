#ifndef MONOSEP_RANDOM_INSTANCES_HPP_
#define MONOSEP_RANDOM_INSTANCES_HPP_

#include <cstdint>
#include <utility>

#include "monosep/abstract.hpp"
#include "monosep/graph.hpp"

namespace monosep {

/// Deterministic splitmix64 stream. std::mt19937 plus the standard
/// distributions is implementation-defined across library versions; this
/// keeps a fixed seed producing byte-identical instance streams anywhere.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    /// Stream for instance `index` of a seeded run: iterations are
    /// independent, so reordering or parallelizing them never changes any
    /// instance.
    static Rng for_instance(uint64_t seed, uint64_t index);

    uint64_t next();

    /// Uniform integer in [lo, hi], inclusive.
    int uniform_int(int lo, int hi);

    /// Uniform double in [0, 1).
    double uniform_real();

private:
    uint64_t state_;
};

/// Erdős–Rényi G(n, p) resampled until connected. Throws after
/// max_attempts failures (p too small for n makes connectivity hopeless).
Graph random_connected_graph(Rng& rng, int n, double p, int max_attempts = 100000);

/// Two disjoint non-empty sets with independently drawn sizes in
/// [size_lo, size_hi], members drawn without replacement from 0..n-1.
std::pair<VertexSet, VertexSet> random_disjoint_sets(Rng& rng, int n, int size_lo, int size_hi);

/// Random subset of 0..n-1 with the given size.
VertexSet random_subset(Rng& rng, int n, int size);

/// Random 3-uniform hypergraph with edge_count distinct edges.
Hypergraph3 random_hypergraph3(Rng& rng, int n, int edge_count);

}  // namespace monosep

#endif  // MONOSEP_RANDOM_INSTANCES_HPP_
