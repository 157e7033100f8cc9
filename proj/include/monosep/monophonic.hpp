#ifndef MONOSEP_MONOPHONIC_HPP_
#define MONOSEP_MONOPHONIC_HPP_

#include <utility>
#include <vector>

#include "monosep/graph.hpp"

namespace monosep {

/// Hard cap for the exhaustive chordless-path oracles. They refuse (throw
/// CapExceeded) on larger graphs instead of running unbounded.
inline constexpr int kIntervalOracleCap = 15;

/// Exact monophonic interval J[u, v]: every vertex on some chordless
/// u-v path, by exhaustive depth-first extension of induced paths.
/// J[u, u] = {u}; for adjacent u, v the interval is {u, v}. Oracle only.
VertexSet interval_oracle(const Graph& g, int u, int v, int cap = kIntervalOracleCap);

/// True iff c is monophonically convex: the frontier of c toward every
/// connected component of g - c is a clique. Works per component, so
/// disconnected graphs are fine; the empty set and full set are convex.
bool is_convex(const Graph& g, const VertexSet& c);

/// One repair step of the hull fixpoint: a component with a non-clique
/// frontier, the violating non-adjacent frontier pair, and the path
/// interior that was added.
struct HullStep {
    VertexSet component;
    std::pair<int, int> pair;
    VertexSet added;
};

struct HullTrace {
    std::vector<HullStep> steps;
};

/// Monophonic hull cl(x) by violation repair: while some component S of
/// g - C has a non-clique frontier, take the smallest such component, the
/// lexicographically smallest non-adjacent pair (u, v) of F(C, S), and add
/// the interior of a shortest u-v path inside G[S ∪ {u, v}]. That path is
/// chordless in g, so the interior lies in cl(C); at the fixpoint C is
/// convex, hence equals cl(x). At most |V| rounds.
///
/// x must lie inside one connected component (ContractError otherwise);
/// vertices of other components are never touched.
VertexSet hull(const Graph& g, const VertexSet& x, HullTrace* trace = nullptr);

/// Brute-force hull: iterate X <- J[X] with interval_oracle until fixpoint.
/// Oracle only; refuses beyond cap.
VertexSet hull_oracle(const Graph& g, const VertexSet& x, int cap = kIntervalOracleCap);

}  // namespace monosep

#endif  // MONOSEP_MONOPHONIC_HPP_
