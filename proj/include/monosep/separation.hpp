#ifndef MONOSEP_SEPARATION_HPP_
#define MONOSEP_SEPARATION_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "monosep/monophonic.hpp"

namespace monosep {

/// Default cap for the exhaustive separation oracle (2^free enumerations).
inline constexpr int kSeparableOracleCap = 20;

/// Shadow A/B = { v : cl(B ∪ v) ∩ A ≠ ∅ }: the vertices whose addition to
/// the B side forces the hull into A, so they can only ever sit with A.
/// Always contains a; returns the full vertex set when a and b intersect.
VertexSet shadow(const Graph& g, const VertexSet& a, const VertexSet& b);

/// Inclusion-minimal sets X inside the complement of a ∪ b whose hull meets
/// both a and b. Every such set has 2 to 4 members: it is either a single
/// pair hitting both sides, or the union of an a-hitting pair and a
/// b-hitting pair. Enumerates by classifying the O(n^2) pair hulls rather
/// than scanning all 4-subsets. Result ordered by (size, members).
std::vector<VertexSet> minimal_forbidden_sets(const Graph& g, const VertexSet& a,
                                              const VertexSet& b);

/// Pre-saturation σ(a, b) = cl( a/b ∪ ⋃ { ⋂_{x∈X} cl(a ∪ x) : X minimal
/// forbidden } ). Returns the full vertex set when a and b intersect.
/// Meaningful for linked convex inputs.
VertexSet presaturate(const Graph& g, const VertexSet& a, const VertexSet& b);

struct SaturationResult {
    VertexSet a;
    VertexSet b;
    int rounds = 0;
    /// The two sides met at some round; both collapse to the full vertex
    /// set and the pair is not separable.
    bool intersecting = false;
};

/// Alternating fixpoint of presaturation on both sides. Terminates within
/// |V| rounds; a round that changes nothing is still counted (it is the
/// fixpoint check).
SaturationResult saturate(const Graph& g, const VertexSet& a, const VertexSet& b);

/// For a shortest a-b path v_1..v_k, the pairs
/// ( cl(a ∪ {v_1..v_i}), cl(b ∪ {v_{i+1}..v_k}) ) for 1 <= i < k, in
/// ascending i. Each pair is linked; pairs whose sides intersect are kept
/// (they fail downstream). Requires connected g and non-empty disjoint a, b.
/// The path used is written to *path_out when given.
std::vector<std::pair<VertexSet, VertexSet>> linkage_candidates(const Graph& g, const VertexSet& a,
                                                                const VertexSet& b,
                                                                std::vector<int>* path_out = nullptr);

/// The classes of the relation identifying, for every component S of
/// g - N[a ∪ b], all of N[S]; vertices of N(a ∪ b) in no such N[S] stay
/// singletons. Classes partition the complement of a ∪ b and are ordered
/// by smallest member; class_of maps vertices of a ∪ b to -1.
struct ClassPartition {
    std::vector<VertexSet> classes;
    std::vector<int> class_of;
};

ClassPartition equivalence_classes(const Graph& g, const VertexSet& a, const VertexSet& b);

/// Graph on the classes: an edge joins two distinct classes containing the
/// ends of some forbidden pair. Every forbidden set must be a pair here
/// (true for saturated instances).
Graph class_graph(const ClassPartition& partition, const std::vector<VertexSet>& mfs);

enum class CandidateOutcome {
    Success,
    IntersectingSaturation,
    InClassForbiddenPair,
    OddCycleInClassGraph,
    NotEvaluated,
};

std::string to_string(CandidateOutcome outcome);

/// Decision for one linked, disjoint, saturated pair: separable iff no
/// class contains a forbidden pair and the class graph is bipartite. On
/// success carries a verified witness half-space.
struct SaturatedDecision {
    bool separable = false;
    std::optional<VertexSet> witness;
    CandidateOutcome failure = CandidateOutcome::NotEvaluated;
};

SaturatedDecision decide_saturated(const Graph& g, const VertexSet& a, const VertexSet& b);

struct CandidateTrace {
    int index = 0;  // 1-based position along the linkage path
    CandidateOutcome outcome = CandidateOutcome::NotEvaluated;
    int rounds = 0;
};

struct ComponentTrace {
    std::vector<int> component;  // sorted vertex ids
    std::vector<int> path;       // the shortest a-b path used for linkage
    std::vector<CandidateTrace> candidates;  // in evaluation order
    int chosen_index = -1;
    std::string failure;  // empty when this component separated
};

struct SeparationResult {
    bool separable = false;
    std::optional<VertexSet> witness;
    /// One entry per connected component meeting both input sets.
    std::vector<ComponentTrace> components;
    std::string reason;  // top-level failure summary, empty when separable
};

/// Top-level decision: per connected component, components touching only a
/// (or neither set) go to the witness side, components touching only b to
/// its complement, and every component meeting both runs
/// linkage -> saturation -> class-graph bipartiteness, trying linkage
/// positions from the b end of the path backwards and stopping at the
/// first success. Throws ContractError when a or b is empty.
SeparationResult decide(const Graph& g, const VertexSet& a, const VertexSet& b);

/// True iff h is a half-space with a inside and b outside:
/// a ⊆ h, b ∩ h = ∅, and both h and its complement are convex.
bool verify_witness(const Graph& g, const VertexSet& a, const VertexSet& b, const VertexSet& h);

/// Exhaustive ground truth: enumerate all assignments of the free vertices
/// (binary counting over ascending ids) and return the first h passing
/// verify_witness, or nullopt. Refuses graphs larger than cap.
std::optional<VertexSet> separable_oracle(const Graph& g, const VertexSet& a, const VertexSet& b,
                                          int cap = kSeparableOracleCap);

/// Partition of all vertices into two non-empty convex sets, if one exists.
/// Fixes vertex 0 and probes decide(g, {0}, {v}) for every other v.
std::optional<std::pair<VertexSet, VertexSet>> two_partition(const Graph& g);

}  // namespace monosep

#endif  // MONOSEP_SEPARATION_HPP_
