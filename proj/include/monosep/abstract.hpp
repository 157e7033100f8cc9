#ifndef MONOSEP_ABSTRACT_HPP_
#define MONOSEP_ABSTRACT_HPP_

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "monosep/graph.hpp"

namespace monosep {

inline constexpr int kGenericSeparableCap = 22;
inline constexpr int kCaratheodoryCap = 12;

/// An abstract convexity space presented by its groundset size and hull
/// function. A lawful oracle is extensive, monotone, idempotent and fixes
/// the empty set; validate_oracle checks exactly that.
struct HullOracle {
    int groundset = 0;
    std::function<VertexSet(const VertexSet&)> hull;
};

struct OracleCheck {
    bool ok = true;
    std::string violation;  // description of the first violated law
    explicit operator bool() const { return ok; }
};

/// Checks the hull-operator laws. Exhaustive over all subsets (with
/// single-element monotonicity steps, which imply full monotonicity) when
/// 2^groundset fits the budget; otherwise a seeded random sample of that
/// many subsets and subset pairs.
OracleCheck validate_oracle(const HullOracle& oracle, long long sample_budget = 1 << 20);

/// The monophonic convexity of g as a hull oracle. Total on arbitrary
/// subsets: hulls are taken per connected component and united.
HullOracle monophonic_oracle(const Graph& g);

/// 3-uniform hypergraph: every edge has exactly three distinct vertices,
/// and the edge list is non-empty.
struct Hypergraph3 {
    int n = 0;
    std::vector<std::array<int, 3>> edges;

    static Hypergraph3 make(int n, std::vector<std::array<int, 3>> edges);
};

/// Same document shape as graphs: "n m", then m lines of three vertex ids.
Hypergraph3 parse_hypergraph(std::string_view text);

/// The reduction space over V(H) plus two extra points a, b (the two
/// highest ids): h(X) = X ∪ {a, b} when X includes an edge, else X.
HullOracle hypergraph_hull(const Hypergraph3& h);

/// Ids of the two extra points of hypergraph_hull's groundset.
std::pair<int, int> hypergraph_poles(const Hypergraph3& h);

/// Exhaustive half-space search in an abstract space: the first H (in
/// binary-counting order over the free points) with a ⊆ H, b ∩ H = ∅ and
/// both H and its complement fixed by the hull. nullopt when none exists
/// or a and b intersect. Refuses groundsets beyond cap.
std::optional<VertexSet> generic_separable(const HullOracle& oracle, const VertexSet& a,
                                           const VertexSet& b, int cap = kGenericSeparableCap);

/// Brute-force proper 2-colorability: some bipartition of the vertices
/// leaves no edge monochromatic. Refuses vertex counts beyond cap.
bool two_colorable(const Hypergraph3& h, int cap = kGenericSeparableCap);

/// Least d such that every v ∈ h(X) already lies in h(Y) for some Y ⊆ X
/// with |Y| <= d. Enumerates all subsets; refuses groundsets beyond cap.
int caratheodory_number(const HullOracle& oracle, int cap = kCaratheodoryCap);

}  // namespace monosep

#endif  // MONOSEP_ABSTRACT_HPP_
