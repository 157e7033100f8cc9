#ifndef MONOSEP_GRAPH_HPP_
#define MONOSEP_GRAPH_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "monosep/vertex_set.hpp"

namespace monosep {

/// Immutable simple undirected graph on vertices 0..n-1.
/// Adjacency is symmetric, loop-free and duplicate-free by construction.
class Graph {
public:
    Graph() = default;

    /// Builds a graph from an edge list. Duplicate edges (in either
    /// orientation) are merged silently; self-loops and out-of-range
    /// endpoints throw ContractError.
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }

    bool adjacent(int u, int v) const { return adj_bits_[u].contains(v); }

    /// Neighbors in ascending order.
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }

    const VertexSet& neighbor_set(int v) const { return adj_bits_[v]; }

    /// Edges as (u, v) with u < v, ordered lexicographically.
    std::vector<std::pair<int, int>> edges() const;

    VertexSet all_vertices() const { return VertexSet::full(n_); }
    VertexSet empty_set() const { return VertexSet(n_); }

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<std::vector<int>> adj_;
    std::vector<VertexSet> adj_bits_;
};

/// Parses the edge-list document format: a first line "n m" followed by m
/// lines "u v". Throws ParseError naming the offending 1-based line.
Graph parse_graph(std::string_view text);

/// Renders a graph back into the edge-list document format.
std::string format_graph(const Graph& g);

/// Open neighborhood N(X): vertices outside x adjacent to some member of x.
VertexSet neighborhood(const Graph& g, const VertexSet& x);

/// Closed neighborhood N[X] = N(X) ∪ X.
VertexSet closed_neighborhood(const Graph& g, const VertexSet& x);

/// Inner frontier F(A, B) = A ∩ N[B]. For disjoint a, b this is A ∩ N(B).
VertexSet frontier(const Graph& g, const VertexSet& a, const VertexSet& b);

/// Connected components of g - removed, ordered by smallest member.
std::vector<VertexSet> components(const Graph& g, const VertexSet& removed);

/// True when every member of x lies in one connected component of g
/// (vacuously true for |x| <= 1).
bool in_one_component(const Graph& g, const VertexSet& x);

/// A shortest path from some vertex of a to some vertex of b, as a vertex
/// sequence. Deterministic: multi-source BFS from a with smallest-id
/// tie-breaks (endpoint and every predecessor). Returns nullopt when no
/// path exists. Requires a, b non-empty and disjoint. The returned path is
/// checked to be chordless and of BFS length on every call.
std::optional<std::vector<int>> shortest_path_between_sets(const Graph& g, const VertexSet& a,
                                                           const VertexSet& b);

/// True iff every two distinct members of x are adjacent (vacuous for |x| <= 1).
bool is_clique(const Graph& g, const VertexSet& x);

struct TwoColoring {
    bool bipartite = false;
    /// Per-vertex color 0/1 when bipartite. BFS from the smallest unvisited
    /// id per component, root colored 0.
    std::vector<int> color;
    /// When not bipartite: an odd cycle as a vertex sequence (consecutive
    /// members adjacent, last adjacent to first), normalized to start at its
    /// smallest vertex and continue toward that vertex's smaller neighbor.
    std::vector<int> odd_cycle;
};

/// Proper 2-coloring of g, or an odd-cycle certificate.
TwoColoring two_color(const Graph& g);

}  // namespace monosep

#endif  // MONOSEP_GRAPH_HPP_
