#ifndef MONOSEP_TEST_SUPPORT_HPP_
#define MONOSEP_TEST_SUPPORT_HPP_

#include <initializer_list>
#include <utility>
#include <vector>

#include "monosep/graph.hpp"

namespace monosep::test {

inline Graph make_graph(int n, std::initializer_list<std::pair<int, int>> edges) {
    return Graph::from_edges(n, std::vector<std::pair<int, int>>(edges));
}

inline Graph path_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return Graph::from_edges(n, edges);
}

inline Graph cycle_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
    return Graph::from_edges(n, edges);
}

inline Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    }
    return Graph::from_edges(n, edges);
}

// K2 on {0,1} joined to the independent set {2,3,4}: every free pair is
// forbidden for A={0}, B={1}, and the class graph is a triangle.
inline Graph k2_join_independent3() {
    return make_graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
}

// 0 and 1 joined to the triangle-ish {2,3} plus a pendant-side vertex 4 on
// {2,3}; A={0}, B={1} separates with H={0}.
inline Graph k2_join_clique_tail() {
    return make_graph(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}});
}

// Saturated instance for A={0}, B={1} whose only obstruction is a forbidden
// pair inside one equivalence class. N(A∪B) = {2,3,4,5} misses only the
// edge 2-5; the outside vertices 6, 7, 8 attach to the cliques {2,3},
// {3,4}, {4,5} and chain everything into a single class containing the
// forbidden pair {2,5}. The attachment cliques overlap pairwise-adjacent
// sets, so no cross-component closure reaches 0 or 1 together with a
// shared attachment vertex, and one presaturation round is a fixpoint.
inline Graph in_class_conflict_graph() {
    return make_graph(9, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 2}, {1, 3},
                          {1, 4}, {1, 5}, {2, 3}, {3, 4}, {4, 5}, {2, 4}, {3, 5},
                          {6, 2}, {6, 3}, {7, 3}, {7, 4}, {8, 4}, {8, 5}});
}

// Two non-adjacent "prongs" 1, 2 around A={0}, two more (3, 4) around
// B={6}, all meeting in the middle vertex 5. The unique minimal forbidden
// set of A, B is the 4-element union {1,2} ∪ {3,4}.
inline Graph double_star_bridge() {
    return make_graph(7, {{0, 1}, {0, 2}, {1, 5}, {2, 5}, {3, 5}, {4, 5}, {3, 6}, {4, 6}});
}

}  // namespace monosep::test

#endif  // MONOSEP_TEST_SUPPORT_HPP_
