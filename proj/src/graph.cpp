#include "monosep/graph.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <sstream>

#include "monosep/errors.hpp"

namespace monosep {

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0) throw ContractError("vertex count must be non-negative");
    Graph g;
    g.n_ = n;
    g.adj_bits_.assign(n, VertexSet(n));
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n) throw ContractError("edge endpoint out of range");
        if (u == v) throw ContractError("self-loop");
        g.adj_bits_[u].insert(v);
        g.adj_bits_[v].insert(u);
    }
    g.adj_.resize(n);
    for (int v = 0; v < n; ++v) {
        g.adj_[v] = g.adj_bits_[v].to_vector();
        g.m_ += int(g.adj_[v].size());
    }
    g.m_ /= 2;
    return g;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u) {
        for (int v : adj_[u]) {
            if (u < v) out.emplace_back(u, v);
        }
    }
    return out;
}

namespace {

std::vector<long long> parse_ints(const std::string& line, int line_no, size_t expected) {
    std::vector<long long> out;
    const char* p = line.data();
    const char* end = p + line.size();
    while (p != end) {
        if (*p == ' ' || *p == '\t' || *p == '\r') {
            ++p;
            continue;
        }
        long long value = 0;
        auto [next, ec] = std::from_chars(p, end, value);
        if (ec != std::errc{} || next == p) throw ParseError(line_no, "expected an integer");
        out.push_back(value);
        p = next;
    }
    if (out.size() != expected) {
        throw ParseError(line_no, "expected " + std::to_string(expected) + " integers, got " +
                                      std::to_string(out.size()));
    }
    return out;
}

}  // namespace

Graph parse_graph(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    long long n = -1, m = -1;
    auto next_line = [&]() -> bool {
        while (std::getline(in, line)) {
            ++line_no;
            if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
        }
        ++line_no;
        return false;
    };

    if (!next_line()) throw ParseError(1, "missing header line \"n m\"");
    auto header = parse_ints(line, line_no, 2);
    n = header[0];
    m = header[1];
    if (n < 0 || m < 0) throw ParseError(line_no, "negative vertex or edge count");

    std::vector<std::pair<int, int>> edges;
    edges.reserve(size_t(m));
    for (long long i = 0; i < m; ++i) {
        if (!next_line()) throw ParseError(line_no, "unexpected end of input: expected an edge line");
        auto e = parse_ints(line, line_no, 2);
        if (e[0] < 0 || e[0] >= n || e[1] < 0 || e[1] >= n) {
            throw ParseError(line_no, "vertex id out of range");
        }
        if (e[0] == e[1]) throw ParseError(line_no, "self-loop at vertex " + std::to_string(e[0]));
        edges.emplace_back(int(e[0]), int(e[1]));
    }
    if (next_line()) throw ParseError(line_no, "unexpected trailing content");
    return Graph::from_edges(int(n), edges);
}

std::string format_graph(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

VertexSet neighborhood(const Graph& g, const VertexSet& x) {
    VertexSet out(g.vertex_count());
    for (int v : x) out |= g.neighbor_set(v);
    out -= x;
    return out;
}

VertexSet closed_neighborhood(const Graph& g, const VertexSet& x) {
    VertexSet out = x;
    for (int v : x) out |= g.neighbor_set(v);
    return out;
}

VertexSet frontier(const Graph& g, const VertexSet& a, const VertexSet& b) {
    return a & closed_neighborhood(g, b);
}

std::vector<VertexSet> components(const Graph& g, const VertexSet& removed) {
    const int n = g.vertex_count();
    std::vector<VertexSet> out;
    std::vector<char> seen(n, 0);
    for (int s = 0; s < n; ++s) {
        if (seen[s] || removed.contains(s)) continue;
        VertexSet comp(n);
        std::deque<int> queue{s};
        seen[s] = 1;
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            comp.insert(v);
            for (int u : g.neighbors(v)) {
                if (!seen[u] && !removed.contains(u)) {
                    seen[u] = 1;
                    queue.push_back(u);
                }
            }
        }
        out.push_back(std::move(comp));
    }
    return out;
}

bool in_one_component(const Graph& g, const VertexSet& x) {
    int start = x.first();
    if (start < 0) return true;
    VertexSet reached(g.vertex_count());
    std::deque<int> queue{start};
    reached.insert(start);
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int u : g.neighbors(v)) {
            if (!reached.contains(u)) {
                reached.insert(u);
                queue.push_back(u);
            }
        }
    }
    return x.is_subset_of(reached);
}

std::optional<std::vector<int>> shortest_path_between_sets(const Graph& g, const VertexSet& a,
                                                           const VertexSet& b) {
    if (a.empty() || b.empty()) throw ContractError("shortest path endpoints must be non-empty");
    if (a.intersects(b)) throw ContractError("shortest path endpoint sets must be disjoint");
    const int n = g.vertex_count();
    std::vector<int> dist(n, -1);
    std::deque<int> queue;
    for (int v : a) {
        dist[v] = 0;
        queue.push_back(v);
    }
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int u : g.neighbors(v)) {
            if (dist[u] < 0) {
                dist[u] = dist[v] + 1;
                queue.push_back(u);
            }
        }
    }

    int target = -1;
    for (int v : b) {
        if (dist[v] < 0) continue;
        if (target < 0 || dist[v] < dist[target]) target = v;
    }
    if (target < 0) return std::nullopt;

    // Walk back choosing the smallest-id predecessor at each step.
    std::vector<int> path{target};
    int cur = target;
    while (dist[cur] > 0) {
        int prev = -1;
        for (int u : g.neighbors(cur)) {
            if (dist[u] == dist[cur] - 1) {
                prev = u;
                break;
            }
        }
        if (prev < 0) throw InternalError("BFS backtrack found no predecessor");
        path.push_back(prev);
        cur = prev;
    }
    std::reverse(path.begin(), path.end());

    if (int(path.size()) != dist[target] + 1) throw InternalError("path length differs from BFS distance");
    for (size_t i = 0; i < path.size(); ++i) {
        for (size_t j = i + 2; j < path.size(); ++j) {
            if (g.adjacent(path[i], path[j])) throw InternalError("shortest path has a chord");
        }
    }
    return path;
}

bool is_clique(const Graph& g, const VertexSet& x) {
    for (int v : x) {
        if (!x.without(v).is_subset_of(g.neighbor_set(v))) return false;
    }
    return true;
}

namespace {

// Lift the endpoints of a conflict edge to their lowest common BFS-tree
// ancestor; the two tree paths plus the edge close an odd cycle.
std::vector<int> odd_cycle_from_conflict(int u, int v, const std::vector<int>& parent,
                                         const std::vector<int>& depth) {
    std::vector<int> left{u}, right{v};
    int x = u, y = v;
    while (depth[x] > depth[y]) left.push_back(x = parent[x]);
    while (depth[y] > depth[x]) right.push_back(y = parent[y]);
    while (x != y) {
        left.push_back(x = parent[x]);
        right.push_back(y = parent[y]);
    }
    // left ends at the common ancestor; append the right branch reversed,
    // dropping its copy of the ancestor.
    std::vector<int> cycle = left;
    for (size_t i = right.size() - 1; i-- > 0;) cycle.push_back(right[i]);
    return cycle;
}

// Rotate/reflect so the cycle starts at its smallest vertex and proceeds
// toward that vertex's smaller neighbor.
std::vector<int> normalize_cycle(const std::vector<int>& cycle) {
    const size_t k = cycle.size();
    size_t at = std::min_element(cycle.begin(), cycle.end()) - cycle.begin();
    int fwd = cycle[(at + 1) % k];
    int bwd = cycle[(at + k - 1) % k];
    std::vector<int> out;
    out.reserve(k);
    if (fwd <= bwd) {
        for (size_t i = 0; i < k; ++i) out.push_back(cycle[(at + i) % k]);
    } else {
        for (size_t i = 0; i < k; ++i) out.push_back(cycle[(at + k - i) % k]);
    }
    return out;
}

}  // namespace

TwoColoring two_color(const Graph& g) {
    const int n = g.vertex_count();
    TwoColoring result;
    result.color.assign(n, -1);
    std::vector<int> parent(n, -1), depth(n, 0);
    for (int root = 0; root < n; ++root) {
        if (result.color[root] >= 0) continue;
        result.color[root] = 0;
        std::deque<int> queue{root};
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (int u : g.neighbors(v)) {
                if (result.color[u] < 0) {
                    result.color[u] = 1 - result.color[v];
                    parent[u] = v;
                    depth[u] = depth[v] + 1;
                    queue.push_back(u);
                } else if (result.color[u] == result.color[v]) {
                    result.bipartite = false;
                    result.odd_cycle = normalize_cycle(odd_cycle_from_conflict(v, u, parent, depth));
                    if (result.odd_cycle.size() % 2 == 0) throw InternalError("even odd-cycle witness");
                    for (size_t i = 0; i < result.odd_cycle.size(); ++i) {
                        int x = result.odd_cycle[i];
                        int y = result.odd_cycle[(i + 1) % result.odd_cycle.size()];
                        if (!g.adjacent(x, y)) throw InternalError("odd-cycle witness not a cycle");
                    }
                    result.color.clear();
                    return result;
                }
            }
        }
    }
    result.bipartite = true;
    for (auto [u, v] : g.edges()) {
        if (result.color[u] == result.color[v]) throw InternalError("improper 2-coloring");
    }
    return result;
}

}  // namespace monosep
