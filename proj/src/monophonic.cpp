#include "monosep/monophonic.hpp"

#include <algorithm>
#include <deque>

#include "monosep/errors.hpp"

namespace monosep {

namespace {

void extend_induced_paths(const Graph& g, int target, std::vector<int>& path, VertexSet& on_path,
                          VertexSet& blocked, VertexSet& interval) {
    int last = path.back();
    if (last == target) {
        for (int v : path) interval.insert(v);
        return;
    }
    for (int w : g.neighbors(last)) {
        // w may extend the path only if it is adjacent to no path vertex
        // except the last one; blocked tracks exactly those vertices.
        if (on_path.contains(w) || blocked.contains(w)) continue;
        VertexSet newly_blocked = g.neighbor_set(last) - blocked;
        newly_blocked.erase(w);
        path.push_back(w);
        on_path.insert(w);
        blocked |= newly_blocked;
        extend_induced_paths(g, target, path, on_path, blocked, interval);
        blocked -= newly_blocked;
        on_path.erase(w);
        path.pop_back();
    }
}

}  // namespace

VertexSet interval_oracle(const Graph& g, int u, int v, int cap) {
    if (g.vertex_count() > cap) {
        throw CapExceeded("interval oracle refuses graphs with more than " + std::to_string(cap) +
                          " vertices");
    }
    if (u < 0 || u >= g.vertex_count() || v < 0 || v >= g.vertex_count()) {
        throw ContractError("interval endpoint out of range");
    }
    VertexSet interval(g.vertex_count());
    if (u == v) {
        interval.insert(u);
        return interval;
    }
    std::vector<int> path{u};
    VertexSet on_path(g.vertex_count());
    on_path.insert(u);
    VertexSet blocked(g.vertex_count());
    extend_induced_paths(g, v, path, on_path, blocked, interval);
    return interval;
}

bool is_convex(const Graph& g, const VertexSet& c) {
    for (const VertexSet& comp : components(g, c)) {
        if (!is_clique(g, frontier(g, c, comp))) return false;
    }
    return true;
}

namespace {

// Shortest u-v path restricted to the vertices of `allowed`, smallest-id
// backtracking. Both endpoints must be in `allowed` and connected within it.
std::vector<int> restricted_shortest_path(const Graph& g, const VertexSet& allowed, int u, int v) {
    std::vector<int> dist(g.vertex_count(), -1);
    std::deque<int> queue{u};
    dist[u] = 0;
    while (!queue.empty() && dist[v] < 0) {
        int x = queue.front();
        queue.pop_front();
        for (int y : g.neighbors(x)) {
            if (dist[y] < 0 && allowed.contains(y)) {
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            }
        }
    }
    if (dist[v] < 0) throw InternalError("frontier pair not connected through component");
    std::vector<int> path{v};
    int cur = v;
    while (cur != u) {
        for (int y : g.neighbors(cur)) {
            if (allowed.contains(y) && dist[y] == dist[cur] - 1) {
                path.push_back(y);
                cur = y;
                break;
            }
        }
    }
    std::reverse(path.begin(), path.end());
    return path;
}

}  // namespace

VertexSet hull(const Graph& g, const VertexSet& x, HullTrace* trace) {
    if (x.universe() != g.vertex_count()) throw ContractError("hull: set universe mismatch");
    if (!in_one_component(g, x)) {
        throw ContractError("hull input spans several connected components");
    }
    VertexSet closed = x;
    for (;;) {
        bool repaired = false;
        for (const VertexSet& comp : components(g, closed)) {
            VertexSet front = frontier(g, closed, comp);
            // Lexicographically smallest non-adjacent frontier pair, if any.
            int pu = -1, pv = -1;
            for (int a : front) {
                for (int b : front) {
                    if (b <= a) continue;
                    if (!g.adjacent(a, b)) {
                        pu = a;
                        pv = b;
                        break;
                    }
                }
                if (pu >= 0) break;
            }
            if (pu < 0) continue;

            VertexSet allowed = comp;
            allowed.insert(pu);
            allowed.insert(pv);
            std::vector<int> path = restricted_shortest_path(g, allowed, pu, pv);
            VertexSet interior(g.vertex_count());
            for (size_t i = 1; i + 1 < path.size(); ++i) interior.insert(path[i]);
            if (interior.empty()) throw InternalError("hull repair added no vertex");
            closed |= interior;
            if (trace) trace->steps.push_back({comp, {pu, pv}, interior});
            repaired = true;
            break;
        }
        if (!repaired) return closed;
    }
}

VertexSet hull_oracle(const Graph& g, const VertexSet& x, int cap) {
    if (g.vertex_count() > cap) {
        throw CapExceeded("hull oracle refuses graphs with more than " + std::to_string(cap) +
                          " vertices");
    }
    VertexSet cur = x;
    for (;;) {
        VertexSet next = cur;
        for (int u : cur) {
            for (int v : cur) {
                if (v < u) continue;
                next |= interval_oracle(g, u, v, cap);
            }
        }
        if (next == cur) return cur;
        cur = next;
    }
}

}  // namespace monosep
