#include "monosep/random_instances.hpp"

#include <algorithm>
#include <set>

#include "monosep/errors.hpp"

namespace monosep {

Rng Rng::for_instance(uint64_t seed, uint64_t index) {
    // Decorrelate (seed, index) pairs by running the pair through one
    // mixing round each.
    Rng mixer(seed ^ (0x9e3779b97f4a7c15ULL * (index + 1)));
    mixer.next();
    return mixer;
}

uint64_t Rng::next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

int Rng::uniform_int(int lo, int hi) {
    if (lo > hi) throw ContractError("uniform_int: empty range");
    uint64_t span = uint64_t(hi) - uint64_t(lo) + 1;
    uint64_t limit = ~uint64_t{0} - (~uint64_t{0} % span);
    for (;;) {
        uint64_t r = next();
        if (r < limit) return lo + int(r % span);
    }
}

double Rng::uniform_real() { return double(next() >> 11) * 0x1.0p-53; }

Graph random_connected_graph(Rng& rng, int n, double p, int max_attempts) {
    if (n < 1) throw ContractError("random graph needs at least one vertex");
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < n; ++u) {
            for (int v = u + 1; v < n; ++v) {
                if (rng.uniform_real() < p) edges.emplace_back(u, v);
            }
        }
        Graph g = Graph::from_edges(n, edges);
        if (components(g, g.empty_set()).size() == 1) return g;
    }
    throw ContractError("could not sample a connected graph; raise p or n");
}

VertexSet random_subset(Rng& rng, int n, int size) {
    if (size < 0 || size > n) throw ContractError("subset size out of range");
    // Partial Fisher-Yates over 0..n-1.
    std::vector<int> ids(n);
    for (int i = 0; i < n; ++i) ids[i] = i;
    VertexSet out(n);
    for (int i = 0; i < size; ++i) {
        int j = rng.uniform_int(i, n - 1);
        std::swap(ids[i], ids[j]);
        out.insert(ids[i]);
    }
    return out;
}

std::pair<VertexSet, VertexSet> random_disjoint_sets(Rng& rng, int n, int size_lo, int size_hi) {
    int size_a = rng.uniform_int(size_lo, size_hi);
    int size_b = rng.uniform_int(size_lo, size_hi);
    if (size_a + size_b > n) throw ContractError("graph too small for the requested set sizes");
    VertexSet both = random_subset(rng, n, size_a + size_b);
    std::vector<int> ids = both.to_vector();
    // Which of the drawn ids go to side A is itself a random choice, so A
    // is not biased toward small ids.
    VertexSet a(n), b(n);
    for (int i = 0; i < size_a; ++i) {
        int j = rng.uniform_int(i, int(ids.size()) - 1);
        std::swap(ids[i], ids[j]);
        a.insert(ids[i]);
    }
    for (size_t i = size_a; i < ids.size(); ++i) b.insert(ids[i]);
    return {a, b};
}

Hypergraph3 random_hypergraph3(Rng& rng, int n, int edge_count) {
    if (n < 3) throw ContractError("3-uniform hypergraph needs at least 3 vertices");
    long long max_edges = (long long)n * (n - 1) * (n - 2) / 6;
    if (edge_count < 1 || edge_count > max_edges) throw ContractError("edge count out of range");
    std::set<std::array<int, 3>> edges;
    while (int(edges.size()) < edge_count) {
        std::array<int, 3> e;
        e[0] = rng.uniform_int(0, n - 1);
        do {
            e[1] = rng.uniform_int(0, n - 1);
        } while (e[1] == e[0]);
        do {
            e[2] = rng.uniform_int(0, n - 1);
        } while (e[2] == e[0] || e[2] == e[1]);
        std::sort(e.begin(), e.end());
        edges.insert(e);
    }
    return Hypergraph3::make(n, std::vector<std::array<int, 3>>(edges.begin(), edges.end()));
}

}  // namespace monosep
