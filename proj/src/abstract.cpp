#include "monosep/abstract.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "monosep/errors.hpp"
#include "monosep/monophonic.hpp"

namespace monosep {

namespace {

VertexSet from_mask(int n, uint64_t mask) {
    VertexSet s(n);
    for (int v = 0; v < n; ++v) {
        if ((mask >> v) & 1) s.insert(v);
    }
    return s;
}

// Self-contained deterministic generator (splitmix64) so validation
// sampling is reproducible everywhere.
struct Mix64 {
    uint64_t state;
    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
};

}  // namespace

OracleCheck validate_oracle(const HullOracle& oracle, long long sample_budget) {
    const int n = oracle.groundset;
    auto describe = [](const char* law, const VertexSet& x) {
        std::ostringstream out;
        out << law << " violated on X={";
        bool first = true;
        for (int v : x) {
            out << (first ? "" : ",") << v;
            first = false;
        }
        out << "}";
        return out.str();
    };

    auto check_subset = [&](const VertexSet& x) -> OracleCheck {
        VertexSet hx = oracle.hull(x);
        if (!x.is_subset_of(hx)) return {false, describe("extensivity", x)};
        if (oracle.hull(hx) != hx) return {false, describe("idempotence", x)};
        for (int v = 0; v < n; ++v) {
            if (x.contains(v)) continue;
            if (!hx.is_subset_of(oracle.hull(x.with(v)))) {
                return {false, describe("monotonicity", x)};
            }
        }
        return {};
    };

    if (!oracle.hull(VertexSet(n)).empty()) return {false, "hull of the empty set is not empty"};

    if (n < 63 && (uint64_t{1} << n) <= uint64_t(sample_budget)) {
        for (uint64_t mask = 0; mask < (uint64_t{1} << n); ++mask) {
            OracleCheck c = check_subset(from_mask(n, mask));
            if (!c.ok) return c;
        }
        return {};
    }

    Mix64 rng{0x5eedULL};
    for (long long i = 0; i < sample_budget; ++i) {
        VertexSet x(n);
        for (int v = 0; v < n; ++v) {
            if (rng.next() & 1) x.insert(v);
        }
        OracleCheck c = check_subset(x);
        if (!c.ok) return c;
        // One random superset pair per sample for direct monotonicity.
        VertexSet y = x;
        for (int v = 0; v < n; ++v) {
            if (rng.next() & 1) y.insert(v);
        }
        if (!oracle.hull(x).is_subset_of(oracle.hull(y))) {
            return {false, describe("monotonicity", x)};
        }
    }
    return {};
}

HullOracle monophonic_oracle(const Graph& g) {
    return {g.vertex_count(), [g](const VertexSet& x) {
                VertexSet out(g.vertex_count());
                for (const VertexSet& comp : components(g, g.empty_set())) {
                    VertexSet part = x & comp;
                    if (!part.empty()) out |= hull(g, part);
                }
                return out;
            }};
}

Hypergraph3 Hypergraph3::make(int n, std::vector<std::array<int, 3>> edges) {
    if (n < 3) throw ContractError("hypergraph needs at least 3 vertices");
    if (edges.empty()) throw ContractError("hypergraph edge list must be non-empty");
    for (auto& e : edges) {
        std::sort(e.begin(), e.end());
        if (e[0] == e[1] || e[1] == e[2]) throw ContractError("hyperedge members must be distinct");
        if (e[0] < 0 || e[2] >= n) throw ContractError("hyperedge member out of range");
    }
    return Hypergraph3{n, std::move(edges)};
}

Hypergraph3 parse_hypergraph(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    auto next_line = [&]() -> bool {
        while (std::getline(in, line)) {
            ++line_no;
            if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
        }
        ++line_no;
        return false;
    };
    auto ints = [&](size_t expected) {
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
    };

    if (!next_line()) throw ParseError(1, "missing header line \"n m\"");
    auto header = ints(2);
    long long n = header[0], m = header[1];
    if (n < 0 || m <= 0) throw ParseError(line_no, "need a positive edge count");

    std::vector<std::array<int, 3>> edges;
    for (long long i = 0; i < m; ++i) {
        if (!next_line()) throw ParseError(line_no, "unexpected end of input: expected an edge line");
        auto e = ints(3);
        for (long long v : e) {
            if (v < 0 || v >= n) throw ParseError(line_no, "vertex id out of range");
        }
        if (e[0] == e[1] || e[0] == e[2] || e[1] == e[2]) {
            throw ParseError(line_no, "hyperedge members must be distinct");
        }
        edges.push_back({int(e[0]), int(e[1]), int(e[2])});
    }
    if (next_line()) throw ParseError(line_no, "unexpected trailing content");
    return Hypergraph3::make(int(n), std::move(edges));
}

std::pair<int, int> hypergraph_poles(const Hypergraph3& h) { return {h.n, h.n + 1}; }

HullOracle hypergraph_hull(const Hypergraph3& h) {
    auto [a, b] = hypergraph_poles(h);
    return {h.n + 2, [h, a = a, b = b](const VertexSet& x) {
                for (const auto& e : h.edges) {
                    if (x.contains(e[0]) && x.contains(e[1]) && x.contains(e[2])) {
                        return x.with(a).with(b);
                    }
                }
                return x;
            }};
}

std::optional<VertexSet> generic_separable(const HullOracle& oracle, const VertexSet& a,
                                           const VertexSet& b, int cap) {
    const int n = oracle.groundset;
    if (n > cap) {
        throw CapExceeded("generic separation search refuses groundsets larger than " +
                          std::to_string(cap));
    }
    if (a.universe() != n || b.universe() != n) throw ContractError("set universe mismatch");
    if (a.intersects(b)) return std::nullopt;

    std::vector<int> free = (a | b).complement().to_vector();
    for (uint64_t mask = 0; mask < (uint64_t{1} << free.size()); ++mask) {
        VertexSet h = a;
        for (size_t j = 0; j < free.size(); ++j) {
            if ((mask >> j) & 1) h.insert(free[j]);
        }
        VertexSet co = h.complement();
        if (oracle.hull(h) == h && oracle.hull(co) == co) return h;
    }
    return std::nullopt;
}

bool two_colorable(const Hypergraph3& h, int cap) {
    if (h.n > cap) {
        throw CapExceeded("2-coloring search refuses hypergraphs larger than " + std::to_string(cap));
    }
    // With a non-empty edge set the one-sided bipartition is never proper,
    // so scanning all masks also enforces non-triviality.
    for (uint64_t mask = 0; mask < (uint64_t{1} << h.n); ++mask) {
        bool proper = true;
        for (const auto& e : h.edges) {
            int ones = int((mask >> e[0]) & 1) + int((mask >> e[1]) & 1) + int((mask >> e[2]) & 1);
            if (ones == 0 || ones == 3) {
                proper = false;
                break;
            }
        }
        if (proper) return true;
    }
    return false;
}

int caratheodory_number(const HullOracle& oracle, int cap) {
    const int n = oracle.groundset;
    if (n > cap) {
        throw CapExceeded("Caratheodory computation refuses groundsets larger than " +
                          std::to_string(cap));
    }
    if (n == 0) return 0;
    const uint64_t full = uint64_t{1} << n;

    std::vector<uint64_t> hull_of(full);
    for (uint64_t mask = 0; mask < full; ++mask) {
        uint64_t h = 0;
        for (int v : oracle.hull(from_mask(n, mask))) h |= uint64_t{1} << v;
        hull_of[mask] = h;
    }

    int d = 0;
    // best[x] per v: the least |Y| over Y ⊆ X with v ∈ h(Y), by subset DP.
    std::vector<int> best(full);
    for (int v = 0; v < n; ++v) {
        const uint64_t bit = uint64_t{1} << v;
        for (uint64_t mask = 0; mask < full; ++mask) {
            int value = (hull_of[mask] & bit) ? __builtin_popcountll(mask) : n + 1;
            for (int i = 0; i < n; ++i) {
                if (mask & (uint64_t{1} << i)) {
                    value = std::min(value, best[mask ^ (uint64_t{1} << i)]);
                }
            }
            best[mask] = value;
            if ((hull_of[mask] & bit) && value > d) d = value;
        }
    }
    return d;
}

}  // namespace monosep
