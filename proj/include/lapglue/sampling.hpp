#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

#include "lapglue/graph.hpp"

namespace lapglue {

// Deterministic generator for randomized checks. Draws go through the raw
// 64-bit stream directly (not std distributions), so a seed reproduces the
// same instances on every standard library.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ULL) {}

    std::uint64_t next() {
        // splitmix64
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    int uniform_int(int lo, int hi) { // inclusive
        return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    double uniform_real(double lo, double hi) {
        const double u = static_cast<double>(next() >> 11) * 0x1.0p-53;
        return lo + u * (hi - lo);
    }

    bool chance(double p) { return uniform_real(0.0, 1.0) < p; }

    std::vector<int> pick_distinct(int k, int n) {
        std::vector<int> all(n);
        std::iota(all.begin(), all.end(), 0);
        for (int i = 0; i < k; ++i) std::swap(all[i], all[uniform_int(i, n - 1)]);
        all.resize(k);
        return all;
    }

private:
    std::uint64_t state_;
};

// Random simple oriented graph: each vertex pair becomes an edge with
// probability edge_prob, orientation uniform.
inline OrientedGraph random_graph(Sampler& rng, int n_vertices, double edge_prob = 0.5) {
    std::vector<Edge> edges;
    for (int i = 0; i < n_vertices; ++i)
        for (int j = i + 1; j < n_vertices; ++j)
            if (rng.chance(edge_prob)) edges.push_back(rng.chance(0.5) ? Edge{i, j} : Edge{j, i});
    return OrientedGraph(n_vertices, std::move(edges));
}

struct InterfaceInstance {
    OrientedGraph g1;
    OrientedGraph g2;
    InterfaceSpec iface;
};

// Random valid interface instance. The second graph is rebuilt so its induced
// subgraph on the chosen interface vertices mirrors the first graph's,
// including orientations, which makes the spec valid by construction.
inline InterfaceInstance random_interface_instance(Sampler& rng, int max_side, int max_iface,
                                                   bool edges_allowed = true) {
    const int n1 = rng.uniform_int(1, max_side);
    const int n2 = rng.uniform_int(1, max_side);
    const int q = rng.uniform_int(0, std::min({n1, n2, max_iface}));

    InterfaceInstance out;
    out.g1 = random_graph(rng, n1);
    out.iface.vertices_1 = rng.pick_distinct(q, n1);
    out.iface.vertices_2 = rng.pick_distinct(q, n2);

    auto pos2 = [&](int pos) { return out.iface.vertices_2[pos]; };
    std::vector<int> pos_in_1(n1, -1);
    for (int j = 0; j < q; ++j) pos_in_1[out.iface.vertices_1[j]] = j;

    // Start from a random side-2 graph, then overwrite the interface region.
    std::vector<Edge> e2;
    std::vector<bool> iface_v2(n2, false);
    for (int v : out.iface.vertices_2) iface_v2[v] = true;
    for (int i = 0; i < n2; ++i)
        for (int j = i + 1; j < n2; ++j) {
            if (iface_v2[i] && iface_v2[j]) continue; // interface region added below
            if (rng.chance(0.5)) e2.push_back(rng.chance(0.5) ? Edge{i, j} : Edge{j, i});
        }

    for (int e = 0; e < out.g1.edge_count(); ++e) {
        const Edge& ed = out.g1.edge(e);
        const int pt = pos_in_1[ed.tail], ph = pos_in_1[ed.head];
        if (pt < 0 || ph < 0) continue; // not an interface edge
        if (!edges_allowed) continue;   // becomes invalid below; caller asked for r = 0
        out.iface.edges_1.push_back(e);
        out.iface.edges_2.push_back(static_cast<int>(e2.size()));
        e2.push_back({pos2(pt), pos2(ph)});
    }
    if (!edges_allowed) {
        // Drop side-1 interface edges too, so the interface is vertex-only.
        std::vector<Edge> e1;
        for (int e = 0; e < out.g1.edge_count(); ++e) {
            const Edge& ed = out.g1.edge(e);
            if (pos_in_1[ed.tail] >= 0 && pos_in_1[ed.head] >= 0) continue;
            e1.push_back(ed);
        }
        out.g1 = OrientedGraph(n1, std::move(e1));
    }

    out.g2 = OrientedGraph(n2, std::move(e2));
    return out;
}

struct BridgeInstance {
    OrientedGraph g1;
    OrientedGraph g2;
    BridgeSpec bridge;
};

inline BridgeInstance random_bridge_instance(Sampler& rng, int max_side, int max_bridges) {
    const int n1 = rng.uniform_int(1, max_side);
    const int n2 = rng.uniform_int(1, max_side);
    const int k = rng.uniform_int(1, std::min({n1, n2, max_bridges}));

    BridgeInstance out;
    out.g1 = random_graph(rng, n1);
    out.g2 = random_graph(rng, n2);
    const std::vector<int> v1 = rng.pick_distinct(k, n1);
    const std::vector<int> v2 = rng.pick_distinct(k, n2);
    for (int i = 0; i < k; ++i) out.bridge.pairs.emplace_back(v1[i], v2[i]);
    return out;
}

} // namespace lapglue
