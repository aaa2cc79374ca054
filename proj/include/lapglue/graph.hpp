#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "lapglue/error.hpp"

namespace lapglue {

struct Edge {
    int tail = 0;
    int head = 0;
    bool operator==(const Edge&) const = default;
};

// Finite simple oriented graph: the single source of truth for all matrices.
// Invariants: endpoint indices in range, no self-loops, no parallel edges
// (unordered endpoint pairs are unique).
class OrientedGraph {
public:
    OrientedGraph() = default;
    OrientedGraph(int n_vertices, std::vector<Edge> edges)
        : n_(n_vertices), edges_(std::move(edges)) {
        require(n_ >= 0, errc::index_out_of_range, "negative vertex count");
        std::set<std::pair<int, int>> seen;
        for (const Edge& e : edges_) {
            require(e.tail >= 0 && e.tail < n_ && e.head >= 0 && e.head < n_,
                    errc::index_out_of_range, "edge endpoint out of range");
            require(e.tail != e.head, errc::self_loop, "self-loop not allowed");
            auto key = std::minmax(e.tail, e.head);
            require(seen.insert(key).second, errc::parallel_edge, "parallel edge not allowed");
        }
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const Edge& edge(int i) const {
        require(i >= 0 && i < edge_count(), errc::index_out_of_range, "edge index out of range");
        return edges_[i];
    }
    const std::vector<Edge>& edges() const { return edges_; }

    bool adjacent(int u, int v) const {
        for (const Edge& e : edges_)
            if ((e.tail == u && e.head == v) || (e.tail == v && e.head == u)) return true;
        return false;
    }

    int degree(int v) const {
        int d = 0;
        for (const Edge& e : edges_) d += (e.tail == v) + (e.head == v);
        return d;
    }

    bool operator==(const OrientedGraph&) const = default;

private:
    int n_ = 0;
    std::vector<Edge> edges_;
};

inline OrientedGraph new_graph(int n_vertices, const std::vector<std::pair<int, int>>& edges) {
    std::vector<Edge> es;
    es.reserve(edges.size());
    for (auto [t, h] : edges) es.push_back({t, h});
    return OrientedGraph(n_vertices, std::move(es));
}

// Generators use the fixed low-index -> high-index orientation; all spectra
// are orientation-independent, so any fixed convention works.
inline OrientedGraph complete_graph(int n) {
    require(n >= 1, errc::too_small, "complete graph needs n >= 1");
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) es.push_back({i, j});
    return OrientedGraph(n, std::move(es));
}

inline OrientedGraph path_graph(int n) {
    require(n >= 1, errc::too_small, "path graph needs n >= 1");
    std::vector<Edge> es;
    for (int i = 0; i + 1 < n; ++i) es.push_back({i, i + 1});
    return OrientedGraph(n, std::move(es));
}

inline OrientedGraph cycle_graph(int n) {
    require(n >= 3, errc::too_small, "cycle graph needs n >= 3");
    std::vector<Edge> es;
    for (int i = 0; i + 1 < n; ++i) es.push_back({i, i + 1});
    es.push_back({0, n - 1});
    return OrientedGraph(n, std::move(es));
}

enum class ZetaTag { not_incident, same_endpoint_role, opposite_endpoint_role };

struct ZetaCondition {
    ZetaTag tag = ZetaTag::not_incident;
    int value = 0; // 0 / +1 / -1, matching the tag
};

namespace detail {
inline ZetaCondition zeta_of(const Edge& a, const Edge& b) {
    // Simple graphs share at most one vertex, so the trichotomy is unambiguous.
    int shared = -1;
    for (int v : {a.tail, a.head})
        if (v == b.tail || v == b.head) shared = v;
    if (shared < 0) return {ZetaTag::not_incident, 0};
    const bool a_starts = (a.tail == shared);
    const bool b_starts = (b.tail == shared);
    if (a_starts == b_starts) return {ZetaTag::same_endpoint_role, 1};
    return {ZetaTag::opposite_endpoint_role, -1};
}
} // namespace detail

inline ZetaCondition zeta(const OrientedGraph& g, int i, int j) {
    require(i != j, errc::same_edge, "zeta needs two distinct edges");
    return detail::zeta_of(g.edge(i), g.edge(j));
}

// Positional identification of two isomorphic directed subgraphs. The
// correspondence is always supplied explicitly; nothing is searched for.
struct InterfaceSpec {
    std::vector<int> vertices_1;
    std::vector<int> vertices_2;
    std::vector<int> edges_1;
    std::vector<int> edges_2;

    int vertex_count() const { return static_cast<int>(vertices_1.size()); }
    int edge_count() const { return static_cast<int>(edges_1.size()); }
};

struct BridgeSpec {
    std::vector<std::pair<int, int>> pairs; // (vertex in g1, vertex in g2)
    int count() const { return static_cast<int>(pairs.size()); }
};

struct GluedGraph {
    OrientedGraph graph;
    std::vector<int> vertex_map_1; // input vertex index -> output vertex index
    std::vector<int> vertex_map_2;
    std::vector<int> edge_map_1; // input edge index -> output edge index
    std::vector<int> edge_map_2;
    std::vector<int> bridge_edges; // output edge indices of bridges (bridge gluing only)
};

namespace detail {
inline void check_distinct(const std::vector<int>& idx, int limit, errc code, const char* what) {
    std::set<int> seen;
    for (int v : idx) {
        require(v >= 0 && v < limit, code, std::string(what) + " index out of range");
        require(seen.insert(v).second, code, std::string(what) + " index repeated");
    }
}

inline int position_of(const std::vector<int>& v, int x) {
    auto it = std::find(v.begin(), v.end(), x);
    return it == v.end() ? -1 : static_cast<int>(it - v.begin());
}
} // namespace detail

inline void validate_interface(const OrientedGraph& g1, const OrientedGraph& g2,
                               const InterfaceSpec& iface) {
    require(iface.vertices_1.size() == iface.vertices_2.size(), errc::invalid_interface,
            "interface vertex lists differ in length");
    require(iface.edges_1.size() == iface.edges_2.size(), errc::invalid_interface,
            "interface edge lists differ in length");
    detail::check_distinct(iface.vertices_1, g1.vertex_count(), errc::invalid_interface,
                           "interface vertex (side 1)");
    detail::check_distinct(iface.vertices_2, g2.vertex_count(), errc::invalid_interface,
                           "interface vertex (side 2)");
    detail::check_distinct(iface.edges_1, g1.edge_count(), errc::invalid_interface,
                           "interface edge (side 1)");
    detail::check_distinct(iface.edges_2, g2.edge_count(), errc::invalid_interface,
                           "interface edge (side 2)");

    // Positionally identified edges must connect positionally identified
    // vertices with matching orientation.
    for (int j = 0; j < iface.edge_count(); ++j) {
        const Edge& e1 = g1.edge(iface.edges_1[j]);
        const Edge& e2 = g2.edge(iface.edges_2[j]);
        const int t1 = detail::position_of(iface.vertices_1, e1.tail);
        const int h1 = detail::position_of(iface.vertices_1, e1.head);
        const int t2 = detail::position_of(iface.vertices_2, e2.tail);
        const int h2 = detail::position_of(iface.vertices_2, e2.head);
        require(t1 >= 0 && h1 >= 0 && t2 >= 0 && h2 >= 0, errc::invalid_interface,
                "interface edge endpoint not an interface vertex");
        require(t1 == t2 && h1 == h2, errc::invalid_interface,
                "interface edges disagree on endpoints or orientation");
    }

    // Closure: every edge running between two interface vertices must itself
    // belong to the interface, otherwise gluing would create a parallel edge.
    auto check_closure = [](const OrientedGraph& g, const std::vector<int>& verts,
                            const std::vector<int>& edges) {
        std::set<int> vs(verts.begin(), verts.end());
        std::set<int> es(edges.begin(), edges.end());
        for (int i = 0; i < g.edge_count(); ++i) {
            const Edge& e = g.edge(i);
            if (vs.count(e.tail) && vs.count(e.head))
                require(es.count(i) != 0, errc::invalid_interface,
                        "edge between interface vertices missing from interface (closure rule)");
        }
    };
    check_closure(g1, iface.vertices_1, iface.edges_1);
    check_closure(g2, iface.vertices_2, iface.edges_2);
}

// Interface gluing. Output layout is canonical: vertices are ordered as
// (g1 non-interface) ++ (interface, in spec order) ++ (g2 non-interface),
// edges as (g1 non-interface) ++ (interface, in spec order) ++ (g2 non-interface).
inline GluedGraph glue_interface(const OrientedGraph& g1, const OrientedGraph& g2,
                                 const InterfaceSpec& iface) {
    validate_interface(g1, g2, iface);
    const int n1 = g1.vertex_count(), n2 = g2.vertex_count();
    const int p1 = g1.edge_count(), p2 = g2.edge_count();
    const int q = iface.vertex_count(), r = iface.edge_count();

    GluedGraph out;
    out.vertex_map_1.assign(n1, -1);
    out.vertex_map_2.assign(n2, -1);
    out.edge_map_1.assign(p1, -1);
    out.edge_map_2.assign(p2, -1);

    std::vector<bool> iface_v1(n1, false), iface_v2(n2, false);
    for (int v : iface.vertices_1) iface_v1[v] = true;
    for (int v : iface.vertices_2) iface_v2[v] = true;

    int next = 0;
    for (int v = 0; v < n1; ++v)
        if (!iface_v1[v]) out.vertex_map_1[v] = next++;
    for (int j = 0; j < q; ++j) {
        out.vertex_map_1[iface.vertices_1[j]] = next;
        out.vertex_map_2[iface.vertices_2[j]] = next;
        ++next;
    }
    for (int v = 0; v < n2; ++v)
        if (!iface_v2[v]) out.vertex_map_2[v] = next++;

    std::vector<bool> iface_e1(p1, false), iface_e2(p2, false);
    for (int e : iface.edges_1) iface_e1[e] = true;
    for (int e : iface.edges_2) iface_e2[e] = true;

    std::vector<Edge> edges;
    int enext = 0;
    for (int e = 0; e < p1; ++e)
        if (!iface_e1[e]) {
            out.edge_map_1[e] = enext++;
            edges.push_back({out.vertex_map_1[g1.edge(e).tail], out.vertex_map_1[g1.edge(e).head]});
        }
    for (int j = 0; j < r; ++j) {
        out.edge_map_1[iface.edges_1[j]] = enext;
        out.edge_map_2[iface.edges_2[j]] = enext;
        const Edge& e = g1.edge(iface.edges_1[j]);
        edges.push_back({out.vertex_map_1[e.tail], out.vertex_map_1[e.head]});
        ++enext;
    }
    for (int e = 0; e < p2; ++e)
        if (!iface_e2[e]) {
            out.edge_map_2[e] = enext++;
            edges.push_back({out.vertex_map_2[g2.edge(e).tail], out.vertex_map_2[g2.edge(e).head]});
        }

    out.graph = OrientedGraph(n1 + n2 - q, std::move(edges));
    return out;
}

inline void validate_bridge(const OrientedGraph& g1, const OrientedGraph& g2,
                            const BridgeSpec& b) {
    require(!b.pairs.empty(), errc::invalid_bridge, "bridge spec must be non-empty");
    std::set<int> used1, used2;
    for (auto [v1, v2] : b.pairs) {
        require(v1 >= 0 && v1 < g1.vertex_count() && v2 >= 0 && v2 < g2.vertex_count(),
                errc::invalid_bridge, "bridge endpoint out of range");
        require(used1.insert(v1).second, errc::invalid_bridge,
                "vertex used by more than one bridge (side 1)");
        require(used2.insert(v2).second, errc::invalid_bridge,
                "vertex used by more than one bridge (side 2)");
    }
}

// Bridge gluing. Canonical layout: vertices (g1) ++ (g2), edges
// (g1 edges) ++ (bridge edges) ++ (g2 edges); bridge i is oriented
// from its g1 endpoint to its g2 endpoint.
inline GluedGraph glue_bridge(const OrientedGraph& g1, const OrientedGraph& g2,
                              const BridgeSpec& b) {
    validate_bridge(g1, g2, b);
    const int n1 = g1.vertex_count();
    const int p1 = g1.edge_count(), p2 = g2.edge_count();
    const int k = b.count();

    GluedGraph out;
    out.vertex_map_1.resize(n1);
    out.vertex_map_2.resize(g2.vertex_count());
    for (int v = 0; v < n1; ++v) out.vertex_map_1[v] = v;
    for (int v = 0; v < g2.vertex_count(); ++v) out.vertex_map_2[v] = n1 + v;

    std::vector<Edge> edges;
    edges.reserve(p1 + k + p2);
    out.edge_map_1.resize(p1);
    out.edge_map_2.resize(p2);
    for (int e = 0; e < p1; ++e) {
        out.edge_map_1[e] = e;
        edges.push_back(g1.edge(e));
    }
    for (int i = 0; i < k; ++i) {
        out.bridge_edges.push_back(p1 + i);
        edges.push_back({b.pairs[i].first, n1 + b.pairs[i].second});
    }
    for (int e = 0; e < p2; ++e) {
        out.edge_map_2[e] = p1 + k + e;
        edges.push_back({n1 + g2.edge(e).tail, n1 + g2.edge(e).head});
    }

    out.graph = OrientedGraph(n1 + g2.vertex_count(), std::move(edges));
    return out;
}

inline OrientedGraph flip_orientation(const OrientedGraph& g, const std::vector<int>& edge_set) {
    std::vector<Edge> edges(g.edges());
    std::set<int> flips;
    for (int i : edge_set) {
        require(i >= 0 && i < g.edge_count(), errc::index_out_of_range,
                "flip index out of range");
        flips.insert(i);
    }
    for (int i : flips) std::swap(edges[i].tail, edges[i].head);
    return OrientedGraph(g.vertex_count(), std::move(edges));
}

struct Components {
    int count = 0;
    std::vector<int> label; // component id per vertex
};

inline Components connected_components(const OrientedGraph& g) {
    const int n = g.vertex_count();
    std::vector<std::vector<int>> adj(n);
    for (const Edge& e : g.edges()) {
        adj[e.tail].push_back(e.head);
        adj[e.head].push_back(e.tail);
    }
    Components out;
    out.label.assign(n, -1);
    for (int s = 0; s < n; ++s) {
        if (out.label[s] >= 0) continue;
        std::vector<int> stack{s};
        out.label[s] = out.count;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : adj[v])
                if (out.label[w] < 0) {
                    out.label[w] = out.count;
                    stack.push_back(w);
                }
        }
        ++out.count;
    }
    return out;
}

inline int euler_characteristic(const OrientedGraph& g) {
    return g.vertex_count() - g.edge_count();
}

// Relabels vertices: perm[i] is the new index of old vertex i.
inline OrientedGraph permute_vertices(const OrientedGraph& g, const std::vector<int>& perm) {
    require(static_cast<int>(perm.size()) == g.vertex_count(), errc::index_out_of_range,
            "vertex permutation size mismatch");
    std::vector<Edge> edges;
    edges.reserve(g.edge_count());
    for (const Edge& e : g.edges()) edges.push_back({perm[e.tail], perm[e.head]});
    return OrientedGraph(g.vertex_count(), std::move(edges));
}

// Relabels edges: perm[i] is the new index of old edge i.
inline OrientedGraph permute_edges(const OrientedGraph& g, const std::vector<int>& perm) {
    require(static_cast<int>(perm.size()) == g.edge_count(), errc::index_out_of_range,
            "edge permutation size mismatch");
    std::vector<Edge> edges(g.edge_count());
    for (int i = 0; i < g.edge_count(); ++i) edges[perm[i]] = g.edge(i);
    return OrientedGraph(g.vertex_count(), std::move(edges));
}

struct CanonicalInterface {
    OrientedGraph g1;
    OrientedGraph g2;
    InterfaceSpec iface;
};

// Relabels both graphs into the layout the matrix-level gluing formulas
// assume: interface vertices are the last q of g1 and the first q of g2
// (in spec order), interface edges the last r of g1 and the first r of g2.
inline CanonicalInterface canonical_interface_layout(const OrientedGraph& g1,
                                                     const OrientedGraph& g2,
                                                     const InterfaceSpec& iface) {
    validate_interface(g1, g2, iface);
    const int n1 = g1.vertex_count(), n2 = g2.vertex_count();
    const int p1 = g1.edge_count(), p2 = g2.edge_count();
    const int q = iface.vertex_count(), r = iface.edge_count();

    std::vector<int> vperm1(n1, -1), vperm2(n2, -1);
    for (int j = 0; j < q; ++j) {
        vperm1[iface.vertices_1[j]] = n1 - q + j;
        vperm2[iface.vertices_2[j]] = j;
    }
    int next = 0;
    for (int v = 0; v < n1; ++v)
        if (vperm1[v] < 0) vperm1[v] = next++;
    next = q;
    for (int v = 0; v < n2; ++v)
        if (vperm2[v] < 0) vperm2[v] = next++;

    std::vector<int> eperm1(p1, -1), eperm2(p2, -1);
    for (int j = 0; j < r; ++j) {
        eperm1[iface.edges_1[j]] = p1 - r + j;
        eperm2[iface.edges_2[j]] = j;
    }
    next = 0;
    for (int e = 0; e < p1; ++e)
        if (eperm1[e] < 0) eperm1[e] = next++;
    next = r;
    for (int e = 0; e < p2; ++e)
        if (eperm2[e] < 0) eperm2[e] = next++;

    CanonicalInterface out;
    out.g1 = permute_edges(permute_vertices(g1, vperm1), eperm1);
    out.g2 = permute_edges(permute_vertices(g2, vperm2), eperm2);
    out.iface.vertices_1.resize(q);
    out.iface.vertices_2.resize(q);
    out.iface.edges_1.resize(r);
    out.iface.edges_2.resize(r);
    for (int j = 0; j < q; ++j) {
        out.iface.vertices_1[j] = n1 - q + j;
        out.iface.vertices_2[j] = j;
    }
    for (int j = 0; j < r; ++j) {
        out.iface.edges_1[j] = p1 - r + j;
        out.iface.edges_2[j] = j;
    }
    return out;
}

// True when the spec already sits in the canonical layout described above.
inline bool interface_is_canonical(const OrientedGraph& g1, const OrientedGraph& /*g2*/,
                                   const InterfaceSpec& iface) {
    const int n1 = g1.vertex_count();
    const int p1 = g1.edge_count();
    const int q = iface.vertex_count(), r = iface.edge_count();
    for (int j = 0; j < q; ++j)
        if (iface.vertices_1[j] != n1 - q + j || iface.vertices_2[j] != j) return false;
    for (int j = 0; j < r; ++j)
        if (iface.edges_1[j] != p1 - r + j || iface.edges_2[j] != j) return false;
    return true;
}

} // namespace lapglue
