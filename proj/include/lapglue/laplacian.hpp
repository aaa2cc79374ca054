#pragma once

#include <set>
#include <string>
#include <vector>

#include "lapglue/graph.hpp"
#include "lapglue/matrix.hpp"

namespace lapglue {

// |V| x |E| incidence matrix: +1 where an edge ends, -1 where it starts.
inline IntMatrix incidence_matrix(const OrientedGraph& g) {
    IntMatrix m(g.vertex_count(), g.edge_count());
    for (int j = 0; j < g.edge_count(); ++j) {
        m(g.edge(j).tail, j) = -1;
        m(g.edge(j).head, j) = 1;
    }
    return m;
}

inline IntMatrix adjacency_matrix(const OrientedGraph& g) {
    IntMatrix m(g.vertex_count(), g.vertex_count());
    for (const Edge& e : g.edges()) {
        m(e.tail, e.head) = 1;
        m(e.head, e.tail) = 1;
    }
    return m;
}

// Vertex Laplacian: valences on the diagonal, -1 between adjacent vertices.
// Equals incidence * incidence^t; orientation-independent.
inline IntMatrix even_laplacian(const OrientedGraph& g) {
    IntMatrix m(g.vertex_count(), g.vertex_count());
    for (const Edge& e : g.edges()) {
        m(e.tail, e.tail) += 1;
        m(e.head, e.head) += 1;
        m(e.tail, e.head) -= 1;
        m(e.head, e.tail) -= 1;
    }
    return m;
}

// Edge Laplacian: 2 on the diagonal, the zeta value of the edge pair off it.
// Built entrywise and cross-checked against incidence^t * incidence; the two
// routes agreeing is a structural invariant, so a mismatch is a logic error.
inline IntMatrix odd_laplacian(const OrientedGraph& g) {
    const int p = g.edge_count();
    IntMatrix m(p, p);
    for (int i = 0; i < p; ++i) {
        m(i, i) = 2;
        for (int j = i + 1; j < p; ++j) {
            const int z = detail::zeta_of(g.edge(i), g.edge(j)).value;
            m(i, j) = z;
            m(j, i) = z;
        }
    }
    const IntMatrix inc = incidence_matrix(g);
    if (m != inc.transpose() * inc)
        throw std::logic_error("odd Laplacian entrywise/product routes disagree");
    return m;
}

// Entrywise interface gluing of two even Laplacians (canonical layout:
// the interface occupies the last q indices of L1 and the first q of L2).
// n is |V1|, m the glued vertex count. The interface valence correction is
// computed from L1 and checked against the L2 count; a mismatch means the
// supplied matrices do not come from a valid interface.
inline IntMatrix even_laplacian_interface_glued(const IntMatrix& L1, const IntMatrix& L2,
                                                int n, int m, int q) {
    require(L1.square() && L2.square(), errc::dimension_mismatch, "Laplacians must be square");
    require(L1.rows() == n, errc::dimension_mismatch, "L1 size disagrees with n");
    require(q >= 0 && q <= n && q <= L2.rows(), errc::dimension_mismatch,
            "interface size out of range");
    require(m == n + L2.rows() - q, errc::dimension_mismatch, "m disagrees with n + |V2| - q");

    const int nmq = n - q; // vertices owned by side 1 only
    IntMatrix out(m, m);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            if (i < nmq || j < nmq) {
                out(i, j) = (i < n && j < n) ? L1(i, j) : Int(0);
            } else if (i >= n || j >= n) {
                out(i, j) = L2(i - nmq, j - nmq);
            } else if (i != j) {
                out(i, j) = -L1(i, j) * L2(i - nmq, j - nmq);
            } else {
                Int mu1 = 0, mu2 = 0;
                for (int t = nmq; t < n; ++t) {
                    if (t == i) continue;
                    mu1 += abs(L1(i, t));
                    mu2 += abs(L2(i - nmq, t - nmq));
                }
                require(mu1 == mu2, errc::invalid_interface,
                        "interface neighbor counts disagree between the two sides");
                out(i, i) = L1(i, i) + L2(i - nmq, i - nmq) - mu1;
            }
        }
    }
    return out;
}

namespace detail {
// Glued-graph edge endpoints under the canonical interface layout, without
// building the glued graph itself.
inline std::vector<Edge> interface_glued_edge_list(const OrientedGraph& g1,
                                                   const OrientedGraph& g2,
                                                   const InterfaceSpec& iface) {
    const int n1 = g1.vertex_count();
    const int q = iface.vertex_count(), r = iface.edge_count();
    // vertex maps for canonical inputs: g1 identity; g2 interface j -> n1-q+j,
    // others shifted past the side-1 block.
    std::vector<Edge> edges;
    auto map2 = [&](int v) { return v < q ? n1 - q + v : n1 + v - q; };
    for (const Edge& e : g1.edges()) edges.push_back(e);
    for (int e = r; e < g2.edge_count(); ++e)
        edges.push_back({map2(g2.edge(e).tail), map2(g2.edge(e).head)});
    return edges;
}
} // namespace detail

// Entrywise interface gluing of odd Laplacians. Requires canonical layout
// (interface edges last in g1, first in g2). Within each side the entries
// copy over; across sides the zeta condition is re-evaluated on the glued
// graph, since vertices identified by the gluing can make edges incident.
// With an edgeless interface this reduces to the block form [[D1, Q^t], [Q, D2]].
inline IntMatrix odd_laplacian_interface_glued(const OrientedGraph& g1, const OrientedGraph& g2,
                                               const InterfaceSpec& iface) {
    validate_interface(g1, g2, iface);
    require(interface_is_canonical(g1, g2, iface), errc::invalid_interface,
            "matrix-level gluing requires the canonical layout");
    const int p1 = g1.edge_count();
    const int r = iface.edge_count();
    const int total = p1 + g2.edge_count() - r;

    const IntMatrix D1 = odd_laplacian(g1);
    const IntMatrix D2 = odd_laplacian(g2);
    const std::vector<Edge> glued = detail::interface_glued_edge_list(g1, g2, iface);

    IntMatrix out(total, total);
    for (int i = 0; i < total; ++i)
        for (int j = 0; j < total; ++j) {
            if (i < p1 && j < p1)
                out(i, j) = D1(i, j);
            else if (i >= p1 - r && j >= p1 - r)
                out(i, j) = D2(i - (p1 - r), j - (p1 - r));
            else
                out(i, j) = detail::zeta_of(glued[i], glued[j]).value;
        }
    return out;
}

// Entrywise bridge gluing of even Laplacians: diagonals of bridge endpoints
// gain 1, each bridge pair contributes -1 across the blocks.
inline IntMatrix even_laplacian_bridge_glued(const IntMatrix& L1, const IntMatrix& L2,
                                             const BridgeSpec& b) {
    require(L1.square() && L2.square(), errc::dimension_mismatch, "Laplacians must be square");
    require(!b.pairs.empty(), errc::invalid_bridge, "bridge spec must be non-empty");
    const int n1 = L1.rows(), n2 = L2.rows();
    std::set<int> used1, used2;
    for (auto [v1, v2] : b.pairs) {
        require(v1 >= 0 && v1 < n1 && v2 >= 0 && v2 < n2, errc::invalid_bridge,
                "bridge endpoint out of range");
        require(used1.insert(v1).second && used2.insert(v2).second, errc::invalid_bridge,
                "vertex used by more than one bridge");
    }

    IntMatrix out(n1 + n2, n1 + n2);
    for (int i = 0; i < n1; ++i)
        for (int j = 0; j < n1; ++j) out(i, j) = L1(i, j);
    for (int i = 0; i < n2; ++i)
        for (int j = 0; j < n2; ++j) out(n1 + i, n1 + j) = L2(i, j);
    for (auto [v1, v2] : b.pairs) {
        out(v1, v1) += 1;
        out(n1 + v2, n1 + v2) += 1;
        out(v1, n1 + v2) = -1;
        out(n1 + v2, v1) = -1;
    }
    return out;
}

// Entrywise bridge gluing of odd Laplacians, edge layout (g1, bridges, g2).
// Bridges have diagonal 2 and are mutually non-incident; entries between a
// bridge and a graph edge are zeta values on the glued graph; entries across
// the two sides stay 0.
inline IntMatrix odd_laplacian_bridge_glued(const OrientedGraph& g1, const OrientedGraph& g2,
                                            const BridgeSpec& b) {
    validate_bridge(g1, g2, b);
    const int n1 = g1.vertex_count();
    const int p1 = g1.edge_count(), p2 = g2.edge_count();
    const int k = b.count();
    const int total = p1 + k + p2;

    const IntMatrix D1 = odd_laplacian(g1);
    const IntMatrix D2 = odd_laplacian(g2);

    std::vector<Edge> glued;
    glued.reserve(total);
    for (const Edge& e : g1.edges()) glued.push_back(e);
    for (auto [v1, v2] : b.pairs) glued.push_back({v1, n1 + v2});
    for (const Edge& e : g2.edges()) glued.push_back({n1 + e.tail, n1 + e.head});

    auto region = [&](int i) { return i < p1 ? 0 : (i < p1 + k ? 1 : 2); };

    IntMatrix out(total, total);
    for (int i = 0; i < total; ++i)
        for (int j = 0; j < total; ++j) {
            const int ri = region(i), rj = region(j);
            if (ri == 0 && rj == 0)
                out(i, j) = D1(i, j);
            else if (ri == 2 && rj == 2)
                out(i, j) = D2(i - p1 - k, j - p1 - k);
            else if ((ri == 0 && rj == 2) || (ri == 2 && rj == 0))
                out(i, j) = 0;
            else if (ri == 1 && rj == 1)
                out(i, j) = (i == j) ? Int(2) : Int(0);
            else
                out(i, j) = detail::zeta_of(glued[i], glued[j]).value;
        }
    return out;
}

// Orientation flip at the matrix level: entries with exactly one index in
// the flipped set change sign.
inline IntMatrix flip_odd_laplacian(const IntMatrix& Lminus, const std::vector<int>& edge_set) {
    require(Lminus.square(), errc::not_square, "odd Laplacian must be square");
    std::vector<bool> in_set(Lminus.rows(), false);
    for (int i : edge_set) {
        require(i >= 0 && i < Lminus.rows(), errc::index_out_of_range,
                "flip index out of range");
        in_set[i] = true;
    }
    IntMatrix out(Lminus.rows(), Lminus.cols());
    for (int i = 0; i < Lminus.rows(); ++i)
        for (int j = 0; j < Lminus.cols(); ++j)
            out(i, j) = (in_set[i] != in_set[j]) ? -Lminus(i, j) : Lminus(i, j);
    return out;
}

} // namespace lapglue
