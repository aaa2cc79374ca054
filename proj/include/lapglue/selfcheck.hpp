#pragma once

#include <cmath>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "lapglue/charpoly.hpp"
#include "lapglue/evolution.hpp"
#include "lapglue/graph.hpp"
#include "lapglue/laplacian.hpp"
#include "lapglue/sampling.hpp"
#include "lapglue/spectra.hpp"

namespace lapglue {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

// Acceptance-style identity checks over randomized and closed-form
// instances. Every theorem-backed equality is exercised against an
// independently computed direct construction; exact comparisons carry zero
// tolerance, numeric ones the stated bound.
namespace checks {

constexpr std::uint64_t default_seed = 20250809;

namespace detail {

inline OrientedGraph with_extra_edge(const OrientedGraph& g, int v1, int v2) {
    std::vector<Edge> edges(g.edges());
    edges.push_back({v1, v2});
    return OrientedGraph(g.vertex_count(), std::move(edges));
}

inline OrientedGraph glue_complete_at_vertex(int m, int n) {
    InterfaceSpec iface;
    iface.vertices_1 = {m - 1};
    iface.vertices_2 = {0};
    return glue_interface(complete_graph(m), complete_graph(n), iface).graph;
}

inline OrientedGraph glue_complete_by_bridge(int m, int n) {
    return glue_bridge(complete_graph(m), complete_graph(n), BridgeSpec{{{m - 1, 0}}}).graph;
}

inline Int int_pow(int base, int exp) {
    Int out = 1;
    for (int i = 0; i < exp; ++i) out *= base;
    return out;
}

struct Failures {
    int count = 0;
    std::string first;

    void record(bool ok, const std::string& what) {
        if (ok) return;
        if (count == 0) first = what;
        ++count;
    }

    CheckResult result(const std::string& name, int instances) const {
        CheckResult r{name, count == 0, ""};
        std::ostringstream d;
        if (count == 0)
            d << instances << " instances";
        else
            d << count << " failures out of " << instances << "; first: " << first;
        r.detail = d.str();
        return r;
    }
};

} // namespace detail

// 1. The four characteristic-polynomial gluing formulas reproduce the
// directly computed glued charpoly, coefficientwise, zero tolerance.
inline CheckResult charpoly_gluing_formulas(std::uint64_t seed) {
    Sampler rng(seed);
    detail::Failures fails;
    const int per_kind = 200;

    for (int it = 0; it < per_kind; ++it) { // single shared vertex
        const OrientedGraph g1 = random_graph(rng, rng.uniform_int(1, 7));
        const OrientedGraph g2 = random_graph(rng, rng.uniform_int(1, 7));
        const int v1 = rng.uniform_int(0, g1.vertex_count() - 1);
        const int v2 = rng.uniform_int(0, g2.vertex_count() - 1);
        InterfaceSpec iface;
        iface.vertices_1 = {v1};
        iface.vertices_2 = {v2};
        const IntMatrix L1 = even_laplacian(g1), L2 = even_laplacian(g2);
        const IntPoly formula = vertex_interface_charpoly(
            charpoly(L1), minor_charpoly(L1, v1), charpoly(L2), minor_charpoly(L2, v2));
        const IntPoly direct = charpoly(even_laplacian(glue_interface(g1, g2, iface).graph));
        fails.record(formula == direct, "vertex-interface instance " + std::to_string(it));
    }

    for (int it = 0; it < per_kind; ++it) { // edge insertion
        OrientedGraph g = random_graph(rng, rng.uniform_int(2, 7));
        int v1 = -1, v2 = -1;
        for (int a = 0; a < g.vertex_count() && v1 < 0; ++a)
            for (int b = a + 1; b < g.vertex_count() && v1 < 0; ++b)
                if (!g.adjacent(a, b)) {
                    v1 = a;
                    v2 = b;
                }
        if (v1 < 0) { // complete graph drawn; swap in a sparser one
            g = path_graph(rng.uniform_int(3, 7));
            v1 = 0;
            v2 = g.vertex_count() - 1;
        }
        const IntPoly formula = add_edge_charpoly(even_laplacian(g), v1, v2);
        const IntPoly direct = charpoly(even_laplacian(detail::with_extra_edge(g, v1, v2)));
        fails.record(formula == direct, "edge-insertion instance " + std::to_string(it));
    }

    for (int it = 0; it < per_kind; ++it) { // single bridge
        const BridgeInstance inst = random_bridge_instance(rng, 7, 1);
        const auto [v1, v2] = inst.bridge.pairs[0];
        const IntMatrix L1 = even_laplacian(inst.g1), L2 = even_laplacian(inst.g2);
        const IntPoly formula = bridge_charpoly(charpoly(L1), minor_charpoly(L1, v1),
                                                charpoly(L2), minor_charpoly(L2, v2));
        const IntPoly direct =
            charpoly(even_laplacian(glue_bridge(inst.g1, inst.g2, inst.bridge).graph));
        fails.record(formula == direct, "single-bridge instance " + std::to_string(it));
    }

    for (int it = 0; it < per_kind; ++it) { // k bridges, iterative formula
        const BridgeInstance inst = random_bridge_instance(rng, 7, 4);
        const IntPoly formula = multi_bridge_charpoly(inst.g1, inst.g2, inst.bridge);
        const IntPoly direct =
            charpoly(even_laplacian(glue_bridge(inst.g1, inst.g2, inst.bridge).graph));
        fails.record(formula == direct, "multi-bridge instance " + std::to_string(it));
    }

    return fails.result("charpoly gluing formulas (vertex/edge/bridge/k-bridge) exact",
                        4 * per_kind);
}

// 2. The entrywise Laplacian gluing formulas reproduce the directly
// constructed glued Laplacians.
inline CheckResult matrix_gluing_formulas(std::uint64_t seed) {
    Sampler rng(seed + 1);
    detail::Failures fails;
    const int per_kind = 200;

    for (int it = 0; it < per_kind; ++it) { // even, general interface
        const InterfaceInstance inst = random_interface_instance(rng, 7, 4);
        const CanonicalInterface c = canonical_interface_layout(inst.g1, inst.g2, inst.iface);
        const int n = c.g1.vertex_count();
        const int q = c.iface.vertex_count();
        const int m = n + c.g2.vertex_count() - q;
        const IntMatrix glued = even_laplacian_interface_glued(
            even_laplacian(c.g1), even_laplacian(c.g2), n, m, q);
        const IntMatrix direct = even_laplacian(glue_interface(c.g1, c.g2, c.iface).graph);
        fails.record(glued == direct, "even interface instance " + std::to_string(it));
    }

    for (int it = 0; it < per_kind; ++it) { // odd, interface with edges
        const InterfaceInstance inst = random_interface_instance(rng, 7, 4);
        const CanonicalInterface c = canonical_interface_layout(inst.g1, inst.g2, inst.iface);
        const IntMatrix glued = odd_laplacian_interface_glued(c.g1, c.g2, c.iface);
        const IntMatrix direct = odd_laplacian(glue_interface(c.g1, c.g2, c.iface).graph);
        fails.record(glued == direct, "odd interface instance " + std::to_string(it));
    }

    for (int it = 0; it < per_kind; ++it) { // odd, vertex-only interface (block form)
        const InterfaceInstance inst =
            random_interface_instance(rng, 7, 4, /*edges_allowed=*/false);
        const CanonicalInterface c = canonical_interface_layout(inst.g1, inst.g2, inst.iface);
        const IntMatrix glued = odd_laplacian_interface_glued(c.g1, c.g2, c.iface);
        const IntMatrix direct = odd_laplacian(glue_interface(c.g1, c.g2, c.iface).graph);
        bool ok = glued == direct;
        // Block structure: the diagonal blocks must be the two inputs.
        const IntMatrix D1 = odd_laplacian(c.g1), D2 = odd_laplacian(c.g2);
        for (int i = 0; i < D1.rows() && ok; ++i)
            for (int j = 0; j < D1.cols() && ok; ++j) ok = glued(i, j) == D1(i, j);
        for (int i = 0; i < D2.rows() && ok; ++i)
            for (int j = 0; j < D2.cols() && ok; ++j)
                ok = glued(D1.rows() + i, D1.cols() + j) == D2(i, j);
        fails.record(ok, "odd vertex-interface instance " + std::to_string(it));
    }

    for (int it = 0; it < per_kind; ++it) { // even, bridges
        const BridgeInstance inst = random_bridge_instance(rng, 7, 4);
        const IntMatrix glued =
            even_laplacian_bridge_glued(even_laplacian(inst.g1), even_laplacian(inst.g2),
                                        inst.bridge);
        const IntMatrix direct =
            even_laplacian(glue_bridge(inst.g1, inst.g2, inst.bridge).graph);
        fails.record(glued == direct, "even bridge instance " + std::to_string(it));
    }

    for (int it = 0; it < per_kind; ++it) { // odd, bridges
        const BridgeInstance inst = random_bridge_instance(rng, 7, 4);
        const IntMatrix glued = odd_laplacian_bridge_glued(inst.g1, inst.g2, inst.bridge);
        const IntMatrix direct = odd_laplacian(glue_bridge(inst.g1, inst.g2, inst.bridge).graph);
        fails.record(glued == direct, "odd bridge instance " + std::to_string(it));
    }

    return fails.result("Laplacian gluing formulas (even/odd, interface/bridge) exact",
                        5 * per_kind);
}

// 3. Complete-graph gluing charpolys match the expanded closed forms.
inline CheckResult complete_closed_forms(std::uint64_t) {
    detail::Failures fails;
    int instances = 0;
    for (int m = 2; m <= 6; ++m)
        for (int n = 2; n <= 6; ++n) {
            const IntPoly direct_i =
                charpoly(even_laplacian(detail::glue_complete_at_vertex(m, n)));
            fails.record(direct_i == complete_interface_glue_charpoly(m, n),
                         "interface closed form m=" + std::to_string(m) +
                             " n=" + std::to_string(n));
            const IntPoly direct_b =
                charpoly(even_laplacian(detail::glue_complete_by_bridge(m, n)));
            fails.record(direct_b == complete_bridge_glue_charpoly(m, n),
                         "bridge closed form m=" + std::to_string(m) +
                             " n=" + std::to_string(n));
            instances += 2;
        }
    return fails.result("complete-graph gluing closed forms exact", instances);
}

// 4. Spanning-tree counts: closed form for glued complete graphs, known
// values for paths and cycles, and exact agreement with the cofactor oracle.
inline CheckResult spanning_trees(std::uint64_t seed) {
    Sampler rng(seed + 3);
    detail::Failures fails;
    int instances = 0;
    auto check_graph = [&](const OrientedGraph& g, const Int& expected, const std::string& what) {
        const Int t = spanning_tree_count(g);
        fails.record(t == expected, what + " count");
        const int i = rng.uniform_int(0, g.vertex_count() - 1);
        fails.record(int_det(even_laplacian(g).minor_at(i, i)) == t, what + " cofactor oracle");
        instances += 2;
    };

    for (int m = 2; m <= 6; ++m)
        for (int n = 2; n <= 6; ++n) {
            const Int expected = detail::int_pow(m, m - 2) * detail::int_pow(n, n - 2);
            check_graph(detail::glue_complete_at_vertex(m, n), expected,
                        "interface K" + std::to_string(m) + "/K" + std::to_string(n));
            check_graph(detail::glue_complete_by_bridge(m, n), expected,
                        "bridge K" + std::to_string(m) + "/K" + std::to_string(n));
        }
    for (int n = 1; n <= 10; ++n) check_graph(path_graph(n), 1, "P" + std::to_string(n));
    for (int n = 3; n <= 10; ++n) check_graph(cycle_graph(n), n, "C" + std::to_string(n));
    return fails.result("spanning-tree counts exact (incl. cofactor oracle)", instances);
}

// 5. Fiedler values of glued complete graphs: exact value 1 for a shared
// vertex, the closed form for equal-size bridge gluing, and the Laguerre
// bounds in general.
inline CheckResult fiedler_values(std::uint64_t) {
    detail::Failures fails;
    int instances = 0;
    const double tol = 1e-9;
    for (int m = 2; m <= 6; ++m)
        for (int n = 2; n <= 6; ++n) {
            const double fi = fiedler_value(detail::glue_complete_at_vertex(m, n));
            fails.record(std::abs(fi - 1.0) <= tol,
                         "interface Fiedler m=" + std::to_string(m) + " n=" + std::to_string(n));
            const double fb = fiedler_value(detail::glue_complete_by_bridge(m, n));
            const FiedlerBounds bounds = fiedler_bounds_complete_bridge(m, n);
            fails.record(fb >= bounds.lower - tol && fb <= bounds.upper + tol,
                         "bridge Fiedler bounds m=" + std::to_string(m) +
                             " n=" + std::to_string(n));
            instances += 2;
        }
    for (int n = 2; n <= 6; ++n) {
        const double f = fiedler_value(detail::glue_complete_by_bridge(n, n));
        const double expected = (n + 2 - std::sqrt(static_cast<double>(n) * n + 4 * n - 4)) / 2.0;
        fails.record(std::abs(f - expected) <= tol, "equal bridge Fiedler n=" + std::to_string(n));
        ++instances;
    }
    return fails.result("Fiedler values of glued complete graphs within 1e-9", instances);
}

// 6. The even/odd charpoly ratio divides exactly to (-lambda)^(V-E), and the
// exponent is additive under both gluings.
inline CheckResult euler_ratio_identities(std::uint64_t seed) {
    Sampler rng(seed + 5);
    detail::Failures fails;
    int instances = 0;
    for (int it = 0; it < 500; ++it) {
        const OrientedGraph g = random_graph(rng, rng.uniform_int(1, 9));
        bool ok = false;
        try {
            const EulerRatio er = euler_ratio(g);
            ok = er.exact && er.exponent == euler_characteristic(g);
        } catch (const Error&) {
        }
        fails.record(ok, "euler ratio instance " + std::to_string(it));
        ++instances;
    }
    for (int it = 0; it < 200; ++it) {
        const InterfaceInstance inst = random_interface_instance(rng, 6, 3);
        const int chi_i = inst.iface.vertex_count() - inst.iface.edge_count();
        const OrientedGraph glued = glue_interface(inst.g1, inst.g2, inst.iface).graph;
        bool ok = false;
        try {
            ok = euler_ratio(glued).exponent ==
                 euler_ratio(inst.g1).exponent + euler_ratio(inst.g2).exponent - chi_i;
        } catch (const Error&) {
        }
        fails.record(ok, "interface additivity instance " + std::to_string(it));
        ++instances;
    }
    for (int it = 0; it < 200; ++it) {
        const BridgeInstance inst = random_bridge_instance(rng, 6, 4);
        const OrientedGraph glued = glue_bridge(inst.g1, inst.g2, inst.bridge).graph;
        bool ok = false;
        try {
            ok = euler_ratio(glued).exponent == euler_ratio(inst.g1).exponent +
                                                    euler_ratio(inst.g2).exponent -
                                                    inst.bridge.count();
        } catch (const Error&) {
        }
        fails.record(ok, "bridge additivity instance " + std::to_string(it));
        ++instances;
    }
    return fails.result("Euler ratio (-lambda)^chi exact, exponent additive under gluing",
                        instances);
}

// 7. Even/odd isospectrality with combinatorial zero multiplicities, stable
// under random orientation flips.
inline CheckResult isospectrality(std::uint64_t seed) {
    Sampler rng(seed + 6);
    detail::Failures fails;
    const int count = 200;
    for (int it = 0; it < count; ++it) {
        OrientedGraph g = random_graph(rng, rng.uniform_int(2, 7));
        if (g.edge_count() == 0) g = path_graph(rng.uniform_int(2, 7));
        bool ok = isospectral_check(g, 1e-8);

        std::vector<int> flips;
        for (int e = 0; e < g.edge_count(); ++e)
            if (rng.chance(0.5)) flips.push_back(e);
        const OrientedGraph flipped = flip_orientation(g, flips);
        ok = ok && even_laplacian(flipped) == even_laplacian(g);
        const Spectrum so = odd_spectrum(g), sf = odd_spectrum(flipped);
        for (size_t i = 0; i < so.eigenvalues.size() && ok; ++i)
            ok = std::abs(so.eigenvalues[i] - sf.eigenvalues[i]) <= 1e-8;
        fails.record(ok, "isospectrality instance " + std::to_string(it));
    }
    return fails.result("even/odd isospectrality within 1e-8, orientation-invariant", count);
}

// 8. Exact cycle charpolys evaluated at random points match the
// trigonometric product forms within relative 1e-8.
inline CheckResult cycle_product_oracle(std::uint64_t seed) {
    Sampler rng(seed + 7);
    detail::Failures fails;
    int instances = 0;
    for (int n = 3; n <= 8; ++n) {
        const IntPoly p = charpoly(even_laplacian(cycle_graph(n)));
        const IntPoly pm = minor_charpoly(even_laplacian(cycle_graph(n)), rng.uniform_int(0, n - 1));
        for (int it = 0; it < 20; ++it) {
            const double lam = rng.uniform_real(-2.0, 6.0);
            const double exact = p.evaluate(lam);
            const double prod = cycle_charpoly_eval(n, lam);
            fails.record(std::abs(exact - prod) <= 1e-8 * (1.0 + std::abs(exact)),
                         "cycle n=" + std::to_string(n));
            const double exact_m = pm.evaluate(lam);
            const double prod_m = cycle_minor_charpoly_eval(n, lam);
            fails.record(std::abs(exact_m - prod_m) <= 1e-8 * (1.0 + std::abs(exact_m)),
                         "cycle minor n=" + std::to_string(n));
            instances += 2;
        }
    }
    return fails.result("cycle trigonometric product oracle within relative 1e-8", instances);
}

namespace detail {
// Upper bound on |e^{ix} - (40-term Taylor sum)| for |x| <= x_max:
// the absolute tail sum_{j>=40} x^j / j!.
inline double series_tail_bound_40(double x_max) {
    double term = 1.0;
    for (int j = 1; j < 40; ++j) term *= x_max / j;
    double tail = 0.0;
    for (int j = 40; j < 200 && term > 0.0; ++j) {
        term *= x_max / j;
        tail += term;
        if (term < 1e-18 * (tail + 1.0)) break;
    }
    return tail;
}
} // namespace detail

// 9. Discrete evolution: unitary propagator, conserved norm, agreement with
// the truncated-series oracle, eigenstate phase law. The series comparison
// applies only where the 40-term tail bound guarantees the oracle itself is
// accurate; outside that domain the truncated series does not approximate
// the exponential and compares nothing.
inline CheckResult quantum_evolution(std::uint64_t seed) {
    Sampler rng(seed + 8);
    detail::Failures fails;
    const int count = 40;
    int series_compared = 0;
    for (int it = 0; it < count; ++it) {
        const OrientedGraph g = random_graph(rng, rng.uniform_int(1, 8));
        const int n = g.vertex_count();
        const EvolutionParams p{rng.uniform_real(-2.0, 2.0), 1.0};
        const Propagator K = propagator(g, p);

        double unitarity = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                std::complex<double> acc = 0.0;
                for (int k = 0; k < n; ++k) acc += K(i, k) * std::conj(K(j, k));
                unitarity = std::max(unitarity, std::abs(acc - (i == j ? 1.0 : 0.0)));
            }
        bool ok = unitarity <= 1e-10;

        WaveFunction psi;
        for (int i = 0; i < n; ++i)
            psi.amplitudes.emplace_back(rng.uniform_real(-1.0, 1.0), rng.uniform_real(-1.0, 1.0));
        const WaveFunction evolved = evolve(psi, g, p);
        ok = ok && std::abs(evolved.norm() - psi.norm()) <= 1e-10;

        const EigenSystem es = jacobi_eigensystem(to_real(even_laplacian(g)));
        const double arg_max = std::abs(p.coeff * p.dt) * (n > 0 ? std::abs(es.values.back()) : 0);
        if (detail::series_tail_bound_40(arg_max) <= 1e-9) {
            const Propagator S = propagator_series(g, p, 40);
            double series_diff = 0.0;
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    series_diff = std::max(series_diff, std::abs(K(i, j) - S(i, j)));
            ok = ok && series_diff <= 1e-8;
            ++series_compared;
        }
        const int k = rng.uniform_int(0, n - 1);
        WaveFunction eig;
        for (int i = 0; i < n; ++i) eig.amplitudes.emplace_back(es.vectors(i, k), 0.0);
        const WaveFunction phased = evolve(eig, g, p);
        const std::complex<double> phase = std::polar(1.0, p.coeff * p.dt * es.values[k]);
        double phase_diff = 0.0;
        for (int i = 0; i < n; ++i)
            phase_diff = std::max(phase_diff,
                                  std::abs(phased.amplitudes[i] - phase * eig.amplitudes[i]));
        ok = ok && phase_diff <= 1e-10;

        fails.record(ok, "evolution instance " + std::to_string(it));
    }
    fails.record(series_compared >= 10, "too few instances inside the series domain");
    return fails.result("propagator unitary/norm within 1e-10, series oracle within 1e-8",
                        count + 1);
}

// 10. Concurrent and sequential evaluation of the k-bridge formula produce
// bit-identical polynomials.
inline CheckResult deterministic_parallel_summation(std::uint64_t seed) {
    Sampler rng(seed + 9);
    detail::Failures fails;
    const int count = 25;
    for (int it = 0; it < count; ++it) {
        const BridgeInstance inst = random_bridge_instance(rng, 7, 4);
        const IntPoly seq =
            multi_bridge_charpoly(inst.g1, inst.g2, inst.bridge, Execution::sequential);
        const IntPoly par =
            multi_bridge_charpoly(inst.g1, inst.g2, inst.bridge, Execution::concurrent);
        fails.record(seq == par, "parallel summation instance " + std::to_string(it));
    }
    return fails.result("concurrent vs sequential k-bridge summation bit-identical", count);
}

} // namespace checks

inline std::vector<CheckResult> run_acceptance_checks(std::uint64_t seed = checks::default_seed) {
    return {
        checks::charpoly_gluing_formulas(seed),
        checks::matrix_gluing_formulas(seed),
        checks::complete_closed_forms(seed),
        checks::spanning_trees(seed),
        checks::fiedler_values(seed),
        checks::euler_ratio_identities(seed),
        checks::isospectrality(seed),
        checks::cycle_product_oracle(seed),
        checks::quantum_evolution(seed),
        checks::deterministic_parallel_summation(seed),
    };
}

} // namespace lapglue
