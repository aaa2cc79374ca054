#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "lapglue/charpoly.hpp"
#include "lapglue/sampling.hpp"

using namespace lapglue;

namespace {

IntMatrix from_rows(const std::vector<std::vector<int>>& rows) {
    IntMatrix m(static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows[0].size()));
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < rows[i].size(); ++j) m(static_cast<int>(i), static_cast<int>(j)) = rows[i][j];
    return m;
}

// Test-only symbolic oracle: det(M - lambda I) with a row or column deleted,
// by cofactor expansion over polynomial entries. Exponential, fine for n <= 5.
IntPoly cofactor_det(const std::vector<std::vector<IntPoly>>& m) {
    const size_t n = m.size();
    if (n == 0) return IntPoly::one();
    if (n == 1) return m[0][0];
    IntPoly acc;
    for (size_t j = 0; j < n; ++j) {
        std::vector<std::vector<IntPoly>> sub;
        for (size_t i = 1; i < n; ++i) {
            std::vector<IntPoly> row;
            for (size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(m[i][k]);
            sub.push_back(std::move(row));
        }
        const IntPoly term = m[0][j] * cofactor_det(sub);
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

std::vector<std::vector<IntPoly>> shifted_minor(const IntMatrix& M, int del_row, int del_col) {
    std::vector<std::vector<IntPoly>> out;
    for (int i = 0; i < M.rows(); ++i) {
        if (i == del_row) continue;
        std::vector<IntPoly> row;
        for (int j = 0; j < M.cols(); ++j) {
            if (j == del_col) continue;
            IntPoly entry{M(i, j)};
            if (i == j) entry = entry - IntPoly{Int(0), Int(1)};
            row.push_back(std::move(entry));
        }
        out.push_back(std::move(row));
    }
    return out;
}

} // namespace

TEST_CASE("charpoly basics") {
    CHECK(charpoly(from_rows({{0}})) == IntPoly{Int(0), Int(-1)}); // -lambda
    CHECK(charpoly(even_laplacian(path_graph(3))) ==
          IntPoly{Int(0), Int(-3), Int(4), Int(-1)});
    CHECK(charpoly(IntMatrix(0, 0)) == IntPoly::one());
    CHECK_THROWS_AS(charpoly(IntMatrix(2, 3)), Error);
}

TEST_CASE("charpoly of complete graphs matches the closed form") {
    for (int n = 2; n <= 8; ++n) {
        CHECK(charpoly(even_laplacian(complete_graph(n))) == complete_charpoly(n));
        CHECK(minor_charpoly(even_laplacian(complete_graph(n)), n / 2) ==
              complete_minor_charpoly(n));
    }
}

TEST_CASE("degree and leading coefficient law") {
    Sampler rng(31);
    for (int it = 0; it < 40; ++it) {
        const int n = rng.uniform_int(1, 8);
        IntMatrix m(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m(i, j) = rng.uniform_int(-5, 5);
        const IntPoly p = charpoly(m);
        CHECK(p.degree() == n);
        CHECK(p.leading() == (n % 2 ? Int(-1) : Int(1)));
    }
}

TEST_CASE("charpoly against the cofactor oracle") {
    Sampler rng(32);
    for (int it = 0; it < 20; ++it) {
        const int n = rng.uniform_int(1, 4);
        IntMatrix m(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m(i, j) = rng.uniform_int(-4, 4);
        CHECK(charpoly(m) == cofactor_det(shifted_minor(m, -1, -1)));
    }
}

TEST_CASE("minor charpoly") {
    CHECK(minor_charpoly(from_rows({{5}}), 0) == IntPoly::one());
    CHECK(minor_charpoly(even_laplacian(path_graph(3)), 1) ==
          IntPoly{Int(1), Int(-2), Int(1)}); // (1-lambda)^2
    CHECK_THROWS_AS(minor_charpoly(from_rows({{1}}), 3), Error);
}

TEST_CASE("integer determinant") {
    CHECK(int_det(IntMatrix(0, 0)) == 1);
    CHECK(int_det(from_rows({{7}})) == 7);
    CHECK(int_det(from_rows({{1, 2}, {3, 4}})) == -2);
    CHECK(int_det(from_rows({{0, 1}, {1, 0}})) == -1);
    CHECK(int_det(from_rows({{0, 0}, {0, 5}})) == 0);
    CHECK(int_det(even_laplacian(cycle_graph(4))) == 0);
}

TEST_CASE("off-diagonal minor determinant") {
    SECTION("2x2: deleting row 0 and column 1 leaves the lower-left entry") {
        CHECK(offdiag_minor_det(from_rows({{8, 2}, {3, 9}}), 0, 1) == IntPoly{Int(3)});
    }
    SECTION("P3 Laplacian, corners") {
        CHECK(offdiag_minor_det(even_laplacian(path_graph(3)), 0, 2) == IntPoly::one());
    }
    SECTION("matches the symbolic cofactor oracle on random matrices") {
        Sampler rng(33);
        for (int it = 0; it < 30; ++it) {
            const int n = rng.uniform_int(2, 5);
            IntMatrix m(n, n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) m(i, j) = rng.uniform_int(-4, 4);
            const int v1 = rng.uniform_int(0, n - 1);
            int v2 = rng.uniform_int(0, n - 2);
            if (v2 >= v1) ++v2;
            CHECK(offdiag_minor_det(m, v1, v2) == cofactor_det(shifted_minor(m, v1, v2)));
        }
    }
    SECTION("errors") {
        CHECK_THROWS_AS(offdiag_minor_det(from_rows({{1, 2}, {3, 4}}), 1, 1), Error);
        CHECK_THROWS_AS(offdiag_minor_det(from_rows({{1, 2}, {3, 4}}), 0, 7), Error);
    }
}

TEST_CASE("vertex interface charpoly formula") {
    SECTION("two K2 glued at a vertex give the P3 polynomial") {
        const IntMatrix L = even_laplacian(complete_graph(2));
        const IntPoly p = vertex_interface_charpoly(charpoly(L), minor_charpoly(L, 1),
                                                    charpoly(L), minor_charpoly(L, 0));
        CHECK(p == IntPoly{Int(0), Int(-3), Int(4), Int(-1)});
    }
    SECTION("complete graphs match the closed form") {
        for (int m = 2; m <= 6; ++m)
            for (int n = 2; n <= 6; ++n) {
                const IntMatrix Lm = even_laplacian(complete_graph(m));
                const IntMatrix Ln = even_laplacian(complete_graph(n));
                const IntPoly p = vertex_interface_charpoly(
                    charpoly(Lm), minor_charpoly(Lm, m - 1), charpoly(Ln),
                    minor_charpoly(Ln, 0));
                CHECK(p == complete_interface_glue_charpoly(m, n));
            }
    }
    SECTION("random graphs match the direct construction") {
        Sampler rng(34);
        for (int it = 0; it < 60; ++it) {
            const OrientedGraph g1 = random_graph(rng, rng.uniform_int(1, 7));
            const OrientedGraph g2 = random_graph(rng, rng.uniform_int(1, 7));
            const int v1 = rng.uniform_int(0, g1.vertex_count() - 1);
            const int v2 = rng.uniform_int(0, g2.vertex_count() - 1);
            InterfaceSpec iface;
            iface.vertices_1 = {v1};
            iface.vertices_2 = {v2};
            const IntMatrix L1 = even_laplacian(g1), L2 = even_laplacian(g2);
            CHECK(vertex_interface_charpoly(charpoly(L1), minor_charpoly(L1, v1), charpoly(L2),
                                            minor_charpoly(L2, v2)) ==
                  charpoly(even_laplacian(glue_interface(g1, g2, iface).graph)));
        }
    }
}

TEST_CASE("edge insertion charpoly formula") {
    SECTION("closing P3 into a triangle") {
        CHECK(add_edge_charpoly(even_laplacian(path_graph(3)), 0, 2) == complete_charpoly(3));
    }
    SECTION("two isolated vertices joined give K2") {
        CHECK(add_edge_charpoly(even_laplacian(new_graph(2, {})), 0, 1) ==
              IntPoly{Int(0), Int(-2), Int(1)});
    }
    SECTION("adjacent endpoints are rejected") {
        CHECK_THROWS_AS(add_edge_charpoly(even_laplacian(path_graph(2)), 0, 1), Error);
        CHECK_THROWS_AS(add_edge_charpoly(even_laplacian(path_graph(2)), 1, 1), Error);
    }
    SECTION("random graphs with a random absent edge") {
        Sampler rng(35);
        int done = 0;
        while (done < 60) {
            const OrientedGraph g = random_graph(rng, rng.uniform_int(2, 7));
            int v1 = -1, v2 = -1;
            for (int a = 0; a < g.vertex_count() && v1 < 0; ++a)
                for (int b = a + 1; b < g.vertex_count() && v1 < 0; ++b)
                    if (!g.adjacent(a, b)) {
                        v1 = a;
                        v2 = b;
                    }
            if (v1 < 0) continue;
            std::vector<Edge> edges(g.edges());
            edges.push_back({v1, v2});
            const OrientedGraph extended(g.vertex_count(), std::move(edges));
            CHECK(add_edge_charpoly(even_laplacian(g), v1, v2) ==
                  charpoly(even_laplacian(extended)));
            ++done;
        }
    }
}

TEST_CASE("single bridge charpoly formula") {
    SECTION("two K2 with a bridge give the P4 polynomial") {
        const IntMatrix L = even_laplacian(complete_graph(2));
        const IntPoly p = bridge_charpoly(charpoly(L), minor_charpoly(L, 1), charpoly(L),
                                          minor_charpoly(L, 0));
        CHECK(p == IntPoly{Int(0), Int(-4), Int(10), Int(-6), Int(1)});
    }
    SECTION("complete graphs match the closed form") {
        for (int m = 2; m <= 6; ++m)
            for (int n = 2; n <= 6; ++n) {
                const IntMatrix Lm = even_laplacian(complete_graph(m));
                const IntMatrix Ln = even_laplacian(complete_graph(n));
                CHECK(bridge_charpoly(charpoly(Lm), minor_charpoly(Lm, m - 1), charpoly(Ln),
                                      minor_charpoly(Ln, 0)) ==
                      complete_bridge_glue_charpoly(m, n));
            }
    }
    SECTION("random graphs match the direct construction") {
        Sampler rng(36);
        for (int it = 0; it < 60; ++it) {
            const BridgeInstance inst = random_bridge_instance(rng, 7, 1);
            const auto [v1, v2] = inst.bridge.pairs[0];
            const IntMatrix L1 = even_laplacian(inst.g1), L2 = even_laplacian(inst.g2);
            CHECK(bridge_charpoly(charpoly(L1), minor_charpoly(L1, v1), charpoly(L2),
                                  minor_charpoly(L2, v2)) ==
                  charpoly(even_laplacian(glue_bridge(inst.g1, inst.g2, inst.bridge).graph)));
        }
    }
}

TEST_CASE("multi-bridge charpoly") {
    SECTION("k = 1 reduces to the single-bridge formula") {
        Sampler rng(37);
        const BridgeInstance inst = random_bridge_instance(rng, 6, 1);
        const auto [v1, v2] = inst.bridge.pairs[0];
        const IntMatrix L1 = even_laplacian(inst.g1), L2 = even_laplacian(inst.g2);
        CHECK(multi_bridge_charpoly(inst.g1, inst.g2, inst.bridge) ==
              bridge_charpoly(charpoly(L1), minor_charpoly(L1, v1), charpoly(L2),
                              minor_charpoly(L2, v2)));
    }
    SECTION("two C4 with two bridges match the direct construction") {
        const OrientedGraph c4 = cycle_graph(4);
        const BridgeSpec b{{{0, 0}, {2, 2}}};
        CHECK(multi_bridge_charpoly(c4, c4, b) ==
              charpoly(even_laplacian(glue_bridge(c4, c4, b).graph)));
    }
    SECTION("random instances match the direct construction") {
        Sampler rng(38);
        for (int it = 0; it < 50; ++it) {
            const BridgeInstance inst = random_bridge_instance(rng, 6, 4);
            CHECK(multi_bridge_charpoly(inst.g1, inst.g2, inst.bridge) ==
                  charpoly(even_laplacian(glue_bridge(inst.g1, inst.g2, inst.bridge).graph)));
        }
    }
    SECTION("concurrent evaluation is bit-identical") {
        Sampler rng(39);
        for (int it = 0; it < 10; ++it) {
            const BridgeInstance inst = random_bridge_instance(rng, 6, 4);
            CHECK(multi_bridge_charpoly(inst.g1, inst.g2, inst.bridge, Execution::sequential) ==
                  multi_bridge_charpoly(inst.g1, inst.g2, inst.bridge, Execution::concurrent));
        }
    }
}

TEST_CASE("Euler ratio") {
    SECTION("P3") {
        const EulerRatio er = euler_ratio(path_graph(3));
        CHECK(er.exponent == 1);
        CHECK(er.exact);
    }
    SECTION("cycles have equal even and odd charpolys") {
        for (int n = 3; n <= 8; ++n) {
            CHECK(euler_ratio(cycle_graph(n)).exponent == 0);
            CHECK(charpoly(even_laplacian(cycle_graph(n))) ==
                  charpoly(odd_laplacian(cycle_graph(n))));
        }
    }
    SECTION("K4 has negative exponent and the reciprocal relation") {
        const EulerRatio er = euler_ratio(complete_graph(4));
        CHECK(er.exponent == -2);
        const IntPoly p_plus = charpoly(even_laplacian(complete_graph(4)));
        const IntPoly p_minus = charpoly(odd_laplacian(complete_graph(4)));
        CHECK(p_minus == p_plus.shifted_up(2)); // (-lambda)^2 = lambda^2
    }
    SECTION("edgeless graphs") {
        CHECK(euler_ratio(new_graph(3, {})).exponent == 3);
    }
    SECTION("random graphs") {
        Sampler rng(40);
        for (int it = 0; it < 80; ++it) {
            const OrientedGraph g = random_graph(rng, rng.uniform_int(1, 9));
            const EulerRatio er = euler_ratio(g);
            CHECK(er.exponent == euler_characteristic(g));
            CHECK(er.exact);
        }
    }
}

TEST_CASE("complete-graph closed forms") {
    CHECK(complete_charpoly(3) == IntPoly{Int(0), Int(-9), Int(6), Int(-1)});
    CHECK(q_poly(2, 2) == IntPoly{Int(-4), Int(10), Int(-6), Int(1)});
    CHECK(complete_interface_glue_charpoly(2, 2) == IntPoly{Int(0), Int(-3), Int(4), Int(-1)});
    CHECK(complete_bridge_glue_charpoly(2, 2) ==
          IntPoly{Int(0), Int(-4), Int(10), Int(-6), Int(1)});
    CHECK_THROWS_AS(complete_charpoly(1), Error);
    CHECK_THROWS_AS(q_poly(1, 3), Error);

    for (int m = 2; m <= 6; ++m)
        for (int n = 2; n <= 6; ++n) {
            InterfaceSpec iface;
            iface.vertices_1 = {m - 1};
            iface.vertices_2 = {0};
            const OrientedGraph gi =
                glue_interface(complete_graph(m), complete_graph(n), iface).graph;
            CHECK(charpoly(even_laplacian(gi)) == complete_interface_glue_charpoly(m, n));
            const OrientedGraph gb =
                glue_bridge(complete_graph(m), complete_graph(n), BridgeSpec{{{m - 1, 0}}}).graph;
            CHECK(charpoly(even_laplacian(gb)) == complete_bridge_glue_charpoly(m, n));
        }
}

TEST_CASE("coefficients beyond 64 bits stay exact") {
    // Two K13 sharing a vertex: 25 vertices, coefficient magnitudes above 2^63.
    InterfaceSpec iface;
    iface.vertices_1 = {12};
    iface.vertices_2 = {0};
    const OrientedGraph g =
        glue_interface(complete_graph(13), complete_graph(13), iface).graph;
    const IntPoly direct = charpoly(even_laplacian(g));
    CHECK(direct == complete_interface_glue_charpoly(13, 13));

    Int max_coeff = 0;
    for (const Int& c : direct.coefficients())
        if (abs(c) > max_coeff) max_coeff = abs(c);
    CHECK(max_coeff > Int("9223372036854775807"));
}

TEST_CASE("cycle product evaluators") {
    CHECK(cycle_charpoly_eval(3, 0.0) == Catch::Approx(0.0).margin(1e-12));
    CHECK(cycle_charpoly_eval(4, 2.0) == Catch::Approx(0.0).margin(1e-12));

    Sampler rng(41);
    for (int n = 3; n <= 8; ++n) {
        const IntPoly exact = charpoly(even_laplacian(cycle_graph(n)));
        const IntPoly exact_minor = minor_charpoly(even_laplacian(cycle_graph(n)), 0);
        for (int it = 0; it < 20; ++it) {
            const double lam = rng.uniform_real(-2.0, 6.0);
            const double pe = exact.evaluate(lam);
            CHECK(std::abs(cycle_charpoly_eval(n, lam) - pe) <= 1e-8 * (1.0 + std::abs(pe)));
            const double pm = exact_minor.evaluate(lam);
            CHECK(std::abs(cycle_minor_charpoly_eval(n, lam) - pm) <=
                  1e-8 * (1.0 + std::abs(pm)));
        }
    }
}

TEST_CASE("cycle gluing corollaries as evaluator compositions") {
    Sampler rng(42);
    for (int m = 3; m <= 5; ++m)
        for (int n = 3; n <= 5; ++n) {
            InterfaceSpec iface;
            iface.vertices_1 = {m - 1};
            iface.vertices_2 = {0};
            const IntPoly pi = charpoly(
                even_laplacian(glue_interface(cycle_graph(m), cycle_graph(n), iface).graph));
            const IntPoly pb = charpoly(even_laplacian(
                glue_bridge(cycle_graph(m), cycle_graph(n), BridgeSpec{{{m - 1, 0}}}).graph));
            for (int it = 0; it < 10; ++it) {
                const double lam = rng.uniform_real(-1.0, 5.0);
                const double p1 = cycle_charpoly_eval(m, lam);
                const double p1v = cycle_minor_charpoly_eval(m, lam);
                const double p2 = cycle_charpoly_eval(n, lam);
                const double p2v = cycle_minor_charpoly_eval(n, lam);
                const double iface_val = p1 * p2v + p1v * p2 + lam * p1v * p2v;
                const double bridge_val = p1 * p2 + p1 * p2v + p1v * p2;
                const double ie = pi.evaluate(lam);
                const double be = pb.evaluate(lam);
                CHECK(std::abs(iface_val - ie) <= 1e-8 * (1.0 + std::abs(ie)));
                CHECK(std::abs(bridge_val - be) <= 1e-8 * (1.0 + std::abs(be)));
            }
        }
}

TEST_CASE("odd charpoly is orientation-invariant") {
    Sampler rng(43);
    for (int it = 0; it < 40; ++it) {
        const OrientedGraph g = random_graph(rng, rng.uniform_int(1, 7));
        std::vector<int> flips;
        for (int e = 0; e < g.edge_count(); ++e)
            if (rng.chance(0.5)) flips.push_back(e);
        CHECK(charpoly(odd_laplacian(g)) ==
              charpoly(odd_laplacian(flip_orientation(g, flips))));
    }
}
