#include <catch2/catch_amalgamated.hpp>

#include "lapglue/graph.hpp"
#include "lapglue/sampling.hpp"

using namespace lapglue;

namespace {
bool has_code(const Error& e, errc c) { return e.code() == c; }
} // namespace

TEST_CASE("graph construction validates its invariants") {
    const OrientedGraph g = new_graph(3, {{0, 1}, {1, 2}});
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 2);

    CHECK_THROWS_MATCHES(new_graph(2, {{0, 0}}), Error,
                         Catch::Matchers::Predicate<Error>(
                             [](const Error& e) { return has_code(e, errc::self_loop); }));
    CHECK_THROWS_MATCHES(new_graph(4, {{0, 1}, {1, 0}}), Error,
                         Catch::Matchers::Predicate<Error>(
                             [](const Error& e) { return has_code(e, errc::parallel_edge); }));
    CHECK_THROWS_MATCHES(new_graph(2, {{0, 5}}), Error,
                         Catch::Matchers::Predicate<Error>([](const Error& e) {
                             return has_code(e, errc::index_out_of_range);
                         }));
}

TEST_CASE("generators") {
    const OrientedGraph p2 = path_graph(2);
    REQUIRE(p2.edge_count() == 1);
    CHECK(p2.edge(0) == Edge{0, 1});

    const OrientedGraph k3 = complete_graph(3);
    REQUIRE(k3.edge_count() == 3);
    CHECK(k3.edge(0) == Edge{0, 1});
    CHECK(k3.edge(1) == Edge{0, 2});
    CHECK(k3.edge(2) == Edge{1, 2});

    const OrientedGraph c3 = cycle_graph(3);
    CHECK(c3.vertex_count() == 3);
    CHECK(c3.edge_count() == 3);
    CHECK(connected_components(c3).count == 1);

    CHECK_THROWS_AS(cycle_graph(2), Error);
    CHECK_THROWS_AS(path_graph(0), Error);
}

TEST_CASE("zeta classification") {
    const OrientedGraph g = new_graph(4, {{0, 1}, {2, 3}, {0, 2}, {1, 2}});
    CHECK(zeta(g, 0, 1).value == 0); // (0,1) vs (2,3): not incident
    CHECK(zeta(g, 0, 2).value == 1); // both start at v0
    CHECK(zeta(g, 0, 3).value == -1); // one ends, one starts at v1
    CHECK(zeta(g, 0, 2).tag == ZetaTag::same_endpoint_role);
    CHECK_THROWS_MATCHES(zeta(g, 1, 1), Error,
                         Catch::Matchers::Predicate<Error>(
                             [](const Error& e) { return has_code(e, errc::same_edge); }));

    Sampler rng(7);
    for (int it = 0; it < 50; ++it) { // symmetry
        const OrientedGraph h = random_graph(rng, rng.uniform_int(2, 8));
        for (int i = 0; i < h.edge_count(); ++i)
            for (int j = i + 1; j < h.edge_count(); ++j)
                CHECK(zeta(h, i, j).value == zeta(h, j, i).value);
    }
}

TEST_CASE("interface gluing of two paths at an endpoint is a path") {
    const OrientedGraph p2 = path_graph(2);
    InterfaceSpec iface;
    iface.vertices_1 = {1};
    iface.vertices_2 = {0};
    const GluedGraph glued = glue_interface(p2, p2, iface);
    CHECK(glued.graph.vertex_count() == 3);
    CHECK(glued.graph.edge_count() == 2);
    CHECK(glued.vertex_map_1[1] == glued.vertex_map_2[0]);
    CHECK(connected_components(glued.graph).count == 1);
}

TEST_CASE("complete graphs glued at a vertex") {
    InterfaceSpec iface;
    iface.vertices_1 = {1};
    iface.vertices_2 = {0};
    const GluedGraph glued = glue_interface(complete_graph(2), complete_graph(2), iface);
    CHECK(glued.graph.vertex_count() == 3);
    CHECK(glued.graph.edge_count() == 2);
}

TEST_CASE("two triangles glued along a shared edge") {
    const OrientedGraph c3 = cycle_graph(3); // edges (0,1),(1,2),(0,2)
    InterfaceSpec iface;
    iface.vertices_1 = {1, 2};
    iface.vertices_2 = {1, 2};
    iface.edges_1 = {1}; // (1,2) in both graphs
    iface.edges_2 = {1};
    const GluedGraph glued = glue_interface(c3, c3, iface);
    CHECK(glued.graph.vertex_count() == 4);
    CHECK(glued.graph.edge_count() == 5);
}

TEST_CASE("interface validation rejects bad specs") {
    const OrientedGraph c3 = cycle_graph(3);
    InterfaceSpec closure_violation; // both endpoints shared but the edge is not
    closure_violation.vertices_1 = {1, 2};
    closure_violation.vertices_2 = {1, 2};
    CHECK_THROWS_MATCHES(glue_interface(c3, c3, closure_violation), Error,
                         Catch::Matchers::Predicate<Error>([](const Error& e) {
                             return has_code(e, errc::invalid_interface);
                         }));

    InterfaceSpec orientation_mismatch;
    const OrientedGraph a = new_graph(2, {{0, 1}});
    const OrientedGraph b = new_graph(2, {{1, 0}});
    orientation_mismatch.vertices_1 = {0, 1};
    orientation_mismatch.vertices_2 = {0, 1};
    orientation_mismatch.edges_1 = {0};
    orientation_mismatch.edges_2 = {0};
    CHECK_THROWS_MATCHES(glue_interface(a, b, orientation_mismatch), Error,
                         Catch::Matchers::Predicate<Error>([](const Error& e) {
                             return has_code(e, errc::invalid_interface);
                         }));

    InterfaceSpec duplicate;
    duplicate.vertices_1 = {0, 0};
    duplicate.vertices_2 = {0, 1};
    CHECK_THROWS_AS(glue_interface(c3, c3, duplicate), Error);
}

TEST_CASE("empty interface gives the disjoint union") {
    const GluedGraph glued = glue_interface(cycle_graph(3), path_graph(2), InterfaceSpec{});
    CHECK(glued.graph.vertex_count() == 5);
    CHECK(glued.graph.edge_count() == 4);
    CHECK(connected_components(glued.graph).count == 2);
}

TEST_CASE("bridge gluing") {
    const GluedGraph p4 = glue_bridge(complete_graph(2), complete_graph(2), BridgeSpec{{{1, 0}}});
    CHECK(p4.graph.vertex_count() == 4);
    CHECK(p4.graph.edge_count() == 3);
    CHECK(p4.bridge_edges == std::vector<int>{1});

    const GluedGraph single =
        glue_bridge(new_graph(1, {}), new_graph(1, {}), BridgeSpec{{{0, 0}}});
    CHECK(single.graph.vertex_count() == 2);
    CHECK(single.graph.edge_count() == 1);

    const GluedGraph two = glue_bridge(cycle_graph(3), cycle_graph(3),
                                       BridgeSpec{{{0, 0}, {1, 1}}});
    CHECK(two.graph.vertex_count() == 6);
    CHECK(two.graph.edge_count() == 8);

    CHECK_THROWS_MATCHES(
        glue_bridge(cycle_graph(3), cycle_graph(3), BridgeSpec{{{0, 0}, {0, 1}}}), Error,
        Catch::Matchers::Predicate<Error>(
            [](const Error& e) { return has_code(e, errc::invalid_bridge); }));
    CHECK_THROWS_AS(glue_bridge(cycle_graph(3), cycle_graph(3), BridgeSpec{}), Error);
}

TEST_CASE("orientation flips") {
    const OrientedGraph p3 = path_graph(3);
    CHECK(flip_orientation(p3, {}) == p3);

    const OrientedGraph flipped = flip_orientation(p3, {1});
    CHECK(flipped.edge(0) == Edge{0, 1});
    CHECK(flipped.edge(1) == Edge{2, 1});

    std::vector<int> all{0, 1};
    CHECK(flip_orientation(flip_orientation(p3, all), all) == p3);
    CHECK_THROWS_AS(flip_orientation(p3, {5}), Error);
}

TEST_CASE("connected components and Euler characteristic") {
    CHECK(connected_components(path_graph(4)).count == 1);
    CHECK(connected_components(new_graph(3, {})).count == 3);

    // K3 and K2 living disjointly in one 5-vertex graph
    const OrientedGraph two = new_graph(5, {{0, 1}, {0, 2}, {1, 2}, {3, 4}});
    CHECK(connected_components(two).count == 2);

    CHECK(euler_characteristic(path_graph(3)) == 1);
    CHECK(euler_characteristic(cycle_graph(5)) == 0);
    CHECK(euler_characteristic(complete_graph(4)) == -2);
}

TEST_CASE("Euler characteristic is additive under gluing") {
    Sampler rng(11);
    for (int it = 0; it < 100; ++it) {
        const InterfaceInstance inst = random_interface_instance(rng, 6, 3);
        const int chi_i = inst.iface.vertex_count() - inst.iface.edge_count();
        const OrientedGraph glued = glue_interface(inst.g1, inst.g2, inst.iface).graph;
        CHECK(euler_characteristic(glued) ==
              euler_characteristic(inst.g1) + euler_characteristic(inst.g2) - chi_i);
    }
    for (int it = 0; it < 100; ++it) {
        const BridgeInstance inst = random_bridge_instance(rng, 6, 4);
        const OrientedGraph glued = glue_bridge(inst.g1, inst.g2, inst.bridge).graph;
        CHECK(euler_characteristic(glued) == euler_characteristic(inst.g1) +
                                                 euler_characteristic(inst.g2) -
                                                 inst.bridge.count());
    }
}

TEST_CASE("gluings always produce valid simple graphs") {
    // The OrientedGraph constructor enforces the invariants, so building many
    // random gluings is itself the property check.
    Sampler rng(13);
    for (int it = 0; it < 200; ++it) {
        const InterfaceInstance ii = random_interface_instance(rng, 7, 4);
        const GluedGraph gi = glue_interface(ii.g1, ii.g2, ii.iface);
        CHECK(gi.graph.vertex_count() ==
              ii.g1.vertex_count() + ii.g2.vertex_count() - ii.iface.vertex_count());
        CHECK(gi.graph.edge_count() ==
              ii.g1.edge_count() + ii.g2.edge_count() - ii.iface.edge_count());

        const BridgeInstance bi = random_bridge_instance(rng, 7, 4);
        const GluedGraph gb = glue_bridge(bi.g1, bi.g2, bi.bridge);
        CHECK(gb.graph.edge_count() ==
              bi.g1.edge_count() + bi.g2.edge_count() + bi.bridge.count());
    }
}

TEST_CASE("flips preserve zeta inside and outside the set and negate across") {
    Sampler rng(17);
    for (int it = 0; it < 50; ++it) {
        OrientedGraph g = random_graph(rng, rng.uniform_int(2, 7));
        if (g.edge_count() < 2) continue;
        std::vector<int> flips;
        std::vector<bool> in_set(g.edge_count(), false);
        for (int e = 0; e < g.edge_count(); ++e)
            if (rng.chance(0.5)) {
                flips.push_back(e);
                in_set[e] = true;
            }
        const OrientedGraph f = flip_orientation(g, flips);
        for (int i = 0; i < g.edge_count(); ++i)
            for (int j = 0; j < g.edge_count(); ++j) {
                if (i == j) continue;
                const int before = zeta(g, i, j).value;
                const int after = zeta(f, i, j).value;
                if (in_set[i] != in_set[j])
                    CHECK(after == -before);
                else
                    CHECK(after == before);
            }
    }
}

TEST_CASE("vertex maps agree on identified vertices and are disjoint elsewhere") {
    Sampler rng(23);
    for (int it = 0; it < 80; ++it) {
        const InterfaceInstance inst = random_interface_instance(rng, 7, 4);
        const GluedGraph glued = glue_interface(inst.g1, inst.g2, inst.iface);
        std::vector<bool> identified_2(inst.g2.vertex_count(), false);
        for (int j = 0; j < inst.iface.vertex_count(); ++j) {
            CHECK(glued.vertex_map_1[inst.iface.vertices_1[j]] ==
                  glued.vertex_map_2[inst.iface.vertices_2[j]]);
            identified_2[inst.iface.vertices_2[j]] = true;
        }
        for (int a = 0; a < inst.g1.vertex_count(); ++a)
            for (int b = 0; b < inst.g2.vertex_count(); ++b) {
                if (identified_2[b]) continue;
                CHECK(glued.vertex_map_1[a] != glued.vertex_map_2[b]);
            }
        // edge maps agree on identified edges as well
        for (int j = 0; j < inst.iface.edge_count(); ++j)
            CHECK(glued.edge_map_1[inst.iface.edges_1[j]] ==
                  glued.edge_map_2[inst.iface.edges_2[j]]);
    }
}

TEST_CASE("canonical interface layout matches the matrix conventions") {
    Sampler rng(19);
    for (int it = 0; it < 50; ++it) {
        const InterfaceInstance inst = random_interface_instance(rng, 6, 3);
        const CanonicalInterface c = canonical_interface_layout(inst.g1, inst.g2, inst.iface);
        CHECK(interface_is_canonical(c.g1, c.g2, c.iface));
        // Relabeling preserves the glued result up to nothing at all: the
        // canonical spec glues to the same vertex/edge counts and charpoly-level
        // tests elsewhere pin full equality.
        const GluedGraph a = glue_interface(inst.g1, inst.g2, inst.iface);
        const GluedGraph b = glue_interface(c.g1, c.g2, c.iface);
        CHECK(a.graph.vertex_count() == b.graph.vertex_count());
        CHECK(a.graph.edge_count() == b.graph.edge_count());
    }
}
