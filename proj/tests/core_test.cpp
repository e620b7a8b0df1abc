#include <doctest.h>

#include <set>

#include "aqn/core.hpp"
#include "aqn/graph.hpp"

using namespace aqn;

namespace {

// Binary literals in vertex-label order x_n...x_1 keep the test values
// readable against hand-worked examples.
constexpr VertexId operator""_v(unsigned long long v) { return static_cast<VertexId>(v); }

}  // namespace

TEST_CASE("dimension validation and derived counts") {
    CHECK_THROWS_AS(Dimension(0), std::invalid_argument);
    CHECK_THROWS_AS(Dimension(31), std::invalid_argument);
    CHECK(Dimension(1).degree() == 1);
    CHECK(Dimension(1).edge_count() == 1);
    CHECK(Dimension(3).degree() == 5);
    CHECK(Dimension(3).edge_count() == 20);
    CHECK(Dimension(2).is_complete());
    CHECK_FALSE(Dimension(3).is_complete());
}

TEST_CASE("hypercube neighbor flips a single bit") {
    Dimension d3(3);
    CHECK(hyper_neighbor(0b000_v, 1, d3) == 0b001_v);
    CHECK(hyper_neighbor(0b0101_v, 3, Dimension(4)) == 0b0001_v);
    CHECK_THROWS_AS(hyper_neighbor(0b000_v, 4, d3), std::invalid_argument);
    CHECK_THROWS_AS(hyper_neighbor(0b1000_v, 1, d3), std::invalid_argument);
}

TEST_CASE("complement neighbor flips the low bits") {
    Dimension d3(3);
    CHECK(comp_neighbor(0b000_v, 3, d3) == 0b111_v);
    CHECK(comp_neighbor(0b0000_v, 2, Dimension(4)) == 0b0011_v);
}

TEST_CASE("neighbor operators are involutions and agree at dimension 1") {
    for (int n = 1; n <= 12; ++n) {
        Dimension d(n);
        for (VertexId x = 0; x < d.vertex_count(); ++x) {
            for (int i = 1; i <= n; ++i) {
                CHECK(hyper_neighbor(hyper_neighbor(x, i, d), i, d) == x);
                CHECK(comp_neighbor(comp_neighbor(x, i, d), i, d) == x);
            }
            CHECK(comp_neighbor(x, 1, d) == hyper_neighbor(x, 1, d));
        }
    }
}

TEST_CASE("neighborhood of 000 in AQ_3 matches the reference picture") {
    Dimension d3(3);
    const std::vector<VertexId> expected{0b001, 0b010, 0b011, 0b100, 0b111};
    CHECK(neighbors(0b000_v, d3) == expected);
}

TEST_CASE("neighborhoods have exactly 2n-1 distinct members") {
    for (int n = 2; n <= 12; ++n) {
        Dimension d(n);
        for (VertexId x = 0; x < d.vertex_count(); ++x) {
            auto nb = neighbors(x, d);
            std::set<VertexId> uniq(nb.begin(), nb.end());
            REQUIRE(uniq.size() == static_cast<std::size_t>(2 * n - 1));
            REQUIRE(uniq.count(x) == 0);
        }
    }
    CHECK(neighbors(0_v, Dimension(1)) == std::vector<VertexId>{1});
}

TEST_CASE("edge classification") {
    Dimension d3(3);
    CHECK(classify_edge(0b000_v, 0b111_v, d3) == EdgeKind::complement(3));
    CHECK_FALSE(classify_edge(0b000_v, 0b110_v, d3).has_value());
    CHECK_FALSE(classify_edge(0b010_v, 0b010_v, d3).has_value());
    // Differing only in bit 1 is hypercube(1), never complement(1).
    CHECK(classify_edge(0b000_v, 0b001_v, d3) == EdgeKind::hypercube(1));
    CHECK(classify_edge(0b100_v, 0b110_v, d3) == EdgeKind::hypercube(2));
    CHECK(classify_edge(0b001_v, 0b110_v, d3) == std::nullopt);
}

TEST_CASE("classification agrees with membership and is symmetric") {
    for (int n = 2; n <= 8; ++n) {
        Dimension d(n);
        for (VertexId x = 0; x < d.vertex_count(); ++x) {
            auto nb = neighbors(x, d);
            std::set<VertexId> ring(nb.begin(), nb.end());
            for (VertexId y = 0; y < d.vertex_count(); ++y) {
                auto kind = classify_edge(x, y, d);
                REQUIRE(kind.has_value() == (ring.count(y) > 0));
                REQUIRE(kind.has_value() == classify_edge(y, x, d).has_value());
                if (kind) REQUIRE(edge_endpoint(x, *kind, d) == y);
            }
        }
    }
}

TEST_CASE("halves and crossed neighbors") {
    Dimension d3(3);
    CHECK(half(0b000_v, d3) == Half::L);
    CHECK(half(0b100_v, d3) == Half::R);
    CHECK(crossed_neighbors(0b000_v, d3) == std::pair<VertexId, VertexId>{0b100, 0b111});
    CHECK_THROWS_AS(crossed_neighbors(0_v, Dimension(1)), std::invalid_argument);

    for (int n = 2; n <= 12; ++n) {
        Dimension d(n);
        for (VertexId x = 0; x < d.vertex_count(); ++x) {
            auto [a, b] = crossed_neighbors(x, d);
            REQUIRE(a != b);
            REQUIRE(half(a, d) != half(x, d));
            REQUIRE(half(b, d) != half(x, d));
            auto [a1, a2] = crossed_neighbors(a, d);
            auto [b1, b2] = crossed_neighbors(b, d);
            REQUIRE((a1 == x || a2 == x));
            REQUIRE((b1 == x || b2 == x));
        }
    }
}

TEST_CASE("materialized graphs: base cases") {
    const auto k2 = AugCube::build(Dimension(1));
    CHECK(k2.num_vertices() == 2);
    CHECK(k2.edges() == std::vector<std::pair<VertexId, VertexId>>{{0, 1}});

    const auto k4 = AugCube::build(Dimension(2));
    CHECK(k4.num_vertices() == 4);
    CHECK(k4.num_edges() == 6);
    for (VertexId u = 0; u < 4; ++u)
        for (VertexId v = u + 1; v < 4; ++v) REQUIRE(k4.has_edge(u, v));

    const auto aq3 = AugCube::build(Dimension(3));
    CHECK(aq3.num_vertices() == 8);
    CHECK(aq3.edges().size() == 20);
}

TEST_CASE("degree and edge count formulas hold exhaustively") {
    for (int n = 2; n <= 12; ++n) {
        Dimension d(n);
        std::uint64_t stubs = 0;
        for (VertexId x = 0; x < d.vertex_count(); ++x) {
            auto nb = neighbors(x, d);
            REQUIRE(nb.size() == static_cast<std::size_t>(2 * n - 1));
            stubs += nb.size();
        }
        CHECK(stubs / 2 == d.edge_count());
    }
}

TEST_CASE("recursive and direct construction produce the same edge set") {
    for (int n = 2; n <= 10; ++n) {
        const auto direct = AugCube::build(Dimension(n));
        const auto recursive = AugCube::build_recursive(Dimension(n));
        REQUIRE(direct.edges() == recursive.edges());
    }
}

TEST_CASE("materialization cap is enforced") {
    CHECK_THROWS_AS(AugCube::build(Dimension(21)), CapacityError);
}
