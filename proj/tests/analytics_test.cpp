#include <doctest.h>

#include <algorithm>

#include "aqn/analytics.hpp"
#include "aqn/graph.hpp"

using namespace aqn;

TEST_CASE("common neighbors, small hand-checked cases") {
    Dimension d3(3);
    CHECK(common_neighbors(0b000, 0b001, d3) == std::vector<VertexId>{0b010, 0b011});
    CHECK(common_neighbors(0b000, 0b111, d3) == std::vector<VertexId>{0b011, 0b100});
    CHECK_THROWS_AS(common_neighbors(0b010, 0b010, d3), std::invalid_argument);
}

TEST_CASE("hypercube edges always have exactly two common neighbors") {
    for (int n = 3; n <= 8; ++n) {
        Dimension d(n);
        for (VertexId x = 0; x < d.vertex_count(); ++x)
            for (int i = 1; i <= n; ++i)
                REQUIRE(common_neighbors(x, hyper_neighbor(x, i, d), d).size() == 2);
    }
}

TEST_CASE("closed-form common neighborhoods, hand-checked rows") {
    CHECK(common_neighbors_formula(0b0000, EdgeKind::complement(2), Dimension(4)) ==
          std::vector<VertexId>{0b0001, 0b0010, 0b0100, 0b0111});
    CHECK(common_neighbors_formula(0b000, EdgeKind::hypercube(1), Dimension(3)) ==
          std::vector<VertexId>{0b010, 0b011});
    CHECK_THROWS_AS(common_neighbors_formula(0, EdgeKind::complement(1), Dimension(4)),
                    std::invalid_argument);
}

TEST_CASE("closed form equals brute force on every edge, n=3..8") {
    for (int n = 3; n <= 8; ++n) {
        Dimension d(n);
        const auto g = AugCube::build(d);
        for (auto [u, v] : g.edges()) {
            const auto kind = classify_edge(u, v, d);
            REQUIRE(kind.has_value());
            REQUIRE(common_neighbors_formula(u, *kind, d) == common_neighbors(u, v, d));
        }
    }
}

TEST_CASE("set neighborhood") {
    Dimension d3(3);
    const std::vector<VertexId> single{0b000};
    CHECK(neighborhood_of_set(single, d3) == neighbors(0b000, d3));

    std::vector<VertexId> everything(8);
    for (VertexId v = 0; v < 8; ++v) everything[v] = v;
    CHECK(neighborhood_of_set(everything, d3).empty());

    const std::vector<VertexId> pair{0b000, 0b001};
    CHECK(neighborhood_of_set(pair, d3) ==
          std::vector<VertexId>{0b010, 0b011, 0b100, 0b101, 0b110, 0b111});

    CHECK_THROWS_AS(neighborhood_of_set({}, d3), std::invalid_argument);
}

TEST_CASE("edge boundaries of small sets") {
    Dimension d4(4);
    const std::vector<VertexId> single{5};
    CHECK(edge_boundary(single, d4).size() == 7);

    const std::vector<VertexId> adjacent_pair{0b0000, 0b0001};
    CHECK(edge_boundary(adjacent_pair, d4).size() == 12);  // 4n-4 at n=4

    const std::vector<VertexId> triangle{0b0000, 0b0001, 0b0011};
    CHECK(edge_boundary(triangle, d4).size() == 15);  // 6n-9 at n=4
}

TEST_CASE("neighborhood monotonicity: N(A) \\ B is contained in N(B) for A within B") {
    Dimension d(6);
    const std::vector<VertexId> a{0, 1, 3};
    const std::vector<VertexId> b{0, 1, 3, 7, 12};
    auto na = neighborhood_of_set(a, d);
    auto nb = neighborhood_of_set(b, d);
    for (VertexId v : na) {
        if (std::find(b.begin(), b.end(), v) != b.end()) continue;
        REQUIRE(std::binary_search(nb.begin(), nb.end(), v));
    }
}

TEST_CASE("2-path classification, pinned examples") {
    {
        Dimension d5(5);
        const VertexId x = 0b01010;
        PathTriple p{x, comp_neighbor(x, 2, d5), comp_neighbor(x, 4, d5)};
        const auto cls = path2_class(p, d5);
        CHECK(cls.family == PathFamily::CC);
        CHECK(path2_row_label(cls.family, cls.row) == doctest::String("j=i+2, j<n"));
        CHECK(path2_expected_size(cls, 5) == 13);
    }
    {
        Dimension d6(6);
        const VertexId x = 0;
        PathTriple p{x, hyper_neighbor(x, 1, d6), hyper_neighbor(x, 2, d6)};
        const auto cls = path2_class(p, d6);
        CHECK(cls.family == PathFamily::HH);
        CHECK(path2_expected_size(cls, 6) == 23);
    }
    {
        Dimension d6(6);
        const VertexId x = 0b101101;
        PathTriple p{x, hyper_neighbor(x, 1, d6), comp_neighbor(x, 6, d6)};
        const auto cls = path2_class(p, d6);
        CHECK(cls.family == PathFamily::HC);
        CHECK(cls.i == 1);
        CHECK(cls.j == 6);
        CHECK(path2_expected_size(cls, 6) == 24);
    }
}

TEST_CASE("2-path classification is order-insensitive and rejects bad input") {
    Dimension d5(5);
    const VertexId x = 0b00110;
    PathTriple p{x, hyper_neighbor(x, 3, d5), comp_neighbor(x, 4, d5)};
    PathTriple q{x, p.z, p.y};
    CHECK(path2_class(p, d5) == path2_class(q, d5));

    CHECK_THROWS_AS(path2_class({0, 1, 1}, d5), std::invalid_argument);
    CHECK_THROWS_AS(path2_class({0, 1, 6}, d5), std::invalid_argument);  // 6 not adjacent to 0
    CHECK_THROWS_AS(path2_class({0, 1, 2}, Dimension(4)), std::invalid_argument);
}

TEST_CASE("every center-edge pair lands in exactly one table row") {
    for (int n = 5; n <= 9; ++n) {
        Dimension d(n);
        const VertexId x = 0;
        const auto ring = neighbors(x, d);
        for (std::size_t a = 0; a < ring.size(); ++a)
            for (std::size_t b = a + 1; b < ring.size(); ++b) {
                const auto cls = path2_class({x, ring[a], ring[b]}, d);
                REQUIRE(cls.row >= 0);
                REQUIRE(cls.row < path2_row_count(cls.family));
                REQUIRE(path2_expected_size(cls, n) >= 6 * n - 17);
            }
    }
}
