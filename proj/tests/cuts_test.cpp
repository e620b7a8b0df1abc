#include <doctest.h>

#include <random>

#include "aqn/cuts.hpp"

using namespace aqn;

TEST_CASE("2-extra vertex-cut family has size 6n-17 for every base and index") {
    for (int n = 5; n <= 12; ++n) {
        Dimension d(n);
        for (int i = 2; i <= n - 3; ++i) {
            const auto cut = kappa2_candidate_cut(d, 0, i);
            REQUIRE(cut.members.size() == static_cast<std::size_t>(6 * n - 17));
        }
    }
    // Size is translation-invariant in the base vertex (checked at n=6).
    Dimension d6(6);
    for (VertexId x = 0; x < d6.vertex_count(); ++x)
        REQUIRE(kappa2_candidate_cut(d6, x, 2).members.size() == 19);

    CHECK_THROWS_AS(kappa2_candidate_cut(Dimension(5), 0, 3), std::invalid_argument);
    CHECK_THROWS_AS(kappa2_candidate_cut(Dimension(5), 0, 1), std::invalid_argument);
}

TEST_CASE("2-extra vertex cut certifies at n=9..10, isolating exactly the path") {
    for (int n : {9, 10}) {
        Dimension d(n);
        const auto g = AugCube::build(d);
        const auto cut = kappa2_candidate_cut(d, 0, 2);
        const auto cert = validate_cut(g, cut.members);
        REQUIRE(cert.disconnected);
        REQUIRE(cert.h_extra_valid(2));
        bool has3 = false;
        for (auto s : cert.component_sizes) has3 |= (s == 3);
        REQUIRE(has3);

        std::uint64_t total = cut.members.size();
        for (auto s : cert.component_sizes) total += s;
        REQUIRE(total == d.vertex_count());
    }
}

TEST_CASE("triangle cut: 6n-9 edges, certifies for n=4..11") {
    Dimension d4(4);
    const auto small = lambda2_candidate_cut(d4, 0);
    CHECK(small.triangle == std::array<VertexId, 3>{0b0000, 0b0001, 0b0011});
    CHECK(small.members.size() == 15);

    const auto g4 = AugCube::build(d4);
    const auto cert4 = validate_cut(g4, small.members);
    CHECK(cert4.component_sizes == std::vector<std::uint32_t>{3, 13});
    CHECK(cert4.h_extra_valid(2));

    for (int n = 5; n <= 11; ++n) {
        Dimension d(n);
        const auto cut = lambda2_candidate_cut(d, 0);
        REQUIRE(cut.members.size() == static_cast<std::size_t>(6 * n - 9));
        const auto cert = validate_cut(AugCube::build(d), cut.members);
        REQUIRE(cert.h_extra_valid(2));
    }
    CHECK(lambda2_candidate_cut(Dimension(12), 0).members.size() == 63);

    // The triangle really is a triangle.
    for (int n = 4; n <= 8; ++n) {
        Dimension d(n);
        const auto tri = lambda2_candidate_cut(d, 0).triangle;
        const auto g = AugCube::build(d);
        REQUIRE(g.has_edge(tri[0], tri[1]));
        REQUIRE(g.has_edge(tri[1], tri[2]));
        REQUIRE(g.has_edge(tri[0], tri[2]));
    }

    CHECK_THROWS_AS(lambda2_candidate_cut(Dimension(3), 0), std::invalid_argument);
}

TEST_CASE("1-extra candidates built on a single edge") {
    Dimension d6(6);
    CHECK(super_vertex_cut(d6, 0, 3).size() == 16);  // 4n-8 at n=6
    CHECK_THROWS_AS(super_vertex_cut(d6, 0, 6), std::invalid_argument);
    CHECK_THROWS_AS(super_vertex_cut(d6, 0, 1), std::invalid_argument);

    // A hypercube edge shares only two neighbors, so its pair neighborhood
    // is larger than 4n-8 and is rejected for the vertex variant.
    const std::vector<VertexId> hpair{0, hyper_neighbor(0, 3, d6)};
    CHECK(neighborhood_of_set(hpair, d6).size() == 20);

    Dimension d4(4);
    CHECK(super_edge_cut(d4, 0, EdgeKind::hypercube(2)).size() == 12);  // 4n-4
    CHECK(super_edge_cut(d4, 0, EdgeKind::complement(3)).size() == 12);

    // Both certify as 1-extra cuts in the families' ranges.
    const auto g6 = AugCube::build(d6);
    CHECK(validate_cut(g6, super_vertex_cut(d6, 0, 3)).h_extra_valid(1));
    const auto g4 = AugCube::build(d4);
    CHECK(validate_cut(g4, super_edge_cut(d4, 0, EdgeKind::hypercube(1))).h_extra_valid(1));
}

TEST_CASE("validate_cut conservation under random cuts") {
    std::mt19937 rng(20240811);
    for (int n : {4, 5, 6}) {
        Dimension d(n);
        const auto g = AugCube::build(d);
        const auto nv = g.num_vertices();
        for (int trial = 0; trial < 40; ++trial) {
            std::vector<VertexId> vs;
            for (VertexId v = 0; v < nv; ++v)
                if (rng() % 4 == 0) vs.push_back(v);
            if (vs.empty() || vs.size() == nv) continue;
            const auto cert = validate_cut(g, vs);
            std::uint64_t total = cert.vertex_members.size();
            for (auto s : cert.component_sizes) total += s;
            REQUIRE(total == d.vertex_count());

            const auto all_edges = g.edges();
            std::vector<std::pair<VertexId, VertexId>> es;
            for (const auto& e : all_edges)
                if (rng() % 3 == 0) es.push_back(e);
            if (es.empty()) continue;
            const auto ecert = validate_cut(g, es);
            std::uint64_t etotal = 0;
            for (auto s : ecert.component_sizes) etotal += s;
            REQUIRE(etotal == d.vertex_count());
        }
    }
}

TEST_CASE("validate_cut edge and argument handling") {
    const auto g = AugCube::build(Dimension(4));
    CHECK_FALSE(validate_cut(g, std::span<const VertexId>{}).disconnected);

    const std::vector<VertexId> bad{99};
    CHECK_THROWS_AS(validate_cut(g, bad), std::invalid_argument);
    const std::vector<std::pair<VertexId, VertexId>> notedge{{0, 6}};
    CHECK_THROWS_AS(validate_cut(g, notedge), std::invalid_argument);
}

TEST_CASE("exhaustive optimum equals the triangle construction at n=4") {
    const auto g = AugCube::build(Dimension(4));
    const auto best = extra_conn_exhaustive(g, 2, ConnKind::edge);
    const auto built = lambda2_candidate_cut(Dimension(4), 0);
    REQUIRE(best.value.has_value());
    CHECK(*best.value == built.members.size());
}
