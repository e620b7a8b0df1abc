#include <doctest.h>

#include "aqn/census.hpp"

using namespace aqn;

TEST_CASE("2-path census at n=5: every instance matches its table row") {
    const auto rep = census_path2(AugCube::build(Dimension(5)));
    CHECK(rep.pass());
    CHECK(rep.instances == 1152);  // 2^5 centers x C(9,2) end pairs
    CHECK(rep.observed_min == 13);
    CHECK(rep.subfamily_min == 15);

    std::uint64_t classified = 0;
    for (const auto& [key, stat] : rep.classes) {
        classified += stat.count;
        CHECK(stat.observed_min == stat.expected);
        CHECK(stat.observed_max == stat.expected);
    }
    CHECK(classified == rep.instances);
}

TEST_CASE("2-path census at n=6 and n=7 stays clean") {
    for (int n : {6, 7}) {
        const auto rep = census_path2(AugCube::build(Dimension(n)));
        REQUIRE(rep.pass());
        REQUIRE(rep.observed_min == 6 * n - 17);
        REQUIRE(rep.subfamily_min >= 6 * n - 15);
    }
}

TEST_CASE("2-path census refuses out-of-range dimensions") {
    CHECK_THROWS_AS(census_path2(AugCube::build(Dimension(4))), CapacityError);
}

TEST_CASE("parallel census merges to the single-threaded result") {
    const auto g = AugCube::build(Dimension(6));
    const auto seq = census_path2(g, 1);
    const auto par = census_path2(g, 4);
    CHECK(par.instances == seq.instances);
    CHECK(par.observed_min == seq.observed_min);
    CHECK(par.observed_max == seq.observed_max);
    CHECK(par.subfamily_min == seq.subfamily_min);
    REQUIRE(par.classes.size() == seq.classes.size());
    for (const auto& [key, stat] : seq.classes) {
        REQUIRE(par.classes.count(key) == 1);
        REQUIRE(par.classes.at(key).count == stat.count);
    }
}

TEST_CASE("edge census at n=3: 16 edges with two common neighbors, 4 with four") {
    const auto rep = verify_edge_common_neighbors(AugCube::build(Dimension(3)));
    CHECK(rep.pass());
    CHECK(rep.instances == 20);
    CHECK(rep.histogram.at(2) == 16);
    CHECK(rep.histogram.at(4) == 4);
}

TEST_CASE("edge census at n=6: the 4-common edges are the inner complement edges") {
    const auto rep = verify_edge_common_neighbors(AugCube::build(Dimension(6)));
    CHECK(rep.pass());
    CHECK(rep.histogram.at(4) == (6 - 2) * 32);  // (n-2) * 2^(n-1)
}

TEST_CASE("all-pairs census: at most four common neighbors") {
    for (int n : {3, 6}) {
        const auto rep = verify_pair_common_neighbors(AugCube::build(Dimension(n)));
        REQUIRE(rep.pass());
        REQUIRE(rep.observed_max == 4);
    }
}

TEST_CASE("quad bound census at n=5") {
    const auto rep = verify_quad_bound(AugCube::build(Dimension(5)));
    CHECK(rep.pass());
    CHECK(rep.observed_min >= 8 * 5 - 31);
    CHECK(rep.subfamily_min >= 8 * 5 - 29);
}

TEST_CASE("census reports merge associatively") {
    CensusReport a, b, c;
    a.instances = 3;
    a.observed_min = 10;
    a.classes["k"] = {3, 12, 10, 12};
    b.instances = 2;
    b.observed_min = 9;
    b.classes["k"] = {2, 12, 11, 13};
    c.instances = 1;
    c.observed_max = 20;

    CensusReport ab = a;
    ab.absorb(b);
    CensusReport ab_c = ab;
    ab_c.absorb(c);

    CensusReport bc = b;
    bc.absorb(c);
    CensusReport a_bc = a;
    a_bc.absorb(bc);

    CHECK(ab_c.instances == a_bc.instances);
    CHECK(ab_c.observed_min == a_bc.observed_min);
    CHECK(ab_c.observed_max == a_bc.observed_max);
    CHECK(ab_c.classes.at("k").count == a_bc.classes.at("k").count);
    CHECK(ab_c.classes.at("k").observed_min == a_bc.classes.at("k").observed_min);
    CHECK(ab_c.classes.at("k").observed_max == a_bc.classes.at("k").observed_max);
}
