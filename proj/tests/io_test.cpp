#include <doctest.h>

#include <sstream>

#include "aqn/io.hpp"

using namespace aqn;

TEST_CASE("edgelist export of AQ_1 and AQ_3") {
    CHECK(export_graph(AugCube::build(Dimension(1)), GraphFormat::edgelist) == "2 1\n0 1\n");

    const auto text = export_graph(AugCube::build(Dimension(3)), GraphFormat::edgelist);
    std::istringstream in(text);
    std::string line;
    std::getline(in, line);
    CHECK(line == "8 20");
    int count = 0;
    while (std::getline(in, line))
        if (!line.empty()) ++count;
    CHECK(count == 20);
}

TEST_CASE("dimacs export uses 1-based ids") {
    const auto text = export_graph(AugCube::build(Dimension(1)), GraphFormat::dimacs);
    CHECK(text == "p edge 2 1\ne 1 2\n");
}

TEST_CASE("round-trips reproduce the edge set for both formats") {
    for (int n = 1; n <= 6; ++n) {
        const auto g = AugCube::build(Dimension(n));
        for (auto format : {GraphFormat::edgelist, GraphFormat::dimacs}) {
            const auto imported = import_graph(export_graph(g, format), format);
            REQUIRE(imported.num_vertices == g.num_vertices());
            REQUIRE(imported.edges == g.edges());
        }
    }
}

TEST_CASE("import reports the offending line") {
    try {
        import_graph("4 2\n0 1\n0 x\n", GraphFormat::edgelist);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
    }

    CHECK_THROWS_AS(import_graph("", GraphFormat::edgelist), ParseError);
    CHECK_THROWS_AS(import_graph("2 1\n0 5\n", GraphFormat::edgelist), ParseError);
    CHECK_THROWS_AS(import_graph("2 2\n0 1\n", GraphFormat::edgelist), ParseError);
    CHECK_THROWS_AS(import_graph("2 1\n0 1\n0 1\n", GraphFormat::edgelist), ParseError);
    CHECK_THROWS_AS(import_graph("p edge 2 1\ne 0 1\n", GraphFormat::dimacs), ParseError);
}

TEST_CASE("dimacs comments are tolerated") {
    const auto g = import_graph("c generated\np edge 2 1\nc body\ne 1 2\n", GraphFormat::dimacs);
    CHECK(g.num_vertices == 2);
    CHECK(g.edges == std::vector<std::pair<VertexId, VertexId>>{{0, 1}});
}

TEST_CASE("format names parse") {
    CHECK(parse_graph_format("edgelist") == GraphFormat::edgelist);
    CHECK(parse_graph_format("dimacs") == GraphFormat::dimacs);
    CHECK_THROWS_AS(parse_graph_format("gml"), std::invalid_argument);
}
