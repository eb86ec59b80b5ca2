#include <doctest.h>

#include <random>
#include <sstream>

#include "oracles.hpp"
#include "rainbow/io.hpp"

using namespace rainbow;

TEST_SUITE("io") {
TEST_CASE("uncolored graph round trip is byte stable") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = oracle::random_connected_graph(rng, 1 + trial % 20, 0.2);
        std::string text = graph_to_string(g);
        GraphFile back = parse_graph_text(text);
        CHECK(back.kind == ColoringKind::Uncolored);
        CHECK(back.graph == g);
        CHECK(graph_to_string(back.graph) == text);
    }
}

TEST_CASE("colored round trip keeps edge indices") {
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = oracle::random_connected_graph(rng, 2 + trial % 12, 0.3);
        EdgeColoring chi(oracle::random_colors(rng, g.num_edges(), 5));
        std::string text = graph_to_string(g, chi);
        GraphFile back = parse_graph_text(text);
        CHECK(back.kind == ColoringKind::Colored);
        CHECK(back.total_coloring().colors == chi.colors);
        CHECK(graph_to_string(back.graph, back.total_coloring()) == text);
    }
}

TEST_CASE("edges in any order land on canonical indices") {
    GraphFile f = parse_graph_text("p graph 3 3\ne 3 2 7\ne 1 3 5\ne 2 1 4\n");
    CHECK(f.graph.edge(0) == Edge{0, 1});
    CHECK(f.total_coloring().colors == std::vector<Color>{4, 5, 7});
}

TEST_CASE("partial colorings and comments") {
    GraphFile f = parse_graph_text("c hello\np graph 3 2\nc role x\ne 1 2 *\ne 2 3 1\n");
    CHECK(f.kind == ColoringKind::Partial);
    CHECK(f.coloring.colors == std::vector<Color>{kUnassigned, 1});
    CHECK(f.comments == std::vector<std::string>{"hello", "role x"});
    CHECK_THROWS_AS(f.total_coloring(), GraphError);

    std::ostringstream os;
    write_graph(os, f.graph, f.coloring, {"role x"});
    CHECK(os.str() == "p graph 3 2\nc role x\ne 1 2 *\ne 2 3 1\n");

    GraphFile all_star = parse_graph_text("p graph 2 1\ne 1 2 *\n");
    CHECK(all_star.kind == ColoringKind::Uncolored);
}

TEST_CASE("malformed graph files name the line") {
    CHECK_THROWS_WITH_AS(parse_graph_text("p graph 3 1\ne 1 4\n"), doctest::Contains("line 2"), ParseError);
    CHECK_THROWS_WITH_AS(parse_graph_text("p graph 3 1\ne 1 x\n"), doctest::Contains("line 2"), ParseError);
    CHECK_THROWS_WITH_AS(parse_graph_text("e 1 2\n"), doctest::Contains("line 1"), ParseError);
    CHECK_THROWS_WITH_AS(parse_graph_text("p graph 3 2\ne 1 2\n"), doctest::Contains("declares 2"), ParseError);
    CHECK_THROWS_WITH_AS(parse_graph_text("p graph 3 1\ne 1 1\n"), doctest::Contains("(0,0)"), ParseError);
    CHECK_THROWS_AS(parse_graph_text("p graph 3 2\ne 1 2\ne 2 1\n"), ParseError);
    CHECK_THROWS_AS(parse_graph_text("p graph 3 1\ne 1 2 -1\n"), ParseError);
    CHECK_THROWS_AS(parse_graph_text("p graph 3 1\nq\n"), ParseError);
    CHECK_THROWS_AS(parse_graph_text(""), ParseError);
    CHECK_THROWS_AS(read_graph_file("/nonexistent/file.g"), ParseError);
}

TEST_CASE("pairs files") {
    std::istringstream in("1 2\nc skip\n\n3 1\n");
    PairSet p = parse_pairs(in, 3);
    REQUIRE(p.size() == 2);
    CHECK(p.pairs()[0] == VertexPair{0, 1});
    CHECK(p.pairs()[1] == VertexPair{0, 2});
    std::ostringstream os;
    write_pairs(os, p);
    CHECK(os.str() == "1 2\n1 3\n");

    std::istringstream bad("1 1\n");
    CHECK_THROWS_AS(parse_pairs(bad, 3), ParseError);
    std::istringstream out_of_range("1 4\n");
    CHECK_THROWS_AS(parse_pairs(out_of_range, 3), ParseError);
    std::istringstream short_line("1\n");
    CHECK_THROWS_AS(parse_pairs(short_line, 3), ParseError);
}

TEST_CASE("partition files") {
    std::istringstream in("c 2 4 5\nc 1 3 1 2\n");
    Partition pi = parse_partition(in, 5);
    REQUIRE(pi.num_classes() == 2);
    CHECK(pi.classes()[0] == std::vector<Vertex>{0, 1, 2});
    CHECK(pi.classes()[1] == std::vector<Vertex>{3, 4});
    std::ostringstream os;
    write_partition(os, pi);
    CHECK(os.str() == "c 1 1 2 3\nc 2 4 5\n");

    std::istringstream missing("c 1 1 2\n");
    CHECK_THROWS_AS(parse_partition(missing, 3), ParseError);
    std::istringstream overlap("c 1 1 2\nc 2 2 3\n");
    CHECK_THROWS_AS(parse_partition(overlap, 3), ParseError);
    std::istringstream dup("c 1 1\nc 1 2 3\n");
    CHECK_THROWS_AS(parse_partition(dup, 3), ParseError);
    std::istringstream junk("1 2 3\n");
    CHECK_THROWS_AS(parse_partition(junk, 3), ParseError);
}
}
