#include "squad/graph_io.hpp"

#include "doctest.h"
#include "helpers.hpp"
#include "squad/verifier.hpp"

using namespace squad;
using namespace squad::testhelp;

TEST_CASE("parse digraph") {
  auto pg = parse_graph_file("digraph 3\n0 1\n1 2\n2 0\n");
  auto* d = std::get_if<Digraph>(&pg);
  REQUIRE(d);
  CHECK(*d == cycle_digraph(3));

  auto loop = parse_graph_file("digraph 2\n0 0\n");
  CHECK(std::get<Digraph>(loop).has_arc(0, 0));
}

TEST_CASE("parse graph collapses duplicates") {
  auto pg = parse_graph_file("graph 3\n0 1\n1 0\n");
  auto* g = std::get_if<UGraph>(&pg);
  REQUIRE(g);
  CHECK(g->edge_count() == 1);
  CHECK(g->has_edge(0, 1));
}

TEST_CASE("comments and blank lines") {
  auto pg = parse_graph_file("# header comment\n\ndigraph 2\n# arc\n0 1\n\n");
  CHECK(std::get<Digraph>(pg).has_arc(0, 1));
}

TEST_CASE("parse errors carry line numbers") {
  try {
    parse_graph_file("digraph 2\n0 5\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
  }

  try {
    parse_graph_file("graph 3\n0 1\n2 2\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 3);
  }

  CHECK_THROWS_AS(parse_graph_file("graphviz 3\n"), ParseError);
  CHECK_THROWS_AS(parse_graph_file(""), ParseError);
  CHECK_THROWS_AS(parse_graph_file("digraph 0\n"), ParseError);
  CHECK_THROWS_AS(parse_graph_file("digraph 2\n0 x\n"), ParseError);
  CHECK_THROWS_AS(parse_graph_file("digraph 65\n"), CapacityError);
}

TEST_CASE("write then parse round trip") {
  std::mt19937_64 rng(31);
  for (int iter = 0; iter < 500; ++iter) {
    int n = 1 + int(rng() % 10);
    if (iter % 2) {
      Digraph d = random_digraph(n, 0.4, rng, true);
      std::string text = write_graph_file(d);
      CHECK(std::get<Digraph>(parse_graph_file(text)) == d);
      CHECK(write_graph_file(std::get<Digraph>(parse_graph_file(text))) ==
            text);
    } else {
      UGraph g = random_graph(n, 0.4, rng);
      std::string text = write_graph_file(g);
      CHECK(std::get<UGraph>(parse_graph_file(text)) == g);
      CHECK(write_graph_file(std::get<UGraph>(parse_graph_file(text))) == text);
    }
  }
}

TEST_CASE("normalization is idempotent on unordered input") {
  std::string scrambled = "graph 4\n2 0\n0 1\n3 2\n1 0\n";
  std::string once = write_graph_file(std::get<UGraph>(parse_graph_file(scrambled)));
  std::string twice = write_graph_file(std::get<UGraph>(parse_graph_file(once)));
  CHECK(once == twice);
  CHECK(once == "graph 4\n0 1\n0 2\n2 3\n");
}
