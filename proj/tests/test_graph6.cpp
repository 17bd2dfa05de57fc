#include <catch2/catch_amalgamated.hpp>

#include "histlab/constructions.hpp"
#include "histlab/graph6.hpp"
#include "oracles.hpp"

using histlab::Graph;
using histlab::Graph6Error;

TEST_CASE("reference encodings", "[graph6]") {
  CHECK(histlab::emit_graph6(histlab::build_complete(4)) == "C~");
  CHECK(histlab::emit_graph6(Graph(1)) == "@");
  CHECK(histlab::emit_graph6(histlab::build_path(2)) == "A_");
  // frozen regression bytes for the counterexample family
  CHECK(histlab::emit_graph6(histlab::build_counterexample({2, 8}).graph) == "GhM?GK");
  CHECK(histlab::emit_graph6(histlab::build_counterexample({3, 15}).graph) == "NyCWx?@?WBo??@?@_?w");
}

TEST_CASE("parse reverses emit", "[graph6]") {
  CHECK(histlab::parse_graph6("C~") == histlab::build_complete(4));
  CHECK(histlab::parse_graph6(">>graph6<<C~") == histlab::build_complete(4));
  std::vector<Graph> corpus{
      Graph(0),
      Graph(1),
      Graph(5),  // no edges
      histlab::build_complete(7),
      histlab::build_path(9),
      histlab::build_cycle(6),
      histlab::build_counterexample({2, 8}).graph,
      histlab::build_counterexample({3, 15}).graph,
      histlab::build_counterexample({4, 24}).graph,
      histlab::build_path(63),   // multi-byte order header
      histlab::build_path(100),
  };
  std::mt19937_64 rng(777);
  for (int i = 0; i < 40; ++i) corpus.push_back(oracles::random_graph_min_degree_one(rng));
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    CAPTURE(i, corpus[i].vertex_count());
    CHECK(histlab::parse_graph6(histlab::emit_graph6(corpus[i])) == corpus[i]);
  }
}

TEST_CASE("large orders use the extended header", "[graph6]") {
  const std::string text = histlab::emit_graph6(histlab::build_path(63));
  REQUIRE(text.size() >= 4);
  CHECK(static_cast<unsigned char>(text[0]) == 126);
  CHECK(text.substr(0, 4) == "~??~");
}

TEST_CASE("parse errors are distinct", "[graph6]") {
  CHECK_THROWS_WITH(histlab::parse_graph6(""), Catch::Matchers::ContainsSubstring("malformed header"));
  CHECK_THROWS_WITH(histlab::parse_graph6("C"), Catch::Matchers::ContainsSubstring("truncated payload"));
  CHECK_THROWS_WITH(histlab::parse_graph6("C~~"), Catch::Matchers::ContainsSubstring("trailing bytes"));
  CHECK_THROWS_WITH(histlab::parse_graph6("C\x20"), Catch::Matchers::ContainsSubstring("out-of-range byte"));
  CHECK_THROWS_WITH(histlab::parse_graph6("~?"), Catch::Matchers::ContainsSubstring("malformed header"));
  CHECK_THROWS_AS(histlab::parse_graph6("C!"), Graph6Error);
}

TEST_CASE("adjacency invariants hold after parsing", "[graph6]") {
  const Graph g = histlab::parse_graph6("NyCWx?@?WBo??@?@_?w");
  REQUIRE(g.vertex_count() == 15);
  CHECK(g.edge_count() == 24);
  for (int v = 0; v < g.vertex_count(); ++v)
    for (int w : g.neighbors(v)) {
      CHECK(w != v);
      CHECK(g.has_edge(w, v));
    }
}
