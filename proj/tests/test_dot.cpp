#include <catch2/catch_amalgamated.hpp>

#include "histlab/constructions.hpp"
#include "histlab/dot.hpp"

namespace {

std::size_t count_occurrences(const std::string& text, const std::string& needle) {
  std::size_t count = 0;
  for (std::size_t pos = text.find(needle); pos != std::string::npos;
       pos = text.find(needle, pos + needle.size()))
    ++count;
  return count;
}

}  // namespace

TEST_CASE("single edge", "[dot]") {
  histlab::Graph g(2);
  g.add_edge(0, 1);
  CHECK(histlab::emit_dot(g) == "graph {\n  0 -- 1;\n}\n");
}

TEST_CASE("empty graph is header and closing brace only", "[dot]") {
  CHECK(histlab::emit_dot(histlab::Graph(0)) == "graph {\n}\n");
}

TEST_CASE("labeled counterexample output", "[dot]") {
  const auto built = histlab::build_counterexample({2, 8});
  const std::string dot = histlab::emit_dot(built.graph, &built.labels);
  CHECK(count_occurrences(dot, "[label=") == 8);
  CHECK(count_occurrences(dot, " -- ") == 9);
  CHECK(dot.find("0 [label=\"core_hub\"];") != std::string::npos);
  CHECK(dot.find("1 [label=\"core#1\"];") != std::string::npos);
  CHECK(dot.find("2 [label=\"pendant_anchor#1\"];") != std::string::npos);
  CHECK(dot.find("5 [label=\"tail_anchor\"];") != std::string::npos);
  CHECK(dot.find("7 [label=\"tail_body\"];") != std::string::npos);
}

TEST_CASE("edges come out in canonical order", "[dot]") {
  histlab::Graph g(3);
  g.add_edge(2, 0);
  g.add_edge(1, 0);
  g.add_edge(2, 1);
  CHECK(histlab::emit_dot(g) == "graph {\n  0 -- 1;\n  0 -- 2;\n  1 -- 2;\n}\n");
}

TEST_CASE("label size mismatch is rejected", "[dot]") {
  const auto built = histlab::build_counterexample({2, 8});
  CHECK_THROWS_AS(histlab::emit_dot(histlab::Graph(3), &built.labels), std::invalid_argument);
}
