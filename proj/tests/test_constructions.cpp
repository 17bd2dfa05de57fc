#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "histlab/constructions.hpp"
#include "histlab/tree_count.hpp"
#include "oracles.hpp"

using histlab::Edge;
using histlab::Graph;
using histlab::Role;

TEST_CASE("counterexample d=2 n=8 layout", "[constructions]") {
  const auto built = histlab::build_counterexample({2, 8});
  CHECK(built.graph.vertex_count() == 8);
  CHECK(built.graph.edge_count() == 9);
  CHECK(histlab::min_degree(built.graph) == 2);
  CHECK(histlab::is_connected(built.graph));
  const std::vector<Role> roles{Role::CoreHub,       Role::Core,     Role::PendantAnchor,
                                Role::PendantBody,   Role::PendantBody, Role::TailAnchor,
                                Role::TailBody,      Role::TailBody};
  CHECK(built.labels.role == roles);
  CHECK(built.labels.block == std::vector<int>{0, 1, 1, 1, 1, 0, 0, 0});
  CHECK(built.labels.core_size() == 2);
  CHECK(built.labels.anchor_edges() == std::vector<Edge>{Edge(0, 5), Edge(1, 2)});
}

TEST_CASE("counterexample d=3 n=15 layout", "[constructions]") {
  const auto built = histlab::build_counterexample({3, 15});
  CHECK(built.graph.vertex_count() == 15);
  CHECK(built.graph.edge_count() == 24);
  CHECK(histlab::min_degree(built.graph) == 3);
  CHECK(built.labels.anchor_edges() == std::vector<Edge>{Edge(0, 11), Edge(1, 3), Edge(2, 7)});
}

TEST_CASE("counterexample parameter validation", "[constructions]") {
  CHECK_THROWS_WITH(histlab::build_counterexample({2, 7}),
                    Catch::Matchers::ContainsSubstring("n < d(d+2)"));
  CHECK_THROWS_WITH(histlab::build_counterexample({1, 10}),
                    Catch::Matchers::ContainsSubstring("d < 2"));
}

TEST_CASE("counterexample family invariants", "[constructions]") {
  for (const auto& [d, n] : std::vector<std::pair<int, int>>{
           {2, 8}, {2, 9}, {2, 13}, {3, 15}, {3, 16}, {3, 20}, {4, 24}, {4, 29}}) {
    CAPTURE(d, n);
    const auto built = histlab::build_counterexample({d, n});
    const Graph& g = built.graph;
    CHECK(histlab::is_connected(g));
    CHECK(histlab::min_degree(g) == d);

    // core vertices have degree exactly d
    for (const int v : built.labels.core_vertices()) CHECK(g.degree(v) == d);

    // role counts
    int hubs = 0, cores = 0, pendant_anchors = 0, pendant_bodies = 0, tail_anchors = 0,
        tail_bodies = 0;
    for (const Role r : built.labels.role) {
      switch (r) {
        case Role::CoreHub: ++hubs; break;
        case Role::Core: ++cores; break;
        case Role::PendantAnchor: ++pendant_anchors; break;
        case Role::PendantBody: ++pendant_bodies; break;
        case Role::TailAnchor: ++tail_anchors; break;
        case Role::TailBody: ++tail_bodies; break;
      }
    }
    const int w = n - (d - 1) * (d + 1) - d;
    CHECK(hubs == 1);
    CHECK(cores == d - 1);
    CHECK(pendant_anchors == d - 1);
    CHECK(pendant_bodies == (d - 1) * d);
    CHECK(tail_anchors == 1);
    CHECK(tail_bodies == w - 1);

    // bridge structure: the d anchors, plus the core edge for d = 2
    auto expected = built.labels.anchor_edges();
    if (d == 2) expected.insert(expected.begin(), Edge(0, 1));
    std::sort(expected.begin(), expected.end());
    CHECK(histlab::find_bridges(g) == expected);

    // edge count formula
    const auto choose2 = [](long long m) { return m * (m - 1) / 2; };
    CHECK(static_cast<long long>(g.edge_count()) ==
          choose2(d) + (d - 1) * choose2(d + 1) + choose2(w) + d);

    built.labels.validate(g);
  }
}

TEST_CASE("standard families", "[constructions]") {
  CHECK(histlab::build_complete(4).edge_count() == 6);
  const Graph p5 = histlab::build_path(5);
  CHECK(p5.edge_count() == 4);
  CHECK(p5.degree(0) == 1);
  CHECK(p5.degree(4) == 1);
  CHECK(histlab::build_cycle(3) == histlab::build_complete(3));
  CHECK(histlab::build_path(1).edge_count() == 0);
  CHECK_THROWS_AS(histlab::build_cycle(2), std::invalid_argument);
  CHECK_THROWS_AS(histlab::build_complete(0), std::invalid_argument);
}

TEST_CASE("random regular graphs", "[constructions]") {
  const Graph g = histlab::build_random_regular(3, 8, 12345);
  CHECK(g.vertex_count() == 8);
  CHECK(g.edge_count() == 12);
  for (int v = 0; v < 8; ++v) CHECK(g.degree(v) == 3);

  CHECK(histlab::build_random_regular(3, 8, 12345) == g);  // same seed, same graph
  CHECK(histlab::build_random_regular(3, 8, 54321) != g);

  CHECK_THROWS_WITH(histlab::build_random_regular(3, 5, 1),
                    Catch::Matchers::ContainsSubstring("dm odd"));
  CHECK_THROWS_AS(histlab::build_random_regular(5, 4, 1), std::invalid_argument);
}

TEST_CASE("2-regular graphs are disjoint cycles", "[constructions]") {
  const Graph g = histlab::build_random_regular(2, 6, 99);
  for (int v = 0; v < 6; ++v) CHECK(g.degree(v) == 2);
  // component scan: every component must have at least 3 vertices
  std::vector<int> component(6, -1);
  int comps = 0;
  for (int root = 0; root < 6; ++root) {
    if (component[root] != -1) continue;
    std::vector<int> stack{root};
    component[root] = comps;
    int size = 0;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      ++size;
      for (const int w : g.neighbors(v))
        if (component[w] == -1) {
          component[w] = comps;
          stack.push_back(w);
        }
    }
    CHECK(size >= 3);
    ++comps;
  }
}
