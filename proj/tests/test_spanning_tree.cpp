#include <catch2/catch_amalgamated.hpp>

#include <atomic>

#include "histlab/constructions.hpp"
#include "histlab/spanning_tree.hpp"
#include "histlab/tree_count.hpp"
#include "oracles.hpp"

using histlab::Edge;
using histlab::Graph;
using histlab::SpanningTree;

namespace {

std::vector<SpanningTree> collect_trees(const Graph& g, int limit = -1) {
  std::vector<SpanningTree> out;
  histlab::enumerate_spanning_trees(g, [&](const SpanningTree& t) {
    out.push_back(t);
    return limit < 0 || static_cast<int>(out.size()) < limit;
  });
  return out;
}

}  // namespace

TEST_CASE("enumeration counts", "[trees]") {
  CHECK(collect_trees(histlab::build_cycle(4)).size() == 4);
  CHECK(collect_trees(histlab::build_complete(4)).size() == 16);
  CHECK(collect_trees(histlab::build_counterexample({2, 8}).graph).size() == 9);
}

TEST_CASE("enumeration order is deterministic", "[trees]") {
  const auto trees = collect_trees(histlab::build_complete(4));
  REQUIRE(trees.size() == 16);
  CHECK(trees[0].edges == std::vector<Edge>{Edge(0, 1), Edge(0, 2), Edge(0, 3)});
  CHECK(trees[1].edges == std::vector<Edge>{Edge(0, 1), Edge(0, 2), Edge(1, 3)});
  const auto first28 = collect_trees(histlab::build_counterexample({2, 8}).graph, 1);
  CHECK(first28[0].edges == std::vector<Edge>{Edge(0, 1), Edge(0, 5), Edge(1, 2), Edge(2, 3),
                                              Edge(2, 4), Edge(5, 6), Edge(5, 7)});
}

TEST_CASE("every enumerated tree is valid", "[trees]") {
  const Graph g = histlab::build_counterexample({2, 8}).graph;
  histlab::enumerate_spanning_trees(g, [&](const SpanningTree& t) {
    REQUIRE(t.edges.size() == 7);
    CHECK(std::is_sorted(t.edges.begin(), t.edges.end()));
    CHECK_NOTHROW(histlab::validate_spanning_tree(g, t));
    return true;
  });
}

TEST_CASE("visitor early exit", "[trees]") {
  int seen = 0;
  histlab::enumerate_spanning_trees(histlab::build_complete(5), [&](const SpanningTree&) {
    ++seen;
    return seen < 3;
  });
  CHECK(seen == 3);
}

TEST_CASE("enumeration rejects disconnected input", "[trees]") {
  Graph g(4);
  g.add_edge(0, 1);
  g.add_edge(2, 3);
  CHECK_THROWS_WITH(histlab::enumerate_spanning_trees(g, [](const SpanningTree&) { return true; }),
                    Catch::Matchers::ContainsSubstring("not connected"));
}

TEST_CASE("single vertex has one empty tree", "[trees]") {
  const auto trees = collect_trees(Graph(1));
  REQUIRE(trees.size() == 1);
  CHECK(trees[0].edges.empty());
}

TEST_CASE("enumeration count equals the determinant on a random corpus", "[trees]") {
  std::mt19937_64 rng(987654);
  for (int i = 0; i < 30; ++i) {
    const Graph g = oracles::random_connected_graph(rng);
    histlab::BigCount seen = 0;
    histlab::enumerate_spanning_trees(g, [&](const SpanningTree&) {
      ++seen;
      return true;
    });
    CAPTURE(i, g.vertex_count(), g.edge_count());
    CHECK(seen == histlab::spanning_tree_count(g));
  }
}

TEST_CASE("parallel enumeration visits the same tree set", "[trees]") {
  const Graph g = histlab::build_counterexample({3, 15}).graph;
  std::atomic<long long> parallel_count{0};
  histlab::enumerate_spanning_trees_parallel(g, 4, [&](const SpanningTree&) {
    parallel_count.fetch_add(1, std::memory_order_relaxed);
    return true;
  });
  CHECK(parallel_count.load() == 12288);

  // order-insensitive content check on a smaller graph
  const Graph k5 = histlab::build_complete(5);
  auto sequential = collect_trees(k5);
  std::vector<SpanningTree> parallel;
  std::mutex mutex;
  histlab::enumerate_spanning_trees_parallel(k5, 3, [&](const SpanningTree& t) {
    const std::lock_guard<std::mutex> lock(mutex);
    parallel.push_back(t);
    return true;
  });
  auto key = [](const SpanningTree& a, const SpanningTree& b) { return a.edges < b.edges; };
  std::sort(sequential.begin(), sequential.end(), key);
  std::sort(parallel.begin(), parallel.end(), key);
  CHECK(sequential == parallel);
}

TEST_CASE("tree profiles", "[trees]") {
  Graph star(4);  // K_{1,3}
  star.add_edge(0, 1);
  star.add_edge(0, 2);
  star.add_edge(0, 3);
  const auto p = histlab::tree_profile(star, SpanningTree{star.edges()});
  CHECK(p.min_internal_degree == 3);
  CHECK(p.internals == std::vector<int>{0});
  CHECK(p.leaves == std::vector<int>{1, 2, 3});

  const Graph p5 = histlab::build_path(5);
  const auto pp = histlab::tree_profile(p5, SpanningTree{p5.edges()});
  CHECK(pp.min_internal_degree == 2);
  CHECK(pp.leaves == std::vector<int>{0, 4});

  const Graph p2 = histlab::build_path(2);
  const auto p2p = histlab::tree_profile(p2, SpanningTree{p2.edges()});
  CHECK_FALSE(p2p.min_internal_degree.has_value());  // no internal vertex
  CHECK(histlab::min_internal_at_least(p2p, 100));   // vacuous: acts as +infinity
}

TEST_CASE("tree degree sum invariant", "[trees]") {
  std::mt19937_64 rng(13579);
  for (int i = 0; i < 10; ++i) {
    const Graph g = oracles::random_connected_graph(rng);
    histlab::enumerate_spanning_trees(g, [&](const SpanningTree& t) {
      const auto p = histlab::tree_profile(g, t);
      int sum = 0;
      for (const int d : p.tree_degree) sum += d;
      CHECK(sum == 2 * (g.vertex_count() - 1));
      return true;
    });
  }
}

TEST_CASE("profile validation rejects corrupted trees", "[trees]") {
  const Graph g = histlab::build_cycle(4);
  // edge absent from the host graph
  CHECK_THROWS_WITH(
      histlab::tree_profile(g, SpanningTree{{Edge(0, 1), Edge(1, 2), Edge(0, 2)}}),
      Catch::Matchers::ContainsSubstring("not present"));
  // right count, but contains a cycle (4-cycle has no chords, so use K_4)
  const Graph k4 = histlab::build_complete(4);
  CHECK_THROWS_WITH(
      histlab::tree_profile(k4, SpanningTree{{Edge(0, 1), Edge(0, 2), Edge(1, 2)}}),
      Catch::Matchers::ContainsSubstring("cycle"));
  // wrong edge count
  CHECK_THROWS_WITH(histlab::tree_profile(g, SpanningTree{{Edge(0, 1)}}),
                    Catch::Matchers::ContainsSubstring("edge count"));
}

TEST_CASE("greedy max-leaf traces", "[trees]") {
  const auto k4 = histlab::max_leaf_greedy(histlab::build_complete(4));
  CHECK(k4.tree.edges == std::vector<Edge>{Edge(0, 1), Edge(0, 2), Edge(0, 3)});
  CHECK(k4.leaf_count == 3);

  const auto p5 = histlab::max_leaf_greedy(histlab::build_path(5));
  CHECK(p5.leaf_count == 2);
  CHECK(p5.tree.edges == histlab::build_path(5).edges());

  // the greedy walks the cycle into a Hamiltonian path
  const auto c6 = histlab::max_leaf_greedy(histlab::build_cycle(6));
  CHECK(c6.leaf_count == 2);
  CHECK(c6.tree.edges ==
        std::vector<Edge>{Edge(0, 1), Edge(0, 5), Edge(1, 2), Edge(2, 3), Edge(3, 4)});
}

TEST_CASE("greedy output is always a valid spanning tree", "[trees]") {
  std::mt19937_64 rng(1122);
  for (int i = 0; i < 25; ++i) {
    const Graph g = oracles::random_connected_graph(rng);
    const auto r = histlab::max_leaf_greedy(g);
    CHECK_NOTHROW(histlab::validate_spanning_tree(g, r.tree));
    const auto p = histlab::tree_profile(g, r.tree);
    CHECK(static_cast<int>(p.leaves.size()) == r.leaf_count);
  }
  const auto big = histlab::max_leaf_greedy(histlab::build_counterexample({4, 24}).graph);
  CHECK(big.leaf_count >= 2);
}

TEST_CASE("random spanning trees are valid and seed-deterministic", "[trees]") {
  const Graph g = histlab::build_counterexample({3, 15}).graph;
  std::mt19937_64 rng_a(5), rng_b(5), rng_c(6);
  const auto a = histlab::random_spanning_tree(g, rng_a);
  CHECK_NOTHROW(histlab::validate_spanning_tree(g, a));
  CHECK(a == histlab::random_spanning_tree(g, rng_b));
  const auto c = histlab::random_spanning_tree(g, rng_c);
  CHECK_NOTHROW(histlab::validate_spanning_tree(g, c));
}
