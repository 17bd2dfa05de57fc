#pragma once

#include <atomic>
#include <cstdint>
#include <mutex>
#include <optional>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "histlab/detail/dsu.hpp"
#include "histlab/detail/parallel.hpp"
#include "histlab/detail/rng.hpp"
#include "histlab/graph.hpp"

namespace histlab {

// A spanning tree of some host graph: exactly max(n-1, 0) edges, canonically
// sorted, acyclic and touching every vertex.
struct SpanningTree {
  std::vector<Edge> edges;

  friend bool operator==(const SpanningTree&, const SpanningTree&) = default;
};

struct TreeProfile {
  std::vector<int> tree_degree;
  std::vector<VertexId> leaves;     // degree 1
  std::vector<VertexId> internals;  // degree >= 2
  // Empty when the tree has no internal vertex at all (n <= 2); treated as
  // +infinity in comparisons so min-internal-degree thresholds stay monotone.
  std::optional<int> min_internal_degree;
};

inline bool min_internal_at_least(const TreeProfile& p, int k) {
  return !p.min_internal_degree.has_value() || *p.min_internal_degree >= k;
}

inline void validate_spanning_tree(const Graph& g, const SpanningTree& t) {
  const int n = g.vertex_count();
  const std::size_t want = n > 0 ? static_cast<std::size_t>(n - 1) : 0;
  if (t.edges.size() != want)
    throw std::invalid_argument("spanning tree: wrong edge count");
  detail::ScratchDsu dsu(n);
  for (const Edge& e : t.edges) {
    if (e.u < 0 || e.v >= n) throw std::invalid_argument("spanning tree: vertex out of range");
    if (!g.has_edge(e.u, e.v))
      throw std::invalid_argument("spanning tree: edge not present in host graph");
    if (!dsu.unite(e.u, e.v)) throw std::invalid_argument("spanning tree: edges contain a cycle");
  }
  if (n > 0 && dsu.components() != 1)
    throw std::invalid_argument("spanning tree: not spanning");
}

inline TreeProfile tree_profile(const Graph& g, const SpanningTree& t) {
  validate_spanning_tree(g, t);
  const int n = g.vertex_count();
  TreeProfile p;
  p.tree_degree.assign(static_cast<std::size_t>(n), 0);
  for (const Edge& e : t.edges) {
    ++p.tree_degree[static_cast<std::size_t>(e.u)];
    ++p.tree_degree[static_cast<std::size_t>(e.v)];
  }
  for (VertexId v = 0; v < n; ++v) {
    const int deg = p.tree_degree[static_cast<std::size_t>(v)];
    if (deg == 1) p.leaves.push_back(v);
    if (deg >= 2) {
      p.internals.push_back(v);
      if (!p.min_internal_degree || deg < *p.min_internal_degree) p.min_internal_degree = deg;
    }
  }
  return p;
}

namespace detail {

// Contraction/deletion enumeration over edges in canonical order, include
// branch first. The exclude branch is pruned whenever the edge is a bridge
// of what remains, i.e. the undecided edges no longer connect the contracted
// components. Each spanning tree is produced exactly once, in a fixed order.
template <typename Visitor>
class TreeEnumerator {
 public:
  TreeEnumerator(const Graph& g, Visitor& visit)
      : g_(g), edges_(g.edges()), dsu_(g.vertex_count()), visit_(visit) {}

  // Replays a branch prefix, then enumerates that subtree. Returns false if
  // the visitor asked to stop.
  bool run(const DecisionPrefix& prefix = {}) {
    if (g_.vertex_count() == 0) {
      SpanningTree t;
      return visit_(t);
    }
    std::size_t resume = 0;
    for (const auto& [idx, include] : prefix) {
      if (include) {
        dsu_.unite(edges_[static_cast<std::size_t>(idx)].u, edges_[static_cast<std::size_t>(idx)].v);
        chosen_.push_back(edges_[static_cast<std::size_t>(idx)]);
      }
      resume = static_cast<std::size_t>(idx) + 1;
    }
    return rec(resume);
  }

  // Expands the search into at least `target` open subproblems (breadth
  // first). Complete trees met along the way go straight to the visitor.
  // Returns false if the visitor stopped the run.
  static bool split(const Graph& g, int target, Visitor& visit, std::vector<DecisionPrefix>& out) {
    std::vector<DecisionPrefix> queue{DecisionPrefix{}};
    std::size_t head = 0;
    while (queue.size() - head < static_cast<std::size_t>(target) && head < queue.size()) {
      DecisionPrefix prefix = std::move(queue[head++]);
      TreeEnumerator probe(g, visit);
      std::size_t resume = 0;
      for (const auto& [idx, include] : prefix) {
        if (include)
          probe.dsu_.unite(probe.edges_[static_cast<std::size_t>(idx)].u,
                           probe.edges_[static_cast<std::size_t>(idx)].v);
        resume = static_cast<std::size_t>(idx) + 1;
      }
      if (probe.dsu_.components() <= 1 || g.vertex_count() == 0) {
        SpanningTree t;
        for (const auto& [idx, include] : prefix)
          if (include) t.edges.push_back(probe.edges_[static_cast<std::size_t>(idx)]);
        if (!visit(t)) return false;
        continue;
      }
      std::size_t idx = resume;
      while (idx < probe.edges_.size() &&
             probe.dsu_.same(probe.edges_[idx].u, probe.edges_[idx].v))
        ++idx;
      if (idx == probe.edges_.size()) continue;  // dead end
      DecisionPrefix inc = prefix;
      inc.emplace_back(static_cast<int>(idx), true);
      queue.push_back(std::move(inc));
      if (probe.remaining_connects(idx + 1)) {
        DecisionPrefix exc = std::move(prefix);
        exc.emplace_back(static_cast<int>(idx), false);
        queue.push_back(std::move(exc));
      }
    }
    out.assign(queue.begin() + static_cast<std::ptrdiff_t>(head), queue.end());
    return true;
  }

 private:
  bool rec(std::size_t idx) {
    if (dsu_.components() == 1) {
      SpanningTree t;
      t.edges = chosen_;  // ascending edge index == canonical order
      return visit_(t);
    }
    while (idx < edges_.size() && dsu_.same(edges_[idx].u, edges_[idx].v)) ++idx;
    if (idx == edges_.size()) return true;  // dead end, keep enumerating elsewhere

    const Edge e = edges_[idx];
    const std::size_t mark = dsu_.mark();
    dsu_.unite(e.u, e.v);
    chosen_.push_back(e);
    bool keep_going = rec(idx + 1);
    chosen_.pop_back();
    dsu_.rollback(mark);
    if (!keep_going) return false;

    if (remaining_connects(idx + 1)) keep_going = rec(idx + 1);
    return keep_going;
  }

  // Do the edges from `from` onward still connect all current components?
  bool remaining_connects(std::size_t from) {
    const int n = g_.vertex_count();
    ScratchDsu scratch(n);
    for (int v = 0; v < n; ++v) scratch.unite(v, dsu_.find(v));
    for (std::size_t j = from; j < edges_.size(); ++j) scratch.unite(edges_[j].u, edges_[j].v);
    return scratch.components() == 1;
  }

  const Graph& g_;
  std::vector<Edge> edges_;
  RollbackDsu dsu_;
  std::vector<Edge> chosen_;
  Visitor& visit_;
};

}  // namespace detail

// Visits every spanning tree exactly once, in a deterministic order (edges
// considered in canonical order, include branch first). The visitor returns
// false to stop early.
template <typename Visitor>
void enumerate_spanning_trees(const Graph& g, Visitor&& visit) {
  if (!is_connected(g)) throw std::invalid_argument("enumerate_spanning_trees: graph is not connected");
  detail::TreeEnumerator<Visitor> enumerator(g, visit);
  enumerator.run();
}

// Parallel variant: the visitor is called concurrently from worker threads
// (it must be thread-safe) and no visiting order is guaranteed. A false
// return still stops the whole run. The set of trees visited on a complete
// run is identical to the sequential one.
template <typename Visitor>
void enumerate_spanning_trees_parallel(const Graph& g, int workers, Visitor&& visit) {
  if (!is_connected(g)) throw std::invalid_argument("enumerate_spanning_trees: graph is not connected");
  if (workers <= 1) {
    detail::TreeEnumerator<Visitor> enumerator(g, visit);
    enumerator.run();
    return;
  }
  std::atomic<bool> stop{false};
  auto guarded = [&](const SpanningTree& t) {
    if (stop.load(std::memory_order_relaxed)) return false;
    if (!visit(t)) {
      stop.store(true, std::memory_order_relaxed);
      return false;
    }
    return true;
  };
  using Guarded = decltype(guarded);
  std::vector<detail::DecisionPrefix> tasks;
  if (!detail::TreeEnumerator<Guarded>::split(g, 8 * workers, guarded, tasks)) return;
  detail::for_each_task(tasks.size(), workers, [&](std::size_t i) {
    if (stop.load(std::memory_order_relaxed)) return;
    detail::TreeEnumerator<Guarded> enumerator(g, guarded);
    enumerator.run(tasks[i]);
  });
}

struct MaxLeafResult {
  SpanningTree tree;
  int leaf_count = 0;
};

// Greedy max-leaf heuristic: grow from vertex 0 and repeatedly attach, from
// the tree vertex with the most unreached neighbors (ties to the lowest id),
// all of its unreached neighbors.
inline MaxLeafResult max_leaf_greedy(const Graph& g) {
  if (!is_connected(g)) throw std::invalid_argument("max_leaf_greedy: graph is not connected");
  const int n = g.vertex_count();
  MaxLeafResult out;
  if (n == 0) return out;

  std::vector<char> reached(static_cast<std::size_t>(n), 0);
  reached[0] = 1;
  int reached_count = 1;
  while (reached_count < n) {
    VertexId best = -1;
    int best_count = 0;
    for (VertexId v = 0; v < n; ++v) {
      if (!reached[static_cast<std::size_t>(v)]) continue;
      int count = 0;
      for (VertexId w : g.neighbors(v))
        if (!reached[static_cast<std::size_t>(w)]) ++count;
      if (count > best_count) {
        best_count = count;
        best = v;
      }
    }
    for (VertexId w : g.neighbors(best)) {
      if (!reached[static_cast<std::size_t>(w)]) {
        reached[static_cast<std::size_t>(w)] = 1;
        ++reached_count;
        out.tree.edges.emplace_back(best, w);
      }
    }
  }
  std::sort(out.tree.edges.begin(), out.tree.edges.end());

  std::vector<int> deg(static_cast<std::size_t>(n), 0);
  for (const Edge& e : out.tree.edges) {
    ++deg[static_cast<std::size_t>(e.u)];
    ++deg[static_cast<std::size_t>(e.v)];
  }
  for (VertexId v = 0; v < n; ++v)
    if (deg[static_cast<std::size_t>(v)] == 1) ++out.leaf_count;
  return out;
}

// Random spanning tree by Kruskal over a shuffled edge order. Not uniform
// over all trees, but cheap, valid and deterministic per seed.
inline SpanningTree random_spanning_tree(const Graph& g, std::mt19937_64& rng) {
  if (!is_connected(g)) throw std::invalid_argument("random_spanning_tree: graph is not connected");
  auto edges = g.edges();
  detail::shuffle(edges, rng);
  detail::ScratchDsu dsu(g.vertex_count());
  SpanningTree t;
  for (const Edge& e : edges)
    if (dsu.unite(e.u, e.v)) t.edges.push_back(e);
  std::sort(t.edges.begin(), t.edges.end());
  return t;
}

}  // namespace histlab
