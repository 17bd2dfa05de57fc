// Test-only oracles, all independent of the solver paths they check:
// brute-force bridge detection, spanning-tree counting by edge-subset
// enumeration, the max-min star size by enumerating every partition into
// stars, and deterministic random corpora.
#pragma once

#include <algorithm>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "histlab/bigcount.hpp"
#include "histlab/constructions.hpp"
#include "histlab/graph.hpp"
#include "histlab/spanning_tree.hpp"

namespace oracles {

using histlab::BigCount;
using histlab::Edge;
using histlab::Graph;
using histlab::VertexId;

inline Graph remove_edge_copy(const Graph& g, const Edge& drop) {
  Graph out(g.vertex_count());
  for (const Edge& e : g.edges())
    if (e != drop) out.add_edge(e.u, e.v);
  return out;
}

// Bridges by definition: delete each edge and test connectivity.
inline std::vector<Edge> brute_force_bridges(const Graph& g) {
  std::vector<Edge> out;
  for (const Edge& e : g.edges())
    if (!histlab::is_connected(remove_edge_copy(g, e))) out.push_back(e);
  return out;
}

// Spanning trees by picking every (n-1)-subset of edges and testing it.
// Only sensible for small edge counts.
inline BigCount brute_force_tree_count(const Graph& g) {
  const int n = g.vertex_count();
  if (n <= 1) return 1;
  const auto edges = g.edges();
  const int m = static_cast<int>(edges.size());
  const int need = n - 1;
  if (need > m) return 0;
  BigCount count = 0;
  std::vector<int> pick(static_cast<std::size_t>(need));
  for (int i = 0; i < need; ++i) pick[static_cast<std::size_t>(i)] = i;
  while (true) {
    histlab::detail::ScratchDsu dsu(n);
    bool acyclic = true;
    for (int i = 0; i < need && acyclic; ++i)
      acyclic = dsu.unite(edges[static_cast<std::size_t>(pick[static_cast<std::size_t>(i)])].u,
                          edges[static_cast<std::size_t>(pick[static_cast<std::size_t>(i)])].v);
    if (acyclic && dsu.components() == 1) ++count;
    // next combination
    int i = need - 1;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == m - need + i) --i;
    if (i < 0) break;
    ++pick[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < need; ++j)
      pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
  }
  return count;
}

// Max over spanning trees of the min internal degree, by exhaustive
// enumeration plus profiling. NoInternal profiles act as +infinity, so the
// result is empty only when no tree has an internal vertex (n <= 2).
struct MmidOracle {
  std::optional<int> value;
  bool no_internal = false;
};

inline MmidOracle mmid_by_enumeration(const Graph& g) {
  MmidOracle out;
  bool saw_no_internal = false;
  int best = -1;
  histlab::enumerate_spanning_trees(g, [&](const histlab::SpanningTree& t) {
    const auto profile = histlab::tree_profile(g, t);
    if (!profile.min_internal_degree)
      saw_no_internal = true;
    else
      best = std::max(best, *profile.min_internal_degree);
    return true;
  });
  if (saw_no_internal)
    out.no_internal = true;  // beats any finite minimum
  else if (best >= 0)
    out.value = best;
  return out;
}

// All partitions of the vertex set into stars, by recursing on the lowest
// unassigned vertex: either it is a center with some nonempty leaf set, or a
// leaf of a neighboring center whose full leaf set is fixed right away.
// Returns the best achievable minimum star size, or empty if no star factor
// exists.
inline std::optional<int> brute_force_max_min_star_size(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<char> assigned(static_cast<std::size_t>(n), 0);
  std::optional<int> best;

  auto unassigned_neighbors = [&](VertexId v) {
    std::vector<VertexId> out;
    for (VertexId w : g.neighbors(v))
      if (!assigned[static_cast<std::size_t>(w)]) out.push_back(w);
    return out;
  };

  // enumerate nonempty subsets of a small candidate list via bitmask
  auto rec = [&](auto&& self, int min_so_far, int remaining) -> void {
    if (remaining == 0) {
      if (!best || min_so_far > *best) best = min_so_far;
      return;
    }
    VertexId v = 0;
    while (assigned[static_cast<std::size_t>(v)]) ++v;
    assigned[static_cast<std::size_t>(v)] = 1;

    // v as center with leaf set S
    const auto nbrs = unassigned_neighbors(v);
    const int nn = static_cast<int>(nbrs.size());
    for (unsigned mask = 1; mask < (1u << nn); ++mask) {
      int size = 0;
      for (int i = 0; i < nn; ++i)
        if (mask & (1u << i)) {
          assigned[static_cast<std::size_t>(nbrs[static_cast<std::size_t>(i)])] = 1;
          ++size;
        }
      self(self, std::min(min_so_far, size), remaining - 1 - size);
      for (int i = 0; i < nn; ++i)
        if (mask & (1u << i)) assigned[static_cast<std::size_t>(nbrs[static_cast<std::size_t>(i)])] = 0;
    }

    // v as a leaf of center c, fixing c's full leaf set (v included)
    for (VertexId c : nbrs) {
      assigned[static_cast<std::size_t>(c)] = 1;
      std::vector<VertexId> cn;
      for (VertexId w : g.neighbors(c))
        if (!assigned[static_cast<std::size_t>(w)] && w != v) cn.push_back(w);
      const int cc = static_cast<int>(cn.size());
      for (unsigned mask = 0; mask < (1u << cc); ++mask) {
        int size = 1;  // v
        for (int i = 0; i < cc; ++i)
          if (mask & (1u << i)) {
            assigned[static_cast<std::size_t>(cn[static_cast<std::size_t>(i)])] = 1;
            ++size;
          }
        self(self, std::min(min_so_far, size), remaining - 2 - (size - 1));
        for (int i = 0; i < cc; ++i)
          if (mask & (1u << i)) assigned[static_cast<std::size_t>(cn[static_cast<std::size_t>(i)])] = 0;
      }
      assigned[static_cast<std::size_t>(c)] = 0;
    }

    assigned[static_cast<std::size_t>(v)] = 0;
  };

  if (n == 0) return std::nullopt;
  rec(rec, n, n);  // min over an empty set of stars cannot occur: n >= 1 forces stars
  return best;
}

// Deterministic random connected graph on 3..8 vertices: a random attachment
// tree plus each remaining pair independently.
inline Graph random_connected_graph(std::mt19937_64& rng) {
  const int n = 3 + static_cast<int>(histlab::detail::uniform_below(rng, 6));
  Graph g(n);
  for (VertexId v = 1; v < n; ++v)
    g.add_edge(v, static_cast<VertexId>(histlab::detail::uniform_below(rng, static_cast<std::uint64_t>(v))));
  const int percent = 15 + static_cast<int>(histlab::detail::uniform_below(rng, 70));
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v) {
      if (g.has_edge(u, v)) continue;
      if (static_cast<int>(histlab::detail::uniform_below(rng, 100)) < percent) g.add_edge(u, v);
    }
  return g;
}

// Deterministic random graph on 2..8 vertices with min degree >= 1 but not
// necessarily connected.
inline Graph random_graph_min_degree_one(std::mt19937_64& rng) {
  const int n = 2 + static_cast<int>(histlab::detail::uniform_below(rng, 7));
  Graph g(n);
  const int percent = 10 + static_cast<int>(histlab::detail::uniform_below(rng, 60));
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v)
      if (static_cast<int>(histlab::detail::uniform_below(rng, 100)) < percent) g.add_edge(u, v);
  for (VertexId v = 0; v < n; ++v) {
    if (g.degree(v) == 0) {
      VertexId other = static_cast<VertexId>(histlab::detail::uniform_below(rng, static_cast<std::uint64_t>(n - 1)));
      if (other >= v) ++other;
      g.add_edge(v, other);
    }
  }
  return g;
}

}  // namespace oracles
