#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace histlab {

using VertexId = int;

// Undirected edge stored canonically as (min, max). Canonical order of edge
// lists everywhere in this library is lexicographic on that pair.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  Edge() = default;
  Edge(VertexId a, VertexId b) : u(std::min(a, b)), v(std::max(a, b)) {
    if (a == b) throw std::invalid_argument("edge endpoints must be distinct");
  }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Simple undirected graph on dense vertex ids 0..n-1. Adjacency lists are
// kept sorted; no self-loops, no parallel edges. Once built, treat the graph
// as immutable: every query is const and safe to share across threads.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int vertex_count) {
    if (vertex_count < 0) throw std::invalid_argument("vertex count must be nonnegative");
    adj_.resize(static_cast<std::size_t>(vertex_count));
  }

  int vertex_count() const { return static_cast<int>(adj_.size()); }
  std::size_t edge_count() const { return edge_count_; }

  void add_edge(VertexId a, VertexId b) {
    check_vertex(a);
    check_vertex(b);
    if (a == b) throw std::invalid_argument("self-loops are not allowed");
    auto& na = adj_[static_cast<std::size_t>(a)];
    auto it = std::lower_bound(na.begin(), na.end(), b);
    if (it != na.end() && *it == b) throw std::invalid_argument("parallel edges are not allowed");
    na.insert(it, b);
    auto& nb = adj_[static_cast<std::size_t>(b)];
    nb.insert(std::lower_bound(nb.begin(), nb.end(), a), a);
    ++edge_count_;
  }

  bool has_edge(VertexId a, VertexId b) const {
    check_vertex(a);
    check_vertex(b);
    const auto& na = adj_[static_cast<std::size_t>(a)];
    return std::binary_search(na.begin(), na.end(), b);
  }

  const std::vector<VertexId>& neighbors(VertexId v) const {
    check_vertex(v);
    return adj_[static_cast<std::size_t>(v)];
  }

  int degree(VertexId v) const { return static_cast<int>(neighbors(v).size()); }

  // All edges in canonical (min,max) lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (VertexId v = 0; v < vertex_count(); ++v)
      for (VertexId w : adj_[static_cast<std::size_t>(v)])
        if (v < w) out.emplace_back(v, w);
    return out;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_vertex(VertexId v) const {
    if (v < 0 || v >= vertex_count()) throw std::out_of_range("vertex id out of range");
  }

  std::vector<std::vector<VertexId>> adj_;
  std::size_t edge_count_ = 0;
};

inline int min_degree(const Graph& g) {
  if (g.vertex_count() == 0) throw std::invalid_argument("empty graph");
  int best = g.degree(0);
  for (VertexId v = 1; v < g.vertex_count(); ++v) best = std::min(best, g.degree(v));
  return best;
}

inline int max_degree(const Graph& g) {
  int best = 0;
  for (VertexId v = 0; v < g.vertex_count(); ++v) best = std::max(best, g.degree(v));
  return best;
}

// Every vertex reachable from vertex 0; the empty graph counts as connected.
inline bool is_connected(const Graph& g) {
  const int n = g.vertex_count();
  if (n <= 1) return true;
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<VertexId> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (VertexId w : g.neighbors(v)) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n;
}

// Cut edges by iterative low-link DFS. In a simple graph the tree edge back
// to the parent can be skipped exactly once per child; any further parent
// sighting would be a parallel edge, which cannot exist here.
inline std::vector<Edge> find_bridges(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> disc(static_cast<std::size_t>(n), -1);
  std::vector<int> low(static_cast<std::size_t>(n), 0);
  std::vector<Edge> bridges;
  int timer = 0;

  struct Frame {
    VertexId v;
    VertexId parent;
    std::size_t next = 0;
    bool parent_skipped = false;
  };
  std::vector<Frame> stack;

  for (VertexId root = 0; root < n; ++root) {
    if (disc[static_cast<std::size_t>(root)] != -1) continue;
    disc[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = timer++;
    stack.push_back({root, -1});
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto& nbrs = g.neighbors(f.v);
      bool descended = false;
      while (f.next < nbrs.size()) {
        VertexId w = nbrs[f.next++];
        if (w == f.parent && !f.parent_skipped) {
          f.parent_skipped = true;
          continue;
        }
        if (disc[static_cast<std::size_t>(w)] == -1) {
          disc[static_cast<std::size_t>(w)] = low[static_cast<std::size_t>(w)] = timer++;
          VertexId parent = f.v;  // f invalidated by push_back below
          stack.push_back({w, parent});
          descended = true;
          break;
        }
        low[static_cast<std::size_t>(f.v)] =
            std::min(low[static_cast<std::size_t>(f.v)], disc[static_cast<std::size_t>(w)]);
      }
      if (descended) continue;
      Frame done = stack.back();
      stack.pop_back();
      if (!stack.empty()) {
        Frame& p = stack.back();
        low[static_cast<std::size_t>(p.v)] =
            std::min(low[static_cast<std::size_t>(p.v)], low[static_cast<std::size_t>(done.v)]);
        if (low[static_cast<std::size_t>(done.v)] > disc[static_cast<std::size_t>(p.v)])
          bridges.emplace_back(p.v, done.v);
      }
    }
  }
  std::sort(bridges.begin(), bridges.end());
  return bridges;
}

}  // namespace histlab
