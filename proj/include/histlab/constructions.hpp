#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "histlab/detail/rng.hpp"
#include "histlab/graph.hpp"
#include "histlab/roles.hpp"

namespace histlab {

// Parameters for the pendant-clique counterexample family: a core clique on
// d vertices, one pendant clique of size d+1 hung off each non-hub core
// vertex, and a tail clique of size w = n - (d-1)(d+1) - d hung off the hub.
// Valid iff d >= 2 and n >= d(d+2), which is exactly w >= d+1.
struct CounterexampleParams {
  int d = 2;
  int n = 8;

  int tail_size() const { return n - (d - 1) * (d + 1) - d; }

  void validate() const {
    if (d < 2) throw std::invalid_argument("counterexample: d < 2");
    if (static_cast<long long>(n) < static_cast<long long>(d) * (d + 2))
      throw std::invalid_argument("counterexample: n < d(d+2)");
  }
};

struct Counterexample {
  Graph graph;
  RoleLabels labels;
};

// Deterministic layout: core clique on 0..d-1 with the hub at 0; pendant
// clique i occupies the d+1 vertices starting at d+(i-1)(d+1), anchored at
// its first vertex; the tail clique fills the remaining w vertices, anchored
// at its first vertex. Anchors are always the first vertex of their block so
// the emitted graph6 is a stable regression artifact.
inline Counterexample build_counterexample(const CounterexampleParams& p) {
  p.validate();
  const int d = p.d;
  const int n = p.n;
  const int w = p.tail_size();

  Graph g(n);
  RoleLabels labels;
  labels.role.assign(static_cast<std::size_t>(n), Role::TailBody);
  labels.block.assign(static_cast<std::size_t>(n), 0);

  auto add_clique = [&g](int first, int size) {
    for (int a = first; a < first + size; ++a)
      for (int b = a + 1; b < first + size; ++b) g.add_edge(a, b);
  };

  add_clique(0, d);
  labels.role[0] = Role::CoreHub;
  for (int i = 1; i < d; ++i) {
    labels.role[static_cast<std::size_t>(i)] = Role::Core;
    labels.block[static_cast<std::size_t>(i)] = i;
  }

  for (int i = 1; i < d; ++i) {
    const int start = d + (i - 1) * (d + 1);
    add_clique(start, d + 1);
    g.add_edge(i, start);
    labels.role[static_cast<std::size_t>(start)] = Role::PendantAnchor;
    labels.block[static_cast<std::size_t>(start)] = i;
    for (int v = start + 1; v < start + d + 1; ++v) {
      labels.role[static_cast<std::size_t>(v)] = Role::PendantBody;
      labels.block[static_cast<std::size_t>(v)] = i;
    }
  }

  const int tail_start = d + (d - 1) * (d + 1);
  add_clique(tail_start, w);
  g.add_edge(0, tail_start);
  labels.role[static_cast<std::size_t>(tail_start)] = Role::TailAnchor;

  return {std::move(g), std::move(labels)};
}

inline Graph build_complete(int m) {
  if (m < 1) throw std::invalid_argument("complete graph needs m >= 1");
  Graph g(m);
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) g.add_edge(a, b);
  return g;
}

inline Graph build_path(int m) {
  if (m < 1) throw std::invalid_argument("path needs m >= 1");
  Graph g(m);
  for (int v = 0; v + 1 < m; ++v) g.add_edge(v, v + 1);
  return g;
}

inline Graph build_cycle(int m) {
  if (m < 3) throw std::invalid_argument("cycle needs m >= 3");
  Graph g(m);
  for (int v = 0; v + 1 < m; ++v) g.add_edge(v, v + 1);
  g.add_edge(m - 1, 0);
  return g;
}

// Configuration-model pairing: shuffle the degree stubs, pair them up, and
// reject the whole pairing whenever a loop or parallel edge appears. Exact
// uniformity is not needed here; determinism per seed is.
inline Graph build_random_regular(int degree, int m, std::uint64_t seed) {
  if (m < 1) throw std::invalid_argument("random_regular: need m >= 1");
  if (degree < 0) throw std::invalid_argument("random_regular: need d >= 0");
  if ((static_cast<long long>(degree) * m) % 2 != 0)
    throw std::invalid_argument("random_regular: dm odd");
  if (degree >= m) throw std::invalid_argument("random_regular: need m > d");

  std::mt19937_64 rng(seed);
  std::vector<VertexId> stubs;
  stubs.reserve(static_cast<std::size_t>(degree) * static_cast<std::size_t>(m));
  for (VertexId v = 0; v < m; ++v)
    for (int r = 0; r < degree; ++r) stubs.push_back(v);

  constexpr int kMaxAttempts = 1'000'000;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    detail::shuffle(stubs, rng);
    Graph g(m);
    bool simple = true;
    for (std::size_t i = 0; i + 1 < stubs.size() && simple; i += 2) {
      const VertexId a = stubs[i];
      const VertexId b = stubs[i + 1];
      if (a == b || g.has_edge(a, b))
        simple = false;
      else
        g.add_edge(a, b);
    }
    if (simple) return g;
  }
  throw std::runtime_error("random_regular: retry budget exhausted");
}

}  // namespace histlab
