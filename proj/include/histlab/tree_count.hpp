#pragma once

#include <utility>
#include <vector>

#include "histlab/bigcount.hpp"
#include "histlab/graph.hpp"

namespace histlab {

// Exact spanning-tree count by the matrix-tree theorem: the determinant of
// the Laplacian with row and column 0 removed, evaluated with fraction-free
// (Bareiss) integer elimination so every intermediate value stays an exact
// integer. Disconnected graphs count 0, matching the determinant.
inline BigCount spanning_tree_count(const Graph& g) {
  const int n = g.vertex_count();
  if (n <= 1) return 1;
  if (!is_connected(g)) return 0;

  const int m = n - 1;
  std::vector<std::vector<BigCount>> a(static_cast<std::size_t>(m),
                                       std::vector<BigCount>(static_cast<std::size_t>(m), 0));
  for (VertexId v = 1; v < n; ++v) {
    a[v - 1][v - 1] = g.degree(v);
    for (VertexId w : g.neighbors(v))
      if (w >= 1) a[v - 1][w - 1] = -1;
  }

  // The minor of a connected graph's Laplacian is positive definite, so a
  // zero pivot cannot appear; the swap is kept for robustness.
  BigCount prev = 1;
  int sign = 1;
  for (int k = 0; k + 1 < m; ++k) {
    if (a[k][k] == 0) {
      int r = k + 1;
      while (r < m && a[r][k] == 0) ++r;
      if (r == m) return 0;
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    for (int i = k + 1; i < m; ++i) {
      for (int j = k + 1; j < m; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return a[m - 1][m - 1] * sign;
}

}  // namespace histlab
