#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace histlab::detail {

// Union-find with union by rank and an undo stack. No path compression, so
// find stays const and every union can be rolled back to a mark.
class RollbackDsu {
 public:
  explicit RollbackDsu(int n) : parent_(static_cast<std::size_t>(n)), rank_(static_cast<std::size_t>(n), 0), components_(n) {
    for (int i = 0; i < n; ++i) parent_[static_cast<std::size_t>(i)] = i;
  }

  int find(int x) const {
    while (parent_[static_cast<std::size_t>(x)] != x) x = parent_[static_cast<std::size_t>(x)];
    return x;
  }

  bool same(int a, int b) const { return find(a) == find(b); }
  int components() const { return components_; }

  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (rank_[static_cast<std::size_t>(a)] < rank_[static_cast<std::size_t>(b)]) std::swap(a, b);
    const bool bump = rank_[static_cast<std::size_t>(a)] == rank_[static_cast<std::size_t>(b)];
    ops_.push_back({b, bump ? a : -1});
    parent_[static_cast<std::size_t>(b)] = a;
    if (bump) ++rank_[static_cast<std::size_t>(a)];
    --components_;
    return true;
  }

  std::size_t mark() const { return ops_.size(); }

  void rollback(std::size_t mark) {
    while (ops_.size() > mark) {
      const auto [child, bumped] = ops_.back();
      ops_.pop_back();
      parent_[static_cast<std::size_t>(child)] = child;
      if (bumped >= 0) --rank_[static_cast<std::size_t>(bumped)];
      ++components_;
    }
  }

 private:
  std::vector<int> parent_;
  std::vector<int> rank_;
  int components_;
  std::vector<std::pair<int, int>> ops_;  // (re-rooted child, rank-bumped root or -1)
};

// Throwaway union-find with path halving, for one-shot connectivity probes.
class ScratchDsu {
 public:
  explicit ScratchDsu(int n) : parent_(static_cast<std::size_t>(n)), components_(n) {
    for (int i = 0; i < n; ++i) parent_[static_cast<std::size_t>(i)] = i;
  }

  int find(int x) {
    while (parent_[static_cast<std::size_t>(x)] != x) {
      parent_[static_cast<std::size_t>(x)] = parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(x)])];
      x = parent_[static_cast<std::size_t>(x)];
    }
    return x;
  }

  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[static_cast<std::size_t>(a)] = b;
    --components_;
    return true;
  }

  int components() const { return components_; }

 private:
  std::vector<int> parent_;
  int components_;
};

}  // namespace histlab::detail
