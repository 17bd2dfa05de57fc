#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "histlab/budget.hpp"
#include "histlab/detail/parallel.hpp"
#include "histlab/graph.hpp"

namespace histlab {

// One star of a factor: a center plus its (nonempty) leaf set. A single-edge
// star is stored canonically with the lower id as center.
struct Star {
  VertexId center = 0;
  std::vector<VertexId> leaves;

  friend bool operator==(const Star&, const Star&) = default;
};

// A spanning forest whose components are all stars: the {center} + leaves
// sets partition the host graph's vertices and every leaf is adjacent to its
// center.
struct StarFactor {
  std::vector<Star> stars;

  friend bool operator==(const StarFactor&, const StarFactor&) = default;
};

struct StarFactorCheck {
  bool valid = false;
  std::string violation;  // first violated condition; empty when valid
  int min_star_size = 0;  // min leaf count over stars == min edge count
};

inline StarFactorCheck validate_star_factor(const Graph& g, const StarFactor& f) {
  const int n = g.vertex_count();
  auto fail = [](std::string why) { return StarFactorCheck{false, std::move(why), 0}; };

  std::vector<char> covered(static_cast<std::size_t>(n), 0);
  int covered_count = 0;
  auto cover = [&](VertexId v) {
    if (v < 0 || v >= n) return false;
    if (covered[static_cast<std::size_t>(v)]) return false;
    covered[static_cast<std::size_t>(v)] = 1;
    ++covered_count;
    return true;
  };

  int min_size = 0;
  bool first = true;
  for (const Star& star : f.stars) {
    if (star.leaves.empty()) return fail("star with no leaves");
    if (!cover(star.center)) return fail("vertex covered twice or out of range");
    for (VertexId leaf : star.leaves) {
      if (!cover(leaf)) return fail("vertex covered twice or out of range");
      if (!g.has_edge(star.center, leaf)) return fail("leaf not adjacent to its center");
    }
    const int size = static_cast<int>(star.leaves.size());
    if (first || size < min_size) min_size = size;
    first = false;
  }
  if (covered_count != n) return fail("not every vertex covered");
  return StarFactorCheck{true, "", min_size};
}

struct StarFactorResult {
  std::optional<int> value;  // best proven minimum star size; empty if none
  bool exhaustive = false;
  std::optional<StarFactor> witness;
  std::uint64_t nodes_expanded = 0;
};

namespace detail {

// Dinic max-flow on a tiny layered network; capacities are small integers.
class MaxFlow {
 public:
  explicit MaxFlow(int nodes) : head_(static_cast<std::size_t>(nodes), -1) {}

  void add_edge(int from, int to, int cap) {
    arcs_.push_back({to, head_[static_cast<std::size_t>(from)], cap});
    head_[static_cast<std::size_t>(from)] = static_cast<int>(arcs_.size()) - 1;
    arcs_.push_back({from, head_[static_cast<std::size_t>(to)], 0});
    head_[static_cast<std::size_t>(to)] = static_cast<int>(arcs_.size()) - 1;
  }

  int run(int source, int sink) {
    int total = 0;
    while (build_levels(source, sink)) {
      iter_ = head_;
      while (const int pushed = augment(source, sink, 1 << 30)) total += pushed;
    }
    return total;
  }

  // Forward arc `a` (even index) saturated?
  bool saturated(int a) const { return arcs_[static_cast<std::size_t>(a)].cap == 0; }

  // Id the next add_edge will assign to its forward arc.
  int next_arc_id() const { return static_cast<int>(arcs_.size()); }

 private:
  struct Arc {
    int to;
    int next;
    int cap;
  };

  bool build_levels(int source, int sink) {
    level_.assign(head_.size(), -1);
    level_[static_cast<std::size_t>(source)] = 0;
    std::vector<int> queue{source};
    for (std::size_t q = 0; q < queue.size(); ++q) {
      const int v = queue[q];
      for (int a = head_[static_cast<std::size_t>(v)]; a != -1; a = arcs_[static_cast<std::size_t>(a)].next) {
        const Arc& arc = arcs_[static_cast<std::size_t>(a)];
        if (arc.cap > 0 && level_[static_cast<std::size_t>(arc.to)] == -1) {
          level_[static_cast<std::size_t>(arc.to)] = level_[static_cast<std::size_t>(v)] + 1;
          queue.push_back(arc.to);
        }
      }
    }
    return level_[static_cast<std::size_t>(sink)] != -1;
  }

  int augment(int v, int sink, int limit) {
    if (v == sink) return limit;
    for (int& a = iter_[static_cast<std::size_t>(v)]; a != -1; a = arcs_[static_cast<std::size_t>(a)].next) {
      Arc& arc = arcs_[static_cast<std::size_t>(a)];
      if (arc.cap > 0 && level_[static_cast<std::size_t>(arc.to)] == level_[static_cast<std::size_t>(v)] + 1) {
        const int pushed = augment(arc.to, sink, std::min(limit, arc.cap));
        if (pushed > 0) {
          arc.cap -= pushed;
          arcs_[static_cast<std::size_t>(a ^ 1)].cap += pushed;
          return pushed;
        }
      }
    }
    return 0;
  }

  std::vector<int> head_;
  std::vector<Arc> arcs_;
  std::vector<int> level_;
  std::vector<int> iter_;
};

// Branch and bound over center sets for a fixed star size s. Only vertices
// of degree >= s can be centers; everything else is a fixed non-center.
// Branches decide candidates in ascending id, non-center branch first, with
// three incremental prunes:
//   - a non-center whose last possible center neighbor disappears,
//   - a decided center whose potential leaf pool drops below s,
//   - more centers than n/(s+1) can ever pack.
// A fully decided center set is feasible iff a flow assigning s distinct
// leaves to every center saturates; leftovers attach to any adjacent center.
class StarSearch {
 public:
  StarSearch(const Graph& g, int s, BudgetMeter& meter, const std::atomic<bool>* stop = nullptr)
      : g_(g), s_(s), meter_(meter), stop_(stop) {
    const int n = g_.vertex_count();
    state_.assign(static_cast<std::size_t>(n), State::NonCenter);
    for (VertexId v = 0; v < n; ++v)
      if (g_.degree(v) >= s_) {
        state_[static_cast<std::size_t>(v)] = State::Undecided;
        candidates_.push_back(v);
      }
    possible_centers_.assign(static_cast<std::size_t>(n), 0);
    leaf_pool_.assign(static_cast<std::size_t>(n), 0);
    for (VertexId v = 0; v < n; ++v) {
      leaf_pool_[static_cast<std::size_t>(v)] = g_.degree(v);
      for (VertexId w : g_.neighbors(v))
        if (state_[static_cast<std::size_t>(w)] != State::NonCenter)
          ++possible_centers_[static_cast<std::size_t>(v)];
    }
  }

  SearchOut run_root() {
    if (!root_feasible()) return SearchOut::Unsat;
    return rec(0);
  }

  SearchOut run_prefix(const DecisionPrefix& prefix) {
    if (!root_feasible()) return SearchOut::Unsat;
    std::size_t resume = 0;
    for (const auto& [idx, center] : prefix) {
      if (!decide(candidates_[static_cast<std::size_t>(idx)], center))
        throw std::logic_error("star search: prefix replay conflict");
      resume = static_cast<std::size_t>(idx) + 1;
    }
    return rec(resume);
  }

  const StarFactor& witness() const { return witness_; }

  static SplitOutcome<StarFactor> split(const Graph& g, int s, int target,
                                        std::vector<DecisionPrefix>& out) {
    BudgetMeter free_meter{SearchBudget{}};
    SplitOutcome<StarFactor> so;
    StarSearch root(g, s, free_meter);
    if (!root.root_feasible()) {
      out.clear();
      return so;
    }
    std::vector<DecisionPrefix> queue{DecisionPrefix{}};
    std::size_t head = 0;
    while (head < queue.size() && queue.size() - head < static_cast<std::size_t>(target)) {
      DecisionPrefix prefix = std::move(queue[head++]);
      StarSearch probe(g, s, free_meter);
      std::size_t resume = 0;
      for (const auto& [idx, center] : prefix) {
        if (!probe.decide(probe.candidates_[static_cast<std::size_t>(idx)], center))
          throw std::logic_error("star search: split replay conflict");
        resume = static_cast<std::size_t>(idx) + 1;
      }
      if (resume == probe.candidates_.size()) {
        if (probe.leaf_feasible(&probe.witness_)) {
          so.resolved_sat = true;
          so.witness = std::move(probe.witness_);
          out.clear();
          return so;
        }
        continue;
      }
      for (const bool center : {false, true}) {
        const auto tm = probe.trail_.size();
        if (probe.decide(probe.candidates_[resume], center)) {
          DecisionPrefix child = prefix;
          child.emplace_back(static_cast<int>(resume), center);
          queue.push_back(std::move(child));
        }
        probe.undo(tm);
      }
    }
    out.assign(queue.begin() + static_cast<std::ptrdiff_t>(head), queue.end());
    return so;
  }

 private:
  enum class State : unsigned char { Undecided, Center, NonCenter };

  bool root_feasible() const {
    for (VertexId v = 0; v < g_.vertex_count(); ++v)
      if (state_[static_cast<std::size_t>(v)] == State::NonCenter &&
          possible_centers_[static_cast<std::size_t>(v)] == 0)
        return false;
    return g_.vertex_count() == 0 || !candidates_.empty();
  }

  // The counter updates always run to completion so undo() can reverse them
  // wholesale; a failed prune only latches the verdict.
  bool decide(VertexId v, bool center) {
    trail_.push_back(v);
    bool ok = true;
    if (center) {
      state_[static_cast<std::size_t>(v)] = State::Center;
      ++centers_;
      // each star occupies at least s+1 vertices
      if (static_cast<long long>(centers_) * (s_ + 1) > g_.vertex_count()) ok = false;
      if (leaf_pool_[static_cast<std::size_t>(v)] < s_) ok = false;
      for (VertexId w : g_.neighbors(v)) {
        --leaf_pool_[static_cast<std::size_t>(w)];
        if (state_[static_cast<std::size_t>(w)] == State::Center &&
            leaf_pool_[static_cast<std::size_t>(w)] < s_)
          ok = false;
      }
    } else {
      state_[static_cast<std::size_t>(v)] = State::NonCenter;
      if (possible_centers_[static_cast<std::size_t>(v)] == 0) ok = false;
      for (VertexId w : g_.neighbors(v)) {
        --possible_centers_[static_cast<std::size_t>(w)];
        if (state_[static_cast<std::size_t>(w)] == State::NonCenter &&
            possible_centers_[static_cast<std::size_t>(w)] == 0)
          ok = false;
      }
    }
    return ok;
  }

  void undo(std::size_t trail_mark) {
    while (trail_.size() > trail_mark) {
      const VertexId v = trail_.back();
      trail_.pop_back();
      if (state_[static_cast<std::size_t>(v)] == State::Center) {
        --centers_;
        for (VertexId w : g_.neighbors(v)) ++leaf_pool_[static_cast<std::size_t>(w)];
      } else {
        for (VertexId w : g_.neighbors(v)) ++possible_centers_[static_cast<std::size_t>(w)];
      }
      state_[static_cast<std::size_t>(v)] = State::Undecided;
    }
  }

  bool leaf_feasible(StarFactor* witness) const {
    if (centers_ == 0) return false;
    std::vector<VertexId> centers;
    std::vector<VertexId> others;
    const int n = g_.vertex_count();
    std::vector<int> other_index(static_cast<std::size_t>(n), -1);
    for (VertexId v = 0; v < n; ++v) {
      if (state_[static_cast<std::size_t>(v)] == State::Center) {
        centers.push_back(v);
      } else {
        other_index[static_cast<std::size_t>(v)] = static_cast<int>(others.size());
        others.push_back(v);
      }
    }
    const int c = static_cast<int>(centers.size());
    const int o = static_cast<int>(others.size());
    if (static_cast<long long>(o) < static_cast<long long>(s_) * c) return false;

    // node layout: 0 source | 1..c centers | c+1..c+o others | c+o+1 sink
    MaxFlow flow(c + o + 2);
    const int source = 0;
    const int sink = c + o + 1;
    for (int i = 0; i < c; ++i) flow.add_edge(source, 1 + i, s_);
    std::vector<std::vector<std::pair<int, int>>> leaf_arcs(static_cast<std::size_t>(c));
    for (int i = 0; i < c; ++i) {
      for (VertexId w : g_.neighbors(centers[static_cast<std::size_t>(i)])) {
        const int j = other_index[static_cast<std::size_t>(w)];
        if (j < 0) continue;  // neighbor is a center
        leaf_arcs[static_cast<std::size_t>(i)].push_back({flow.next_arc_id(), j});
        flow.add_edge(1 + i, c + 1 + j, 1);
      }
    }
    for (int j = 0; j < o; ++j) flow.add_edge(c + 1 + j, sink, 1);
    if (flow.run(source, sink) != s_ * c) return false;
    if (!witness) return true;

    // extract the assignment, then attach unassigned vertices to any
    // adjacent center
    std::vector<std::vector<VertexId>> leaves_of(static_cast<std::size_t>(c));
    std::vector<char> assigned(static_cast<std::size_t>(o), 0);
    for (int i = 0; i < c; ++i) {
      for (const auto& [arc, j] : leaf_arcs[static_cast<std::size_t>(i)]) {
        if (flow.saturated(arc)) {
          leaves_of[static_cast<std::size_t>(i)].push_back(others[static_cast<std::size_t>(j)]);
          assigned[static_cast<std::size_t>(j)] = 1;
        }
      }
    }
    for (int j = 0; j < o; ++j) {
      if (assigned[static_cast<std::size_t>(j)]) continue;
      const VertexId v = others[static_cast<std::size_t>(j)];
      for (int i = 0; i < c; ++i) {
        if (g_.has_edge(centers[static_cast<std::size_t>(i)], v)) {
          leaves_of[static_cast<std::size_t>(i)].push_back(v);
          break;
        }
      }
    }
    witness->stars.clear();
    for (int i = 0; i < c; ++i) {
      Star star;
      star.center = centers[static_cast<std::size_t>(i)];
      star.leaves = std::move(leaves_of[static_cast<std::size_t>(i)]);
      std::sort(star.leaves.begin(), star.leaves.end());
      if (star.leaves.size() == 1 && star.leaves.front() < star.center)
        std::swap(star.center, star.leaves.front());
      witness->stars.push_back(std::move(star));
    }
    std::sort(witness->stars.begin(), witness->stars.end(),
              [](const Star& a, const Star& b) { return a.center < b.center; });
    return true;
  }

  SearchOut rec(std::size_t idx) {
    if (stop_ && stop_->load(std::memory_order_relaxed)) return SearchOut::Budget;
    if (!meter_.consume()) return SearchOut::Budget;
    if (idx == candidates_.size()) {
      if (!leaf_feasible(&witness_)) return SearchOut::Unsat;
      return SearchOut::Sat;
    }
    for (const bool center : {false, true}) {
      const auto tm = trail_.size();
      const SearchOut r =
          decide(candidates_[idx], center) ? rec(idx + 1) : SearchOut::Unsat;
      undo(tm);
      if (r != SearchOut::Unsat) return r;
    }
    return SearchOut::Unsat;
  }

  const Graph& g_;
  const int s_;
  BudgetMeter& meter_;
  const std::atomic<bool>* stop_;
  std::vector<VertexId> candidates_;
  std::vector<State> state_;
  std::vector<int> possible_centers_;  // per vertex: neighbors still able to be centers
  std::vector<int> leaf_pool_;         // per vertex: neighbors not decided as centers
  int centers_ = 0;
  std::vector<VertexId> trail_;
  StarFactor witness_;
};

}  // namespace detail

// Exact optimum of "max over star factors of the minimum star size",
// computed by ascending s with the budgeted decision search above.
inline StarFactorResult max_min_star_size(const Graph& g, const SearchBudget& budget = {},
                                          int workers = 1) {
  const int n = g.vertex_count();
  if (n == 0) throw std::invalid_argument("no star factor exists: empty graph");
  for (VertexId v = 0; v < n; ++v)
    if (g.degree(v) == 0)
      throw std::invalid_argument("no star factor exists: isolated vertex " + std::to_string(v));

  detail::BudgetMeter meter(budget);
  StarFactorResult out;
  const int cap = max_degree(g);
  for (int s = 1; s <= cap; ++s) {
    auto dec = detail::run_decision<StarFactor>(
        meter, workers,
        [&](detail::BudgetMeter& m, const std::atomic<bool>* stop) {
          return detail::StarSearch(g, s, m, stop);
        },
        [&](int target, std::vector<detail::DecisionPrefix>& tasks) {
          return detail::StarSearch::split(g, s, target, tasks);
        });
    if (dec.out == detail::SearchOut::Sat) {
      out.value = s;
      out.witness = std::move(dec.witness);
      out.exhaustive = (s == cap);
    } else if (dec.out == detail::SearchOut::Unsat) {
      out.exhaustive = true;
      break;
    } else {
      out.exhaustive = false;
      break;
    }
  }
  out.nodes_expanded = meter.used();
  return out;
}

// Star-size guarantee c * (d / ln d)^(1/3). The logarithm base is a free
// choice absorbed into c; this library fixes the natural log.
struct StarBoundParams {
  double c = 1.0;
  int d = 2;
};

inline double star_size_bound_real(double c, double d) {
  if (!(c > 0)) throw std::invalid_argument("star size bound: c must be positive");
  if (!(d > 1.0)) throw std::invalid_argument("star size bound: need d > 1 so log d > 0");
  return c * std::cbrt(d / std::log(d));
}

inline double alon_wormald_bound(const StarBoundParams& p) {
  if (p.d < 2) throw std::invalid_argument("star size bound: d < 2");
  return star_size_bound_real(p.c, static_cast<double>(p.d));
}

}  // namespace histlab
