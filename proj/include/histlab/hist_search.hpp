#pragma once

#include <atomic>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "histlab/budget.hpp"
#include "histlab/detail/dsu.hpp"
#include "histlab/detail/parallel.hpp"
#include "histlab/graph.hpp"
#include "histlab/spanning_tree.hpp"

namespace histlab {

// Tri-state outcome of a budgeted decision search. Engaged true/false means
// proven; a disengaged value means the budget ran out first. Budget
// exhaustion is never reported as false.
struct HistDecision {
  std::optional<bool> exists;
  std::optional<SpanningTree> witness;  // set when exists == true
  std::uint64_t nodes_expanded = 0;
};

struct MmidResult {
  std::optional<int> value;  // best proven threshold; empty if nothing proven
  bool no_internal = false;  // n <= 2: spanning trees have no internal vertex
  bool exhaustive = false;   // value is the exact optimum
  std::optional<SpanningTree> witness;
  std::uint64_t nodes_expanded = 0;
};

namespace detail {

// Branch and bound over edge decisions in canonical order, include branch
// first, looking for a spanning tree whose internal vertices all have degree
// at least k. Degree-state pruning:
//   - a vertex frozen strictly between degree 1 and k kills the branch;
//   - a vertex with one tree edge that can no longer reach degree k is
//     finalized as a leaf (its open edges are excluded);
//   - the non-excluded edges must keep all contracted components connected.
class DegreeSearch {
 public:
  DegreeSearch(const Graph& g, int k, BudgetMeter& meter, const std::atomic<bool>* stop = nullptr)
      : g_(g), k_(k), meter_(meter), stop_(stop), edges_(g.edges()), dsu_(g.vertex_count()) {
    const std::size_t n = static_cast<std::size_t>(g_.vertex_count());
    state_.assign(edges_.size(), EState::Undecided);
    inc_deg_.assign(n, 0);
    und_deg_.assign(n, 0);
    incident_.assign(n, {});
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      incident_[static_cast<std::size_t>(edges_[i].u)].push_back(static_cast<int>(i));
      incident_[static_cast<std::size_t>(edges_[i].v)].push_back(static_cast<int>(i));
      ++und_deg_[static_cast<std::size_t>(edges_[i].u)];
      ++und_deg_[static_cast<std::size_t>(edges_[i].v)];
    }
  }

  SearchOut run_root() { return rec(0); }

  SearchOut run_prefix(const DecisionPrefix& prefix) {
    std::size_t resume = 0;
    for (const auto& [idx, take] : prefix) {
      if (!decide(idx, take))
        throw std::logic_error("degree search: prefix replay conflict");
      resume = static_cast<std::size_t>(idx) + 1;
    }
    return rec(resume);
  }

  const SpanningTree& witness() const { return witness_; }

  // Breadth-first expansion into at least `target` open subproblems for the
  // worker pool. Children are only queued after a consistent replay, so
  // run_prefix on them cannot conflict. A tree proven during expansion
  // resolves the whole decision immediately.
  static SplitOutcome<SpanningTree> split(const Graph& g, int k, int target,
                                          std::vector<DecisionPrefix>& out) {
    BudgetMeter free_meter{SearchBudget{}};
    std::vector<DecisionPrefix> queue{DecisionPrefix{}};
    std::size_t head = 0;
    SplitOutcome<SpanningTree> so;
    while (head < queue.size() && queue.size() - head < static_cast<std::size_t>(target)) {
      DecisionPrefix prefix = std::move(queue[head++]);
      DegreeSearch probe(g, k, free_meter);
      std::size_t resume = 0;
      bool ok = true;
      for (const auto& [idx, take] : prefix) {
        if (!probe.decide(idx, take)) {
          ok = false;
          break;
        }
        resume = static_cast<std::size_t>(idx) + 1;
      }
      if (!ok) throw std::logic_error("degree search: split replay conflict");
      if (probe.dsu_.components() == 1) {
        if (probe.leaf_satisfies()) {
          so.resolved_sat = true;
          so.witness = probe.included_edges();
          out.clear();
          return so;
        }
        continue;
      }
      std::size_t idx = resume;
      while (idx < probe.edges_.size() && probe.state_[idx] != EState::Undecided) ++idx;
      if (idx == probe.edges_.size()) continue;
      const Edge e = probe.edges_[idx];
      const bool chord = probe.dsu_.same(e.u, e.v);
      for (const bool take : {true, false}) {
        if (chord && take) continue;
        const std::size_t tm = probe.trail_.size();
        const std::size_t dm = probe.dsu_.mark();
        if (probe.decide(static_cast<int>(idx), take)) {
          DecisionPrefix child = prefix;
          child.emplace_back(static_cast<int>(idx), take);
          queue.push_back(std::move(child));
        }
        probe.undo(tm, dm);
      }
    }
    out.assign(queue.begin() + static_cast<std::ptrdiff_t>(head), queue.end());
    return so;
  }

 private:
  enum class EState : unsigned char { Undecided, Included, Excluded };

  bool decide(int ei, bool include) {
    apply(ei, include);
    return propagate();
  }

  void apply(int ei, bool include) {
    state_[static_cast<std::size_t>(ei)] = include ? EState::Included : EState::Excluded;
    trail_.push_back(ei);
    const Edge& e = edges_[static_cast<std::size_t>(ei)];
    --und_deg_[static_cast<std::size_t>(e.u)];
    --und_deg_[static_cast<std::size_t>(e.v)];
    if (include) {
      ++inc_deg_[static_cast<std::size_t>(e.u)];
      ++inc_deg_[static_cast<std::size_t>(e.v)];
      dsu_.unite(e.u, e.v);
    }
    touched_.push_back(e.u);
    touched_.push_back(e.v);
  }

  bool propagate() {
    while (!touched_.empty()) {
      const VertexId v = touched_.back();
      touched_.pop_back();
      const int inc = inc_deg_[static_cast<std::size_t>(v)];
      const int und = und_deg_[static_cast<std::size_t>(v)];
      const int potential = inc + und;
      if (potential < 1) return conflict();  // isolated: can never be spanned
      if (und == 0) {
        if (inc != 1 && inc < k_) return conflict();  // frozen between 1 and k
        continue;
      }
      if (inc >= 2 && potential < k_) return conflict();  // internal, short of k
      if (inc == 1 && potential < k_) {
        // can no longer reach k: finalize as a leaf
        for (const int ei : incident_[static_cast<std::size_t>(v)])
          if (state_[static_cast<std::size_t>(ei)] == EState::Undecided) apply(ei, false);
      }
    }
    return connected_with_open_edges();
  }

  bool conflict() {
    touched_.clear();
    return false;
  }

  bool connected_with_open_edges() {
    const int n = g_.vertex_count();
    ScratchDsu scratch(n);
    for (int v = 0; v < n; ++v) scratch.unite(v, dsu_.find(v));
    for (std::size_t i = 0; i < edges_.size(); ++i)
      if (state_[i] != EState::Excluded) scratch.unite(edges_[i].u, edges_[i].v);
    return scratch.components() == 1;
  }

  void undo(std::size_t trail_mark, std::size_t dsu_mark) {
    while (trail_.size() > trail_mark) {
      const int ei = trail_.back();
      trail_.pop_back();
      const Edge& e = edges_[static_cast<std::size_t>(ei)];
      ++und_deg_[static_cast<std::size_t>(e.u)];
      ++und_deg_[static_cast<std::size_t>(e.v)];
      if (state_[static_cast<std::size_t>(ei)] == EState::Included) {
        --inc_deg_[static_cast<std::size_t>(e.u)];
        --inc_deg_[static_cast<std::size_t>(e.v)];
      }
      state_[static_cast<std::size_t>(ei)] = EState::Undecided;
    }
    dsu_.rollback(dsu_mark);
    touched_.clear();
  }

  bool leaf_satisfies() const {
    for (VertexId v = 0; v < g_.vertex_count(); ++v) {
      const int deg = inc_deg_[static_cast<std::size_t>(v)];
      if (deg != 1 && deg < k_) return false;
    }
    return true;
  }

  SpanningTree included_edges() const {
    SpanningTree t;
    for (std::size_t i = 0; i < edges_.size(); ++i)
      if (state_[i] == EState::Included) t.edges.push_back(edges_[i]);
    return t;
  }

  SearchOut rec(std::size_t idx) {
    if (stop_ && stop_->load(std::memory_order_relaxed)) return SearchOut::Budget;
    if (!meter_.consume()) return SearchOut::Budget;
    if (dsu_.components() == 1) {
      // included edges form a spanning tree; open edges are all chords now
      if (!leaf_satisfies()) return SearchOut::Unsat;
      witness_ = included_edges();
      return SearchOut::Sat;
    }
    while (idx < edges_.size() && state_[idx] != EState::Undecided) ++idx;
    if (idx == edges_.size()) return SearchOut::Unsat;

    const Edge e = edges_[idx];
    if (dsu_.same(e.u, e.v)) {
      const std::size_t tm = trail_.size();
      const std::size_t dm = dsu_.mark();
      const SearchOut r = decide(static_cast<int>(idx), false) ? rec(idx + 1) : SearchOut::Unsat;
      undo(tm, dm);
      return r;
    }
    for (const bool include : {true, false}) {
      const std::size_t tm = trail_.size();
      const std::size_t dm = dsu_.mark();
      const SearchOut r = decide(static_cast<int>(idx), include) ? rec(idx + 1) : SearchOut::Unsat;
      undo(tm, dm);
      if (r != SearchOut::Unsat) return r;
    }
    return SearchOut::Unsat;
  }

  const Graph& g_;
  const int k_;
  BudgetMeter& meter_;
  const std::atomic<bool>* stop_;
  std::vector<Edge> edges_;
  RollbackDsu dsu_;
  std::vector<EState> state_;
  std::vector<int> inc_deg_;
  std::vector<int> und_deg_;
  std::vector<std::vector<int>> incident_;
  std::vector<int> trail_;
  std::vector<VertexId> touched_;
  SpanningTree witness_;
};

inline DecisionOutcome<SpanningTree> exists_impl(const Graph& g, int k, BudgetMeter& meter,
                                                 int workers) {
  return run_decision<SpanningTree>(
      meter, workers,
      [&](BudgetMeter& m, const std::atomic<bool>* stop) { return DegreeSearch(g, k, m, stop); },
      [&](int target, std::vector<DecisionPrefix>& tasks) {
        return DegreeSearch::split(g, k, target, tasks);
      });
}

}  // namespace detail

// Decision problem: does g have a spanning tree in which every internal
// vertex has degree >= k? (k = 3 asks for a spanning tree without degree-2
// internal vertices.) Trees on at most two vertices have no internal
// vertices, so the condition holds vacuously there.
inline HistDecision exists_tree_all_internal_at_least(const Graph& g, int k,
                                                      const SearchBudget& budget = {},
                                                      int workers = 1) {
  if (k < 2) throw std::invalid_argument("exists_tree_all_internal_at_least: k must be at least 2");
  if (!is_connected(g)) throw std::invalid_argument("exists_tree_all_internal_at_least: graph is not connected");
  HistDecision out;
  if (g.vertex_count() <= 2) {
    out.exists = true;
    out.witness = SpanningTree{g.edges()};
    return out;
  }
  detail::BudgetMeter meter(budget);
  auto dec = detail::exists_impl(g, k, meter, workers);
  out.nodes_expanded = meter.used();
  if (dec.out == detail::SearchOut::Sat) {
    out.exists = true;
    out.witness = std::move(dec.witness);
  } else if (dec.out == detail::SearchOut::Unsat) {
    out.exists = false;
  }
  return out;
}

// Largest k for which a spanning tree with all internal degrees >= k exists.
// Ascends from k = 2 (any spanning tree qualifies there), reusing one budget
// meter across the ascent; internal degrees cannot exceed the maximum graph
// degree, which caps the ascent.
inline MmidResult max_min_internal_degree(const Graph& g, const SearchBudget& budget = {},
                                          int workers = 1) {
  if (g.vertex_count() == 0) throw std::invalid_argument("max_min_internal_degree: empty graph");
  if (!is_connected(g)) throw std::invalid_argument("max_min_internal_degree: graph is not connected");
  MmidResult out;
  if (g.vertex_count() <= 2) {
    out.no_internal = true;
    out.exhaustive = true;
    out.witness = SpanningTree{g.edges()};
    return out;
  }
  detail::BudgetMeter meter(budget);
  const int cap = max_degree(g);
  for (int k = 2; k <= cap; ++k) {
    auto dec = detail::exists_impl(g, k, meter, workers);
    if (dec.out == detail::SearchOut::Sat) {
      out.value = k;
      out.witness = std::move(dec.witness);
      out.exhaustive = (k == cap);
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

}  // namespace histlab
