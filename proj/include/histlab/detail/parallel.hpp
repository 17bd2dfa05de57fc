#pragma once

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <mutex>
#include <optional>
#include <thread>
#include <utility>
#include <vector>

#include "histlab/budget.hpp"

namespace histlab::detail {

// Run fn(0..count-1) across up to `workers` threads pulling from a shared
// atomic index. The calling thread participates; with workers <= 1 this is a
// plain loop. fn must be safe to call concurrently.
template <typename Fn>
void for_each_task(std::size_t count, int workers, Fn&& fn) {
  if (workers <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  auto drain = [&] {
    for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
  };
  const std::size_t extra =
      std::min<std::size_t>(static_cast<std::size_t>(workers) - 1, count - 1);
  std::vector<std::thread> threads;
  threads.reserve(extra);
  for (std::size_t t = 0; t < extra; ++t) threads.emplace_back(drain);
  drain();
  for (auto& t : threads) t.join();
}

// A branch-decision prefix: (decision index, taken?) pairs in the order the
// sequential search would make them. Replaying a prefix on a fresh search
// state reproduces the subproblem deterministically.
using DecisionPrefix = std::vector<std::pair<int, bool>>;

enum class SearchOut { Sat, Unsat, Budget };

template <typename Witness>
struct SplitOutcome {
  bool resolved_sat = false;
  Witness witness{};
};

template <typename Witness>
struct DecisionOutcome {
  SearchOut out = SearchOut::Unsat;
  std::optional<Witness> witness;
};

// Shared driver for budgeted decision searches. Sequential mode runs the
// search on the parent meter directly. Parallel mode splits the decision
// tree into replayable subproblems and hands each a static share of the
// remaining node quota, so the merged verdict depends only on
// (input, budget, workers) and never on thread scheduling. Witnesses from
// parallel runs are valid but may differ between runs.
//
//   make(meter, stop) -> search with run_root(), run_prefix(prefix), witness()
//   split(target, tasks) -> SplitOutcome
template <typename Witness, typename MakeSearch, typename SplitFn>
DecisionOutcome<Witness> run_decision(BudgetMeter& meter, int workers, MakeSearch&& make,
                                      SplitFn&& split) {
  if (workers <= 1) {
    auto search = make(meter, nullptr);
    const SearchOut r = search.run_root();
    DecisionOutcome<Witness> out{r, std::nullopt};
    if (r == SearchOut::Sat) out.witness = search.witness();
    return out;
  }

  std::vector<DecisionPrefix> tasks;
  auto so = split(8 * workers, tasks);
  if (so.resolved_sat) return {SearchOut::Sat, std::move(so.witness)};
  if (tasks.empty()) return {SearchOut::Unsat, std::nullopt};

  const auto remaining = meter.remaining_nodes();
  const std::size_t count = tasks.size();
  std::atomic<bool> stop{false};
  std::atomic<int> sats{0};
  std::atomic<int> budgets{0};
  std::mutex mutex;
  std::optional<Witness> witness;

  for_each_task(count, workers, [&](std::size_t i) {
    if (stop.load(std::memory_order_relaxed)) return;
    std::optional<std::uint64_t> quota;
    if (remaining) quota = *remaining / count + (i < *remaining % count ? 1 : 0);
    BudgetMeter child(quota, meter.has_deadline(), meter.deadline());
    auto search = make(child, &stop);
    const SearchOut r = search.run_prefix(tasks[i]);
    meter.charge(child.used());
    if (r == SearchOut::Sat) {
      const std::lock_guard<std::mutex> lock(mutex);
      if (!witness) witness = search.witness();
      sats.fetch_add(1);
      stop.store(true, std::memory_order_relaxed);
    } else if (r == SearchOut::Budget) {
      budgets.fetch_add(1);
    }
  });

  if (sats.load() > 0) return {SearchOut::Sat, std::move(witness)};
  if (budgets.load() > 0) return {SearchOut::Budget, std::nullopt};
  return {SearchOut::Unsat, std::nullopt};
}

}  // namespace histlab::detail
