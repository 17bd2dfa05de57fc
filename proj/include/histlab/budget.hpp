#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <optional>

namespace histlab {

// Limits for the exact solvers; absent fields mean unbounded. Node limits
// count visited search-tree nodes and give reproducible truncation points;
// time limits are wall-clock and inherently machine-dependent.
struct SearchBudget {
  std::optional<std::uint64_t> node_limit;
  std::optional<double> time_limit_seconds;
};

namespace detail {

// Consumable meter shared by a whole search (including the ascent over k).
// The deadline is absolute so child meters created for worker subproblems
// share it; node quotas are handed out per subproblem instead, keeping the
// merged verdict independent of thread scheduling.
class BudgetMeter {
 public:
  using Clock = std::chrono::steady_clock;

  explicit BudgetMeter(const SearchBudget& budget) {
    if (budget.node_limit) {
      limited_ = true;
      remaining_.store(static_cast<std::int64_t>(*budget.node_limit));
    }
    if (budget.time_limit_seconds) {
      has_deadline_ = true;
      deadline_ = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                     std::chrono::duration<double>(*budget.time_limit_seconds));
    }
  }

  BudgetMeter(std::optional<std::uint64_t> node_quota, bool has_deadline, Clock::time_point deadline) {
    if (node_quota) {
      limited_ = true;
      remaining_.store(static_cast<std::int64_t>(*node_quota));
    }
    has_deadline_ = has_deadline;
    deadline_ = deadline;
  }

  // Returns false once the budget is exhausted.
  bool consume(std::uint64_t nodes = 1) {
    used_.fetch_add(nodes, std::memory_order_relaxed);
    if (limited_ &&
        remaining_.fetch_sub(static_cast<std::int64_t>(nodes), std::memory_order_relaxed) <
            static_cast<std::int64_t>(nodes))
      return false;
    if (has_deadline_ && Clock::now() > deadline_) return false;
    return true;
  }

  std::uint64_t used() const { return used_.load(std::memory_order_relaxed); }

  bool limited() const { return limited_; }
  bool has_deadline() const { return has_deadline_; }
  Clock::time_point deadline() const { return deadline_; }

  std::optional<std::uint64_t> remaining_nodes() const {
    if (!limited_) return std::nullopt;
    const std::int64_t r = remaining_.load(std::memory_order_relaxed);
    return r > 0 ? static_cast<std::uint64_t>(r) : 0u;
  }

  // Book a child's consumption against this meter after the child finishes.
  void charge(std::uint64_t nodes) {
    used_.fetch_add(nodes, std::memory_order_relaxed);
    if (limited_) remaining_.fetch_sub(static_cast<std::int64_t>(nodes), std::memory_order_relaxed);
  }

 private:
  std::atomic<std::uint64_t> used_{0};
  std::atomic<std::int64_t> remaining_{0};
  bool limited_ = false;
  bool has_deadline_ = false;
  Clock::time_point deadline_{};
};

}  // namespace detail
}  // namespace histlab
