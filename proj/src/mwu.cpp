// Copyright 2026 The LambdaCC Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numeric>
#include <queue>
#include <utility>

#include "lambdacc/lp.hpp"

namespace lambdacc {

namespace {

// Potentials are stored relative to exp(-eta * base); rebasing happens once
// eta * (min coverage - base) passes this many nats. Kept small so that the
// gradients of useful variables stay far above the rounding residue left by
// incremental updates.
constexpr double kRebaseThreshold = 10.0;
// Incremental gradients are also rebuilt after this many raises per
// constraint.
constexpr std::size_t kRaisesPerRecompute = 16;

class MwuState {
 public:
  MwuState(const CoveringInstance& instance, double eta)
      : inst_(instance), eta_(eta), decay_(std::exp(-eta)),
        potential_(instance.num_constraints(), 1.0),
        coverage_(instance.num_constraints(), 0),
        count_(instance.num_variables(), 0),
        gradient_(instance.num_variables(), 0.0),
        level_count_(1, instance.num_constraints()) {
    const std::size_t vars = instance.num_variables();
    offsets_.assign(vars + 1, 0);
    for (const auto& row : instance.constraints) {
      for (std::uint32_t v : row) ++offsets_[v + 1];
    }
    std::partial_sum(offsets_.begin(), offsets_.end(), offsets_.begin());
    incidence_.resize(offsets_.back());
    std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
    for (std::size_t i = 0; i < instance.num_constraints(); ++i) {
      for (std::uint32_t v : instance.constraints[i]) incidence_[cursor[v]++] = i;
    }
    recompute();
  }

  // Largest gradient-to-cost ratio and its variable.
  std::pair<double, std::uint32_t> best_variable() {
    while (true) {
      auto [ratio, v] = heap_.top();
      const double current = gradient_[v] / inst_.costs[v];
      if (ratio <= current) return {current, v};
      heap_.pop();
      heap_.push({current, v});
    }
  }

  // Lower bound from the current potentials: y = p / max ratio is dual
  // feasible for the packing problem A^T y <= c.
  double dual_bound() {
    const double ratio = best_variable().first;
    return ratio > 0.0 ? potential_sum_ / ratio : 0.0;
  }

  void raise(std::uint32_t v) {
    heap_.pop();
    ++count_[v];
    cost_sum_ += inst_.costs[v];
    for (std::size_t k = offsets_[v]; k < offsets_[v + 1]; ++k) {
      const std::size_t i = incidence_[k];
      --level_count_[coverage_[i]];
      ++coverage_[i];
      if (coverage_[i] >= level_count_.size()) level_count_.push_back(0);
      ++level_count_[coverage_[i]];
      const double old = potential_[i];
      const double next = old * decay_;
      potential_[i] = next;
      potential_sum_ -= old - next;
      for (std::uint32_t u : inst_.constraints[i]) gradient_[u] -= old - next;
    }
    heap_.push({gradient_[v] / inst_.costs[v], v});
    while (level_count_[min_coverage_] == 0) ++min_coverage_;
    if (eta_ * static_cast<double>(min_coverage_ - base_) > kRebaseThreshold) {
      base_ = min_coverage_;
      recompute();
    } else if (++raises_since_recompute_ > kRaisesPerRecompute * (potential_.size() + 64)) {
      recompute();
    }
  }

  // Rebuilds potentials, gradients and the heap from the coverage counts.
  void recompute() {
    raises_since_recompute_ = 0;
    potential_sum_ = 0.0;
    for (std::size_t i = 0; i < potential_.size(); ++i) {
      potential_[i] = std::exp(-eta_ * static_cast<double>(coverage_[i] - base_));
      potential_sum_ += potential_[i];
    }
    std::fill(gradient_.begin(), gradient_.end(), 0.0);
    for (std::size_t i = 0; i < potential_.size(); ++i) {
      for (std::uint32_t u : inst_.constraints[i]) gradient_[u] += potential_[i];
    }
    heap_ = {};
    for (std::uint32_t v = 0; v < gradient_.size(); ++v) {
      if (offsets_[v] != offsets_[v + 1]) heap_.push({gradient_[v] / inst_.costs[v], v});
    }
  }

  std::uint64_t min_coverage() const { return min_coverage_; }
  double cost_sum() const { return cost_sum_; }
  const std::vector<std::uint64_t>& counts() const { return count_; }

 private:
  const CoveringInstance& inst_;
  double eta_;
  double decay_;
  std::vector<std::size_t> offsets_;
  std::vector<std::size_t> incidence_;
  std::vector<double> potential_;
  std::vector<std::uint64_t> coverage_;
  std::vector<std::uint64_t> count_;
  std::vector<double> gradient_;
  std::vector<std::size_t> level_count_;
  std::priority_queue<std::pair<double, std::uint32_t>> heap_;
  double potential_sum_ = 0.0;
  double cost_sum_ = 0.0;
  std::uint64_t min_coverage_ = 0;
  std::uint64_t base_ = 0;
  std::size_t raises_since_recompute_ = 0;
};

// Scales the counts into a feasible z, clamped to [0, 1].
std::vector<double> scaled_iterate(const CoveringInstance& instance,
                                   const std::vector<std::uint64_t>& counts,
                                   std::uint64_t min_coverage) {
  std::vector<double> z(counts.size());
  const double scale = 1.0 / static_cast<double>(min_coverage);
  for (std::size_t j = 0; j < counts.size(); ++j) {
    z[j] = std::min(1.0, static_cast<double>(counts[j]) * scale);
  }
  double lowest = std::numeric_limits<double>::infinity();
  for (const auto& [a, b, c] : instance.constraints) {
    lowest = std::min(lowest, z[a] + z[b] + z[c]);
  }
  if (lowest < 1.0) {
    for (double& v : z) v = std::min(1.0, v / lowest);
  }
  return z;
}

double cost_of(const CoveringInstance& instance, const std::vector<double>& z) {
  double total = 0.0;
  for (std::size_t j = 0; j < z.size(); ++j) total += instance.costs[j] * z[j];
  return total;
}

}  // namespace

CoveringSolution solve_mwu(const CoveringInstance& instance, double epsilon,
                           const MwuOptions& options) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw ParameterError("epsilon must lie in (0, 1), got " + std::to_string(epsilon));
  }
  instance.validate();
  CoveringSolution best;
  best.values.assign(instance.num_variables(), 0.0);
  if (instance.constraints.empty()) return best;

  const double budget = std::ceil(
      options.budget_constant *
      std::log(static_cast<double>(instance.num_constraints()) + 2.0) / (epsilon * epsilon));
  MwuState state(instance, options.step_factor * epsilon);
  double best_upper = std::numeric_limits<double>::infinity();
  double best_lower = 0.0;
  std::size_t steps = 0;
  const auto start = std::chrono::steady_clock::now();
  auto out_of_time = [&] {
    if (options.time_limit_seconds <= 0.0 || steps % 4096 != 0) return false;
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    return elapsed.count() >= options.time_limit_seconds;
  };

  while (true) {
    best_lower = std::max(best_lower, state.dual_bound());
    if (best_upper <= (1.0 + epsilon) * best_lower) {
      // Confirm with freshly computed potentials before stopping.
      state.recompute();
      const double fresh = state.dual_bound();
      if (best_upper <= (1.0 + epsilon) * fresh) {
        best.dual_bound = std::max(best.dual_bound, fresh);
        break;
      }
      best_lower = fresh;
    }
    best.dual_bound = best_lower;
    if (static_cast<double>(state.min_coverage()) >= budget) {
      best.iterations = steps;
      throw MwuConvergenceError(
          "MWU did not reach ratio 1 + " + std::to_string(epsilon) + " within " +
              std::to_string(static_cast<std::uint64_t>(budget)) + " phases",
          std::move(best));
    }
    if (out_of_time() && best_upper < std::numeric_limits<double>::infinity()) {
      best.iterations = steps;
      throw MwuConvergenceError("MWU reached its time limit of " +
                                    std::to_string(options.time_limit_seconds) + " s",
                                std::move(best));
    }

    const std::uint64_t before = state.min_coverage();
    state.raise(state.best_variable().second);
    ++steps;
    if (state.min_coverage() > before) {
      const double upper = state.cost_sum() / static_cast<double>(state.min_coverage());
      if (upper < best_upper) {
        best.values = scaled_iterate(instance, state.counts(), state.min_coverage());
        best.objective = cost_of(instance, best.values);
        best_upper = best.objective;
      }
    }
  }
  best.iterations = steps;
  return best;
}

}  // namespace lambdacc
