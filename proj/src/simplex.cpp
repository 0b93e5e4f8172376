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

#include "lambdacc/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lambdacc/errors.hpp"

namespace lambdacc::simplex {

namespace {

// Dictionary-form tableau: only nonbasic columns are stored. Column `n` is
// the phase-one artificial variable (label -1), column n+1 the right-hand
// side. Row m is the objective, row m+1 the phase-one objective. Variable
// labels 0..n-1 are structural, n..n+m-1 are slacks.
class Tableau {
 public:
  Tableau(const DenseProblem& p, const Options& options)
      : m_(p.rows), n_(p.cols), stride_(p.cols + 2), options_(options),
        d_((p.rows + 2) * (p.cols + 2), 0.0), basic_(p.rows), nonbasic_(p.cols + 1) {
    for (std::size_t i = 0; i < m_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) at(i, j) = p.at(i, j);
      at(i, n_) = -1.0;
      at(i, n_ + 1) = p.b[i];
      basic_[i] = static_cast<long>(n_ + i);
    }
    for (std::size_t j = 0; j < n_; ++j) {
      at(m_, j) = -p.c[j];
      nonbasic_[j] = static_cast<long>(j);
    }
    nonbasic_[n_] = -1;
    at(m_ + 1, n_) = 1.0;
  }

  Status solve(Result& result) {
    if (m_ > 0) {
      std::size_t r = 0;
      for (std::size_t i = 1; i < m_; ++i) {
        if (rhs(i) < rhs(r)) r = i;
      }
      if (rhs(r) < -options_.pivot_tolerance) {
        pivot(r, n_);
        Status phase_one = run(/*phase=*/1);
        if (phase_one != Status::kOptimal) return phase_one;
        if (at(m_ + 1, n_ + 1) < -options_.pivot_tolerance) return Status::kInfeasible;
        for (std::size_t i = 0; i < m_; ++i) {
          if (basic_[i] != -1) continue;
          std::size_t s = 0;
          for (std::size_t j = 1; j <= n_; ++j) {
            if (at(i, j) < at(i, s) || (at(i, j) == at(i, s) && nonbasic_[j] < nonbasic_[s])) {
              s = j;
            }
          }
          pivot(i, s);
        }
      }
    }
    Status phase_two = run(/*phase=*/2);
    if (phase_two != Status::kOptimal) return phase_two;

    result.x.assign(n_, 0.0);
    result.y.assign(m_, 0.0);
    for (std::size_t i = 0; i < m_; ++i) {
      if (basic_[i] >= 0 && static_cast<std::size_t>(basic_[i]) < n_) {
        result.x[static_cast<std::size_t>(basic_[i])] = rhs(i);
      }
    }
    for (std::size_t j = 0; j <= n_; ++j) {
      if (nonbasic_[j] >= static_cast<long>(n_)) {
        result.y[static_cast<std::size_t>(nonbasic_[j]) - n_] = at(m_, j);
      }
    }
    result.pivots = pivots_;
    return Status::kOptimal;
  }

 private:
  double& at(std::size_t i, std::size_t j) { return d_[i * stride_ + j]; }
  double rhs(std::size_t i) const { return d_[i * stride_ + n_ + 1]; }
  double at(std::size_t i, std::size_t j) const { return d_[i * stride_ + j]; }

  void pivot(std::size_t r, std::size_t s) {
    const double inv = 1.0 / at(r, s);
    double* row_r = &d_[r * stride_];
    for (std::size_t i = 0; i < m_ + 2; ++i) {
      if (i == r) continue;
      double* row_i = &d_[i * stride_];
      const double factor = row_i[s] * inv;
      if (factor == 0.0) continue;
      for (std::size_t j = 0; j < n_ + 2; ++j) {
        if (j != s) row_i[j] -= row_r[j] * factor;
      }
      row_i[s] = -factor;
    }
    for (std::size_t j = 0; j < n_ + 2; ++j) {
      if (j != s) row_r[j] *= inv;
    }
    row_r[s] = inv;
    std::swap(basic_[r], nonbasic_[s]);
    ++pivots_;
  }

  Status run(int phase) {
    const std::size_t obj = phase == 1 ? m_ + 1 : m_;
    const double tol = options_.pivot_tolerance;
    bool bland = false;
    std::size_t degenerate_run = 0;
    while (true) {
      if (pivots_ >= options_.max_pivots) return Status::kPivotLimit;
      long s = -1;
      for (std::size_t j = 0; j <= n_; ++j) {
        if (phase == 2 && nonbasic_[j] == -1) continue;
        const double rc = at(obj, j);
        if (rc >= -tol) continue;
        if (s < 0) {
          s = static_cast<long>(j);
          continue;
        }
        const auto cur = static_cast<std::size_t>(s);
        if (bland) {
          if (nonbasic_[j] < nonbasic_[cur]) s = static_cast<long>(j);
        } else if (rc < at(obj, cur) ||
                   (rc == at(obj, cur) && nonbasic_[j] < nonbasic_[cur])) {
          s = static_cast<long>(j);
        }
      }
      if (s < 0) return Status::kOptimal;
      const auto col = static_cast<std::size_t>(s);

      long r = -1;
      double best_ratio = 0.0;
      for (std::size_t i = 0; i < m_; ++i) {
        if (at(i, col) <= tol) continue;
        const double ratio = rhs(i) / at(i, col);
        if (r < 0 || ratio < best_ratio ||
            (ratio == best_ratio && basic_[i] < basic_[static_cast<std::size_t>(r)])) {
          r = static_cast<long>(i);
          best_ratio = ratio;
        }
      }
      if (r < 0) return Status::kUnbounded;

      if (best_ratio <= tol) {
        if (++degenerate_run >= options_.degenerate_run_limit) bland = true;
      } else {
        degenerate_run = 0;
      }
      pivot(static_cast<std::size_t>(r), col);
    }
  }

  std::size_t m_;
  std::size_t n_;
  std::size_t stride_;
  Options options_;
  std::vector<double> d_;
  std::vector<long> basic_;
  std::vector<long> nonbasic_;
  std::size_t pivots_ = 0;
};

void verify(const DenseProblem& p, const Options& options, Result& result) {
  const double tol = options.feasibility_tolerance;
  for (double& v : result.x) {
    if (v < -tol) throw NumericalError("simplex returned a negative primal value");
    v = std::max(v, 0.0);
  }
  for (double& v : result.y) {
    if (v < -tol) throw NumericalError("simplex returned a negative dual value");
    v = std::max(v, 0.0);
  }
  for (std::size_t i = 0; i < p.rows; ++i) {
    double lhs = 0.0;
    for (std::size_t j = 0; j < p.cols; ++j) lhs += p.at(i, j) * result.x[j];
    if (lhs > p.b[i] + tol * (1.0 + std::abs(p.b[i]))) {
      throw NumericalError("simplex primal violates row " + std::to_string(i));
    }
  }
  std::vector<double> reduced(p.cols, 0.0);
  for (std::size_t i = 0; i < p.rows; ++i) {
    if (result.y[i] == 0.0) continue;
    for (std::size_t j = 0; j < p.cols; ++j) reduced[j] += p.at(i, j) * result.y[i];
  }
  for (std::size_t j = 0; j < p.cols; ++j) {
    if (reduced[j] < p.c[j] - tol * (1.0 + std::abs(p.c[j]))) {
      throw NumericalError("simplex dual violates column " + std::to_string(j));
    }
  }
  result.objective = 0.0;
  for (std::size_t j = 0; j < p.cols; ++j) result.objective += p.c[j] * result.x[j];
  result.dual_objective = 0.0;
  for (std::size_t i = 0; i < p.rows; ++i) result.dual_objective += p.b[i] * result.y[i];
  const double gap = std::abs(result.objective - result.dual_objective);
  if (gap > options.gap_tolerance * (1.0 + std::abs(result.objective))) {
    throw NumericalError("simplex duality gap " + std::to_string(gap) +
                         " exceeds tolerance");
  }
}

}  // namespace

Result maximize(const DenseProblem& problem, const Options& options) {
  if (problem.a.size() != problem.rows * problem.cols ||
      problem.b.size() != problem.rows || problem.c.size() != problem.cols) {
    throw Error("dense problem dimensions are inconsistent");
  }
  Result result;
  Tableau tableau(problem, options);
  result.status = tableau.solve(result);
  if (result.status == Status::kOptimal) verify(problem, options, result);
  return result;
}

}  // namespace lambdacc::simplex
