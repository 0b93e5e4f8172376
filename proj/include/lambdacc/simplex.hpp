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

// Dense two-phase tableau simplex for
//
//   maximize c.x  subject to  A x <= b,  x >= 0.
//
// Pricing is Dantzig's rule until a run of degenerate pivots, after which
// Bland's smallest-index rule takes over for the rest of the solve, which
// rules out cycling. Every optimum is returned together with its dual and
// checked: primal feasibility, dual feasibility and a matching objective.

#pragma once

#include <cstddef>
#include <vector>

namespace lambdacc::simplex {

struct DenseProblem {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> a;  // row-major, rows * cols
  std::vector<double> b;  // rows
  std::vector<double> c;  // cols

  DenseProblem(std::size_t num_rows, std::size_t num_cols)
      : rows(num_rows), cols(num_cols), a(num_rows * num_cols, 0.0),
        b(num_rows, 0.0), c(num_cols, 0.0) {}

  double& at(std::size_t row, std::size_t col) { return a[row * cols + col]; }
  double at(std::size_t row, std::size_t col) const { return a[row * cols + col]; }
};

enum class Status { kOptimal, kInfeasible, kUnbounded, kPivotLimit };

struct Options {
  double pivot_tolerance = 1e-9;
  // Primal and dual feasibility tolerance of the returned certificate.
  double feasibility_tolerance = 1e-9;
  // Allowed |primal - dual| relative to 1 + |objective|.
  double gap_tolerance = 1e-7;
  // Consecutive degenerate pivots before switching to Bland's rule.
  std::size_t degenerate_run_limit = 50;
  std::size_t max_pivots = 10'000'000;
};

struct Result {
  Status status = Status::kInfeasible;
  std::vector<double> x;  // primal, cols
  std::vector<double> y;  // dual, rows; nonnegative
  double objective = 0.0;       // c.x
  double dual_objective = 0.0;  // b.y
  std::size_t pivots = 0;
};

// Solves the problem. On kOptimal the certificate has been verified; a
// certificate that fails verification raises NumericalError.
Result maximize(const DenseProblem& problem, const Options& options = {});

}  // namespace lambdacc::simplex
