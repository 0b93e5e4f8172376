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

// Linear relaxations of LambdaCC and LambdaSTC.
//
// Two orientations are used for a pair value. The distance x_ij is 0 when i
// and j share a cluster. The labeling value z_ij equals x_ij on edges and
// 1 - x_ij on non-edges, so that z = 1 means "weak" or "missing".

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "lambdacc/errors.hpp"
#include "lambdacc/graph.hpp"
#include "lambdacc/lambda_param.hpp"
#include "lambdacc/pair_space.hpp"
#include "lambdacc/wedges.hpp"

namespace lambdacc {

inline constexpr double kFeasibilityTolerance = 1e-9;

// min c.z subject to z_a + z_b + z_c >= 1 for every constraint, z >= 0.
struct CoveringInstance {
  std::vector<double> costs;
  std::vector<std::array<std::uint32_t, 3>> constraints;

  std::size_t num_variables() const { return costs.size(); }
  std::size_t num_constraints() const { return constraints.size(); }

  // Throws Error unless costs are positive and finite and every constraint
  // names three distinct valid variables.
  void validate() const;
};

struct CoveringSolution {
  std::vector<double> values;  // z, in [0, 1]
  double objective = 0.0;
  // Certified lower bound on the LP optimum.
  double dual_bound = 0.0;
  // Per-constraint dual values; filled by the exact engine only.
  std::vector<double> duals;
  std::size_t iterations = 0;
};

struct ExactOptions {
  std::size_t max_variables = 5000;
  std::size_t max_constraints = 5000;
};

// Optimal solution through the dense simplex engine, which solves the
// packing dual max 1.y s.t. A^T y <= c and reads z off its duals. Throws
// SizeError above the caps.
CoveringSolution solve_exact(const CoveringInstance& instance,
                             const ExactOptions& options = {});

struct MwuOptions {
  // Budget on the number of phases (each raises the minimum constraint
  // coverage by one): ceil(budget_constant * ln(constraints + 2) / eps^2).
  double budget_constant = 8.0;
  // Potentials decay by exp(-step_factor * eps) per unit of coverage.
  double step_factor = 1.0;
  // Wall-clock limit in seconds; 0 disables it. Expiry is reported like an
  // exhausted budget.
  double time_limit_seconds = 0.0;
};

// Raised when the MWU budget runs out before the certified ratio reaches
// 1 + eps. Carries the best feasible iterate seen.
class MwuConvergenceError : public NumericalError {
 public:
  MwuConvergenceError(const std::string& message, CoveringSolution best)
      : NumericalError(message), best_(std::move(best)) {}

  const CoveringSolution& best() const { return best_; }
  // best().objective / best().dual_bound.
  double certified_ratio() const {
    return best_.dual_bound > 0.0 ? best_.objective / best_.dual_bound : 0.0;
  }

 private:
  CoveringSolution best_;
};

// Greedy multiplicative-weights covering solver. Each step raises the
// variable with the largest potential-per-cost; potentials of the
// constraints it touches decay geometrically. Stops once the scaled primal
// is within 1 + eps of the best dual bound, so the result satisfies
// objective <= (1 + eps) * dual_bound <= (1 + eps) * OPT.
CoveringSolution solve_mwu(const CoveringInstance& instance, double epsilon,
                           const MwuOptions& options = {});

// Sparse text dump: a header "p covering <variables> <constraints>", one
// "c <index> <cost>" line per variable, then one "<a> <b> <c>" line per
// constraint. Lines starting with '#' are comments.
void write_covering_instance(std::ostream& out, const CoveringInstance& instance);
CoveringInstance read_covering_instance(std::istream& in);

enum class Orientation { kDistance, kLabeling };

std::string_view to_string(Orientation orientation);

// Values on the active pairs of a PairVariableSpace. Pairs outside the
// space take x = 1 (z = 0). The values are kept in the orientation they were
// produced in, and conversions only change the view, so round trips are
// exact. The space's graph must outlive the solution.
class FractionalSolution {
 public:
  FractionalSolution(std::shared_ptr<const PairVariableSpace> space,
                     LambdaParam lambda, Orientation orientation,
                     std::vector<double> values);

  Orientation orientation() const { return view_; }
  LambdaParam lambda() const { return lambda_; }
  const PairVariableSpace& space() const { return *space_; }
  const std::shared_ptr<const PairVariableSpace>& shared_space() const { return space_; }

  // Value of variable `var` in the current orientation.
  double value(std::size_t var) const;
  std::vector<double> values() const;

  double x(VertexId a, VertexId b) const;
  double z(VertexId a, VertexId b) const;

  // sum_E (1 - lambda) x + sum_{non-edges} lambda (1 - x) over active pairs.
  double objective() const;

  FractionalSolution to_distance() const;
  FractionalSolution to_labeling() const;

 private:
  double native_to(std::size_t var, Orientation target) const;

  std::shared_ptr<const PairVariableSpace> space_;
  LambdaParam lambda_;
  Orientation native_;
  Orientation view_;
  std::vector<double> values_;
};

// The LambdaSTC covering LP: one variable per active pair (edges cost
// 1 - lambda, wedge end pairs lambda) and one constraint per open wedge, in
// wedge order.
struct LambdaStcLp {
  std::shared_ptr<const PairVariableSpace> space;
  LambdaParam lambda;
  CoveringInstance instance;
};

LambdaStcLp build_lambda_stc_lp(const Graph& g, const WedgeIndex& index,
                                LambdaParam lambda);

// Throws InfeasibleSolutionError naming the first wedge whose constraint
// z_ij + z_jk + z_ik >= 1 fails by more than the tolerance.
void check_lambda_stc_feasible(const Graph& g, const WedgeIndex& index,
                               const FractionalSolution& solution,
                               double tolerance = kFeasibilityTolerance);

// Triangle inequality x_a + x_b >= x_c over variable indices.
struct TriangleRow {
  std::uint32_t a = 0;
  std::uint32_t b = 0;
  std::uint32_t c = 0;
};

// min sum_j cost_j x_j + constant subject to the rows and 0 <= x <= 1.
struct GeneralLp {
  std::shared_ptr<const PairVariableSpace> space;
  LambdaParam lambda;
  std::vector<double> costs;  // 1 - lambda on edges, -lambda on non-edges
  double constant = 0.0;      // lambda * (number of non-edge variables)
  std::vector<TriangleRow> rows;

  std::size_t num_variables() const { return costs.size(); }
  std::size_t num_rows() const { return rows.size(); }
};

// Wedge constraints x_ij + x_jk >= x_ik plus all three rotations of every
// triangle.
GeneralLp build_intermediate_lp(const Graph& g, const WedgeIndex& index,
                                LambdaParam lambda);

// All pairs as variables and all three rotations of every vertex triple.
GeneralLp build_canonical_lp(const Graph& g, LambdaParam lambda);

struct LpSolution {
  FractionalSolution solution;
  double dual_bound = 0.0;
  std::string solver;  // "exact" or "mwu"
  std::size_t iterations = 0;
};

// Exact optimum in distance orientation. Caps apply to variables and rows.
LpSolution solve_general_exact(const GeneralLp& lp, const ExactOptions& options = {});

enum class LpMethod { kAuto, kExact, kMwu };

// Solves the LambdaSTC LP. kAuto uses the exact engine within its caps and
// MWU otherwise. The solution is in labeling orientation.
LpSolution solve_lambda_stc_lp(const LambdaStcLp& lp, LpMethod method,
                               double epsilon = 0.01,
                               const ExactOptions& exact = {},
                               const MwuOptions& mwu = {});

struct TripleViolation {
  VertexId i = 0;
  VertexId center = 0;
  VertexId k = 0;
  double excess = 0.0;  // x_ik - x_ij - x_jk
};

struct CanonicalCertificate {
  bool certified = false;
  std::size_t violation_count = 0;
  std::vector<TripleViolation> violations;  // first `max_reported`
  std::uint64_t triples_checked = 0;
};

// Checks x_ik <= x_ij + x_jk + tolerance for every vertex triple and every
// rotation. Only triples whose two short sides both have x < 1 are
// examined; any other triple satisfies the inequality since x <= 1.
CanonicalCertificate certify_canonical_feasibility(
    const Graph& g, const FractionalSolution& solution,
    double tolerance = kFeasibilityTolerance, std::size_t max_reported = 100);

}  // namespace lambdacc
