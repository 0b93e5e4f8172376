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

#include "lambdacc/lp.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

#include "lambdacc/simplex.hpp"

namespace lambdacc {

namespace {

void check_caps(std::size_t variables, std::size_t constraints,
                const ExactOptions& options) {
  if (variables > options.max_variables || constraints > options.max_constraints) {
    throw SizeError("LP has " + std::to_string(variables) + " variables and " +
                    std::to_string(constraints) +
                    " constraints, above the exact engine caps (" +
                    std::to_string(options.max_variables) + ", " +
                    std::to_string(options.max_constraints) +
                    "); use the MWU solver instead");
  }
}

}  // namespace

void CoveringInstance::validate() const {
  for (std::size_t j = 0; j < costs.size(); ++j) {
    if (!(costs[j] > 0.0) || !std::isfinite(costs[j])) {
      throw Error("covering variable " + std::to_string(j) + " has non-positive cost");
    }
  }
  for (std::size_t i = 0; i < constraints.size(); ++i) {
    const auto& [a, b, c] = constraints[i];
    if (a >= costs.size() || b >= costs.size() || c >= costs.size()) {
      throw Error("covering constraint " + std::to_string(i) + " names an unknown variable");
    }
    if (a == b || b == c || a == c) {
      throw Error("covering constraint " + std::to_string(i) + " repeats a variable");
    }
  }
}

CoveringSolution solve_exact(const CoveringInstance& instance,
                             const ExactOptions& options) {
  instance.validate();
  check_caps(instance.num_variables(), instance.num_constraints(), options);
  CoveringSolution out;
  out.values.assign(instance.num_variables(), 0.0);
  if (instance.constraints.empty()) return out;

  // Packing dual: rows are covering variables, columns covering constraints.
  simplex::DenseProblem dual(instance.num_variables(), instance.num_constraints());
  for (std::size_t i = 0; i < instance.num_constraints(); ++i) {
    for (std::uint32_t v : instance.constraints[i]) dual.at(v, i) = 1.0;
    dual.c[i] = 1.0;
  }
  dual.b = instance.costs;
  simplex::Result result = simplex::maximize(dual);
  if (result.status != simplex::Status::kOptimal) {
    throw NumericalError("exact engine did not reach an optimum on a covering LP");
  }
  for (std::size_t j = 0; j < instance.num_variables(); ++j) {
    out.values[j] = std::clamp(result.y[j], 0.0, 1.0);
    out.objective += instance.costs[j] * out.values[j];
  }
  out.duals = std::move(result.x);
  out.dual_bound = result.objective;
  out.iterations = result.pivots;
  return out;
}

void write_covering_instance(std::ostream& out, const CoveringInstance& instance) {
  out << "p covering " << instance.num_variables() << ' ' << instance.num_constraints()
      << '\n';
  out.precision(17);
  for (std::size_t j = 0; j < instance.costs.size(); ++j) {
    out << "c " << j << ' ' << instance.costs[j] << '\n';
  }
  for (const auto& [a, b, c] : instance.constraints) {
    out << a << ' ' << b << ' ' << c << '\n';
  }
}

CoveringInstance read_covering_instance(std::istream& in) {
  CoveringInstance instance;
  std::string line;
  std::size_t line_number = 0;
  bool header = false;
  std::size_t expected_constraints = 0;
  while (std::getline(in, line)) {
    ++line_number;
    std::istringstream tokens(line);
    std::string head;
    if (!(tokens >> head) || head[0] == '#') continue;
    if (head == "p") {
      std::string kind;
      std::size_t vars = 0;
      if (!(tokens >> kind >> vars >> expected_constraints) || kind != "covering") {
        throw ParseError(line_number, "expected 'p covering <variables> <constraints>'");
      }
      instance.costs.assign(vars, 0.0);
      header = true;
    } else if (!header) {
      throw ParseError(line_number, "missing 'p covering' header");
    } else if (head == "c") {
      std::size_t index = 0;
      double cost = 0.0;
      if (!(tokens >> index >> cost) || index >= instance.costs.size()) {
        throw ParseError(line_number, "bad cost line");
      }
      instance.costs[index] = cost;
    } else {
      std::array<std::uint32_t, 3> row{};
      std::istringstream all(line);
      if (!(all >> row[0] >> row[1] >> row[2])) {
        throw ParseError(line_number, "bad constraint line");
      }
      instance.constraints.push_back(row);
    }
  }
  if (!header) throw ParseError(0, "empty covering instance");
  if (instance.constraints.size() != expected_constraints) {
    throw ParseError(0, "constraint count does not match the header");
  }
  instance.validate();
  return instance;
}

std::string_view to_string(Orientation orientation) {
  return orientation == Orientation::kDistance ? "distance" : "labeling";
}

FractionalSolution::FractionalSolution(std::shared_ptr<const PairVariableSpace> space,
                                       LambdaParam lambda, Orientation orientation,
                                       std::vector<double> values)
    : space_(std::move(space)), lambda_(lambda), native_(orientation),
      view_(orientation), values_(std::move(values)) {
  if (!space_ || values_.size() != space_->size()) {
    throw Error("fractional solution does not match its variable space");
  }
}

double FractionalSolution::native_to(std::size_t var, Orientation target) const {
  const double v = values_[var];
  if (target == native_ || space_->is_edge(var)) return v;
  return 1.0 - v;
}

double FractionalSolution::value(std::size_t var) const { return native_to(var, view_); }

std::vector<double> FractionalSolution::values() const {
  std::vector<double> out(values_.size());
  for (std::size_t v = 0; v < values_.size(); ++v) out[v] = value(v);
  return out;
}

double FractionalSolution::x(VertexId a, VertexId b) const {
  if (a == b) return 0.0;
  auto var = space_->index_of(a, b);
  return var ? native_to(*var, Orientation::kDistance) : 1.0;
}

double FractionalSolution::z(VertexId a, VertexId b) const {
  if (a == b) return 0.0;
  auto var = space_->index_of(a, b);
  return var ? native_to(*var, Orientation::kLabeling) : 0.0;
}

double FractionalSolution::objective() const {
  double total = 0.0;
  for (std::size_t v = 0; v < values_.size(); ++v) {
    total += lambda_.cost(space_->is_edge(v)) * native_to(v, Orientation::kLabeling);
  }
  return total;
}

FractionalSolution FractionalSolution::to_distance() const {
  FractionalSolution copy = *this;
  copy.view_ = Orientation::kDistance;
  return copy;
}

FractionalSolution FractionalSolution::to_labeling() const {
  FractionalSolution copy = *this;
  copy.view_ = Orientation::kLabeling;
  return copy;
}

LambdaStcLp build_lambda_stc_lp(const Graph& g, const WedgeIndex& index,
                                LambdaParam lambda) {
  auto space = std::make_shared<const PairVariableSpace>(
      PairVariableSpace::from_wedges(g, index));
  CoveringInstance instance;
  instance.costs.resize(space->size());
  for (std::size_t v = 0; v < space->size(); ++v) {
    instance.costs[v] = lambda.cost(space->is_edge(v));
  }
  instance.constraints.reserve(index.wedge_count());
  for (const Wedge& w : index.wedges()) {
    auto vars = space->wedge_variables(w);
    instance.constraints.push_back({static_cast<std::uint32_t>(vars[0]),
                                    static_cast<std::uint32_t>(vars[1]),
                                    static_cast<std::uint32_t>(vars[2])});
  }
  return LambdaStcLp{std::move(space), lambda, std::move(instance)};
}

void check_lambda_stc_feasible(const Graph& g, const WedgeIndex& index,
                               const FractionalSolution& solution, double tolerance) {
  (void)g;
  for (const Wedge& w : index.wedges()) {
    const double sum = solution.z(w.first, w.center) + solution.z(w.center, w.second) +
                       solution.z(w.first, w.second);
    if (sum < 1.0 - tolerance) {
      throw InfeasibleSolutionError(
          "wedge " + std::to_string(w.first) + "-" + std::to_string(w.center) + "-" +
          std::to_string(w.second) + " is covered only to " + std::to_string(sum));
    }
  }
}

namespace {

GeneralLp general_lp_skeleton(std::shared_ptr<const PairVariableSpace> space,
                              LambdaParam lambda) {
  GeneralLp lp{std::move(space), lambda, {}, 0.0, {}};
  lp.costs.resize(lp.space->size());
  for (std::size_t v = 0; v < lp.space->size(); ++v) {
    if (lp.space->is_edge(v)) {
      lp.costs[v] = lambda.edge_cost();
    } else {
      lp.costs[v] = -lambda.non_edge_cost();
      lp.constant += lambda.non_edge_cost();
    }
  }
  return lp;
}

void add_rotations(GeneralLp& lp, std::uint32_t ab, std::uint32_t bc, std::uint32_t ac) {
  lp.rows.push_back({ab, bc, ac});
  lp.rows.push_back({ab, ac, bc});
  lp.rows.push_back({ac, bc, ab});
}

}  // namespace

GeneralLp build_intermediate_lp(const Graph& g, const WedgeIndex& index,
                                LambdaParam lambda) {
  GeneralLp lp = general_lp_skeleton(
      std::make_shared<const PairVariableSpace>(PairVariableSpace::from_wedges(g, index)),
      lambda);
  lp.rows.reserve(index.wedge_count() + 3 * index.triangle_count());
  for (const Wedge& w : index.wedges()) {
    auto vars = lp.space->wedge_variables(w);
    lp.rows.push_back({static_cast<std::uint32_t>(vars[0]),
                       static_cast<std::uint32_t>(vars[1]),
                       static_cast<std::uint32_t>(vars[2])});
  }
  for (const Triangle& t : index.triangles()) {
    add_rotations(lp, static_cast<std::uint32_t>(*g.edge_id(t.a, t.b)),
                  static_cast<std::uint32_t>(*g.edge_id(t.b, t.c)),
                  static_cast<std::uint32_t>(*g.edge_id(t.a, t.c)));
  }
  return lp;
}

GeneralLp build_canonical_lp(const Graph& g, LambdaParam lambda) {
  GeneralLp lp = general_lp_skeleton(
      std::make_shared<const PairVariableSpace>(PairVariableSpace::all_pairs(g)), lambda);
  const auto n = static_cast<VertexId>(g.num_vertices());
  auto var = [&](VertexId a, VertexId b) {
    return static_cast<std::uint32_t>(*lp.space->index_of(a, b));
  };
  for (VertexId a = 0; a < n; ++a) {
    for (VertexId b = a + 1; b < n; ++b) {
      for (VertexId c = b + 1; c < n; ++c) add_rotations(lp, var(a, b), var(b, c), var(a, c));
    }
  }
  return lp;
}

LpSolution solve_general_exact(const GeneralLp& lp, const ExactOptions& options) {
  check_caps(lp.num_variables(), lp.num_rows(), options);
  const std::size_t vars = lp.num_variables();
  // max -cost.x with x_c - x_a - x_b <= 0 and x <= 1.
  simplex::DenseProblem problem(lp.num_rows() + vars, vars);
  for (std::size_t r = 0; r < lp.rows.size(); ++r) {
    const TriangleRow& row = lp.rows[r];
    problem.at(r, row.a) -= 1.0;
    problem.at(r, row.b) -= 1.0;
    problem.at(r, row.c) += 1.0;
  }
  for (std::size_t j = 0; j < vars; ++j) {
    problem.at(lp.rows.size() + j, j) = 1.0;
    problem.b[lp.rows.size() + j] = 1.0;
    problem.c[j] = -lp.costs[j];
  }
  simplex::Result result = simplex::maximize(problem);
  if (result.status != simplex::Status::kOptimal) {
    throw NumericalError("exact engine did not reach an optimum on a triangle LP");
  }
  for (double& x : result.x) x = std::clamp(x, 0.0, 1.0);
  FractionalSolution solution(lp.space, lp.lambda, Orientation::kDistance,
                              std::move(result.x));
  return LpSolution{std::move(solution), lp.constant - result.dual_objective, "exact",
                    result.pivots};
}

LpSolution solve_lambda_stc_lp(const LambdaStcLp& lp, LpMethod method, double epsilon,
                               const ExactOptions& exact, const MwuOptions& mwu) {
  const bool fits = lp.instance.num_variables() <= exact.max_variables &&
                    lp.instance.num_constraints() <= exact.max_constraints;
  const bool use_exact =
      method == LpMethod::kExact || (method == LpMethod::kAuto && fits);
  CoveringSolution covering = use_exact ? solve_exact(lp.instance, exact)
                                        : solve_mwu(lp.instance, epsilon, mwu);
  FractionalSolution solution(lp.space, lp.lambda, Orientation::kLabeling,
                              std::move(covering.values));
  return LpSolution{std::move(solution), covering.dual_bound,
                    use_exact ? "exact" : "mwu", covering.iterations};
}

CanonicalCertificate certify_canonical_feasibility(const Graph& g,
                                                   const FractionalSolution& solution,
                                                   double tolerance,
                                                   std::size_t max_reported) {
  const auto n = g.num_vertices();
  const PairVariableSpace& space = solution.space();
  // Adjacency of the pairs with x < 1, with their distances.
  std::vector<std::vector<std::pair<VertexId, double>>> close(n);
  for (std::size_t var = 0; var < space.size(); ++var) {
    const NodePair& p = space.pair(var);
    const double x = solution.x(p.u, p.v);
    if (x < 1.0) {
      close[p.u].push_back({p.v, x});
      close[p.v].push_back({p.u, x});
    }
  }
  for (auto& list : close) std::sort(list.begin(), list.end());

  CanonicalCertificate cert;
  for (VertexId j = 0; j < n; ++j) {
    const auto& nbrs = close[j];
    for (std::size_t s = 0; s < nbrs.size(); ++s) {
      for (std::size_t t = s + 1; t < nbrs.size(); ++t) {
        ++cert.triples_checked;
        const auto [i, x_ij] = nbrs[s];
        const auto [k, x_jk] = nbrs[t];
        const double excess = solution.x(i, k) - x_ij - x_jk;
        if (excess > tolerance) {
          if (cert.violations.size() < max_reported) {
            cert.violations.push_back({i, j, k, excess});
          }
          ++cert.violation_count;
        }
      }
    }
  }
  cert.certified = cert.violation_count == 0;
  return cert;
}

}  // namespace lambdacc
