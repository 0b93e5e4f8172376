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

#include "lambdacc/report.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <ostream>

namespace lambdacc {

using nlohmann::json;

namespace {

json pair_list(const Graph& g, const std::vector<NodePair>& pairs) {
  json out = json::array();
  for (const NodePair& p : pairs) out.push_back({g.label(p.u), g.label(p.v)});
  return out;
}

}  // namespace

Summary summarize(std::span<const double> values) {
  Summary s;
  if (values.empty()) return s;
  double total = 0.0;
  for (double v : values) total += v;
  s.mean = total / static_cast<double>(values.size());
  if (values.size() > 1) {
    double squares = 0.0;
    for (double v : values) squares += (v - s.mean) * (v - s.mean);
    s.stddev = std::sqrt(squares / static_cast<double>(values.size() - 1));
  }
  auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  s.min = *lo;
  s.max = *hi;
  return s;
}

json to_json(const Summary& summary) {
  return {{"mean", summary.mean},
          {"std", summary.stddev},
          {"min", summary.min},
          {"max", summary.max}};
}

json to_json(const GraphStats& stats) {
  return {{"n", stats.n},
          {"m", stats.m},
          {"wedges", stats.wedge_count},
          {"triangles", stats.triangle_count},
          {"intermediate_constraints", stats.intermediate_constraint_count()},
          {"canonical_constraints", stats.canonical_constraint_count}};
}

json labeling_to_json(const Graph& g, LambdaParam lambda, const StcLabeling& labeling,
                      double lower_bound) {
  return {{"lambda", lambda.value()},
          {"weak", pair_list(g, labeling.weak)},
          {"miss", pair_list(g, labeling.missing)},
          {"objective", stc_objective(g, lambda, labeling)},
          {"lower_bound", lower_bound}};
}

json run_to_json(const RunReport& report, bool include_timing) {
  std::map<std::size_t, std::size_t> histogram;
  for (std::uint32_t c = 0; c < report.clustering.num_clusters(); ++c) {
    ++histogram[report.clustering.cluster_size(c)];
  }
  json sizes = json::array();
  for (const auto& [size, count] : histogram) sizes.push_back({size, count});
  json out = {{"algorithm", report.algorithm},
              {"lambda", report.lambda},
              {"seed", report.seed},
              {"objective", report.objective},
              {"lower_bound", nullptr},
              {"lb_provenance", nullptr},
              {"ratio", nullptr},
              {"num_clusters", report.clustering.num_clusters()},
              {"cluster_sizes", std::move(sizes)}};
  if (report.lower_bound) {
    out["lower_bound"] = report.lower_bound->value;
    out["lb_provenance"] = std::string(to_string(report.lower_bound->provenance));
  }
  if (report.ratio) out["ratio"] = *report.ratio;
  if (include_timing) out["elapsed_ms"] = report.elapsed_ms;
  return out;
}

json lp_solution_to_json(const LpSolution& lp, Orientation orientation) {
  const FractionalSolution view = orientation == Orientation::kDistance
                                      ? lp.solution.to_distance()
                                      : lp.solution.to_labeling();
  const PairVariableSpace& space = view.space();
  const Graph& g = space.graph();
  json values = json::array();
  for (std::size_t var = 0; var < space.size(); ++var) {
    const NodePair& p = space.pair(var);
    values.push_back({g.label(p.u), g.label(p.v), view.value(var)});
  }
  return {{"lambda", view.lambda().value()},
          {"orientation", std::string(to_string(orientation))},
          {"objective", view.objective()},
          {"dual_bound", lp.dual_bound},
          {"solver", lp.solver},
          {"values", std::move(values)}};
}

void write_assignment(std::ostream& out, const Graph& g, const Clustering& clustering) {
  for (VertexId v = 0; v < clustering.num_vertices(); ++v) {
    out << g.label(v) << ' ' << clustering.cluster_of(v) << '\n';
  }
}

}  // namespace lambdacc
