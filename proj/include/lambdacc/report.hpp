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

// JSON and text encodings of results. Vertices are written with the ids
// they had in the input file.

#pragma once

#include <iosfwd>
#include <optional>
#include <span>

#include "json.hpp"
#include "lambdacc/cluster.hpp"
#include "lambdacc/lp.hpp"
#include "lambdacc/stc.hpp"
#include "lambdacc/wedges.hpp"

namespace lambdacc {

inline constexpr int kReportSchemaVersion = 1;

struct Summary {
  double mean = 0.0;
  double stddev = 0.0;  // sample standard deviation; 0 for one value
  double min = 0.0;
  double max = 0.0;
};

Summary summarize(std::span<const double> values);
nlohmann::json to_json(const Summary& summary);

nlohmann::json to_json(const GraphStats& stats);

// {lambda, weak, miss, objective, lower_bound}.
nlohmann::json labeling_to_json(const Graph& g, LambdaParam lambda,
                                const StcLabeling& labeling, double lower_bound);

// {algorithm, lambda, seed, objective, lower_bound, lb_provenance, ratio,
// num_clusters, cluster_sizes} plus elapsed_ms when requested.
nlohmann::json run_to_json(const RunReport& report, bool include_timing);

// {lambda, orientation, objective, dual_bound, solver, values}; values are
// [u, v, value] triples in the requested orientation.
nlohmann::json lp_solution_to_json(const LpSolution& lp, Orientation orientation);

// "vertex cluster" lines, one per vertex.
void write_assignment(std::ostream& out, const Graph& g, const Clustering& clustering);

}  // namespace lambdacc
