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

// Exact solvers for tiny instances, used as ground truth.

#pragma once

#include <cstdint>

#include "lambdacc/cluster.hpp"
#include "lambdacc/graph.hpp"
#include "lambdacc/lambda_param.hpp"
#include "lambdacc/lp.hpp"
#include "lambdacc/stc.hpp"
#include "lambdacc/wedges.hpp"

namespace lambdacc {

inline constexpr std::size_t kExactClusteringMaxVertices = 12;
inline constexpr std::size_t kExactLabelingMaxActivePairs = 64;
inline constexpr std::size_t kExactCanonicalLpMaxVertices = 10;

struct ClusteringOracleResult {
  double optimum = 0.0;
  // Cut edges and co-clustered non-edges of the witness.
  Disagreements counts;
  Clustering witness;
  std::uint64_t enumerated_count = 0;  // Bell(n)
};

// Minimum of the LambdaCC objective over all set partitions, enumerated as
// restricted-growth strings in ascending order. The first optimal partition
// found is the witness. Throws SizeError above 12 vertices.
ClusteringOracleResult exact_lambda_cc(const Graph& g, LambdaParam lambda);

struct LabelingOracleResult {
  double optimum = 0.0;
  std::uint64_t weak_count = 0;
  std::uint64_t missing_count = 0;
  StcLabeling witness;
  std::uint64_t enumerated_count = 0;  // search nodes visited
};

// Minimum LambdaSTC labeling over the active pairs (edges and wedge end
// pairs). Branches three ways on the first uncovered wedge and prunes
// branches that cannot beat the incumbent. Throws SizeError when the graph
// has more than `max_active_pairs` active pairs.
LabelingOracleResult exact_lambda_stc(const Graph& g, const WedgeIndex& index,
                                      LambdaParam lambda,
                                      std::size_t max_active_pairs = kExactLabelingMaxActivePairs);

struct LpOracleResult {
  double optimum = 0.0;
  LpSolution solution;
  std::uint64_t enumerated_count = 0;  // simplex pivots
};

// Canonical LambdaCC LP through the exact engine. Throws SizeError above 10
// vertices.
LpOracleResult exact_canonical_lp(const Graph& g, LambdaParam lambda);

}  // namespace lambdacc
