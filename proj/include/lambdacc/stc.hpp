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

// LambdaSTC edge labeling: every open wedge i - j - k needs a weak arm or a
// missing end pair. Weak edges cost 1 - lambda, missing non-edges lambda.

#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "lambdacc/graph.hpp"
#include "lambdacc/lambda_param.hpp"
#include "lambdacc/wedges.hpp"

namespace lambdacc {

struct StcLabeling {
  std::vector<NodePair> weak;     // edges of G, sorted
  std::vector<NodePair> missing;  // non-edges of G, sorted

  std::size_t size() const { return weak.size() + missing.size(); }
  friend bool operator==(const StcLabeling&, const StcLabeling&) = default;
};

// Sorts and deduplicates both lists.
void normalize(StcLabeling& labeling);

// Throws InvalidLabelingError if a weak pair is not an edge of g or a
// missing pair is one.
void validate_labeling(const Graph& g, const StcLabeling& labeling);

// (1 - lambda) |weak| + lambda |missing|, after validation.
double stc_objective(const Graph& g, LambdaParam lambda,
                     const StcLabeling& labeling);

// True iff every open wedge has a weak arm or a missing end pair.
bool is_feasible(const Graph& g, const WedgeIndex& index,
                 const StcLabeling& labeling);

// Local-ratio dual: one nonnegative value per wedge (canonical wedge order).
// Feasible when, for every pair p, the values of the wedges containing p sum
// to at most cost(p); the sum then lower-bounds the LambdaSTC LP optimum.
struct DualCertificate {
  std::vector<double> wedge_values;
  double lower_bound = 0.0;
};

// Largest amount by which the wedge values through any pair exceed that
// pair's cost. Nonpositive for a feasible certificate.
double max_dual_violation(const Graph& g, const WedgeIndex& index,
                          LambdaParam lambda, const DualCertificate& certificate);

struct CoverLabelOptions {
  // Processes wedges in a seeded random order instead of canonical order.
  std::optional<std::uint64_t> shuffle_seed;
  // Afterwards drops labeled pairs (in pair order) that no wedge needs.
  bool minimality_pass = false;
};

struct CoverLabelResult {
  StcLabeling labeling;
  DualCertificate certificate;
};

// Local-ratio 3-approximation for LambdaSTC. Every pair starts with residual
// equal to its cost; each wedge lowers its three residuals by their minimum,
// and pairs whose residual reached zero are labeled.
CoverLabelResult cover_label(const Graph& g, const WedgeIndex& index,
                             LambdaParam lambda,
                             const CoverLabelOptions& options = {});

enum class StcRegime {
  // lambda = 1/2: objective is half the minSTC+ objective.
  kMinStcPlusEquivalent,
  // lambda > m / (m + 1): no optimal labeling uses a missing pair.
  kMinStcEquivalent,
  kGeneral,
};

StcRegime stc_regime(LambdaParam lambda, std::uint64_t num_edges);
std::string_view to_string(StcRegime regime);

}  // namespace lambdacc
