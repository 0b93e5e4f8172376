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

#pragma once

#include <cmath>
#include <string>

#include "lambdacc/errors.hpp"

namespace lambdacc {

// Correlation-clustering weights of a single pair. LambdaCC puts weight on
// exactly one side: (1 - lambda, 0) for edges, (0, lambda) for non-edges.
struct PairWeights {
  double positive = 0.0;  // cost of separating the pair
  double negative = 0.0;  // cost of clustering the pair together
};

// Resolution parameter lambda in the open interval (0, 1).
class LambdaParam {
 public:
  explicit LambdaParam(double lambda) : lambda_(lambda) {
    if (!(lambda > 0.0 && lambda < 1.0) || !std::isfinite(lambda)) {
      throw ParameterError("lambda must lie in (0, 1), got " +
                           std::to_string(lambda));
    }
  }

  double value() const { return lambda_; }

  // Cost of cutting an edge, and of labeling an edge weak.
  double edge_cost() const { return 1.0 - lambda_; }
  // Cost of co-clustering a non-edge, and of labeling it missing.
  double non_edge_cost() const { return lambda_; }
  double cost(bool is_edge) const { return is_edge ? edge_cost() : non_edge_cost(); }

  PairWeights weights(bool is_edge) const {
    return is_edge ? PairWeights{edge_cost(), 0.0} : PairWeights{0.0, non_edge_cost()};
  }

 private:
  double lambda_;
};

}  // namespace lambdacc
