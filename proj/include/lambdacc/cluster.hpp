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

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lambdacc/graph.hpp"
#include "lambdacc/lambda_param.hpp"
#include "lambdacc/lp.hpp"
#include "lambdacc/stc.hpp"
#include "lambdacc/wedges.hpp"

namespace lambdacc {

// Partition of 0..n-1. Cluster ids are 0..k-1, numbered by the smallest
// vertex they contain.
class Clustering {
 public:
  Clustering() : offsets_(1, 0) {}

  // Any labels; equal labels mean the same cluster.
  static Clustering from_labels(std::span<const std::uint64_t> labels);
  static Clustering singletons(std::size_t n);
  static Clustering single_cluster(std::size_t n);

  std::size_t num_vertices() const { return assignment_.size(); }
  std::size_t num_clusters() const { return offsets_.size() - 1; }

  std::uint32_t cluster_of(VertexId v) const { return assignment_[v]; }
  std::span<const std::uint32_t> assignment() const { return assignment_; }
  // Members of a cluster, ascending.
  std::span<const VertexId> members(std::uint32_t cluster) const {
    return {members_.data() + offsets_[cluster], members_.data() + offsets_[cluster + 1]};
  }
  std::size_t cluster_size(std::uint32_t cluster) const {
    return offsets_[cluster + 1] - offsets_[cluster];
  }
  bool together(VertexId a, VertexId b) const { return assignment_[a] == assignment_[b]; }

  friend bool operator==(const Clustering& a, const Clustering& b) {
    return a.assignment_ == b.assignment_;
  }

 private:
  std::vector<std::uint32_t> assignment_;
  std::vector<std::size_t> offsets_;
  std::vector<VertexId> members_;
};

// Number of cut edges and of co-clustered non-edges.
struct Disagreements {
  std::uint64_t cut_edges = 0;
  std::uint64_t joined_non_edges = 0;

  double cost(LambdaParam lambda) const {
    return lambda.edge_cost() * static_cast<double>(cut_edges) +
           lambda.non_edge_cost() * static_cast<double>(joined_non_edges);
  }
};

// Counts disagreements in O(n + m) from cluster sizes and internal edges.
// Throws Error if the clustering is for a different vertex count.
Disagreements count_disagreements(const Graph& g, const Clustering& c);

// (1 - lambda) * cut edges + lambda * co-clustered non-edges.
double lambda_cc_objective(const Graph& g, LambdaParam lambda, const Clustering& c);

// G with the adjacency of a set of pairs toggled.
class DerivedGraph {
 public:
  DerivedGraph(const Graph& base, std::vector<NodePair> flipped);

  const Graph& base() const { return *base_; }
  std::span<const NodePair> flipped() const { return flipped_; }
  bool has_edge(VertexId a, VertexId b) const;
  Graph to_graph() const;

 private:
  const Graph* base_;
  std::vector<NodePair> flipped_;  // sorted, unique
};

// Randomized Pivot. Each round draws a uniform index into the list of
// unclustered vertices and clusters that pivot with its unclustered
// neighbors.
Clustering pivot(const Graph& g, std::uint64_t seed);

// Pivot where each round takes the first unclustered vertex of `order`.
Clustering pivot_in_order(const Graph& g, std::span<const VertexId> order);

using PairBudget = std::function<double(VertexId, VertexId)>;

struct DeterministicPivotResult {
  Clustering clustering;
  // Rounds in which every candidate had zero budget and positive cost; the
  // smallest remaining vertex was used.
  std::vector<std::size_t> flagged_rounds;
};

// Derandomized Pivot on `derived`. Each round picks the remaining vertex k
// minimizing (LambdaCC cost on g of the pairs the round decides) / (budget
// of those pairs). A round decides (k, i) for every remaining i and every
// pair with at least one end in N(k). Ties go to the smaller id; O(n^3) per
// round.
DeterministicPivotResult pivot_deterministic(const Graph& derived, const Graph& g,
                                             LambdaParam lambda, const PairBudget& budget);

enum class BoundProvenance { kDualCertificate, kLpValue, kOracle };

std::string_view to_string(BoundProvenance provenance);

struct LowerBound {
  double value = 0.0;
  BoundProvenance provenance = BoundProvenance::kDualCertificate;
};

struct RunReport {
  std::string algorithm;
  double lambda = 0.0;
  std::uint64_t seed = 0;
  Clustering clustering;
  double objective = 0.0;
  std::optional<LowerBound> lower_bound;
  std::optional<double> ratio;
  double elapsed_ms = 0.0;
};

// objective / lower_bound; 1 when both are zero. Throws UndefinedRatioError
// for a zero bound with a positive objective.
double ratio_against(double objective, double lower_bound);

// Attaches the bound and the ratio it implies.
RunReport a_posteriori_ratio(RunReport report, LowerBound bound);

struct CoverFlipPivotOptions {
  // Allow lambda < 1/2, where no approximation guarantee is known.
  bool force = false;
  CoverLabelOptions cover;
};

// The seed-independent part of CoverFlipPivot: the labeling, its dual
// bound, and the flipped graph.
struct CoverFlipPlan {
  CoverLabelResult cover;
  double labeling_cost = 0.0;
  Graph flipped;
};

CoverFlipPlan plan_cover_flip_pivot(const Graph& g, const WedgeIndex& index,
                                    LambdaParam lambda,
                                    const CoverFlipPivotOptions& options = {});

RunReport run_cover_flip_pivot(const Graph& g, LambdaParam lambda,
                               const CoverFlipPlan& plan, std::uint64_t seed);

// CoverLabel, flip every labeled pair, then Pivot. The report's lower bound
// is the CoverLabel dual certificate. Throws ParameterError for
// lambda < 1/2 unless forced.
RunReport cover_flip_pivot(const Graph& g, const WedgeIndex& index, LambdaParam lambda,
                           std::uint64_t seed, const CoverFlipPivotOptions& options = {});

// Edges of the rounded graph are kept below this distance:
// 2 lambda / (7 lambda - 2) for lambda >= 1/2, lambda / (1 + lambda) below.
double stc_lp_rounding_threshold(LambdaParam lambda);
// 7 - 2 / lambda for lambda >= 1/2, 1 + 1 / lambda below.
double stc_lp_rounding_factor(LambdaParam lambda);

// For lambda >= 1/2 the edges of g with x below the threshold. For
// lambda < 1/2 every edge of g plus the non-edges below the threshold.
Graph stc_lp_rounded_graph(const Graph& g, LambdaParam lambda,
                           const FractionalSolution& solution);

// Rounds a LambdaSTC LP solution. Throws InfeasibleSolutionError if a wedge
// constraint is violated.
RunReport round_lambda_stc_lp(const Graph& g, const WedgeIndex& index, LambdaParam lambda,
                              const FractionalSolution& solution, std::uint64_t seed);

inline constexpr double kIntermediateRoundingThreshold = 1.0 / 3.0;

// Every pair with x < 1/3, edges and non-edges alike.
Graph intermediate_lp_rounded_graph(const Graph& g, const FractionalSolution& solution);

// Rounds an intermediate LP solution. Throws ParameterError for
// lambda < 1/2.
RunReport round_intermediate_lp(const Graph& g, LambdaParam lambda,
                                const FractionalSolution& solution, std::uint64_t seed);

struct LouvainOptions {
  std::size_t max_passes = 100;
  // Aggregate clusters into super-nodes after a pass without moves.
  bool multilevel = false;
};

// Greedy local moving on the LambdaCC objective from singletons. No lower
// bound is attached.
RunReport lambda_louvain(const Graph& g, LambdaParam lambda, std::uint64_t seed,
                         const LouvainOptions& options = {});

}  // namespace lambdacc
