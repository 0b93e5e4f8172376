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

#include "lambdacc/cluster.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numeric>
#include <unordered_map>

#include "lambdacc/errors.hpp"
#include "lambdacc/rng.hpp"

namespace lambdacc {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

}  // namespace

Clustering Clustering::from_labels(std::span<const std::uint64_t> labels) {
  Clustering c;
  const std::size_t n = labels.size();
  c.assignment_.resize(n);
  std::unordered_map<std::uint64_t, std::uint32_t> ids;
  ids.reserve(n);
  for (std::size_t v = 0; v < n; ++v) {
    auto [it, inserted] = ids.try_emplace(labels[v], static_cast<std::uint32_t>(ids.size()));
    c.assignment_[v] = it->second;
  }
  c.offsets_.assign(ids.size() + 1, 0);
  for (std::uint32_t id : c.assignment_) ++c.offsets_[id + 1];
  std::partial_sum(c.offsets_.begin(), c.offsets_.end(), c.offsets_.begin());
  c.members_.resize(n);
  std::vector<std::size_t> cursor(c.offsets_.begin(), c.offsets_.end() - 1);
  for (std::size_t v = 0; v < n; ++v) {
    c.members_[cursor[c.assignment_[v]]++] = static_cast<VertexId>(v);
  }
  return c;
}

Clustering Clustering::singletons(std::size_t n) {
  std::vector<std::uint64_t> labels(n);
  std::iota(labels.begin(), labels.end(), std::uint64_t{0});
  return from_labels(labels);
}

Clustering Clustering::single_cluster(std::size_t n) {
  std::vector<std::uint64_t> labels(n, 0);
  return from_labels(labels);
}

Disagreements count_disagreements(const Graph& g, const Clustering& c) {
  if (c.num_vertices() != g.num_vertices()) {
    throw Error("clustering covers " + std::to_string(c.num_vertices()) +
                " vertices but the graph has " + std::to_string(g.num_vertices()));
  }
  std::uint64_t internal_edges = 0;
  for (const NodePair& e : g.edges()) internal_edges += c.together(e.u, e.v) ? 1 : 0;
  std::uint64_t internal_pairs = 0;
  for (std::uint32_t k = 0; k < c.num_clusters(); ++k) {
    const std::uint64_t s = c.cluster_size(k);
    internal_pairs += s * (s - 1) / 2;
  }
  return Disagreements{g.num_edges() - internal_edges, internal_pairs - internal_edges};
}

double lambda_cc_objective(const Graph& g, LambdaParam lambda, const Clustering& c) {
  return count_disagreements(g, c).cost(lambda);
}

DerivedGraph::DerivedGraph(const Graph& base, std::vector<NodePair> flipped)
    : base_(&base), flipped_(std::move(flipped)) {
  for (NodePair& p : flipped_) {
    if (p.u == p.v || p.u >= base.num_vertices() || p.v >= base.num_vertices()) {
      throw Error("flipped pair is not a vertex pair of the base graph");
    }
    p = NodePair::of(p.u, p.v);
  }
  std::sort(flipped_.begin(), flipped_.end());
  flipped_.erase(std::unique(flipped_.begin(), flipped_.end()), flipped_.end());
}

bool DerivedGraph::has_edge(VertexId a, VertexId b) const {
  const bool flipped =
      std::binary_search(flipped_.begin(), flipped_.end(), NodePair::of(a, b));
  return base_->has_edge(a, b) != flipped;
}

Graph DerivedGraph::to_graph() const {
  std::vector<NodePair> edges;
  edges.reserve(base_->num_edges() + flipped_.size());
  auto f = flipped_.begin();
  for (const NodePair& e : base_->edges()) {
    while (f != flipped_.end() && *f < e) {
      edges.push_back(*f);
      ++f;
    }
    if (f != flipped_.end() && *f == e) {
      ++f;
      continue;
    }
    edges.push_back(e);
  }
  edges.insert(edges.end(), f, flipped_.end());
  return Graph::from_edges(base_->num_vertices(), edges);
}

Clustering pivot(const Graph& g, std::uint64_t seed) {
  const std::size_t n = g.num_vertices();
  Rng rng(seed);
  std::vector<VertexId> remaining(n);
  std::iota(remaining.begin(), remaining.end(), VertexId{0});
  std::vector<std::size_t> position(n);
  std::iota(position.begin(), position.end(), std::size_t{0});
  std::vector<std::uint64_t> label(n, 0);
  std::vector<char> done(n, 0);

  auto take = [&](VertexId v, VertexId cluster) {
    done[v] = 1;
    label[v] = cluster;
    const std::size_t at = position[v];
    const VertexId last = remaining.back();
    remaining[at] = last;
    position[last] = at;
    remaining.pop_back();
  };
  while (!remaining.empty()) {
    const VertexId k = remaining[rng.uniform_index(remaining.size())];
    take(k, k);
    for (VertexId u : g.neighbors(k)) {
      if (!done[u]) take(u, k);
    }
  }
  return Clustering::from_labels(label);
}

Clustering pivot_in_order(const Graph& g, std::span<const VertexId> order) {
  const std::size_t n = g.num_vertices();
  std::vector<std::uint64_t> label(n, 0);
  std::vector<char> done(n, 0);
  std::size_t clustered = 0;
  for (VertexId k : order) {
    if (k >= n) throw Error("pivot order names vertex " + std::to_string(k));
    if (done[k]) continue;
    done[k] = 1;
    label[k] = k;
    ++clustered;
    for (VertexId u : g.neighbors(k)) {
      if (done[u]) continue;
      done[u] = 1;
      label[u] = k;
      ++clustered;
    }
  }
  if (clustered != n) throw Error("pivot order does not cover every vertex");
  return Clustering::from_labels(label);
}

DeterministicPivotResult pivot_deterministic(const Graph& derived, const Graph& g,
                                             LambdaParam lambda, const PairBudget& budget) {
  const std::size_t n = g.num_vertices();
  if (derived.num_vertices() != n) throw Error("derived graph has a different vertex count");
  std::vector<VertexId> remaining(n);
  std::iota(remaining.begin(), remaining.end(), VertexId{0});
  std::vector<std::uint64_t> label(n, 0);
  std::vector<char> in_nbhd(n, 0);
  DeterministicPivotResult result;

  // Cost and budget of the pairs a pivot at k would decide.
  auto evaluate = [&](VertexId k) {
    double cost = 0.0;
    double total_budget = 0.0;
    for (VertexId u : remaining) in_nbhd[u] = derived.has_edge(k, u);
    for (VertexId i : remaining) {
      if (i == k) continue;
      total_budget += budget(k, i);
      if (in_nbhd[i]) {
        if (!g.has_edge(k, i)) cost += lambda.non_edge_cost();
      } else if (g.has_edge(k, i)) {
        cost += lambda.edge_cost();
      }
    }
    for (std::size_t s = 0; s < remaining.size(); ++s) {
      const VertexId i = remaining[s];
      if (i == k) continue;
      for (std::size_t t = s + 1; t < remaining.size(); ++t) {
        const VertexId j = remaining[t];
        if (j == k) continue;
        const int inside = in_nbhd[i] + in_nbhd[j];
        if (inside == 0) continue;
        total_budget += budget(i, j);
        const bool edge = g.has_edge(i, j);
        if (inside == 2 && !edge) cost += lambda.non_edge_cost();
        if (inside == 1 && edge) cost += lambda.edge_cost();
      }
    }
    return std::pair{cost, total_budget};
  };

  for (std::size_t round = 0; !remaining.empty(); ++round) {
    // `remaining` stays ascending, so strict improvement keeps the smallest id.
    VertexId best = remaining.front();
    double best_ratio = std::numeric_limits<double>::infinity();
    for (VertexId k : remaining) {
      const auto [cost, b] = evaluate(k);
      double ratio = 0.0;
      if (b > 0.0) {
        ratio = cost / b;
      } else if (cost > 0.0) {
        continue;
      }
      if (ratio < best_ratio) {
        best = k;
        best_ratio = ratio;
      }
    }
    if (best_ratio == std::numeric_limits<double>::infinity()) {
      result.flagged_rounds.push_back(round);
    }
    std::vector<VertexId> next;
    for (VertexId u : remaining) {
      if (u == best || derived.has_edge(best, u)) {
        label[u] = best;
      } else {
        next.push_back(u);
      }
    }
    remaining.swap(next);
  }
  result.clustering = Clustering::from_labels(label);
  return result;
}

std::string_view to_string(BoundProvenance provenance) {
  switch (provenance) {
    case BoundProvenance::kDualCertificate:
      return "dual_certificate";
    case BoundProvenance::kLpValue:
      return "lp_value";
    case BoundProvenance::kOracle:
      return "oracle";
  }
  return "dual_certificate";
}

double ratio_against(double objective, double lower_bound) {
  if (lower_bound > 0.0) return objective / lower_bound;
  if (lower_bound == 0.0 && objective == 0.0) return 1.0;
  throw UndefinedRatioError("ratio of objective " + std::to_string(objective) +
                            " against lower bound " + std::to_string(lower_bound) +
                            " is undefined");
}

RunReport a_posteriori_ratio(RunReport report, LowerBound bound) {
  report.ratio = ratio_against(report.objective, bound.value);
  report.lower_bound = bound;
  return report;
}

CoverFlipPlan plan_cover_flip_pivot(const Graph& g, const WedgeIndex& index,
                                    LambdaParam lambda,
                                    const CoverFlipPivotOptions& options) {
  if (lambda.value() < 0.5 && !options.force) {
    throw ParameterError("CoverFlipPivot needs lambda >= 0.5 for its guarantee; got " +
                         std::to_string(lambda.value()) + " (pass --force to run anyway)");
  }
  CoverFlipPlan plan;
  plan.cover = cover_label(g, index, lambda, options.cover);
  plan.labeling_cost = stc_objective(g, lambda, plan.cover.labeling);
  std::vector<NodePair> flips = plan.cover.labeling.weak;
  flips.insert(flips.end(), plan.cover.labeling.missing.begin(),
               plan.cover.labeling.missing.end());
  plan.flipped = DerivedGraph(g, std::move(flips)).to_graph();
  return plan;
}

RunReport run_cover_flip_pivot(const Graph& g, LambdaParam lambda,
                               const CoverFlipPlan& plan, std::uint64_t seed) {
  const auto start = Clock::now();
  RunReport report;
  report.algorithm = "cfp";
  report.lambda = lambda.value();
  report.seed = seed;
  report.clustering = pivot(plan.flipped, seed);
  report.objective = lambda_cc_objective(g, lambda, report.clustering);
  report = a_posteriori_ratio(std::move(report), {plan.cover.certificate.lower_bound,
                                                  BoundProvenance::kDualCertificate});
  report.elapsed_ms = elapsed_ms(start);
  return report;
}

RunReport cover_flip_pivot(const Graph& g, const WedgeIndex& index, LambdaParam lambda,
                           std::uint64_t seed, const CoverFlipPivotOptions& options) {
  const auto start = Clock::now();
  CoverFlipPlan plan = plan_cover_flip_pivot(g, index, lambda, options);
  RunReport report = run_cover_flip_pivot(g, lambda, plan, seed);
  report.elapsed_ms = elapsed_ms(start);
  return report;
}

double stc_lp_rounding_threshold(LambdaParam lambda) {
  const double l = lambda.value();
  return l >= 0.5 ? 2.0 * l / (7.0 * l - 2.0) : l / (1.0 + l);
}

double stc_lp_rounding_factor(LambdaParam lambda) {
  const double l = lambda.value();
  return l >= 0.5 ? 7.0 - 2.0 / l : 1.0 + 1.0 / l;
}

Graph stc_lp_rounded_graph(const Graph& g, LambdaParam lambda,
                           const FractionalSolution& solution) {
  const double threshold = stc_lp_rounding_threshold(lambda);
  const bool low = lambda.value() < 0.5;
  const PairVariableSpace& space = solution.space();
  std::vector<NodePair> edges;
  for (std::size_t var = 0; var < space.size(); ++var) {
    const NodePair& p = space.pair(var);
    const bool is_edge = space.is_edge(var);
    const bool below = solution.x(p.u, p.v) < threshold;
    if (is_edge ? (low || below) : (low && below)) edges.push_back(p);
  }
  return Graph::from_edges(g.num_vertices(), edges);
}

RunReport round_lambda_stc_lp(const Graph& g, const WedgeIndex& index, LambdaParam lambda,
                              const FractionalSolution& solution, std::uint64_t seed) {
  const auto start = Clock::now();
  check_lambda_stc_feasible(g, index, solution);
  RunReport report;
  report.algorithm = "lp-round";
  report.lambda = lambda.value();
  report.seed = seed;
  report.clustering = pivot(stc_lp_rounded_graph(g, lambda, solution), seed);
  report.objective = lambda_cc_objective(g, lambda, report.clustering);
  report = a_posteriori_ratio(std::move(report),
                              {solution.objective(), BoundProvenance::kLpValue});
  report.elapsed_ms = elapsed_ms(start);
  return report;
}

Graph intermediate_lp_rounded_graph(const Graph& g, const FractionalSolution& solution) {
  const PairVariableSpace& space = solution.space();
  std::vector<NodePair> edges;
  for (const NodePair& p : space.pairs()) {
    if (solution.x(p.u, p.v) < kIntermediateRoundingThreshold) edges.push_back(p);
  }
  return Graph::from_edges(g.num_vertices(), edges);
}

RunReport round_intermediate_lp(const Graph& g, LambdaParam lambda,
                                const FractionalSolution& solution, std::uint64_t seed) {
  if (lambda.value() < 0.5) {
    throw ParameterError("intermediate LP rounding needs lambda >= 0.5; got " +
                         std::to_string(lambda.value()));
  }
  const auto start = Clock::now();
  RunReport report;
  report.algorithm = "lp3-round";
  report.lambda = lambda.value();
  report.seed = seed;
  report.clustering = pivot(intermediate_lp_rounded_graph(g, solution), seed);
  report.objective = lambda_cc_objective(g, lambda, report.clustering);
  report = a_posteriori_ratio(std::move(report),
                              {solution.objective(), BoundProvenance::kLpValue});
  report.elapsed_ms = elapsed_ms(start);
  return report;
}

}  // namespace lambdacc
