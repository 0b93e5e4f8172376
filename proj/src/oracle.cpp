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

#include "lambdacc/oracle.hpp"

#include <limits>

#include "lambdacc/errors.hpp"
#include "lambdacc/pair_space.hpp"

namespace lambdacc {

namespace {

class PartitionSearch {
 public:
  PartitionSearch(const Graph& g, LambdaParam lambda)
      : g_(g), lambda_(lambda), n_(g.num_vertices()), label_(n_, 0),
        size_(n_ + 1, 0), edges_to_(n_ + 1, 0) {}

  ClusteringOracleResult run() {
    visit(0, 0, 0, 0);
    ClusteringOracleResult out;
    out.optimum = best_cost_;
    out.counts = best_counts_;
    std::vector<std::uint64_t> labels(best_label_.begin(), best_label_.end());
    out.witness = Clustering::from_labels(labels);
    out.enumerated_count = leaves_;
    return out;
  }

 private:
  void visit(VertexId v, std::uint32_t clusters, std::uint64_t cut, std::uint64_t joined) {
    if (v == n_) {
      ++leaves_;
      const double cost = Disagreements{cut, joined}.cost(lambda_);
      if (cost < best_cost_) {
        best_cost_ = cost;
        best_counts_ = {cut, joined};
        best_label_ = label_;
      }
      return;
    }
    std::uint64_t earlier_degree = 0;
    for (VertexId u : g_.neighbors(v)) {
      if (u >= v) break;
      ++earlier_degree;
      ++edges_to_[label_[u]];
    }
    // Copy the counts: deeper levels reuse edges_to_.
    std::vector<std::uint64_t> to(edges_to_.begin(), edges_to_.begin() + clusters + 1);
    for (VertexId u : g_.neighbors(v)) {
      if (u >= v) break;
      --edges_to_[label_[u]];
    }
    for (std::uint32_t c = 0; c <= clusters; ++c) {
      label_[v] = c;
      ++size_[c];
      visit(v + 1, c == clusters ? clusters + 1 : clusters,
            cut + (earlier_degree - to[c]), joined + (size_[c] - 1 - to[c]));
      --size_[c];
    }
  }

  const Graph& g_;
  LambdaParam lambda_;
  std::size_t n_;
  std::vector<std::uint32_t> label_;
  std::vector<std::uint64_t> size_;
  std::vector<std::uint64_t> edges_to_;
  std::vector<std::uint32_t> best_label_;
  double best_cost_ = std::numeric_limits<double>::infinity();
  Disagreements best_counts_;
  std::uint64_t leaves_ = 0;
};

class LabelingSearch {
 public:
  LabelingSearch(const Graph& g, const WedgeIndex& index, LambdaParam lambda)
      : space_(PairVariableSpace::from_wedges(g, index)), lambda_(lambda),
        labeled_(space_.size(), 0) {
    for (const Wedge& w : index.wedges()) wedge_vars_.push_back(space_.wedge_variables(w));
  }

  std::size_t active_pairs() const { return space_.size(); }

  LabelingOracleResult run() {
    visit(0, 0.0, 0, 0);
    LabelingOracleResult out;
    out.optimum = best_cost_;
    out.weak_count = best_weak_;
    out.missing_count = best_missing_;
    for (std::size_t v = 0; v < space_.size(); ++v) {
      if (!best_labeled_[v]) continue;
      (space_.is_edge(v) ? out.witness.weak : out.witness.missing).push_back(space_.pair(v));
    }
    normalize(out.witness);
    out.enumerated_count = nodes_;
    return out;
  }

 private:
  void visit(std::size_t from, double cost, std::uint64_t weak, std::uint64_t missing) {
    ++nodes_;
    std::size_t w = from;
    while (w < wedge_vars_.size() && covered(wedge_vars_[w])) ++w;
    if (w == wedge_vars_.size()) {
      if (cost < best_cost_) {
        best_cost_ = cost;
        best_weak_ = weak;
        best_missing_ = missing;
        best_labeled_ = labeled_;
      }
      return;
    }
    for (std::size_t var : wedge_vars_[w]) {
      const bool edge = space_.is_edge(var);
      const double next = cost + lambda_.cost(edge);
      if (next >= best_cost_) continue;
      labeled_[var] = 1;
      visit(w + 1, next, weak + (edge ? 1 : 0), missing + (edge ? 0 : 1));
      labeled_[var] = 0;
    }
  }

  bool covered(const std::array<std::size_t, 3>& vars) const {
    return labeled_[vars[0]] || labeled_[vars[1]] || labeled_[vars[2]];
  }

  PairVariableSpace space_;
  LambdaParam lambda_;
  std::vector<std::array<std::size_t, 3>> wedge_vars_;
  std::vector<char> labeled_;
  std::vector<char> best_labeled_;
  double best_cost_ = std::numeric_limits<double>::infinity();
  std::uint64_t best_weak_ = 0;
  std::uint64_t best_missing_ = 0;
  std::uint64_t nodes_ = 0;
};

}  // namespace

ClusteringOracleResult exact_lambda_cc(const Graph& g, LambdaParam lambda) {
  if (g.num_vertices() > kExactClusteringMaxVertices) {
    throw SizeError("exact LambdaCC enumeration supports at most " +
                    std::to_string(kExactClusteringMaxVertices) + " vertices, got " +
                    std::to_string(g.num_vertices()));
  }
  return PartitionSearch(g, lambda).run();
}

LabelingOracleResult exact_lambda_stc(const Graph& g, const WedgeIndex& index,
                                      LambdaParam lambda, std::size_t max_active_pairs) {
  LabelingSearch search(g, index, lambda);
  if (search.active_pairs() > max_active_pairs) {
    throw SizeError("exact LambdaSTC search supports at most " +
                    std::to_string(max_active_pairs) + " active pairs, got " +
                    std::to_string(search.active_pairs()));
  }
  return search.run();
}

LpOracleResult exact_canonical_lp(const Graph& g, LambdaParam lambda) {
  if (g.num_vertices() > kExactCanonicalLpMaxVertices) {
    throw SizeError("exact canonical LP supports at most " +
                    std::to_string(kExactCanonicalLpMaxVertices) + " vertices, got " +
                    std::to_string(g.num_vertices()));
  }
  GeneralLp lp = build_canonical_lp(g, lambda);
  LpSolution solved = solve_general_exact(lp);
  const double optimum = solved.solution.objective();
  const std::uint64_t pivots = solved.iterations;
  return LpOracleResult{optimum, std::move(solved), pivots};
}

}  // namespace lambdacc
