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

#include <algorithm>
#include <chrono>
#include <numeric>

#include "lambdacc/cluster.hpp"
#include "lambdacc/errors.hpp"
#include "lambdacc/rng.hpp"

namespace lambdacc {

namespace {

constexpr double kMinGain = 1e-12;

// Weighted graph of super-nodes. Node weight is the number of original
// vertices; edge weight the number of original edges between two nodes.
struct Level {
  std::vector<std::vector<std::pair<std::uint32_t, double>>> adjacency;
  std::vector<double> size;
};

Level base_level(const Graph& g) {
  Level level;
  const std::size_t n = g.num_vertices();
  level.adjacency.resize(n);
  level.size.assign(n, 1.0);
  for (VertexId v = 0; v < n; ++v) {
    for (VertexId u : g.neighbors(v)) level.adjacency[v].push_back({u, 1.0});
  }
  return level;
}

// Moving v into community C changes the objective by
//   lambda * s_v * S_C - e(v, C)
// relative to v standing alone, where S_C is the size of C and e(v, C) the
// edge weight between them.
class LocalMover {
 public:
  LocalMover(const Level& level, double lambda)
      : level_(level), lambda_(lambda), community_(level.size.size()),
        total_(level.size), weight_to_(level.size.size(), 0.0) {
    std::iota(community_.begin(), community_.end(), std::uint32_t{0});
  }

  // One sweep in the given order; returns whether any vertex moved.
  bool sweep(std::span<const std::uint32_t> order) {
    bool moved = false;
    for (std::uint32_t v : order) moved |= move(v);
    return moved;
  }

  const std::vector<std::uint32_t>& community() const { return community_; }

 private:
  bool move(std::uint32_t v) {
    const double s_v = level_.size[v];
    const std::uint32_t home = community_[v];
    touched_.clear();
    for (const auto& [u, w] : level_.adjacency[v]) {
      const std::uint32_t c = community_[u];
      if (weight_to_[c] == 0.0) touched_.push_back(c);
      weight_to_[c] += w;
    }
    total_[home] -= s_v;
    const double stay = lambda_ * s_v * total_[home] - weight_to_[home];

    std::uint32_t best = home;
    double best_delta = stay;
    // A fresh singleton has delta 0; only meaningful when v is not alone.
    if (total_[home] > 0.0 && 0.0 < best_delta - kMinGain) {
      best = empty_community();
      best_delta = 0.0;
    }
    std::sort(touched_.begin(), touched_.end());
    for (std::uint32_t c : touched_) {
      if (c == home) continue;
      const double delta = lambda_ * s_v * total_[c] - weight_to_[c];
      if (delta < best_delta - kMinGain) {
        best = c;
        best_delta = delta;
      }
    }
    for (std::uint32_t c : touched_) weight_to_[c] = 0.0;

    total_[best] += s_v;
    community_[v] = best;
    if (best != home && total_[home] == 0.0) free_.push_back(home);
    return best != home;
  }

  std::uint32_t empty_community() {
    while (!free_.empty()) {
      const std::uint32_t c = free_.back();
      if (total_[c] == 0.0) return c;
      free_.pop_back();
    }
    // Some community is always empty when v is not alone.
    for (std::uint32_t c = 0; c < total_.size(); ++c) {
      if (total_[c] == 0.0) return c;
    }
    throw Error("no empty community available");
  }

  const Level& level_;
  double lambda_;
  std::vector<std::uint32_t> community_;
  std::vector<double> total_;
  std::vector<double> weight_to_;
  std::vector<std::uint32_t> touched_;
  std::vector<std::uint32_t> free_;
};

// Collapses communities into nodes; returns the node of every community.
Level aggregate(const Level& level, const std::vector<std::uint32_t>& community,
                std::vector<std::uint32_t>& node_of_community) {
  node_of_community.assign(level.size.size(), UINT32_MAX);
  std::uint32_t next = 0;
  for (std::uint32_t c : community) {
    if (node_of_community[c] == UINT32_MAX) node_of_community[c] = next++;
  }
  Level out;
  out.size.assign(next, 0.0);
  out.adjacency.resize(next);
  std::vector<std::vector<std::pair<std::uint32_t, double>>> raw(next);
  for (std::uint32_t v = 0; v < level.size.size(); ++v) {
    const std::uint32_t a = node_of_community[community[v]];
    out.size[a] += level.size[v];
    for (const auto& [u, w] : level.adjacency[v]) {
      const std::uint32_t b = node_of_community[community[u]];
      if (a != b) raw[a].push_back({b, w});
    }
  }
  for (std::uint32_t a = 0; a < next; ++a) {
    auto& list = raw[a];
    std::sort(list.begin(), list.end());
    for (const auto& [b, w] : list) {
      if (!out.adjacency[a].empty() && out.adjacency[a].back().first == b) {
        out.adjacency[a].back().second += w;
      } else {
        out.adjacency[a].push_back({b, w});
      }
    }
  }
  return out;
}

}  // namespace

RunReport lambda_louvain(const Graph& g, LambdaParam lambda, std::uint64_t seed,
                         const LouvainOptions& options) {
  if (options.max_passes == 0) throw ParameterError("max_passes must be at least 1");
  const auto start = std::chrono::steady_clock::now();
  Rng rng(seed);
  const std::size_t n = g.num_vertices();
  Level level = base_level(g);
  std::vector<std::uint32_t> node_of_vertex(n);
  std::iota(node_of_vertex.begin(), node_of_vertex.end(), std::uint32_t{0});
  std::vector<std::uint32_t> final_community = node_of_vertex;

  std::size_t passes = 0;
  while (passes < options.max_passes) {
    LocalMover mover(level, lambda.value());
    std::vector<std::uint32_t> order(level.size.size());
    std::iota(order.begin(), order.end(), std::uint32_t{0});
    bool any_move = false;
    while (passes < options.max_passes) {
      rng.shuffle(order.begin(), order.end());
      ++passes;
      if (!mover.sweep(order)) break;
      any_move = true;
    }
    const auto& community = mover.community();
    for (std::size_t v = 0; v < n; ++v) final_community[v] = community[node_of_vertex[v]];
    if (!options.multilevel || !any_move) break;

    std::vector<std::uint32_t> node_of_community;
    level = aggregate(level, community, node_of_community);
    for (std::size_t v = 0; v < n; ++v) {
      node_of_vertex[v] = node_of_community[final_community[v]];
    }
  }

  RunReport report;
  report.algorithm = "louvain";
  report.lambda = lambda.value();
  report.seed = seed;
  std::vector<std::uint64_t> labels(final_community.begin(), final_community.end());
  report.clustering = Clustering::from_labels(labels);
  report.objective = lambda_cc_objective(g, lambda, report.clustering);
  report.elapsed_ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  return report;
}

}  // namespace lambdacc
