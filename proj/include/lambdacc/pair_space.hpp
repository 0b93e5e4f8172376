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

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "lambdacc/graph.hpp"
#include "lambdacc/wedges.hpp"

namespace lambdacc {

// Node pairs that carry a variable. Positions 0..m-1 are the edges of the
// graph in edge-id order; the remaining positions are non-edges in
// lexicographic order.
//
// The wedge-supported space holds every edge plus the end pair of every open
// wedge. Any other non-edge appears in no wedge constraint, so its optimal
// labeling value is z = 0 (distance x = 1).
class PairVariableSpace {
 public:
  static PairVariableSpace from_wedges(const Graph& g, const WedgeIndex& index);
  // Every pair of V; used by the canonical LP.
  static PairVariableSpace all_pairs(const Graph& g);

  std::size_t size() const { return pairs_.size(); }
  std::size_t num_edges() const { return num_edges_; }
  bool is_edge(std::size_t var) const { return var < num_edges_; }
  const NodePair& pair(std::size_t var) const { return pairs_[var]; }
  std::span<const NodePair> pairs() const { return pairs_; }

  std::optional<std::size_t> index_of(NodePair p) const;
  std::optional<std::size_t> index_of(VertexId a, VertexId b) const {
    return index_of(NodePair::of(a, b));
  }

  // Variables of (first arm, second arm, ends). Requires w to belong to the
  // graph this space was built from.
  std::array<std::size_t, 3> wedge_variables(const Wedge& w) const;

  const Graph& graph() const { return *graph_; }

 private:
  explicit PairVariableSpace(const Graph& g) : graph_(&g) {}

  const Graph* graph_;
  std::vector<NodePair> pairs_;
  std::size_t num_edges_ = 0;
};

}  // namespace lambdacc
