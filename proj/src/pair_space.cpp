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

#include "lambdacc/pair_space.hpp"

#include <algorithm>

#include "lambdacc/errors.hpp"

namespace lambdacc {

PairVariableSpace PairVariableSpace::from_wedges(const Graph& g,
                                                 const WedgeIndex& index) {
  PairVariableSpace space(g);
  space.num_edges_ = g.num_edges();
  space.pairs_.assign(g.edges().begin(), g.edges().end());
  std::vector<NodePair> ends;
  ends.reserve(index.wedge_count());
  for (const Wedge& w : index.wedges()) ends.push_back(w.ends());
  std::sort(ends.begin(), ends.end());
  ends.erase(std::unique(ends.begin(), ends.end()), ends.end());
  space.pairs_.insert(space.pairs_.end(), ends.begin(), ends.end());
  return space;
}

PairVariableSpace PairVariableSpace::all_pairs(const Graph& g) {
  PairVariableSpace space(g);
  const auto n = static_cast<VertexId>(g.num_vertices());
  space.num_edges_ = g.num_edges();
  space.pairs_.assign(g.edges().begin(), g.edges().end());
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      if (!g.has_edge(u, v)) space.pairs_.push_back(NodePair{u, v});
    }
  }
  return space;
}

std::optional<std::size_t> PairVariableSpace::index_of(NodePair p) const {
  if (auto id = graph_->edge_id(p.u, p.v)) return *id;
  auto first = pairs_.begin() + static_cast<std::ptrdiff_t>(num_edges_);
  auto it = std::lower_bound(first, pairs_.end(), p);
  if (it == pairs_.end() || *it != p) return std::nullopt;
  return static_cast<std::size_t>(it - pairs_.begin());
}

std::array<std::size_t, 3> PairVariableSpace::wedge_variables(const Wedge& w) const {
  auto a = graph_->edge_id(w.first, w.center);
  auto b = graph_->edge_id(w.center, w.second);
  auto c = index_of(w.ends());
  if (!a || !b || !c) throw Error("wedge does not belong to this variable space");
  return {*a, *b, *c};
}

}  // namespace lambdacc
