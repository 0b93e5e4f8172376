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

#include <algorithm>
#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "lambdacc/graph.hpp"

namespace lambdacc {

// Open wedge first - center - second: both arms are edges, the ends are not
// adjacent. Invariant: first < second.
struct Wedge {
  VertexId center = 0;
  VertexId first = 0;
  VertexId second = 0;

  NodePair first_arm() const { return NodePair::of(first, center); }
  NodePair second_arm() const { return NodePair::of(center, second); }
  NodePair ends() const { return NodePair{first, second}; }

  friend auto operator<=>(const Wedge&, const Wedge&) = default;
};

// Triangle a < b < c.
struct Triangle {
  VertexId a = 0;
  VertexId b = 0;
  VertexId c = 0;

  friend auto operator<=>(const Triangle&, const Triangle&) = default;
};

// Visits every open wedge in canonical order (center ascending, then ends
// lexicographically) and every triangle once, from its smallest vertex.
// Runs in O(sum_v deg(v)^2 log d_max).
template <class WedgeFn, class TriangleFn>
void for_each_wedge_and_triangle(const Graph& g, WedgeFn&& on_wedge,
                                 TriangleFn&& on_triangle) {
  const auto n = static_cast<VertexId>(g.num_vertices());
  for (VertexId v = 0; v < n; ++v) {
    auto nbrs = g.neighbors(v);
    for (std::size_t x = 0; x < nbrs.size(); ++x) {
      const VertexId a = nbrs[x];
      auto a_nbrs = g.neighbors(a);
      for (std::size_t y = x + 1; y < nbrs.size(); ++y) {
        const VertexId b = nbrs[y];
        if (std::binary_search(a_nbrs.begin(), a_nbrs.end(), b)) {
          if (v < a) on_triangle(Triangle{v, a, b});
        } else {
          on_wedge(Wedge{v, a, b});
        }
      }
    }
  }
}

template <class WedgeFn>
void for_each_wedge(const Graph& g, WedgeFn&& on_wedge) {
  for_each_wedge_and_triangle(g, on_wedge, [](const Triangle&) {});
}

// Materialized open wedges and triangles of a graph, in canonical order.
class WedgeIndex {
 public:
  WedgeIndex() = default;
  WedgeIndex(std::vector<Wedge> wedges, std::vector<Triangle> triangles)
      : wedges_(std::move(wedges)), triangles_(std::move(triangles)) {}

  std::span<const Wedge> wedges() const { return wedges_; }
  std::span<const Triangle> triangles() const { return triangles_; }
  std::size_t wedge_count() const { return wedges_.size(); }
  std::size_t triangle_count() const { return triangles_.size(); }

 private:
  std::vector<Wedge> wedges_;
  std::vector<Triangle> triangles_;
};

WedgeIndex enumerate_wedges(const Graph& g);

// Number of triangle-inequality constraints in the canonical LP,
// n(n-1)(n-2)/2; saturates at UINT64_MAX.
std::uint64_t canonical_constraint_count(std::uint64_t n);

struct GraphStats {
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  std::uint64_t wedge_count = 0;
  std::uint64_t triangle_count = 0;
  std::uint64_t canonical_constraint_count = 0;

  // Constraint count of the wedge + triangle LP: one per wedge and three per
  // triangle.
  std::uint64_t intermediate_constraint_count() const {
    return wedge_count + 3 * triangle_count;
  }

  friend bool operator==(const GraphStats&, const GraphStats&) = default;
};

// Streams the wedges instead of materializing them.
GraphStats graph_stats(const Graph& g);
GraphStats graph_stats(const Graph& g, const WedgeIndex& index);

}  // namespace lambdacc
