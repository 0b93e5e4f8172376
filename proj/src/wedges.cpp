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

#include "lambdacc/wedges.hpp"

#include <limits>

namespace lambdacc {

WedgeIndex enumerate_wedges(const Graph& g) {
  std::vector<Wedge> wedges;
  std::vector<Triangle> triangles;
  for_each_wedge_and_triangle(
      g, [&](const Wedge& w) { wedges.push_back(w); },
      [&](const Triangle& t) { triangles.push_back(t); });
  return WedgeIndex(std::move(wedges), std::move(triangles));
}

std::uint64_t canonical_constraint_count(std::uint64_t n) {
  if (n < 3) return 0;
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t a = n;
  std::uint64_t b = n - 1;
  (a % 2 == 0 ? a : b) /= 2;
  const std::uint64_t c = n - 2;
  if (a > kMax / b) return kMax;
  const std::uint64_t ab = a * b;
  if (ab > kMax / c) return kMax;
  return ab * c;
}

GraphStats graph_stats(const Graph& g) {
  GraphStats stats;
  stats.n = g.num_vertices();
  stats.m = g.num_edges();
  for_each_wedge_and_triangle(
      g, [&](const Wedge&) { ++stats.wedge_count; },
      [&](const Triangle&) { ++stats.triangle_count; });
  stats.canonical_constraint_count = canonical_constraint_count(stats.n);
  return stats;
}

GraphStats graph_stats(const Graph& g, const WedgeIndex& index) {
  GraphStats stats;
  stats.n = g.num_vertices();
  stats.m = g.num_edges();
  stats.wedge_count = index.wedge_count();
  stats.triangle_count = index.triangle_count();
  stats.canonical_constraint_count = canonical_constraint_count(stats.n);
  return stats;
}

}  // namespace lambdacc
