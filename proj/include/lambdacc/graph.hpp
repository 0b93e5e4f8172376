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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lambdacc {

using VertexId = std::uint32_t;

// Unordered vertex pair stored with u < v.
struct NodePair {
  VertexId u = 0;
  VertexId v = 0;

  static constexpr NodePair of(VertexId a, VertexId b) {
    return a < b ? NodePair{a, b} : NodePair{b, a};
  }
  constexpr std::uint64_t key() const {
    return (static_cast<std::uint64_t>(u) << 32) | v;
  }
  static constexpr NodePair from_key(std::uint64_t key) {
    return NodePair{static_cast<VertexId>(key >> 32),
                    static_cast<VertexId>(key & 0xffffffffu)};
  }

  friend constexpr auto operator<=>(const NodePair&, const NodePair&) = default;
};

// Immutable simple undirected graph in CSR form. Neighbor lists are sorted
// ascending, and edges carry ids 0..m-1 in lexicographic (u < v) order.
class Graph {
 public:
  Graph() : offsets_(1, 0), upper_start_(1, 0) {}

  // Builds a graph on vertices 0..n-1. Self-loops are dropped and duplicate
  // or reversed pairs collapse to one edge. `labels` optionally holds the
  // external id of every vertex (defaults to the vertex id itself).
  static Graph from_edges(std::size_t n, std::span<const NodePair> edges,
                          std::vector<std::int64_t> labels = {});

  std::size_t num_vertices() const { return offsets_.size() - 1; }
  std::size_t num_edges() const { return edges_.size(); }

  std::span<const VertexId> neighbors(VertexId v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  std::size_t degree(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }

  bool has_edge(VertexId a, VertexId b) const;

  // Id of edge {a, b}, or nullopt for a non-edge.
  std::optional<std::size_t> edge_id(VertexId a, VertexId b) const;

  const NodePair& edge(std::size_t id) const { return edges_[id]; }
  std::span<const NodePair> edges() const { return edges_; }

  // External id the vertex had in its source file.
  std::int64_t label(VertexId v) const { return labels_[v]; }
  std::span<const std::int64_t> labels() const { return labels_; }

 private:
  std::vector<std::size_t> offsets_;
  std::vector<VertexId> adjacency_;
  std::vector<NodePair> edges_;
  // upper_start_[u] = id of the first edge (u, v) with v > u.
  std::vector<std::size_t> upper_start_;
  std::vector<std::int64_t> labels_;
};

enum class IdMapping {
  // Ids are remapped to 0..n-1 in order of first appearance in the file.
  kFirstAppearance,
  // Ids are used as given (shifted down by one when one_indexed is set);
  // n is the largest id plus one.
  kIdentity,
};

struct EdgeListOptions {
  // Lines whose first non-blank character is one of these are skipped.
  std::string comment_prefixes = "#%";
  // Token separator; whitespace when unset.
  std::optional<char> delimiter;
  bool one_indexed = false;
  IdMapping mapping = IdMapping::kFirstAppearance;
};

// Reads a SNAP-style edge list. Each data line holds two integer vertex ids;
// trailing tokens (weights, timestamps) are ignored. Lines that are pure
// self-loops are dropped without registering their vertex.
Graph parse_edge_list(std::istream& in, const EdgeListOptions& options = {});
Graph parse_edge_list(std::string_view text,
                      const EdgeListOptions& options = {});

// Reads a MatrixMarket `coordinate pattern` file (symmetric or general).
// Vertex ids follow the matrix rows; entries are 1-indexed.
Graph parse_matrix_market(std::istream& in);

enum class GraphFormat { kAuto, kEdgeList, kMatrixMarket };

GraphFormat parse_graph_format(std::string_view name);

// Loads a graph from disk. kAuto picks MatrixMarket for `.mtx` files.
Graph read_graph_file(const std::string& path,
                      GraphFormat format = GraphFormat::kAuto,
                      const EdgeListOptions& options = {});

// Writes "u v" lines (0-based, u < v), one per edge.
void write_edge_list(std::ostream& out, const Graph& graph);

}  // namespace lambdacc
