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

#include "lambdacc/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "lambdacc/errors.hpp"

namespace lambdacc {

Graph Graph::from_edges(std::size_t n, std::span<const NodePair> edges,
                        std::vector<std::int64_t> labels) {
  if (n > std::numeric_limits<VertexId>::max()) {
    throw SizeError("graph has more vertices than VertexId can address");
  }
  std::vector<NodePair> normalized;
  normalized.reserve(edges.size());
  for (const NodePair& e : edges) {
    if (e.u == e.v) continue;
    NodePair p = NodePair::of(e.u, e.v);
    if (p.v >= n) throw Error("edge endpoint out of range");
    normalized.push_back(p);
  }
  std::sort(normalized.begin(), normalized.end());
  normalized.erase(std::unique(normalized.begin(), normalized.end()),
                   normalized.end());

  Graph g;
  g.offsets_.assign(n + 1, 0);
  for (const NodePair& e : normalized) {
    ++g.offsets_[e.u + 1];
    ++g.offsets_[e.v + 1];
  }
  for (std::size_t v = 0; v < n; ++v) g.offsets_[v + 1] += g.offsets_[v];
  g.adjacency_.resize(2 * normalized.size());
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  // Edges are sorted by (u, v), so for each vertex the lower neighbors arrive
  // in ascending order first, then the upper ones; lists end up sorted.
  for (const NodePair& e : normalized) g.adjacency_[cursor[e.v]++] = e.u;
  for (const NodePair& e : normalized) g.adjacency_[cursor[e.u]++] = e.v;
  for (std::size_t v = 0; v < n; ++v) {
    std::sort(g.adjacency_.begin() + g.offsets_[v],
              g.adjacency_.begin() + g.offsets_[v + 1]);
  }

  g.upper_start_.assign(n + 1, 0);
  for (const NodePair& e : normalized) ++g.upper_start_[e.u + 1];
  for (std::size_t v = 0; v < n; ++v) g.upper_start_[v + 1] += g.upper_start_[v];
  g.edges_ = std::move(normalized);

  if (labels.empty()) {
    labels.resize(n);
    for (std::size_t v = 0; v < n; ++v) labels[v] = static_cast<std::int64_t>(v);
  } else if (labels.size() != n) {
    throw Error("label count does not match vertex count");
  }
  g.labels_ = std::move(labels);
  return g;
}

bool Graph::has_edge(VertexId a, VertexId b) const {
  if (a == b) return false;
  if (degree(a) > degree(b)) std::swap(a, b);
  auto nbrs = neighbors(a);
  return std::binary_search(nbrs.begin(), nbrs.end(), b);
}

std::optional<std::size_t> Graph::edge_id(VertexId a, VertexId b) const {
  if (a == b) return std::nullopt;
  if (a > b) std::swap(a, b);
  auto nbrs = neighbors(a);
  auto it = std::lower_bound(nbrs.begin(), nbrs.end(), b);
  if (it == nbrs.end() || *it != b) return std::nullopt;
  auto first_upper = std::upper_bound(nbrs.begin(), nbrs.end(), a);
  return upper_start_[a] + static_cast<std::size_t>(it - first_upper);
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<std::string_view> split(std::string_view line,
                                    std::optional<char> delimiter) {
  std::vector<std::string_view> tokens;
  if (delimiter) {
    std::size_t start = 0;
    while (start <= line.size()) {
      std::size_t end = line.find(*delimiter, start);
      if (end == std::string_view::npos) end = line.size();
      std::string_view tok = trim(line.substr(start, end - start));
      if (!tok.empty()) tokens.push_back(tok);
      start = end + 1;
    }
    return tokens;
  }
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
    }
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) {
      ++j;
    }
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

std::int64_t parse_id(std::string_view tok, std::size_t line_no) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError(line_no, "expected integer vertex id, got '" +
                                  std::string(tok) + "'");
  }
  return value;
}

}  // namespace

Graph parse_edge_list(std::istream& in, const EdgeListOptions& options) {
  std::vector<std::pair<std::int64_t, std::int64_t>> raw;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = trim(line);
    if (view.empty()) continue;
    if (options.comment_prefixes.find(view.front()) != std::string::npos) {
      continue;
    }
    auto tokens = split(view, options.delimiter);
    if (tokens.size() < 2) {
      throw ParseError(line_no, "expected two vertex ids");
    }
    std::int64_t a = parse_id(tokens[0], line_no);
    std::int64_t b = parse_id(tokens[1], line_no);
    if (options.one_indexed) {
      --a;
      --b;
    }
    if (a < 0 || b < 0) throw ParseError(line_no, "negative vertex id");
    if (a == b) continue;
    raw.emplace_back(a, b);
  }
  if (raw.empty()) throw ParseError(0, "edge list contains no edges");

  std::vector<NodePair> edges;
  edges.reserve(raw.size());
  std::vector<std::int64_t> labels;
  std::size_t n = 0;
  if (options.mapping == IdMapping::kFirstAppearance) {
    std::unordered_map<std::int64_t, VertexId> ids;
    ids.reserve(raw.size());
    auto intern = [&](std::int64_t external) {
      auto [it, inserted] =
          ids.try_emplace(external, static_cast<VertexId>(labels.size()));
      if (inserted) {
        labels.push_back(options.one_indexed ? external + 1 : external);
      }
      return it->second;
    };
    for (auto [a, b] : raw) {
      VertexId u = intern(a);
      VertexId v = intern(b);
      edges.push_back(NodePair::of(u, v));
    }
    n = labels.size();
  } else {
    std::int64_t max_id = 0;
    for (auto [a, b] : raw) max_id = std::max({max_id, a, b});
    if (max_id >= std::numeric_limits<VertexId>::max()) {
      throw ParseError(0, "vertex id exceeds supported range");
    }
    for (auto [a, b] : raw) {
      edges.push_back(NodePair::of(static_cast<VertexId>(a),
                                   static_cast<VertexId>(b)));
    }
    n = static_cast<std::size_t>(max_id) + 1;
    labels.resize(n);
    for (std::size_t v = 0; v < n; ++v) {
      labels[v] = static_cast<std::int64_t>(v) + (options.one_indexed ? 1 : 0);
    }
  }
  return Graph::from_edges(n, edges, std::move(labels));
}

Graph parse_edge_list(std::string_view text, const EdgeListOptions& options) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in, options);
}

Graph parse_matrix_market(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  if (!std::getline(in, line)) throw ParseError(0, "empty MatrixMarket file");
  ++line_no;
  std::string lowered = line;
  std::transform(lowered.begin(), lowered.end(), lowered.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (lowered.rfind("%%matrixmarket", 0) != 0) {
    throw ParseError(line_no, "missing %%MatrixMarket banner");
  }
  if (lowered.find("coordinate") == std::string::npos) {
    throw ParseError(line_no, "only coordinate matrices are supported");
  }
  if (lowered.find("symmetric") == std::string::npos &&
      lowered.find("general") == std::string::npos) {
    throw ParseError(line_no, "only symmetric or general matrices are supported");
  }

  std::size_t rows = 0;
  bool have_size = false;
  std::vector<NodePair> edges;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = trim(line);
    if (view.empty() || view.front() == '%') continue;
    auto tokens = split(view, std::nullopt);
    if (!have_size) {
      if (tokens.size() < 3) throw ParseError(line_no, "malformed size line");
      std::int64_t r = parse_id(tokens[0], line_no);
      std::int64_t c = parse_id(tokens[1], line_no);
      if (r != c || r < 0) throw ParseError(line_no, "matrix must be square");
      rows = static_cast<std::size_t>(r);
      have_size = true;
      continue;
    }
    if (tokens.size() < 2) throw ParseError(line_no, "expected row and column");
    std::int64_t a = parse_id(tokens[0], line_no);
    std::int64_t b = parse_id(tokens[1], line_no);
    if (a < 1 || b < 1 || static_cast<std::size_t>(a) > rows ||
        static_cast<std::size_t>(b) > rows) {
      throw ParseError(line_no, "entry index out of range");
    }
    if (a == b) continue;
    edges.push_back(NodePair::of(static_cast<VertexId>(a - 1),
                                 static_cast<VertexId>(b - 1)));
  }
  if (!have_size) throw ParseError(0, "missing MatrixMarket size line");
  std::vector<std::int64_t> labels(rows);
  for (std::size_t v = 0; v < rows; ++v) labels[v] = static_cast<std::int64_t>(v) + 1;
  return Graph::from_edges(rows, edges, std::move(labels));
}

GraphFormat parse_graph_format(std::string_view name) {
  if (name == "auto") return GraphFormat::kAuto;
  if (name == "edgelist" || name == "snap" || name == "txt") {
    return GraphFormat::kEdgeList;
  }
  if (name == "mtx" || name == "matrixmarket") return GraphFormat::kMatrixMarket;
  throw ParameterError("unknown graph format '" + std::string(name) +
                       "' (expected auto, edgelist or mtx)");
}

Graph read_graph_file(const std::string& path, GraphFormat format,
                      const EdgeListOptions& options) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  if (format == GraphFormat::kAuto) {
    bool is_mtx = path.size() >= 4 && path.compare(path.size() - 4, 4, ".mtx") == 0;
    format = is_mtx ? GraphFormat::kMatrixMarket : GraphFormat::kEdgeList;
  }
  if (format == GraphFormat::kMatrixMarket) return parse_matrix_market(in);
  return parse_edge_list(in, options);
}

void write_edge_list(std::ostream& out, const Graph& graph) {
  for (const NodePair& e : graph.edges()) out << e.u << ' ' << e.v << '\n';
}

}  // namespace lambdacc
