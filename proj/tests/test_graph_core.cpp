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
#include <sstream>
#include <vector>

#include "doctest.h"
#include "lambdacc/errors.hpp"
#include "lambdacc/graph.hpp"
#include "lambdacc/wedges.hpp"
#include "support/test_support.hpp"

namespace lambdacc {
namespace {

using testing::cycle;
using testing::path3;
using testing::star3;
using testing::triangle;

std::vector<NodePair> edge_vector(const Graph& g) {
  return {g.edges().begin(), g.edges().end()};
}

void check_invariants(const Graph& g) {
  std::size_t degree_sum = 0;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    auto nbrs = g.neighbors(v);
    CHECK(std::is_sorted(nbrs.begin(), nbrs.end()));
    CHECK(std::adjacent_find(nbrs.begin(), nbrs.end()) == nbrs.end());
    CHECK(g.degree(v) == nbrs.size());
    for (VertexId u : nbrs) {
      CHECK(u != v);
      CHECK(u < g.num_vertices());
      CHECK(g.has_edge(u, v));
    }
    degree_sum += nbrs.size();
  }
  CHECK(degree_sum == 2 * g.num_edges());
}

TEST_CASE("parse_edge_list reads a plain edge list") {
  Graph g = parse_edge_list("0 1\n1 2\n");
  CHECK(g.num_vertices() == 3);
  CHECK(g.num_edges() == 2);
  CHECK(edge_vector(g) == std::vector<NodePair>{{0, 1}, {1, 2}});
  check_invariants(g);
}

TEST_CASE("parse_edge_list drops self-loops and duplicate or reversed edges") {
  Graph g = parse_edge_list("1 1\n1 2\n2 1\n");
  CHECK(g.num_vertices() == 2);
  CHECK(g.num_edges() == 1);
  CHECK(edge_vector(g) == std::vector<NodePair>{{0, 1}});
}

TEST_CASE("parse_edge_list remaps ids by first appearance") {
  Graph g = parse_edge_list("# c\n5 9\n");
  CHECK(g.num_vertices() == 2);
  CHECK(g.num_edges() == 1);
  CHECK(g.label(0) == 5);
  CHECK(g.label(1) == 9);

  Graph h = parse_edge_list("9 5\n5 7\n");
  CHECK(h.label(0) == 9);
  CHECK(h.label(1) == 5);
  CHECK(h.label(2) == 7);
  CHECK(h.has_edge(0, 1));
  CHECK(h.has_edge(1, 2));
}

TEST_CASE("parse_edge_list options") {
  SUBCASE("percent comments, blank lines and trailing tokens") {
    Graph g = parse_edge_list("% header\n\n0 1 0.5 1234\n  # note\n1 2\n");
    CHECK(g.num_edges() == 2);
  }
  SUBCASE("custom delimiter") {
    EdgeListOptions opts;
    opts.delimiter = ',';
    Graph g = parse_edge_list("0,1\n1, 2\n", opts);
    CHECK(g.num_edges() == 2);
  }
  SUBCASE("one-indexed ids keep their external labels") {
    EdgeListOptions opts;
    opts.one_indexed = true;
    opts.mapping = IdMapping::kIdentity;
    Graph g = parse_edge_list("1 2\n2 3\n", opts);
    CHECK(g.num_vertices() == 3);
    CHECK(g.has_edge(0, 1));
    CHECK(g.label(0) == 1);
  }
  SUBCASE("identity mapping keeps isolated ids") {
    EdgeListOptions opts;
    opts.mapping = IdMapping::kIdentity;
    Graph g = parse_edge_list("0 4\n", opts);
    CHECK(g.num_vertices() == 5);
    CHECK(g.degree(2) == 0);
  }
}

TEST_CASE("parse_edge_list errors carry line numbers") {
  try {
    parse_edge_list("0 1\n1 x\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(parse_edge_list(""), ParseError);
  CHECK_THROWS_AS(parse_edge_list("# only a comment\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("3\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("-1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("1.5 2\n"), ParseError);
}

TEST_CASE("parse_matrix_market reads symmetric pattern matrices") {
  std::istringstream in(
      "%%MatrixMarket matrix coordinate pattern symmetric\n"
      "% comment\n"
      "4 4 3\n"
      "2 1\n3 2\n4 1\n");
  Graph g = parse_matrix_market(in);
  CHECK(g.num_vertices() == 4);
  CHECK(g.num_edges() == 3);
  CHECK(g.has_edge(0, 1));
  CHECK(g.has_edge(1, 2));
  CHECK(g.has_edge(0, 3));
  CHECK(g.label(0) == 1);

  std::istringstream bad("%%MatrixMarket matrix array real general\n2 2\n");
  CHECK_THROWS_AS(parse_matrix_market(bad), ParseError);
}

TEST_CASE("graph format names") {
  CHECK(parse_graph_format("auto") == GraphFormat::kAuto);
  CHECK(parse_graph_format("mtx") == GraphFormat::kMatrixMarket);
  CHECK(parse_graph_format("edgelist") == GraphFormat::kEdgeList);
  CHECK_THROWS_AS(parse_graph_format("gml"), ParameterError);
  CHECK_THROWS_AS(read_graph_file("/nonexistent/graph.txt"), ParseError);
}

TEST_CASE("edge ids follow lexicographic order") {
  Graph g = testing::complete(5);
  for (std::size_t id = 0; id < g.num_edges(); ++id) {
    const NodePair& e = g.edge(id);
    CHECK(g.edge_id(e.u, e.v) == id);
    CHECK(g.edge_id(e.v, e.u) == id);
  }
  Graph p = path3();
  CHECK_FALSE(p.edge_id(0, 2).has_value());
  CHECK_FALSE(p.edge_id(1, 1).has_value());
}

TEST_CASE("enumerate_wedges examples") {
  SUBCASE("path") {
    WedgeIndex w = enumerate_wedges(path3());
    REQUIRE(w.wedge_count() == 1);
    CHECK(w.wedges()[0] == Wedge{1, 0, 2});
    CHECK(w.triangle_count() == 0);
  }
  SUBCASE("triangle") {
    WedgeIndex w = enumerate_wedges(triangle());
    CHECK(w.wedge_count() == 0);
    REQUIRE(w.triangle_count() == 1);
    CHECK(w.triangles()[0] == Triangle{0, 1, 2});
  }
  SUBCASE("star, checked against a scan of every triple") {
    Graph g = star3();
    WedgeIndex w = enumerate_wedges(g);
    testing::TripleScan scan = testing::scan_triples(g);
    CHECK(std::vector<Wedge>(w.wedges().begin(), w.wedges().end()) == scan.wedges);
    CHECK(scan.wedges.size() == 3);
    CHECK(w.triangle_count() == 0);
  }
  SUBCASE("empty graph") {
    WedgeIndex w = enumerate_wedges(testing::edgeless(4));
    CHECK(w.wedge_count() == 0);
    CHECK(w.triangle_count() == 0);
  }
}

TEST_CASE("graph_stats examples") {
  CHECK(graph_stats(triangle()) == GraphStats{3, 3, 0, 1, 3});
  CHECK(graph_stats(path3()) == GraphStats{3, 2, 1, 0, 3});
  GraphStats c4 = graph_stats(cycle(4));
  CHECK(c4 == GraphStats{4, 4, 4, 0, 12});
  testing::TripleScan scan = testing::scan_triples(cycle(4));
  CHECK(scan.wedges.size() == c4.wedge_count);
  CHECK(c4.intermediate_constraint_count() == 4);
}

TEST_CASE("canonical constraint count") {
  CHECK(canonical_constraint_count(0) == 0);
  CHECK(canonical_constraint_count(2) == 0);
  CHECK(canonical_constraint_count(3) == 3);
  CHECK(canonical_constraint_count(5242) == 5242ull * 5241ull * 5240ull / 2);
  CHECK(canonical_constraint_count(1ull << 40) == UINT64_MAX);
}

TEST_CASE("property: wedge index matches the triple scan and the degree identity") {
  auto graphs = testing::corpus(1000, 0, 30, {0.05, 0.1, 0.2, 0.4, 0.7}, 1701);
  for (const auto& item : graphs) {
    const Graph& g = item.graph;
    WedgeIndex w = enumerate_wedges(g);
    std::uint64_t paths = 0;
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      const std::uint64_t d = g.degree(v);
      paths += d * (d - (d > 0 ? 1 : 0)) / 2;
    }
    CHECK(w.wedge_count() == paths - 3 * w.triangle_count());
    CHECK(std::is_sorted(w.wedges().begin(), w.wedges().end()));
    for (const Wedge& x : w.wedges()) {
      CHECK(x.first < x.second);
      CHECK(g.has_edge(x.first, x.center));
      CHECK(g.has_edge(x.center, x.second));
      CHECK_FALSE(g.has_edge(x.first, x.second));
    }
    for (const Triangle& t : w.triangles()) {
      CHECK((t.a < t.b && t.b < t.c));
      CHECK((g.has_edge(t.a, t.b) && g.has_edge(t.b, t.c) && g.has_edge(t.a, t.c)));
    }
    if (g.num_vertices() <= 14) {
      testing::TripleScan scan = testing::scan_triples(g);
      CHECK(std::vector<Wedge>(w.wedges().begin(), w.wedges().end()) == scan.wedges);
      auto tris = std::vector<Triangle>(w.triangles().begin(), w.triangles().end());
      std::sort(tris.begin(), tris.end());
      CHECK(tris == scan.triangles);
    }
    CHECK(graph_stats(g) == graph_stats(g, w));
    check_invariants(g);
  }
}

TEST_CASE("property: parse, write and parse again is idempotent") {
  auto graphs = testing::corpus(200, 2, 25, {0.1, 0.3}, 99);
  EdgeListOptions identity;
  identity.mapping = IdMapping::kIdentity;
  for (const auto& item : graphs) {
    if (item.graph.num_edges() == 0) continue;
    std::ostringstream first;
    write_edge_list(first, item.graph);

    Graph once = parse_edge_list(first.str(), identity);
    std::ostringstream second;
    write_edge_list(second, once);
    CHECK(second.str() == first.str());
    CHECK(edge_vector(parse_edge_list(second.str(), identity)) == edge_vector(once));

    // First-appearance ids may renumber vertices; labels still name the
    // original endpoints.
    Graph remapped = parse_edge_list(first.str());
    CHECK(remapped.num_edges() == item.graph.num_edges());
    for (const NodePair& e : remapped.edges()) {
      CHECK(item.graph.has_edge(static_cast<VertexId>(remapped.label(e.u)),
                                static_cast<VertexId>(remapped.label(e.v))));
    }
    std::ostringstream third;
    write_edge_list(third, remapped);
    CHECK(parse_edge_list(third.str()).num_edges() == remapped.num_edges());
  }
}

}  // namespace
}  // namespace lambdacc
