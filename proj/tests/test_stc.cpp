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

#include <vector>

#include "doctest.h"
#include "lambdacc/errors.hpp"
#include "lambdacc/oracle.hpp"
#include "lambdacc/stc.hpp"
#include "support/test_support.hpp"

namespace lambdacc {
namespace {

using testing::path3;
using testing::star3;
using testing::triangle;

TEST_CASE("LambdaParam rejects values outside (0, 1)") {
  CHECK_THROWS_AS(LambdaParam(0.0), ParameterError);
  CHECK_THROWS_AS(LambdaParam(1.0), ParameterError);
  CHECK_THROWS_AS(LambdaParam(-0.2), ParameterError);
  LambdaParam lam(0.3);
  CHECK(lam.edge_cost() == doctest::Approx(0.7));
  CHECK(lam.non_edge_cost() == 0.3);
  CHECK(lam.weights(true).positive == doctest::Approx(0.7));
  CHECK(lam.weights(true).negative == 0.0);
  CHECK(lam.weights(false).negative == 0.3);
}

TEST_CASE("stc_objective examples") {
  CHECK(stc_objective(triangle(), LambdaParam(0.7), StcLabeling{}) == 0.0);
  CHECK(stc_objective(path3(), LambdaParam(0.6), StcLabeling{{{0, 1}}, {}}) ==
        doctest::Approx(0.4));
  CHECK(stc_objective(star3(), LambdaParam(0.5), StcLabeling{{{0, 1}, {0, 2}}, {{1, 2}}}) ==
        doctest::Approx(1.5));
}

TEST_CASE("stc_objective rejects pairs on the wrong side") {
  CHECK_THROWS_AS(stc_objective(path3(), LambdaParam(0.5), StcLabeling{{{0, 2}}, {}}),
                  InvalidLabelingError);
  CHECK_THROWS_AS(stc_objective(path3(), LambdaParam(0.5), StcLabeling{{}, {{0, 1}}}),
                  InvalidLabelingError);
}

TEST_CASE("is_feasible examples") {
  Graph p = path3();
  WedgeIndex pw = enumerate_wedges(p);
  CHECK_FALSE(is_feasible(p, pw, StcLabeling{}));
  CHECK(is_feasible(p, pw, StcLabeling{{}, {{0, 2}}}));
  Graph s = star3();
  CHECK(is_feasible(s, enumerate_wedges(s), StcLabeling{{{0, 1}, {0, 2}}, {}}));
  CHECK_FALSE(is_feasible(s, enumerate_wedges(s), StcLabeling{{{0, 1}}, {}}));
}

TEST_CASE("cover_label examples") {
  SUBCASE("triangle has nothing to cover") {
    Graph g = triangle();
    for (double lam : {0.2, 0.5, 0.9}) {
      CoverLabelResult r = cover_label(g, enumerate_wedges(g), LambdaParam(lam));
      CHECK(r.labeling.size() == 0);
      CHECK(r.certificate.lower_bound == 0.0);
    }
  }
  SUBCASE("path") {
    Graph g = path3();
    CoverLabelResult r = cover_label(g, enumerate_wedges(g), LambdaParam(0.6));
    CHECK(r.labeling.weak == std::vector<NodePair>{{0, 1}, {1, 2}});
    CHECK(r.labeling.missing.empty());
    CHECK(r.certificate.lower_bound == doctest::Approx(0.4));
  }
  SUBCASE("star is tight against three times the bound") {
    Graph g = star3();
    LambdaParam lam(0.5);
    WedgeIndex w = enumerate_wedges(g);
    CoverLabelResult r = cover_label(g, w, lam);
    CHECK(r.labeling.weak == std::vector<NodePair>{{0, 1}, {0, 2}});
    CHECK(r.labeling.missing == std::vector<NodePair>{{1, 2}});
    CHECK(r.certificate.lower_bound == doctest::Approx(0.5));
    CHECK(stc_objective(g, lam, r.labeling) == doctest::Approx(1.5));
    CHECK(exact_lambda_stc(g, w, lam).optimum == doctest::Approx(1.0));
  }
}

TEST_CASE("stc_regime examples") {
  CHECK(stc_regime(LambdaParam(0.5), 100) == StcRegime::kMinStcPlusEquivalent);
  CHECK(stc_regime(LambdaParam(0.995), 100) == StcRegime::kMinStcEquivalent);
  CHECK(stc_regime(LambdaParam(0.7), 100) == StcRegime::kGeneral);
  CHECK(stc_regime(LambdaParam(0.2), 0) == StcRegime::kMinStcEquivalent);
}

TEST_CASE("cover_label is deterministic and the shuffle is seeded") {
  Rng rng(5);
  Graph g = testing::erdos_renyi(20, 0.3, rng);
  WedgeIndex w = enumerate_wedges(g);
  LambdaParam lam(0.65);
  CHECK(cover_label(g, w, lam).labeling == cover_label(g, w, lam).labeling);
  CoverLabelOptions opts;
  opts.shuffle_seed = 11;
  CoverLabelResult a = cover_label(g, w, lam, opts);
  CoverLabelResult b = cover_label(g, w, lam, opts);
  CHECK(a.labeling == b.labeling);
  CHECK(a.certificate.lower_bound == b.certificate.lower_bound);
  CHECK(is_feasible(g, w, a.labeling));
}

TEST_CASE("property: cover_label is feasible, dual feasible and within the sandwich") {
  const std::vector<double> lambdas = {0.3, 0.4, 0.5, 0.6, 0.8, 0.95};
  auto graphs = testing::corpus(120, 4, 9, {0.2, 0.4, 0.6}, 2024);
  std::size_t index = 0;
  for (const auto& item : graphs) {
    const Graph& g = item.graph;
    WedgeIndex w = enumerate_wedges(g);
    LambdaParam lam(lambdas[index++ % lambdas.size()]);
    CoverLabelResult r = cover_label(g, w, lam);
    CHECK(is_feasible(g, w, r.labeling));
    CHECK(max_dual_violation(g, w, lam, r.certificate) <= 1e-12);
    for (double y : r.certificate.wedge_values) CHECK(y >= 0.0);
    const double objective = stc_objective(g, lam, r.labeling);
    CHECK(objective <= 3.0 * r.certificate.lower_bound + 1e-12);
    LabelingOracleResult opt = exact_lambda_stc(g, w, lam);
    CHECK(r.certificate.lower_bound <= opt.optimum + 1e-12);
    CHECK(opt.optimum <= objective + 1e-12);
    if (auto brute = testing::brute_force_stc(g, lam)) {
      CHECK(opt.optimum == doctest::Approx(brute->cost).epsilon(1e-12));
    }
  }
}

TEST_CASE("property: no missing pairs in the minSTC regime") {
  auto graphs = testing::corpus(100, 3, 25, {0.1, 0.3, 0.5}, 77);
  for (const auto& item : graphs) {
    const Graph& g = item.graph;
    if (g.num_edges() == 0) continue;
    const double m = static_cast<double>(g.num_edges());
    LambdaParam lam((m + 0.5) / (m + 1.0));
    REQUIRE(stc_regime(lam, g.num_edges()) == StcRegime::kMinStcEquivalent);
    WedgeIndex w = enumerate_wedges(g);
    CoverLabelResult r = cover_label(g, w, lam);
    CHECK(r.labeling.missing.empty());
    CoverLabelOptions minimal;
    minimal.minimality_pass = true;
    CHECK(cover_label(g, w, lam, minimal).labeling.missing.empty());
  }
}

TEST_CASE("property: shuffled orders and the minimality pass stay feasible") {
  auto graphs = testing::corpus(100, 4, 30, {0.1, 0.3, 0.5}, 31);
  std::uint64_t seed = 1;
  for (const auto& item : graphs) {
    const Graph& g = item.graph;
    WedgeIndex w = enumerate_wedges(g);
    LambdaParam lam(0.55);
    CoverLabelOptions opts;
    opts.shuffle_seed = seed++;
    CoverLabelResult shuffled = cover_label(g, w, lam, opts);
    CHECK(is_feasible(g, w, shuffled.labeling));
    CHECK(max_dual_violation(g, w, lam, shuffled.certificate) <= 1e-12);

    CoverLabelResult plain = cover_label(g, w, lam);
    CoverLabelOptions minimal;
    minimal.minimality_pass = true;
    CoverLabelResult pruned = cover_label(g, w, lam, minimal);
    CHECK(is_feasible(g, w, pruned.labeling));
    CHECK(pruned.labeling.size() <= plain.labeling.size());
    CHECK(pruned.certificate.lower_bound == plain.certificate.lower_bound);
    for (std::size_t i = 0; i < pruned.labeling.weak.size(); ++i) {
      StcLabeling fewer = pruned.labeling;
      fewer.weak.erase(fewer.weak.begin() + static_cast<std::ptrdiff_t>(i));
      CHECK_FALSE(is_feasible(g, w, fewer));
    }
    for (std::size_t i = 0; i < pruned.labeling.missing.size(); ++i) {
      StcLabeling fewer = pruned.labeling;
      fewer.missing.erase(fewer.missing.begin() + static_cast<std::ptrdiff_t>(i));
      CHECK_FALSE(is_feasible(g, w, fewer));
    }
  }
}

TEST_CASE("property: at one half the optimum is half the minSTC+ optimum") {
  auto graphs = testing::corpus(60, 4, 7, {0.3, 0.5}, 8);
  for (const auto& item : graphs) {
    auto plus = testing::brute_force_min_stc_plus(item.graph);
    if (!plus) continue;
    LabelingOracleResult opt =
        exact_lambda_stc(item.graph, enumerate_wedges(item.graph), LambdaParam(0.5));
    CHECK(opt.optimum == doctest::Approx(static_cast<double>(*plus) / 2.0));
  }
}

}  // namespace
}  // namespace lambdacc
