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

#include "lambdacc/stc.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <unordered_set>

#include "lambdacc/errors.hpp"
#include "lambdacc/pair_space.hpp"
#include "lambdacc/rng.hpp"

namespace lambdacc {

namespace {

constexpr double kZeroResidual = 1e-12;

std::string describe(const NodePair& p) {
  return "(" + std::to_string(p.u) + "," + std::to_string(p.v) + ")";
}

std::unordered_set<std::uint64_t> key_set(const std::vector<NodePair>& pairs) {
  std::unordered_set<std::uint64_t> keys;
  keys.reserve(pairs.size() * 2);
  for (const NodePair& p : pairs) keys.insert(p.key());
  return keys;
}

// Greedily unlabels pairs whose every wedge stays covered without them.
void drop_redundant_pairs(const PairVariableSpace& space,
                          const std::vector<std::array<std::size_t, 3>>& wedge_vars,
                          std::vector<char>& labeled) {
  const std::size_t num_vars = space.size();
  std::vector<std::size_t> offsets(num_vars + 1, 0);
  for (const auto& vars : wedge_vars) {
    for (std::size_t v : vars) ++offsets[v + 1];
  }
  std::partial_sum(offsets.begin(), offsets.end(), offsets.begin());
  std::vector<std::size_t> incidence(offsets.back());
  std::vector<std::size_t> cursor(offsets.begin(), offsets.end() - 1);
  std::vector<int> cover_count(wedge_vars.size(), 0);
  for (std::size_t w = 0; w < wedge_vars.size(); ++w) {
    for (std::size_t v : wedge_vars[w]) {
      incidence[cursor[v]++] = w;
      if (labeled[v]) ++cover_count[w];
    }
  }

  std::vector<std::size_t> candidates;
  for (std::size_t v = 0; v < num_vars; ++v) {
    if (labeled[v]) candidates.push_back(v);
  }
  std::sort(candidates.begin(), candidates.end(), [&](std::size_t a, std::size_t b) {
    return space.pair(a) < space.pair(b);
  });
  for (std::size_t v : candidates) {
    bool needed = false;
    for (std::size_t k = offsets[v]; k < offsets[v + 1] && !needed; ++k) {
      needed = cover_count[incidence[k]] < 2;
    }
    if (needed) continue;
    labeled[v] = 0;
    for (std::size_t k = offsets[v]; k < offsets[v + 1]; ++k) {
      --cover_count[incidence[k]];
    }
  }
}

}  // namespace

void normalize(StcLabeling& labeling) {
  for (auto* list : {&labeling.weak, &labeling.missing}) {
    for (NodePair& p : *list) p = NodePair::of(p.u, p.v);
    std::sort(list->begin(), list->end());
    list->erase(std::unique(list->begin(), list->end()), list->end());
  }
}

void validate_labeling(const Graph& g, const StcLabeling& labeling) {
  const auto n = g.num_vertices();
  auto check_range = [&](const NodePair& p) {
    if (p.u == p.v || p.u >= n || p.v >= n) {
      throw InvalidLabelingError("pair " + describe(p) + " is not a vertex pair of the graph");
    }
  };
  for (const NodePair& p : labeling.weak) {
    check_range(p);
    if (!g.has_edge(p.u, p.v)) {
      throw InvalidLabelingError("weak pair " + describe(p) + " is not an edge");
    }
  }
  for (const NodePair& p : labeling.missing) {
    check_range(p);
    if (g.has_edge(p.u, p.v)) {
      throw InvalidLabelingError("missing pair " + describe(p) + " is an edge");
    }
  }
}

double stc_objective(const Graph& g, LambdaParam lambda,
                     const StcLabeling& labeling) {
  validate_labeling(g, labeling);
  return lambda.edge_cost() * static_cast<double>(labeling.weak.size()) +
         lambda.non_edge_cost() * static_cast<double>(labeling.missing.size());
}

bool is_feasible(const Graph& g, const WedgeIndex& index,
                 const StcLabeling& labeling) {
  (void)g;
  auto weak = key_set(labeling.weak);
  auto missing = key_set(labeling.missing);
  for (const Wedge& w : index.wedges()) {
    if (weak.count(w.first_arm().key()) || weak.count(w.second_arm().key()) ||
        missing.count(w.ends().key())) {
      continue;
    }
    return false;
  }
  return true;
}

double max_dual_violation(const Graph& g, const WedgeIndex& index,
                          LambdaParam lambda, const DualCertificate& certificate) {
  if (certificate.wedge_values.size() != index.wedge_count()) {
    throw Error("certificate does not match the wedge index");
  }
  auto space = PairVariableSpace::from_wedges(g, index);
  std::vector<double> load(space.size(), 0.0);
  auto wedges = index.wedges();
  for (std::size_t w = 0; w < wedges.size(); ++w) {
    const double y = certificate.wedge_values[w];
    if (y < 0.0) return -y;
    for (std::size_t v : space.wedge_variables(wedges[w])) load[v] += y;
  }
  double worst = -std::numeric_limits<double>::infinity();
  for (std::size_t v = 0; v < space.size(); ++v) {
    worst = std::max(worst, load[v] - lambda.cost(space.is_edge(v)));
  }
  return space.size() == 0 ? 0.0 : worst;
}

CoverLabelResult cover_label(const Graph& g, const WedgeIndex& index,
                             LambdaParam lambda, const CoverLabelOptions& options) {
  auto space = PairVariableSpace::from_wedges(g, index);
  auto wedges = index.wedges();

  std::vector<double> residual(space.size());
  for (std::size_t v = 0; v < space.size(); ++v) {
    residual[v] = lambda.cost(space.is_edge(v));
  }
  std::vector<std::array<std::size_t, 3>> wedge_vars(wedges.size());
  for (std::size_t w = 0; w < wedges.size(); ++w) {
    wedge_vars[w] = space.wedge_variables(wedges[w]);
  }

  std::vector<std::size_t> order(wedges.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  if (options.shuffle_seed) {
    Rng rng(*options.shuffle_seed);
    rng.shuffle(order.begin(), order.end());
  }

  CoverLabelResult result;
  result.certificate.wedge_values.assign(wedges.size(), 0.0);
  double lower_bound = 0.0;
  for (std::size_t w : order) {
    const auto& [a, b, c] = wedge_vars[w];
    const double step = std::min({residual[a], residual[b], residual[c]});
    if (step <= 0.0) continue;
    for (std::size_t v : wedge_vars[w]) {
      residual[v] -= step;
      if (residual[v] <= kZeroResidual) residual[v] = 0.0;
    }
    result.certificate.wedge_values[w] = step;
    lower_bound += step;
  }
  result.certificate.lower_bound = lower_bound;

  std::vector<char> labeled(space.size(), 0);
  for (std::size_t v = 0; v < space.size(); ++v) labeled[v] = residual[v] == 0.0;
  if (options.minimality_pass) drop_redundant_pairs(space, wedge_vars, labeled);

  for (std::size_t v = 0; v < space.size(); ++v) {
    if (!labeled[v]) continue;
    (space.is_edge(v) ? result.labeling.weak : result.labeling.missing)
        .push_back(space.pair(v));
  }
  normalize(result.labeling);
  return result;
}

StcRegime stc_regime(LambdaParam lambda, std::uint64_t num_edges) {
  const double lam = lambda.value();
  if (lam == 0.5) return StcRegime::kMinStcPlusEquivalent;
  const double m = static_cast<double>(num_edges);
  if (lam > m / (m + 1.0)) return StcRegime::kMinStcEquivalent;
  return StcRegime::kGeneral;
}

std::string_view to_string(StcRegime regime) {
  switch (regime) {
    case StcRegime::kMinStcPlusEquivalent:
      return "minstc+";
    case StcRegime::kMinStcEquivalent:
      return "minstc";
    case StcRegime::kGeneral:
      return "general";
  }
  return "general";
}

}  // namespace lambdacc
