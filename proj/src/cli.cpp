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

#include "lambdacc/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "lambdacc/cluster.hpp"
#include "lambdacc/errors.hpp"
#include "lambdacc/graph.hpp"
#include "lambdacc/lp.hpp"
#include "lambdacc/oracle.hpp"
#include "lambdacc/report.hpp"
#include "lambdacc/stc.hpp"
#include "lambdacc/wedges.hpp"

namespace lambdacc::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;
using Clock = std::chrono::steady_clock;

struct InputOptions {
  std::string path;
  std::string format = "auto";
  bool one_indexed = false;
  std::string delimiter;
};

struct OutputOptions {
  std::string path;
  std::string format = "json";
  bool timing = false;
};

// Wall-clock phase timer; phases are reported only with --timing.
class PhaseTimer {
 public:
  void start() { begin_ = Clock::now(); }
  void stop(const std::string& phase) {
    const double ms = std::chrono::duration<double, std::milli>(Clock::now() - begin_).count();
    phases_[phase] = phases_.value(phase, 0.0) + ms;
  }
  const json& phases() const { return phases_; }

 private:
  Clock::time_point begin_ = Clock::now();
  json phases_ = json::object();
};

std::string number(double value) { return json(value).dump(); }

void add_input_options(CLI::App* cmd, InputOptions& in, bool positional = true) {
  if (positional) cmd->add_option("input", in.path, "Graph file")->required();
  cmd->add_option("--format", in.format, "Input format: auto, edgelist or mtx")
      ->capture_default_str();
  cmd->add_flag("--one-indexed", in.one_indexed, "Edge-list ids start at 1");
  cmd->add_option("--delimiter", in.delimiter, "Edge-list token separator (one character)");
}

void add_output_options(CLI::App* cmd, OutputOptions& out) {
  cmd->add_option("--output,-o", out.path,
                  "Report file; relative paths resolve against $LAMBDACC_OUTPUT_DIR");
  cmd->add_option("--output-format", out.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  cmd->add_flag("--timing", out.timing, "Include wall-clock timings in the report");
}

Graph load_graph(const InputOptions& in) {
  EdgeListOptions options;
  options.one_indexed = in.one_indexed;
  if (!in.delimiter.empty()) {
    if (in.delimiter.size() != 1) throw ParameterError("--delimiter must be one character");
    options.delimiter = in.delimiter[0];
  }
  return read_graph_file(in.path, parse_graph_format(in.format), options);
}

fs::path resolve_output(const std::string& path) {
  fs::path p(path);
  if (p.is_relative()) {
    if (const char* dir = std::getenv(kOutputDirEnv); dir != nullptr && *dir != '\0') {
      p = fs::path(dir) / p;
    }
  }
  return p;
}

// Writes through a temporary file and a rename, so a failed run never
// leaves a partial report behind.
void write_file_atomically(const fs::path& path, const std::string& content) {
  fs::path tmp = path;
  tmp += ".partial";
  {
    std::ofstream file(tmp, std::ios::binary | std::ios::trunc);
    if (!file) throw Error("cannot write '" + tmp.string() + "'");
    file << content;
    file.flush();
    if (!file) {
      std::error_code ignored;
      fs::remove(tmp, ignored);
      throw Error("cannot write '" + tmp.string() + "'");
    }
  }
  fs::rename(tmp, path);
}

void emit(const std::string& content, const OutputOptions& options, std::ostream& out) {
  if (options.path.empty()) {
    out << content;
    return;
  }
  write_file_atomically(resolve_output(options.path), content);
}

std::string json_text(const json& j) { return j.dump(2) + "\n"; }

std::vector<LambdaParam> lambda_params(const std::vector<double>& values) {
  std::vector<LambdaParam> out;
  for (double v : values) out.emplace_back(v);
  return out;
}

json header(const std::string& command, const InputOptions& in) {
  return {{"schema_version", kReportSchemaVersion}, {"command", command}, {"input", in.path}};
}

std::string csv_header(const std::string& command) {
  return "# lambdacc " + command + " schema " + std::to_string(kReportSchemaVersion) + "\n";
}

void print_phases(const PhaseTimer& timer, std::ostream& err) {
  for (const auto& [phase, ms] : timer.phases().items()) {
    err << "phase " << phase << ": " << number(ms.get<double>()) << " ms\n";
  }
}

LpMethod parse_method(const std::string& name) {
  if (name == "auto") return LpMethod::kAuto;
  if (name == "exact") return LpMethod::kExact;
  if (name == "mwu") return LpMethod::kMwu;
  throw ParameterError("unknown LP method '" + name + "'");
}

void check_epsilon(double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw ParameterError("epsilon must lie in (0, 1), got " + std::to_string(epsilon));
  }
}

// ---------------------------------------------------------------- cluster

struct ClusterConfig {
  InputOptions input;
  OutputOptions output;
  std::string algorithm = "cfp";
  std::vector<double> lambdas;
  std::uint64_t seed = 1;
  std::size_t repetitions = 1;
  double epsilon = 0.01;
  std::string method = "auto";
  std::string bound = "auto";
  bool force = false;
  bool deterministic = false;
  bool multilevel = false;
  std::size_t max_passes = 100;
  std::string assignment;
};

// Per-lambda, seed-independent state of a clustering pipeline.
struct Prepared {
  std::optional<CoverFlipPlan> plan;
  std::optional<LpSolution> lp;
  Graph rounded;
  std::optional<LowerBound> bound;
  std::string lp_solver;
};

std::string effective_bound(const ClusterConfig& c) {
  if (c.bound != "auto") return c.bound;
  if (c.algorithm == "lp-round" || c.algorithm == "lp3-round") return "lp";
  return "dual";
}

void validate_cluster(const ClusterConfig& c, const std::vector<LambdaParam>& lambdas) {
  if (c.repetitions == 0) throw ParameterError("--seeds must be at least 1");
  if (c.max_passes == 0) throw ParameterError("--max-passes must be at least 1");
  check_epsilon(c.epsilon);
  parse_method(c.method);
  for (LambdaParam lam : lambdas) {
    if (c.algorithm == "cfp" && lam.value() < 0.5 && !c.force) {
      throw ParameterError("cfp needs lambda >= 0.5 for its guarantee; got " +
                           number(lam.value()) + " (pass --force to run anyway)");
    }
    if (c.algorithm == "lp3-round" && lam.value() < 0.5) {
      throw ParameterError("lp3-round needs lambda >= 0.5; got " + number(lam.value()));
    }
  }
  if (c.deterministic && (c.algorithm == "pivot" || c.algorithm == "louvain")) {
    throw ParameterError("--deterministic applies to cfp, lp-round and lp3-round only");
  }
  if (c.algorithm == "lp3-round" && c.bound != "auto" && c.bound != "lp" && c.bound != "none") {
    throw ParameterError("lp3-round reports the intermediate LP value as its bound");
  }
}

Prepared prepare(const ClusterConfig& c, const Graph& g, const WedgeIndex& index,
                 LambdaParam lam) {
  Prepared p;
  const std::string bound = effective_bound(c);
  if (c.algorithm == "cfp") {
    CoverFlipPivotOptions options;
    options.force = c.force;
    p.plan = plan_cover_flip_pivot(g, index, lam, options);
    p.rounded = p.plan->flipped;
  } else if (c.algorithm == "lp-round") {
    LambdaStcLp lp = build_lambda_stc_lp(g, index, lam);
    p.lp = solve_lambda_stc_lp(lp, parse_method(c.method), c.epsilon);
    check_lambda_stc_feasible(g, index, p.lp->solution);
    p.rounded = stc_lp_rounded_graph(g, lam, p.lp->solution);
  } else if (c.algorithm == "lp3-round") {
    p.lp = solve_general_exact(build_intermediate_lp(g, index, lam));
    p.rounded = intermediate_lp_rounded_graph(g, p.lp->solution);
  } else {
    p.rounded = g;
  }

  if (bound == "dual") {
    const double value = p.plan ? p.plan->cover.certificate.lower_bound
                                : cover_label(g, index, lam).certificate.lower_bound;
    p.bound = LowerBound{value, BoundProvenance::kDualCertificate};
  } else if (bound == "lp") {
    if (!p.lp) {
      p.lp = solve_lambda_stc_lp(build_lambda_stc_lp(g, index, lam), parse_method(c.method),
                                 c.epsilon);
    }
    // An MWU solution overestimates the optimum; its certified dual bound is
    // the valid lower bound.
    const double value =
        p.lp->solver == "exact" ? p.lp->solution.objective() : p.lp->dual_bound;
    p.bound = LowerBound{value, BoundProvenance::kLpValue};
  }
  if (p.lp) p.lp_solver = p.lp->solver;
  return p;
}

// Budget of a pair for derandomized pivoting: its labeling cost if flipped
// (cfp) or its LP contribution (LP rounding).
PairBudget budget_for(const ClusterConfig& c, const Graph& g, LambdaParam lam,
                      const Prepared& p) {
  if (p.plan) {
    const Graph& flipped = p.plan->flipped;
    return [&g, &flipped, lam](VertexId a, VertexId b) {
      return g.has_edge(a, b) != flipped.has_edge(a, b) ? lam.cost(g.has_edge(a, b)) : 0.0;
    };
  }
  (void)c;
  const FractionalSolution& sol = p.lp->solution;
  return [&g, &sol, lam](VertexId a, VertexId b) {
    const double x = sol.x(a, b);
    return g.has_edge(a, b) ? lam.edge_cost() * x : lam.non_edge_cost() * (1.0 - x);
  };
}

RunReport run_once(const ClusterConfig& c, const Graph& g, LambdaParam lam,
                   const Prepared& p, std::uint64_t seed) {
  const auto start = Clock::now();
  RunReport report;
  if (c.algorithm == "louvain") {
    LouvainOptions options;
    options.max_passes = c.max_passes;
    options.multilevel = c.multilevel;
    report = lambda_louvain(g, lam, seed, options);
  } else {
    report.algorithm = c.algorithm;
    report.lambda = lam.value();
    report.seed = seed;
    if (c.deterministic) {
      report.clustering =
          pivot_deterministic(p.rounded, g, lam, budget_for(c, g, lam, p)).clustering;
    } else {
      report.clustering = pivot(p.rounded, seed);
    }
    report.objective = lambda_cc_objective(g, lam, report.clustering);
  }
  if (p.bound) report = a_posteriori_ratio(std::move(report), *p.bound);
  report.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  return report;
}

json aggregate(const ClusterConfig& c, LambdaParam lam, const std::vector<RunReport>& runs,
               const Prepared& p) {
  std::vector<double> objectives, ratios, elapsed;
  for (const RunReport& r : runs) {
    objectives.push_back(r.objective);
    if (r.ratio) ratios.push_back(*r.ratio);
    elapsed.push_back(r.elapsed_ms);
  }
  json out = {{"algorithm", c.algorithm},
              {"lambda", lam.value()},
              {"repetitions", runs.size()},
              {"objective", to_json(summarize(objectives))},
              {"lower_bound", nullptr},
              {"lb_provenance", nullptr},
              {"ratio", nullptr},
              {"best_ratio", nullptr}};
  if (p.bound) {
    out["lower_bound"] = p.bound->value;
    out["lb_provenance"] = std::string(to_string(p.bound->provenance));
  }
  if (!ratios.empty()) {
    const Summary s = summarize(ratios);
    out["ratio"] = to_json(s);
    out["best_ratio"] = s.min;
  }
  if (p.plan) out["labeling_cost"] = p.plan->labeling_cost;
  if (!p.lp_solver.empty()) out["lp_solver"] = p.lp_solver;
  if (c.output.timing) out["elapsed_ms"] = to_json(summarize(elapsed));
  return out;
}

std::string cluster_csv(const ClusterConfig& c, const std::vector<RunReport>& runs,
                        const std::vector<json>& aggregates) {
  std::ostringstream csv;
  csv << csv_header("cluster");
  csv << "record,algorithm,lambda,seed,objective,lower_bound,lb_provenance,ratio,num_clusters";
  if (c.output.timing) csv << ",elapsed_ms";
  csv << '\n';
  auto opt = [](const json& j) { return j.is_null() ? std::string() : j.dump(); };
  for (const RunReport& r : runs) {
    csv << "run," << r.algorithm << ',' << number(r.lambda) << ',' << r.seed << ','
        << number(r.objective) << ','
        << (r.lower_bound ? number(r.lower_bound->value) : "") << ','
        << (r.lower_bound ? std::string(to_string(r.lower_bound->provenance)) : "") << ','
        << (r.ratio ? number(*r.ratio) : "") << ',' << r.clustering.num_clusters();
    if (c.output.timing) csv << ',' << number(r.elapsed_ms);
    csv << '\n';
  }
  for (const json& a : aggregates) {
    for (const char* stat : {"mean", "std", "min", "max"}) {
      csv << stat << ',' << a["algorithm"].get<std::string>() << ',' << a["lambda"].dump()
          << ",," << a["objective"][stat].dump() << ',' << opt(a["lower_bound"]) << ','
          << (a["lb_provenance"].is_null() ? "" : a["lb_provenance"].get<std::string>())
          << ',' << (a["ratio"].is_null() ? "" : a["ratio"][stat].dump()) << ',';
      if (c.output.timing) csv << ',' << a["elapsed_ms"][stat].dump();
      csv << '\n';
    }
  }
  return csv.str();
}

int cmd_cluster(const ClusterConfig& c, std::ostream& out, std::ostream& err) {
  const auto lambdas = lambda_params(c.lambdas);
  validate_cluster(c, lambdas);
  PhaseTimer timer;
  const Graph g = load_graph(c.input);
  timer.stop("parse");
  timer.start();
  const WedgeIndex index = enumerate_wedges(g);
  timer.stop("wedges");

  std::vector<RunReport> runs;
  std::vector<json> aggregates;
  const RunReport* best = nullptr;
  for (LambdaParam lam : lambdas) {
    timer.start();
    const Prepared p = prepare(c, g, index, lam);
    timer.stop("bound");
    timer.start();
    std::vector<RunReport> batch;
    for (std::size_t r = 0; r < c.repetitions; ++r) {
      batch.push_back(run_once(c, g, lam, p, c.seed + r));
    }
    timer.stop("round");
    aggregates.push_back(aggregate(c, lam, batch, p));
    runs.insert(runs.end(), batch.begin(), batch.end());
  }
  for (const RunReport& r : runs) {
    if (best == nullptr || r.objective < best->objective) best = &r;
  }

  if (!c.assignment.empty() && best != nullptr) {
    std::ostringstream text;
    write_assignment(text, g, best->clustering);
    write_file_atomically(resolve_output(c.assignment), text.str());
  }

  std::string content;
  if (c.output.format == "csv") {
    content = cluster_csv(c, runs, aggregates);
  } else {
    json report = header("cluster", c.input);
    report["algorithm"] = c.algorithm;
    report["graph"] = {{"n", g.num_vertices()}, {"m", g.num_edges()}};
    report["runs"] = json::array();
    for (const RunReport& r : runs) report["runs"].push_back(run_to_json(r, c.output.timing));
    report["aggregates"] = aggregates;
    if (c.output.timing) report["timing_ms"] = timer.phases();
    content = json_text(report);
  }
  emit(content, c.output, out);
  if (c.output.timing) print_phases(timer, err);
  return kExitOk;
}

// ------------------------------------------------------------------ label

struct LabelConfig {
  InputOptions input;
  OutputOptions output;
  std::vector<double> lambdas;
  bool minimal = false;
  std::optional<std::uint64_t> shuffle_seed;
};

int cmd_label(const LabelConfig& c, std::ostream& out, std::ostream& err) {
  const auto lambdas = lambda_params(c.lambdas);
  PhaseTimer timer;
  const Graph g = load_graph(c.input);
  timer.stop("parse");
  timer.start();
  const WedgeIndex index = enumerate_wedges(g);
  timer.stop("wedges");
  CoverLabelOptions options;
  options.minimality_pass = c.minimal;
  options.shuffle_seed = c.shuffle_seed;

  json results = json::array();
  std::ostringstream csv;
  csv << csv_header("label") << "lambda,regime,weak,missing,objective,lower_bound\n";
  timer.start();
  for (LambdaParam lam : lambdas) {
    CoverLabelResult r = cover_label(g, index, lam, options);
    json entry = labeling_to_json(g, lam, r.labeling, r.certificate.lower_bound);
    entry["regime"] = std::string(to_string(stc_regime(lam, g.num_edges())));
    entry["wedges"] = index.wedge_count();
    csv << number(lam.value()) << ',' << entry["regime"].get<std::string>() << ','
        << r.labeling.weak.size() << ',' << r.labeling.missing.size() << ','
        << entry["objective"].dump() << ',' << number(r.certificate.lower_bound) << '\n';
    results.push_back(std::move(entry));
  }
  timer.stop("label");
  if (c.output.format == "csv") {
    emit(csv.str(), c.output, out);
  } else {
    json report = header("label", c.input);
    report["results"] = std::move(results);
    if (c.output.timing) report["timing_ms"] = timer.phases();
    emit(json_text(report), c.output, out);
  }
  if (c.output.timing) print_phases(timer, err);
  return kExitOk;
}

// --------------------------------------------------------------- lp-solve

struct LpConfig {
  InputOptions input;
  OutputOptions output;
  std::vector<double> lambdas;
  std::string lp = "stc";
  std::string method = "auto";
  double epsilon = 0.01;
  std::string orientation = "labeling";
  std::string dump_instance;
};

int cmd_lp_solve(const LpConfig& c, std::ostream& out, std::ostream& err) {
  const auto lambdas = lambda_params(c.lambdas);
  check_epsilon(c.epsilon);
  const LpMethod method = parse_method(c.method);
  if (c.lp == "intermediate" && method == LpMethod::kMwu) {
    throw ParameterError("the intermediate LP is solved by the exact engine only");
  }
  const Orientation orientation =
      c.orientation == "distance" ? Orientation::kDistance : Orientation::kLabeling;
  PhaseTimer timer;
  const Graph g = load_graph(c.input);
  timer.stop("parse");
  timer.start();
  const WedgeIndex index = enumerate_wedges(g);
  timer.stop("wedges");

  json results = json::array();
  std::ostringstream csv;
  csv << csv_header("lp-solve")
      << "lambda,lp,solver,objective,dual_bound,certified_canonical,violations\n";
  for (LambdaParam lam : lambdas) {
    timer.start();
    std::optional<LpSolution> solved;
    if (c.lp == "stc") {
      LambdaStcLp lp = build_lambda_stc_lp(g, index, lam);
      if (!c.dump_instance.empty()) {
        std::ostringstream text;
        write_covering_instance(text, lp.instance);
        write_file_atomically(resolve_output(c.dump_instance), text.str());
      }
      solved = solve_lambda_stc_lp(lp, method, c.epsilon);
    } else {
      solved = solve_general_exact(build_intermediate_lp(g, index, lam));
    }
    timer.stop("solve");
    timer.start();
    const CanonicalCertificate cert = certify_canonical_feasibility(g, solved->solution);
    timer.stop("certify");
    json entry = lp_solution_to_json(*solved, orientation);
    entry["lp"] = c.lp;
    entry["certified_canonical"] = cert.certified;
    entry["violation_count"] = cert.violation_count;
    csv << number(lam.value()) << ',' << c.lp << ',' << solved->solver << ','
        << entry["objective"].dump() << ',' << number(solved->dual_bound) << ','
        << (cert.certified ? "true" : "false") << ',' << cert.violation_count << '\n';
    results.push_back(std::move(entry));
  }
  if (c.output.format == "csv") {
    emit(csv.str(), c.output, out);
  } else {
    json report = header("lp-solve", c.input);
    report["results"] = std::move(results);
    if (c.output.timing) report["timing_ms"] = timer.phases();
    emit(json_text(report), c.output, out);
  }
  if (c.output.timing) print_phases(timer, err);
  return kExitOk;
}

// ---------------------------------------------------------------- certify

int cmd_certify(const LpConfig& c, std::ostream& out, std::ostream& err) {
  const auto lambdas = lambda_params(c.lambdas);
  check_epsilon(c.epsilon);
  const LpMethod method = parse_method(c.method);
  PhaseTimer timer;
  const Graph g = load_graph(c.input);
  timer.stop("parse");
  timer.start();
  const WedgeIndex index = enumerate_wedges(g);
  timer.stop("wedges");

  json results = json::array();
  std::ostringstream csv;
  csv << csv_header("certify")
      << "lambda,solver,lp_value,dual_bound,certified,violation_count,canonical_optimum\n";
  for (LambdaParam lam : lambdas) {
    timer.start();
    const LpSolution solved =
        solve_lambda_stc_lp(build_lambda_stc_lp(g, index, lam), method, c.epsilon);
    timer.stop("solve");
    timer.start();
    const CanonicalCertificate cert = certify_canonical_feasibility(g, solved.solution);
    timer.stop("certify");
    // Certification shows canonical feasibility; optimality also needs the
    // LP value itself to be optimal, which only the exact engine provides.
    const bool optimum = cert.certified && solved.solver == "exact";
    json violations = json::array();
    for (const TripleViolation& v : cert.violations) {
      violations.push_back({{"i", g.label(v.i)},
                            {"center", g.label(v.center)},
                            {"k", g.label(v.k)},
                            {"excess", v.excess}});
    }
    json entry = {{"lambda", lam.value()},
                  {"solver", solved.solver},
                  {"lp_value", solved.solution.objective()},
                  {"dual_bound", solved.dual_bound},
                  {"certified", cert.certified},
                  {"violation_count", cert.violation_count},
                  {"triples_checked", cert.triples_checked},
                  {"canonical_optimum", optimum},
                  {"violations", std::move(violations)}};
    csv << number(lam.value()) << ',' << solved.solver << ','
        << number(solved.solution.objective()) << ',' << number(solved.dual_bound) << ','
        << (cert.certified ? "true" : "false") << ',' << cert.violation_count << ','
        << (optimum ? "true" : "false") << '\n';
    results.push_back(std::move(entry));
  }
  if (c.output.format == "csv") {
    emit(csv.str(), c.output, out);
  } else {
    json report = header("certify", c.input);
    report["results"] = std::move(results);
    if (c.output.timing) report["timing_ms"] = timer.phases();
    emit(json_text(report), c.output, out);
  }
  if (c.output.timing) print_phases(timer, err);
  return kExitOk;
}

// ------------------------------------------------------------------ exact

struct ExactConfig {
  InputOptions input;
  OutputOptions output;
  std::vector<double> lambdas;
};

int cmd_exact(const ExactConfig& c, std::ostream& out, std::ostream&) {
  const auto lambdas = lambda_params(c.lambdas);
  const Graph g = load_graph(c.input);
  const WedgeIndex index = enumerate_wedges(g);
  json results = json::array();
  std::ostringstream csv;
  csv << csv_header("exact") << "lambda,cc_optimum,stc_optimum,canonical_lp\n";
  for (LambdaParam lam : lambdas) {
    const ClusteringOracleResult cc = exact_lambda_cc(g, lam);
    const LabelingOracleResult stc = exact_lambda_stc(g, index, lam);
    json clusters = json::array();
    for (std::uint32_t k = 0; k < cc.witness.num_clusters(); ++k) {
      json members = json::array();
      for (VertexId v : cc.witness.members(k)) members.push_back(g.label(v));
      clusters.push_back(std::move(members));
    }
    json entry = {
        {"lambda", lam.value()},
        {"cc", {{"optimum", cc.optimum},
                {"clusters", std::move(clusters)},
                {"enumerated_count", cc.enumerated_count}}},
        {"stc", labeling_to_json(g, lam, stc.witness, stc.optimum)},
        {"canonical_lp", nullptr}};
    entry["stc"]["enumerated_count"] = stc.enumerated_count;
    std::string lp_text;
    if (g.num_vertices() <= kExactCanonicalLpMaxVertices) {
      const LpOracleResult lp = exact_canonical_lp(g, lam);
      entry["canonical_lp"] = {{"optimum", lp.optimum},
                               {"enumerated_count", lp.enumerated_count}};
      lp_text = number(lp.optimum);
    }
    csv << number(lam.value()) << ',' << number(cc.optimum) << ',' << number(stc.optimum)
        << ',' << lp_text << '\n';
    results.push_back(std::move(entry));
  }
  if (c.output.format == "csv") {
    emit(csv.str(), c.output, out);
  } else {
    json report = header("exact", c.input);
    report["results"] = std::move(results);
    emit(json_text(report), c.output, out);
  }
  return kExitOk;
}

// ------------------------------------------------------------------ stats

int cmd_stats(const InputOptions& in, const OutputOptions& o, std::ostream& out) {
  const Graph g = load_graph(in);
  const GraphStats stats = graph_stats(g);
  if (o.format == "csv") {
    std::ostringstream csv;
    csv << csv_header("stats")
        << "n,m,wedges,triangles,intermediate_constraints,canonical_constraints\n"
        << stats.n << ',' << stats.m << ',' << stats.wedge_count << ','
        << stats.triangle_count << ',' << stats.intermediate_constraint_count() << ','
        << stats.canonical_constraint_count << '\n';
    emit(csv.str(), o, out);
  } else {
    json report = header("stats", in);
    report.update(to_json(stats));
    emit(json_text(report), o, out);
  }
  return kExitOk;
}

// ------------------------------------------------------------ constraints

int cmd_constraints(const std::vector<std::string>& files, const InputOptions& in,
                    const OutputOptions& o, std::ostream& out, std::ostream& err) {
  std::ostringstream csv;
  csv << csv_header("constraints")
      << "name,n,m,wedge_constraints,intermediate_constraints,canonical_constraints\n";
  json rows = json::array();
  int status = kExitOk;
  for (const std::string& file : files) {
    InputOptions options = in;
    options.path = file;
    try {
      const GraphStats s = graph_stats(load_graph(options));
      const std::string name = fs::path(file).stem().string();
      csv << name << ',' << s.n << ',' << s.m << ',' << s.wedge_count << ','
          << s.intermediate_constraint_count() << ',' << s.canonical_constraint_count << '\n';
      rows.push_back({{"name", name},
                      {"n", s.n},
                      {"m", s.m},
                      {"wedge_constraints", s.wedge_count},
                      {"intermediate_constraints", s.intermediate_constraint_count()},
                      {"canonical_constraints", s.canonical_constraint_count}});
    } catch (const ParseError& e) {
      err << "lambdacc: " << file << ": " << e.what() << '\n';
      status = kExitInput;
    }
  }
  if (o.format == "json") {
    json report = {{"schema_version", kReportSchemaVersion},
                   {"command", "constraints"},
                   {"graphs", std::move(rows)}};
    emit(json_text(report), o, out);
  } else {
    emit(csv.str(), o, out);
  }
  return status;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"LambdaCC clustering, LambdaSTC labeling and LP lower bounds", "lambdacc"};
  app.require_subcommand(1);

  ClusterConfig cluster;
  auto* cl = app.add_subcommand("cluster", "Cluster a graph and report ratios to lower bounds");
  add_input_options(cl, cluster.input);
  add_output_options(cl, cluster.output);
  cl->add_option("--alg", cluster.algorithm, "cfp, pivot, lp-round, lp3-round or louvain")
      ->check(CLI::IsMember({"cfp", "pivot", "lp-round", "lp3-round", "louvain"}))
      ->capture_default_str();
  cl->add_option("--lambda", cluster.lambdas, "Resolution parameter(s), comma separated")
      ->delimiter(',')
      ->required();
  cl->add_option("--seed", cluster.seed, "First RNG seed")->capture_default_str();
  cl->add_option("--seeds", cluster.repetitions, "Repetitions per lambda (seeds seed..)")
      ->capture_default_str();
  cl->add_option("--epsilon", cluster.epsilon, "MWU accuracy")->capture_default_str();
  cl->add_option("--lp-method", cluster.method, "auto, exact or mwu")
      ->check(CLI::IsMember({"auto", "exact", "mwu"}))
      ->capture_default_str();
  cl->add_option("--bound", cluster.bound, "Lower bound: auto, none, dual or lp")
      ->check(CLI::IsMember({"auto", "none", "dual", "lp"}))
      ->capture_default_str();
  cl->add_flag("--force", cluster.force, "Run cfp below lambda 0.5 without its guarantee");
  cl->add_flag("--deterministic", cluster.deterministic, "Derandomized pivot selection");
  cl->add_flag("--multilevel", cluster.multilevel, "Louvain super-node aggregation");
  cl->add_option("--max-passes", cluster.max_passes, "Louvain sweep limit")
      ->capture_default_str();
  cl->add_option("--assignment", cluster.assignment,
                 "Write 'vertex cluster' lines of the best run to this file");

  LabelConfig label;
  auto* lb = app.add_subcommand("label", "CoverLabel STC labeling with its dual lower bound");
  add_input_options(lb, label.input);
  add_output_options(lb, label.output);
  lb->add_option("--lambda", label.lambdas, "Resolution parameter(s)")
      ->delimiter(',')
      ->required();
  lb->add_flag("--minimal", label.minimal, "Drop labeled pairs no wedge needs");
  lb->add_option("--shuffle-seed", label.shuffle_seed, "Process wedges in a seeded order");

  LpConfig lp;
  auto* ls = app.add_subcommand("lp-solve", "Solve the LambdaSTC or intermediate LP");
  add_input_options(ls, lp.input);
  add_output_options(ls, lp.output);
  ls->add_option("--lambda", lp.lambdas, "Resolution parameter(s)")->delimiter(',')->required();
  ls->add_option("--lp", lp.lp, "stc or intermediate")
      ->check(CLI::IsMember({"stc", "intermediate"}))
      ->capture_default_str();
  ls->add_option("--method", lp.method, "auto, exact or mwu")
      ->check(CLI::IsMember({"auto", "exact", "mwu"}))
      ->capture_default_str();
  ls->add_option("--epsilon", lp.epsilon, "MWU accuracy")->capture_default_str();
  ls->add_option("--orientation", lp.orientation, "labeling (z) or distance (x)")
      ->check(CLI::IsMember({"labeling", "distance"}))
      ->capture_default_str();
  ls->add_option("--dump-instance", lp.dump_instance, "Write the covering instance here");

  LpConfig cert;
  auto* ce = app.add_subcommand("certify", "Check whether the LambdaSTC LP solves the canonical LP");
  add_input_options(ce, cert.input);
  add_output_options(ce, cert.output);
  ce->add_option("--lambda", cert.lambdas, "Resolution parameter(s)")->delimiter(',')->required();
  ce->add_option("--method", cert.method, "auto, exact or mwu")
      ->check(CLI::IsMember({"auto", "exact", "mwu"}))
      ->capture_default_str();
  ce->add_option("--epsilon", cert.epsilon, "MWU accuracy")->capture_default_str();

  ExactConfig exact;
  auto* ex = app.add_subcommand("exact", "Brute-force optima for tiny graphs");
  add_input_options(ex, exact.input);
  add_output_options(ex, exact.output);
  ex->add_option("--lambda", exact.lambdas, "Resolution parameter(s)")->delimiter(',')->required();

  InputOptions stats_in;
  OutputOptions stats_out;
  auto* st = app.add_subcommand("stats", "Vertex, edge, wedge and triangle counts");
  add_input_options(st, stats_in);
  add_output_options(st, stats_out);

  InputOptions cons_in;
  OutputOptions cons_out;
  cons_out.format = "csv";
  std::vector<std::string> cons_files;
  auto* co = app.add_subcommand("constraints", "Constraint counts of the three LPs per graph");
  co->add_option("inputs", cons_files, "Graph files")->required();
  add_input_options(co, cons_in, /*positional=*/false);
  add_output_options(co, cons_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (cl->parsed()) return cmd_cluster(cluster, out, err);
    if (lb->parsed()) return cmd_label(label, out, err);
    if (ls->parsed()) return cmd_lp_solve(lp, out, err);
    if (ce->parsed()) return cmd_certify(cert, out, err);
    if (ex->parsed()) return cmd_exact(exact, out, err);
    if (st->parsed()) return cmd_stats(stats_in, stats_out, out);
    if (co->parsed()) return cmd_constraints(cons_files, cons_in, cons_out, out, err);
  } catch (const ParseError& e) {
    err << "lambdacc: input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const ParameterError& e) {
    err << "lambdacc: invalid parameter: " << e.what() << '\n';
    return kExitUsage;
  } catch (const SizeError& e) {
    err << "lambdacc: too large: " << e.what() << '\n';
    return kExitSize;
  } catch (const MwuConvergenceError& e) {
    err << "lambdacc: " << e.what() << " (best certified ratio "
        << number(e.certified_ratio()) << "); retry with a larger --epsilon\n";
    return kExitNumerical;
  } catch (const NumericalError& e) {
    err << "lambdacc: numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const std::exception& e) {
    err << "lambdacc: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace lambdacc::cli
