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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "lambdacc/cli.hpp"

namespace lambdacc {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct Outcome {
  int code = 0;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "lambdacc");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  Outcome o;
  o.code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  o.out = out.str();
  o.err = err.str();
  return o;
}

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() /
            ("lambdacc_cli_test_" + std::to_string(reinterpret_cast<std::uintptr_t>(this)) +
             "_" + std::to_string(counter_++));
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ignored;
    fs::remove_all(path_, ignored);
  }
  std::string write(const std::string& name, const std::string& content) const {
    const fs::path p = path_ / name;
    std::ofstream(p) << content;
    return p.string();
  }
  fs::path path() const { return path_; }

 private:
  static inline int counter_ = 0;
  fs::path path_;
};

std::string read_file(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

TEST_CASE("stats reports counts as JSON and CSV") {
  TempDir dir;
  const std::string k3 = dir.write("k3.txt", "0 1\n1 2\n0 2\n");
  Outcome o = run({"stats", k3});
  REQUIRE(o.code == cli::kExitOk);
  json j = json::parse(o.out);
  CHECK(j["schema_version"] == 1);
  CHECK(j["command"] == "stats");
  CHECK(j["n"] == 3);
  CHECK(j["m"] == 3);
  CHECK(j["wedges"] == 0);
  CHECK(j["triangles"] == 1);
  CHECK(j["canonical_constraints"] == 3);
  CHECK_FALSE(j.contains("timing_ms"));

  Outcome csv = run({"stats", k3, "--output-format", "csv"});
  CHECK(csv.out.rfind("# lambdacc stats schema 1\n", 0) == 0);
  CHECK(csv.out.find("3,3,0,1,3,3\n") != std::string::npos);
}

TEST_CASE("constraints writes one row per graph") {
  TempDir dir;
  const std::string k3 = dir.write("k3.txt", "0 1\n1 2\n0 2\n");
  const std::string path = dir.write("path.txt", "0 1\n1 2\n");
  Outcome o = run({"constraints", k3, path});
  REQUIRE(o.code == cli::kExitOk);
  CHECK(o.out.find("k3,3,3,0,3,3\n") != std::string::npos);
  CHECK(o.out.find("path,3,2,1,1,3\n") != std::string::npos);

  Outcome missing = run({"constraints", k3, (dir.path() / "nope.txt").string()});
  CHECK(missing.code == cli::kExitInput);
  CHECK(missing.out.find("k3,3,3,0,3,3\n") != std::string::npos);
  CHECK_FALSE(missing.err.empty());
}

TEST_CASE("label on the star") {
  TempDir dir;
  const std::string star = dir.write("star.txt", "0 1\n0 2\n0 3\n");
  Outcome o = run({"label", star, "--lambda", "0.5"});
  REQUIRE(o.code == cli::kExitOk);
  json r = json::parse(o.out)["results"][0];
  CHECK(r["weak"].size() == 2);
  CHECK(r["miss"].size() == 1);
  CHECK(r["objective"].get<double>() == doctest::Approx(1.5));
  CHECK(r["lower_bound"].get<double>() == doctest::Approx(0.5));
  CHECK(r["regime"] == "minstc+");
}

TEST_CASE("cluster reports ratios against the dual bound") {
  TempDir dir;
  const std::string path = dir.write("path.txt", "0 1\n1 2\n");
  Outcome o = run({"cluster", path, "--alg", "cfp", "--lambda", "0.6", "--seeds", "5"});
  REQUIRE(o.code == cli::kExitOk);
  json j = json::parse(o.out);
  CHECK(j["runs"].size() == 5);
  json a = j["aggregates"][0];
  CHECK(a["objective"]["mean"].get<double>() == doctest::Approx(0.8));
  CHECK(a["lower_bound"].get<double>() == doctest::Approx(0.4));
  CHECK(a["lb_provenance"] == "dual_certificate");
  CHECK(a["best_ratio"].get<double>() == doctest::Approx(2.0));
  CHECK(a["labeling_cost"].get<double>() == doctest::Approx(0.8));
}

TEST_CASE("cluster output is byte-identical for identical configs") {
  TempDir dir;
  std::ostringstream edges;
  for (int i = 0; i < 30; ++i) edges << i << ' ' << (i * 7 + 3) % 30 << '\n' << i << ' ' << (i + 1) % 30 << '\n';
  const std::string g = dir.write("g.txt", edges.str());
  for (const char* alg : {"cfp", "pivot", "lp-round", "lp3-round", "louvain"}) {
    Outcome a = run({"cluster", g, "--alg", alg, "--lambda", "0.55,0.8", "--seeds", "3"});
    Outcome b = run({"cluster", g, "--alg", alg, "--lambda", "0.55,0.8", "--seeds", "3"});
    CHECK(a.code == cli::kExitOk);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("lp-solve and certify") {
  TempDir dir;
  const std::string star = dir.write("star.txt", "0 1\n0 2\n0 3\n");
  Outcome exact = run({"lp-solve", star, "--lambda", "0.5", "--method", "exact"});
  REQUIRE(exact.code == cli::kExitOk);
  json r = json::parse(exact.out)["results"][0];
  CHECK(r["objective"].get<double>() == doctest::Approx(0.75));
  CHECK(r["orientation"] == "labeling");

  Outcome mwu = run({"lp-solve", star, "--lambda", "0.5", "--method", "mwu", "--epsilon", "0.01"});
  REQUIRE(mwu.code == cli::kExitOk);
  CHECK(json::parse(mwu.out)["results"][0]["objective"].get<double>() <= 0.75 * 1.01 + 1e-12);

  const std::string path = dir.write("path.txt", "0 1\n1 2\n");
  Outcome cert = run({"certify", path, "--lambda", "0.6"});
  REQUIRE(cert.code == cli::kExitOk);
  json c = json::parse(cert.out)["results"][0];
  CHECK(c["lp_value"].get<double>() == doctest::Approx(0.4));
  CHECK(c["certified"] == true);
  CHECK(c["canonical_optimum"] == true);

  const std::string dump = (dir.path() / "inst.txt").string();
  CHECK(run({"lp-solve", star, "--lambda", "0.5", "--dump-instance", dump}).code == 0);
  CHECK(read_file(dump).rfind("p covering 6 3", 0) == 0);
}

TEST_CASE("exact reports all three optima") {
  TempDir dir;
  const std::string star = dir.write("star.txt", "0 1\n0 2\n0 3\n");
  Outcome o = run({"exact", star, "--lambda", "0.5"});
  REQUIRE(o.code == cli::kExitOk);
  json r = json::parse(o.out)["results"][0];
  CHECK(r["cc"]["optimum"].get<double>() == doctest::Approx(1.0));
  CHECK(r["stc"]["objective"].get<double>() == doctest::Approx(1.0));
  CHECK(r["canonical_lp"]["optimum"].get<double>() == doctest::Approx(0.75));
}

TEST_CASE("exit codes") {
  TempDir dir;
  const std::string path = dir.write("path.txt", "0 1\n1 2\n");
  const std::string bad = dir.write("bad.txt", "0 1\n1 x\n");
  CHECK(run({}).code == cli::kExitUsage);
  CHECK(run({"frobnicate"}).code == cli::kExitUsage);
  CHECK(run({"cluster", path, "--lambda", "1.5"}).code == cli::kExitUsage);
  CHECK(run({"cluster", path, "--lambda", "0.4", "--alg", "lp3-round"}).code == cli::kExitUsage);
  CHECK(run({"cluster", path, "--lambda", "0.4", "--alg", "cfp"}).code == cli::kExitUsage);
  CHECK(run({"cluster", path, "--lambda", "0.4", "--alg", "cfp", "--force"}).code ==
        cli::kExitOk);
  CHECK(run({"lp-solve", path, "--lambda", "0.5", "--epsilon", "0"}).code == cli::kExitUsage);
  CHECK(run({"stats", bad}).code == cli::kExitInput);
  CHECK(run({"stats", (dir.path() / "missing.txt").string()}).code == cli::kExitInput);

  std::ostringstream big;
  for (int i = 1; i < 14; ++i) big << 0 << ' ' << i << '\n';
  const std::string star13 = dir.write("star13.txt", big.str());
  CHECK(run({"exact", star13, "--lambda", "0.5"}).code == cli::kExitSize);
}

TEST_CASE("output files are written atomically and honour the output directory") {
  TempDir dir;
  const std::string path = dir.write("path.txt", "0 1\n1 2\n");
  const fs::path target = dir.path() / "report.json";
  Outcome o = run({"stats", path, "-o", target.string()});
  REQUIRE(o.code == cli::kExitOk);
  CHECK(o.out.empty());
  CHECK(fs::exists(target));
  CHECK_FALSE(fs::exists(dir.path() / "report.json.partial"));
  CHECK(json::parse(read_file(target))["m"] == 2);

  ::setenv(cli::kOutputDirEnv, dir.path().c_str(), 1);
  Outcome rel = run({"stats", path, "-o", "relative.json", "--timing"});
  ::unsetenv(cli::kOutputDirEnv);
  REQUIRE(rel.code == cli::kExitOk);
  CHECK(fs::exists(dir.path() / "relative.json"));

  Outcome timed = run({"label", path, "--lambda", "0.6", "--timing"});
  CHECK(json::parse(timed.out).contains("timing_ms"));
  CHECK(timed.err.find("phase ") != std::string::npos);
}

TEST_CASE("cluster writes the best assignment") {
  TempDir dir;
  const std::string path = dir.write("path.txt", "10 11\n11 12\n");
  const fs::path assignment = dir.path() / "assign.txt";
  Outcome o = run({"cluster", path, "--alg", "louvain", "--lambda", "0.3", "--assignment",
                   assignment.string()});
  REQUIRE(o.code == cli::kExitOk);
  std::string text = read_file(assignment);
  CHECK(text.find("10 ") != std::string::npos);
  CHECK(text.find("12 ") != std::string::npos);
}

}  // namespace
}  // namespace lambdacc
