// Copyright 2026 The densecode authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include <doctest.h>

#include "qdc/sweep.hpp"
#include "test_helpers.hpp"

using qdc::SweepConfig;
using qdc::TheoremId;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(bool(in));
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

int run_cli(const std::string& args) {
  const std::string command = std::string(QDC_CLI_BINARY) + " " + args;
  const int status = std::system(command.c_str());
  REQUIRE(status != -1);
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST_CASE("sweep reports are identical across thread counts and reruns") {
  SweepConfig config;
  config.dims = {2, 2, 2};
  config.kind = SweepConfig::Kind::mixed;
  config.samples = 40;
  config.seed = 42;
  config.theorems = {TheoremId::T1, TheoremId::T3, TheoremId::C4};

  config.threads = 1;
  const std::string serial = qdc::report_to_json(qdc::run_sweep(config));
  config.threads = 4;
  const std::string parallel = qdc::report_to_json(qdc::run_sweep(config));
  CHECK(serial == parallel);
  const std::string again = qdc::report_to_json(qdc::run_sweep(config));
  CHECK(parallel == again);
}

TEST_CASE("sweep produces one verdict per sample per theorem, all holding") {
  SweepConfig config;
  config.dims = {2, 2, 2};
  config.samples = 25;
  config.seed = 7;
  config.theorems = {TheoremId::T1, TheoremId::T3};
  const auto report = qdc::run_sweep(config);
  CHECK(report.rows.size() == 50);
  CHECK(report.all_hold);
  REQUIRE(report.summary.size() == 2);
  for (const auto& [id, summary] : report.summary) {
    CHECK(summary.checked == 25);
    CHECK(summary.held == 25);
    CHECK(summary.min_slack >= -1e-8);
  }
  // Rows come out sample-major in configured theorem order.
  for (std::size_t k = 0; k < report.rows.size(); ++k) {
    CHECK(report.rows[k].sample == k / 2);
    CHECK(report.rows[k].verdict.theorem == (k % 2 == 0 ? TheoremId::T1 : TheoremId::T3));
  }
}

TEST_CASE("pure-kind sweeps run the pure-only checks") {
  SweepConfig config;
  config.dims = {2, 2, 2};
  config.kind = SweepConfig::Kind::pure;
  config.samples = 5;
  config.seed = 3;
  config.theorems = {TheoremId::C3, TheoremId::C5};
  const auto report = qdc::run_sweep(config);
  CHECK(report.all_hold);
}

TEST_CASE("sweep config validation") {
  SweepConfig config;
  config.dims = {2, 2};
  config.samples = 5;
  config.theorems = {TheoremId::T4};
  CHECK_THROWS_AS(qdc::validate_sweep_config(config), std::invalid_argument);

  config.dims = {2, 2, 2};
  config.kind = SweepConfig::Kind::mixed;
  config.theorems = {TheoremId::C3};
  CHECK_THROWS_AS(qdc::validate_sweep_config(config), std::invalid_argument);

  config.theorems = {TheoremId::C5};
  config.kind = SweepConfig::Kind::pure;
  config.dims = {2, 3, 2};
  CHECK_THROWS_AS(qdc::validate_sweep_config(config), std::invalid_argument);

  config.dims = {2, 2, 2};
  config.theorems = {};
  CHECK_THROWS_AS(qdc::validate_sweep_config(config), std::invalid_argument);

  config.theorems = {TheoremId::T1};
  config.samples = 0;
  CHECK_THROWS_AS(qdc::validate_sweep_config(config), std::invalid_argument);
}

TEST_CASE("csv report flattens the verdicts") {
  SweepConfig config;
  config.dims = {2, 2, 2};
  config.samples = 3;
  config.seed = 11;
  config.theorems = {TheoremId::T1};
  const auto report = qdc::run_sweep(config);
  const std::string csv = qdc::report_to_csv(report);
  std::istringstream lines(csv);
  std::string line;
  REQUIRE(std::getline(lines, line));
  CHECK(line == "theorem,sample,lhs,rhs,slack,holds,applicable");
  int rows = 0;
  while (std::getline(lines, line)) {
    ++rows;
    CHECK(line.rfind("T1,", 0) == 0);
    CHECK(line.find(",true,true") != std::string::npos);
  }
  CHECK(rows == 3);
}

TEST_CASE("json report carries the pinned schema") {
  SweepConfig config;
  config.dims = {2, 2, 2};
  config.samples = 2;
  config.seed = 9;
  config.theorems = {TheoremId::T1};
  const std::string json = qdc::report_to_json(qdc::run_sweep(config));
  for (const char* key : {"\"config\"", "\"dims\"", "\"kind\"", "\"samples\"", "\"seed\"",
                          "\"theorems\"", "\"verdicts\"", "\"theorem\"", "\"sample\"",
                          "\"lhs\"", "\"rhs\"", "\"slack\"", "\"holds\"", "\"applicable\"",
                          "\"summary\"", "\"per_theorem\"", "\"checked\"", "\"held\"",
                          "\"min_slack\""})
    CHECK(json.find(key) != std::string::npos);
}

TEST_CASE("cli eval on named states exits cleanly") {
  CHECK(run_cli("eval --state ghz --dims 2,2,2 > /dev/null 2>&1") == 0);
  CHECK(run_cli("eval --state bell_times_pure > /dev/null 2>&1") == 0);
  CHECK(run_cli("eval --state bell --theorems none > /dev/null 2>&1") == 0);
  CHECK(run_cli("eval --state w --order 2,0,1 > /dev/null 2>&1") == 0);
}

TEST_CASE("cli eval rejects invalid input with exit code 1") {
  const std::string bad_path = "qdc_cli_bad_state.json";
  {
    std::ofstream out(bad_path);
    out << R"({"dims": [2, 2], "form": "mixed", "data": [)";
    // Identity has trace 4, not 1.
    for (int i = 0; i < 16; ++i)
      out << ((i % 5 == 0) ? "[1,0]" : "[0,0]") << (i + 1 < 16 ? "," : "");
    out << "]}";
  }
  const std::string err_path = "qdc_cli_bad_state.err";
  CHECK(run_cli("eval --file " + bad_path + " 2> " + err_path + " > /dev/null") == 1);
  CHECK(slurp(err_path).find("trace invariant violated") != std::string::npos);
  std::remove(bad_path.c_str());
  std::remove(err_path.c_str());

  CHECK(run_cli("eval --state nope > /dev/null 2>&1") == 1);
  CHECK(run_cli("eval > /dev/null 2>&1") == 1);
  CHECK(run_cli("nonsense > /dev/null 2>&1") == 1);
}

TEST_CASE("cli sweep rejects incompatible theorem and dims") {
  CHECK(run_cli("sweep --dims 2,2 --theorems T4 --samples 2 > /dev/null 2>&1") == 1);
  CHECK(run_cli("sweep --dims 2,2 --samples 2 > /dev/null 2>&1") == 1);  // nothing applicable
}

TEST_CASE("cli pure-kind sweep covers the pure-only checks") {
  CHECK(run_cli("sweep --dims 2,2,2 --kind pure --samples 3 --seed 5 > /dev/null 2>&1") == 0);
}

TEST_CASE("cli sweep reports are byte-identical across thread counts") {
  const std::string f1 = "qdc_sweep_t1.json";
  const std::string f2 = "qdc_sweep_t2.json";
  const std::string base =
      "sweep --dims 2,2,2 --kind mixed --samples 20 --seed 42 --theorems T1,T3,C4 ";
  CHECK(run_cli(base + "--threads 1 --output " + f1 + " 2> /dev/null") == 0);
  CHECK(run_cli(base + "--threads 2 --output " + f2 + " 2> /dev/null") == 0);
  CHECK(slurp(f1) == slurp(f2));
  CHECK(slurp(f1).size() > 100);
  std::remove(f1.c_str());
  std::remove(f2.c_str());
}
