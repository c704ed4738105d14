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

#include "qdc/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <thread>

#include <json.hpp>

namespace qdc {

namespace {

bool dims_all_qubits(const std::vector<std::size_t>& dims) {
  for (std::size_t d : dims)
    if (d != 2) return false;
  return true;
}

std::string format_double(double value) {
  if (value == 0.0) return "0";
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.12g", value);
  return buffer;
}

}  // namespace

void validate_sweep_config(const SweepConfig& config) {
  const DimensionProfile profile(config.dims);  // validates dims >= 2
  if (config.samples < 1) throw std::invalid_argument("sweep needs at least one sample");
  if (config.theorems.empty()) throw std::invalid_argument("sweep needs at least one theorem");
  const bool pure = config.kind == SweepConfig::Kind::pure;
  for (TheoremId id : config.theorems) {
    if (!check_applicable_to(id, profile.parties(), pure, dims_all_qubits(config.dims)))
      throw std::invalid_argument("theorem " + to_string(id) +
                                  " is not applicable to the configured dimensions/kind");
  }
}

std::size_t default_thread_count() {
  if (const char* env = std::getenv("QDC_THREADS")) {
    const long parsed = std::strtol(env, nullptr, 10);
    if (parsed >= 1) return static_cast<std::size_t>(parsed);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

SweepReport run_sweep(const SweepConfig& config) {
  validate_sweep_config(config);
  const DimensionProfile profile(config.dims);
  const std::size_t theorem_count = config.theorems.size();

  SweepReport report;
  report.config = config;
  report.rows.resize(config.samples * theorem_count);

  const RandomSpec::Kind kind = config.kind == SweepConfig::Kind::pure
                                    ? RandomSpec::Kind::haar_pure
                                    : RandomSpec::Kind::induced_mixed;

  const std::size_t workers =
      std::min(config.threads == 0 ? default_thread_count() : config.threads, config.samples);
  std::atomic<std::size_t> next_sample{0};
  std::vector<std::thread> pool;
  auto worker = [&]() {
    for (;;) {
      const std::size_t k = next_sample.fetch_add(1);
      if (k >= config.samples) return;
      const RandomSpec local{profile, kind, 0, stream_seed(config.seed, k)};
      const MultipartiteState state = sample(local);
      for (std::size_t t = 0; t < theorem_count; ++t) {
        SweepRow& row = report.rows[k * theorem_count + t];
        row.sample = k;
        row.verdict = run_check(config.theorems[t], state);
      }
    }
  };
  if (workers <= 1) {
    worker();
  } else {
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (std::thread& th : pool) th.join();
  }

  for (TheoremId id : config.theorems) {
    TheoremSummary summary;
    summary.min_slack = std::numeric_limits<double>::infinity();
    for (const SweepRow& row : report.rows) {
      if (row.verdict.theorem != id) continue;
      ++summary.checked;
      if (row.verdict.holds) ++summary.held;
      summary.min_slack = std::min(summary.min_slack, row.verdict.slack);
      report.all_hold = report.all_hold && row.verdict.holds;
    }
    report.summary.emplace_back(id, summary);
  }
  return report;
}

std::string report_to_json(const SweepReport& report) {
  nlohmann::ordered_json doc;

  nlohmann::ordered_json config;
  config["dims"] = report.config.dims;
  config["kind"] = report.config.kind == SweepConfig::Kind::pure ? "pure" : "mixed";
  config["samples"] = report.config.samples;
  config["seed"] = report.config.seed;
  nlohmann::ordered_json names = nlohmann::ordered_json::array();
  for (TheoremId id : report.config.theorems) names.push_back(to_string(id));
  config["theorems"] = std::move(names);
  doc["config"] = std::move(config);

  nlohmann::ordered_json verdicts = nlohmann::ordered_json::array();
  for (const SweepRow& row : report.rows) {
    nlohmann::ordered_json v;
    v["theorem"] = to_string(row.verdict.theorem);
    v["sample"] = row.sample;
    v["lhs"] = row.verdict.lhs;
    v["rhs"] = row.verdict.rhs;
    v["slack"] = row.verdict.slack;
    v["holds"] = row.verdict.holds;
    v["applicable"] = row.verdict.applicable;
    verdicts.push_back(std::move(v));
  }
  doc["verdicts"] = std::move(verdicts);

  nlohmann::ordered_json per_theorem;
  for (const auto& [id, summary] : report.summary) {
    nlohmann::ordered_json s;
    s["checked"] = summary.checked;
    s["held"] = summary.held;
    s["min_slack"] = summary.min_slack;
    per_theorem[to_string(id)] = std::move(s);
  }
  doc["summary"] = nlohmann::ordered_json{{"per_theorem", std::move(per_theorem)}};

  return doc.dump(2) + "\n";
}

std::string report_to_csv(const SweepReport& report) {
  std::string out = "theorem,sample,lhs,rhs,slack,holds,applicable\n";
  for (const SweepRow& row : report.rows) {
    out += to_string(row.verdict.theorem);
    out += ',';
    out += std::to_string(row.sample);
    out += ',';
    out += format_double(row.verdict.lhs);
    out += ',';
    out += format_double(row.verdict.rhs);
    out += ',';
    out += format_double(row.verdict.slack);
    out += ',';
    out += row.verdict.holds ? "true" : "false";
    out += ',';
    out += row.verdict.applicable ? "true" : "false";
    out += '\n';
  }
  return out;
}

}  // namespace qdc
