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
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qdc/capacity.hpp"
#include "qdc/entropy.hpp"
#include "qdc/state_io.hpp"
#include "qdc/sweep.hpp"
#include "qdc/theorems.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitVerdictFailure = 2;

std::string fmt(double value) {
  if (value == 0.0) return "0";
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.12g", value);
  return buffer;
}

std::string join_indices(const std::vector<std::size_t>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(xs[i]);
  }
  return out;
}

struct EvalOptions {
  std::string state_name;
  std::string file_path;
  std::vector<std::size_t> dims;
  std::vector<std::size_t> order;
  std::vector<std::string> theorems{"auto"};
};

struct SweepOptions {
  std::vector<std::size_t> dims;
  std::string kind = "mixed";
  std::size_t samples = 1000;
  std::uint64_t seed = 1;
  std::vector<std::string> theorems{"auto"};
  std::string output_path;
  std::string format = "json";
  std::size_t threads = 0;
};

qdc::MultipartiteState resolve_state(const EvalOptions& opt) {
  if (!opt.file_path.empty()) {
    if (!opt.state_name.empty())
      throw std::invalid_argument("--state and --file are mutually exclusive");
    return qdc::load_state_file(opt.file_path);
  }
  if (opt.state_name.empty())
    throw std::invalid_argument("one of --state or --file is required");
  const qdc::NamedState name = qdc::named_state_from_string(opt.state_name);
  std::vector<std::size_t> dims = opt.dims;
  if (dims.empty()) dims = name == qdc::NamedState::bell ? std::vector<std::size_t>{2, 2}
                                                         : std::vector<std::size_t>{2, 2, 2};
  return qdc::named_state(name, qdc::DimensionProfile(dims));
}

std::vector<qdc::TheoremId> resolve_theorems(const std::vector<std::string>& requested,
                                             const qdc::MultipartiteState& s) {
  const bool pure = s.is_pure();
  bool qubits = true;
  for (std::size_t p = 0; p < s.parties(); ++p) qubits = qubits && s.dim(p) == 2;

  std::vector<qdc::TheoremId> ids;
  if (requested.size() == 1 && requested[0] == "none") return ids;
  if (requested.size() == 1 && requested[0] == "auto") {
    for (qdc::TheoremId id : qdc::all_theorem_ids())
      if (qdc::check_applicable_to(id, s.parties(), pure, qubits)) ids.push_back(id);
    return ids;
  }
  for (const std::string& name : requested) {
    const qdc::TheoremId id = qdc::theorem_from_string(name);
    if (!qdc::check_applicable_to(id, s.parties(), pure, qubits))
      throw std::invalid_argument("theorem " + name + " is not applicable to this state");
    ids.push_back(id);
  }
  return ids;
}

int run_eval(const EvalOptions& opt) {
  qdc::MultipartiteState state = resolve_state(opt);
  if (!opt.order.empty()) state = state.permuted(opt.order);

  const std::size_t n = state.parties();
  std::cout << "dims: [" << join_indices(state.profile().dims()) << "]"
            << "  purity: " << fmt(state.purity())
            << "  fingerprint: " << std::hex << state.fingerprint() << std::dec << "\n";

  std::cout << "party entropies (bits):\n";
  for (std::size_t p = 0; p < n; ++p)
    std::cout << "  S(" << p << ") = " << fmt(qdc::entropy(state, {p})) << "\n";

  std::cout << "pairwise capacities (sender -> receiver):\n";
  for (std::size_t sender = 0; sender < n; ++sender) {
    for (std::size_t receiver = 0; receiver < n; ++receiver) {
      if (sender == receiver) continue;
      const qdc::CapacityResult cap = qdc::dc_capacity(state, {sender}, receiver);
      std::cout << "  " << sender << " -> " << receiver << ": quantum " << fmt(cap.quantum_part)
                << ", floor " << fmt(cap.classical_floor) << ", capacity "
                << fmt(cap.full_capacity) << (cap.advantage ? ", advantage" : "") << "\n";
    }
  }

  if (n >= 3) {
    std::cout << "multi-port capacities (cyclic sender groups):\n";
    for (const qdc::PortGroup& group : qdc::cyclic_groups(n)) {
      const qdc::CapacityResult cap = qdc::dc_capacity(state, group.senders, group.receiver);
      std::cout << "  {" << join_indices(group.senders) << "} -> " << group.receiver
                << ": quantum " << fmt(cap.quantum_part) << ", floor "
                << fmt(cap.classical_floor) << ", capacity " << fmt(cap.full_capacity)
                << (cap.advantage ? ", advantage" : "") << "\n";
    }
  }

  const std::vector<qdc::TheoremId> ids = resolve_theorems(opt.theorems, state);
  bool all_hold = true;
  if (!ids.empty()) {
    std::cout << "theorem verdicts:\n";
    for (qdc::TheoremId id : ids) {
      const qdc::TheoremVerdict v = qdc::run_check(id, state);
      all_hold = all_hold && v.holds;
      std::cout << "  " << qdc::to_string(id) << ": lhs " << fmt(v.lhs) << ", rhs " << fmt(v.rhs)
                << ", slack " << fmt(v.slack) << ", holds " << (v.holds ? "yes" : "NO")
                << (v.applicable ? "" : " (not applicable)") << "\n";
    }
  }
  return all_hold ? kExitOk : kExitVerdictFailure;
}

int run_sweep_cmd(const SweepOptions& opt) {
  qdc::SweepConfig config;
  config.dims = opt.dims;
  if (opt.kind == "pure")
    config.kind = qdc::SweepConfig::Kind::pure;
  else if (opt.kind == "mixed")
    config.kind = qdc::SweepConfig::Kind::mixed;
  else
    throw std::invalid_argument("--kind must be pure or mixed");
  config.samples = opt.samples;
  config.seed = opt.seed;
  config.threads = opt.threads;

  if (opt.theorems.size() == 1 && opt.theorems[0] == "auto") {
    const qdc::DimensionProfile profile(opt.dims);
    bool qubits = true;
    for (std::size_t d : opt.dims) qubits = qubits && d == 2;
    for (qdc::TheoremId id : qdc::all_theorem_ids())
      if (qdc::check_applicable_to(id, profile.parties(),
                                   config.kind == qdc::SweepConfig::Kind::pure, qubits))
        config.theorems.push_back(id);
    if (config.theorems.empty())
      throw std::invalid_argument(
          "no checks are applicable to these dimensions; sweeps need at least three parties");
  } else {
    for (const std::string& name : opt.theorems)
      config.theorems.push_back(qdc::theorem_from_string(name));
  }

  if (opt.format != "csv" && opt.format != "json")
    throw std::invalid_argument("--format must be json or csv");
  const qdc::SweepReport report = qdc::run_sweep(config);
  const std::string rendered =
      opt.format == "csv" ? qdc::report_to_csv(report) : qdc::report_to_json(report);

  if (opt.output_path.empty()) {
    std::cout << rendered;
  } else {
    std::ofstream out(opt.output_path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output file: " + opt.output_path);
    out << rendered;
  }

  for (const auto& [id, summary] : report.summary)
    std::cerr << qdc::to_string(id) << ": checked " << summary.checked << ", held "
              << summary.held << ", min slack " << fmt(summary.min_slack) << "\n";
  return report.all_hold ? kExitOk : kExitVerdictFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dense coding capacities and monogamy checks for multipartite quantum states"};
  app.require_subcommand(1);

  EvalOptions eval_opt;
  CLI::App* eval = app.add_subcommand("eval", "capacities and verdicts for one state");
  eval->add_option("--state", eval_opt.state_name,
                   "named state: ghz, w, bell, product_zero, bell_times_pure");
  eval->add_option("--file", eval_opt.file_path, "JSON state file");
  eval->add_option("--dims", eval_opt.dims, "local dimensions, e.g. 2,2,2")->delimiter(',');
  eval->add_option("--order", eval_opt.order, "relabel parties: output slot i takes input party order[i]")
      ->delimiter(',');
  eval->add_option("--theorems", eval_opt.theorems, "checks to run: auto, none, or ids like T1,C4")
      ->delimiter(',');

  SweepOptions sweep_opt;
  CLI::App* sweep = app.add_subcommand("sweep", "seeded random-state sweep of theorem checks");
  sweep->add_option("--dims", sweep_opt.dims, "local dimensions, e.g. 2,2,2")
      ->delimiter(',')
      ->required();
  sweep->add_option("--kind", sweep_opt.kind, "pure or mixed (default mixed)");
  sweep->add_option("--samples", sweep_opt.samples, "number of sampled states (default 1000)");
  sweep->add_option("--seed", sweep_opt.seed, "master seed (default 1)");
  sweep->add_option("--theorems", sweep_opt.theorems, "checks to run: auto or ids like T1,T3,C4")
      ->delimiter(',');
  sweep->add_option("--output", sweep_opt.output_path, "report file (default stdout)");
  sweep->add_option("--format", sweep_opt.format, "json or csv (default json)");
  sweep->add_option("--threads", sweep_opt.threads,
                    "worker threads (default QDC_THREADS or hardware)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (eval->parsed()) return run_eval(eval_opt);
    return run_sweep_cmd(sweep_opt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}
