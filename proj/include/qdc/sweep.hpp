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

#ifndef QDC_SWEEP_HPP_
#define QDC_SWEEP_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qdc/theorems.hpp"

namespace qdc {

struct SweepConfig {
  std::vector<std::size_t> dims;
  enum class Kind { pure, mixed } kind = Kind::mixed;
  std::size_t samples = 1;
  std::uint64_t seed = 0;
  std::vector<TheoremId> theorems;
  // 0 = QDC_THREADS env var, falling back to hardware concurrency. The
  // worker count never changes the report bytes.
  std::size_t threads = 0;
};

// Throws std::invalid_argument when a requested theorem cannot run on the
// configured dimensions/kind (e.g. T4 on two parties, C3 on mixed samples).
void validate_sweep_config(const SweepConfig& config);

struct SweepRow {
  std::size_t sample = 0;
  TheoremVerdict verdict;
};

struct TheoremSummary {
  std::size_t checked = 0;
  std::size_t held = 0;
  double min_slack = 0.0;
};

struct SweepReport {
  SweepConfig config;
  std::vector<SweepRow> rows;  // sample-major, theorem order as configured
  std::vector<std::pair<TheoremId, TheoremSummary>> summary;
  bool all_hold = true;
};

// Deterministic seeded sweep: sample k draws from the stream seed
// (master, k), so scheduling and worker count cannot change any verdict.
SweepReport run_sweep(const SweepConfig& config);

std::string report_to_json(const SweepReport& report);
std::string report_to_csv(const SweepReport& report);

std::size_t default_thread_count();

}  // namespace qdc

#endif  // QDC_SWEEP_HPP_
