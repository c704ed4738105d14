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

#include "qdc/theorems.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "qdc/correlations.hpp"
#include "qdc/entropy.hpp"

namespace qdc {

namespace {

constexpr double kPremiseBoundaryBand = 1e-6;
constexpr double kDiscordBand = 2e-3;

void require_parties(const MultipartiteState& s, std::size_t n, const char* what) {
  if (s.parties() != n)
    throw std::invalid_argument(std::string(what) + " requires exactly " + std::to_string(n) +
                                " parties");
}

void require_pure(const MultipartiteState& s, const char* what) {
  if (!s.is_pure())
    throw std::invalid_argument(std::string(what) + " requires a pure global state");
}

bool all_qubits(const MultipartiteState& s) {
  for (std::size_t p = 0; p < s.parties(); ++p)
    if (s.dim(p) != 2) return false;
  return true;
}

TheoremVerdict base_verdict(TheoremId id, const MultipartiteState& s) {
  TheoremVerdict v;
  v.theorem = id;
  v.state_fingerprint = s.fingerprint();
  return v;
}

}  // namespace

std::string to_string(TheoremId id) {
  switch (id) {
    case TheoremId::T1: return "T1";
    case TheoremId::C1: return "C1";
    case TheoremId::T2: return "T2";
    case TheoremId::C2: return "C2";
    case TheoremId::NOISE: return "NOISE";
    case TheoremId::T3: return "T3";
    case TheoremId::C3: return "C3";
    case TheoremId::C4: return "C4";
    case TheoremId::C5: return "C5";
    case TheoremId::T4: return "T4";
  }
  return "?";
}

TheoremId theorem_from_string(const std::string& name) {
  for (TheoremId id : all_theorem_ids())
    if (to_string(id) == name) return id;
  throw std::invalid_argument("unknown theorem id: " + name);
}

const std::vector<TheoremId>& all_theorem_ids() {
  static const std::vector<TheoremId> ids = {
      TheoremId::T1, TheoremId::C1, TheoremId::T2, TheoremId::C2, TheoremId::NOISE,
      TheoremId::T3, TheoremId::C3, TheoremId::C4, TheoremId::C5, TheoremId::T4};
  return ids;
}

TheoremVerdict check_exclusion(const MultipartiteState& s) {
  require_parties(s, 3, "exclusion check");
  TheoremVerdict v = base_verdict(TheoremId::T1, s);
  const CapacityResult to_b = dc_capacity(s, {0}, 1);
  const CapacityResult to_c = dc_capacity(s, {0}, 2);
  v.lhs = to_b.quantum_part + to_c.quantum_part;
  v.rhs = 2.0 * std::log2(double(s.dim(0)));
  v.slack = v.rhs - v.lhs;
  v.advantage_count = int(to_b.advantage) + int(to_c.advantage);
  v.holds = v.slack >= -kVerdictTol && v.advantage_count <= 1;
  return v;
}

TheoremVerdict check_cor1(const MultipartiteState& s) {
  require_parties(s, 3, "capacity-sum bound");
  TheoremVerdict v = base_verdict(TheoremId::C1, s);
  v.lhs = dc_capacity(s, {0}, 1).full_capacity + dc_capacity(s, {0}, 2).full_capacity;
  v.rhs = 3.0 * std::log2(double(s.dim(0)));
  v.slack = v.rhs - v.lhs;
  v.holds = v.slack >= -kVerdictTol;
  return v;
}

TheoremVerdict check_t2(const MultipartiteState& s) {
  if (s.parties() < 3)
    throw std::invalid_argument("multi-receiver exclusion requires at least three parties");
  TheoremVerdict v = base_verdict(TheoremId::T2, s);
  int advantages = 0;
  double full_sum = 0.0;
  for (std::size_t receiver = 1; receiver < s.parties(); ++receiver) {
    const CapacityResult cap = dc_capacity(s, {0}, receiver);
    advantages += int(cap.advantage);
    full_sum += cap.full_capacity;
  }
  v.advantage_count = advantages;
  v.lhs = double(advantages);
  v.rhs = 1.0;
  v.slack = v.rhs - v.lhs;
  // The capacity-sum bound of check_cor2 rides along; it can only fail if
  // the advantage count already misbehaves.
  const double c2_bound = double(s.parties()) * std::log2(double(s.dim(0)));
  v.holds = advantages <= 1 && full_sum <= c2_bound + kVerdictTol;
  return v;
}

TheoremVerdict check_cor2(const MultipartiteState& s) {
  if (s.parties() < 3)
    throw std::invalid_argument("capacity-sum bound requires at least three parties");
  TheoremVerdict v = base_verdict(TheoremId::C2, s);
  double full_sum = 0.0;
  for (std::size_t receiver = 1; receiver < s.parties(); ++receiver)
    full_sum += dc_capacity(s, {0}, receiver).full_capacity;
  v.lhs = full_sum;
  v.rhs = double(s.parties()) * std::log2(double(s.dim(0)));
  v.slack = v.rhs - v.lhs;
  v.holds = v.slack >= -kVerdictTol;
  return v;
}

TheoremVerdict check_receiver_monogamy(const MultipartiteState& s) {
  require_parties(s, 3, "receiver monogamy");
  TheoremVerdict v = base_verdict(TheoremId::T3, s);
  v.lhs = dc_quantum_part(s, {1}, 0) + dc_quantum_part(s, {2}, 0);
  v.rhs = dc_quantum_part(s, {1, 2}, 0);
  v.slack = v.rhs - v.lhs;
  v.holds = v.slack >= -kVerdictTol;
  return v;
}

TheoremVerdict check_cor3(const MultipartiteState& s) {
  require_parties(s, 3, "maximal-entanglement condition");
  require_pure(s, "maximal-entanglement condition");
  TheoremVerdict v = base_verdict(TheoremId::C3, s);

  const double pair_sum = dc_quantum_part(s, {0}, 1) + dc_quantum_part(s, {0}, 2);
  const double joint = std::log2(double(s.dim(0))) + entropy(s, {1, 2}) - entropy(s);
  const double premise_slack = joint - pair_sum;
  v.applicable = premise_slack >= -kVerdictTol;
  v.premise_near_boundary = std::abs(premise_slack) <= kPremiseBoundaryBand;

  const double deficit = std::log2(double(s.dim(0))) - entropy(s, {0});
  v.lhs = deficit;
  v.rhs = 1e-6;  // allowed deviation from maximal entanglement
  v.slack = v.rhs - v.lhs;
  v.holds = !v.applicable || v.slack >= -kVerdictTol;
  return v;
}

TheoremVerdict check_cor4(const MultipartiteState& s) {
  require_parties(s, 3, "entropy-sum condition");
  TheoremVerdict v = base_verdict(TheoremId::C4, s);

  const double pair_sum = dc_quantum_part(s, {0}, 1) + dc_quantum_part(s, {0}, 2);
  const double joint = std::log2(double(s.dim(0))) + entropy(s, {1, 2}) - entropy(s);
  const double premise_slack = joint - pair_sum;
  v.applicable = premise_slack >= -kVerdictTol;
  v.premise_near_boundary = std::abs(premise_slack) <= kPremiseBoundaryBand;

  v.lhs = std::log2(double(s.dim(0))) - entropy(s, {0});
  v.rhs = entropy(s, {0}) + entropy(s, {1}) + entropy(s, {2}) - entropy(s);
  v.slack = v.rhs - v.lhs;
  v.holds = !v.applicable || v.slack >= -kVerdictTol;
  return v;
}

TheoremVerdict check_cor5(const MultipartiteState& s) {
  require_parties(s, 3, "discord lower bound");
  if (!all_qubits(s))
    throw std::invalid_argument("discord lower bound requires qubit parties");
  require_pure(s, "discord lower bound");
  TheoremVerdict v = base_verdict(TheoremId::C5, s);

  const double cap_sum = dc_quantum_part(s, {0}, 1) + dc_quantum_part(s, {0}, 2);
  const double d_ab = discord(s.reduce({0, 1}), 1).value;
  const double d_ac = discord(s.reduce({0, 2}), 1).value;
  const double e_ab = eof_two_qubit(s.reduce({0, 1})).eof;
  const double e_ac = eof_two_qubit(s.reduce({0, 2})).eof;

  v.lhs = d_ab + d_ac;
  v.rhs = cap_sum;
  v.slack = v.rhs - v.lhs;
  v.holds = v.slack >= -kDiscordBand && std::abs((d_ab + d_ac) - (e_ab + e_ac)) <= kDiscordBand;
  return v;
}

TheoremVerdict check_multiport_monogamy(const MultipartiteState& s) {
  const std::size_t n = s.parties();
  if (n < 3)
    throw std::invalid_argument("multi-port monogamy requires at least three parties");
  TheoremVerdict v = base_verdict(TheoremId::T4, s);

  double quantum_sum = 0.0;
  double dim_log_sum = 0.0;
  int advantages = 0;
  for (const PortGroup& group : cyclic_groups(n)) {
    const CapacityResult cap = dc_capacity(s, group.senders, group.receiver);
    quantum_sum += cap.quantum_part;
    advantages += int(cap.advantage);
  }
  for (std::size_t p = 0; p < n; ++p) dim_log_sum += std::log2(double(s.dim(p)));

  v.lhs = quantum_sum;
  v.rhs = double(n - 2) * dim_log_sum;
  v.slack = v.rhs - v.lhs;
  v.advantage_count = advantages;
  v.holds = v.slack >= -kVerdictTol && advantages <= int(n) - 1;
  return v;
}

TheoremVerdict check_noise_monotonicity(const MultipartiteState& s,
                                        const std::vector<double>& p_grid) {
  require_parties(s, 3, "noise monotonicity");
  if (p_grid.empty()) throw std::invalid_argument("noise grid must be nonempty");
  for (std::size_t i = 0; i < p_grid.size(); ++i) {
    if (p_grid[i] < 0.0 || p_grid[i] > 1.0)
      throw std::invalid_argument("noise grid values must lie in [0, 1]");
    if (i > 0 && p_grid[i] < p_grid[i - 1])
      throw std::invalid_argument("noise grid must be ascending");
  }

  TheoremVerdict v = base_verdict(TheoremId::NOISE, s);
  // Capacity increments must stay below the eigensolver-noise allowance.
  constexpr double kMonotonicTol = 1e-9;

  double min_exclusion_slack = std::numeric_limits<double>::infinity();
  double max_increase = 0.0;
  bool exclusion_ok = true;
  double prev_b = 0.0, prev_c = 0.0;
  for (std::size_t i = 0; i < p_grid.size(); ++i) {
    const MultipartiteState noisy = depolarize_party(s, 0, p_grid[i]);
    const TheoremVerdict excl = check_exclusion(noisy);
    exclusion_ok = exclusion_ok && excl.holds;
    min_exclusion_slack = std::min(min_exclusion_slack, excl.slack);
    const double to_b = dc_quantum_part(noisy, {0}, 1);
    const double to_c = dc_quantum_part(noisy, {0}, 2);
    if (i > 0) {
      max_increase = std::max({max_increase, to_b - prev_b, to_c - prev_c});
    }
    prev_b = to_b;
    prev_c = to_c;
  }

  v.lhs = max_increase;
  v.rhs = 0.0;
  v.slack = std::min(-max_increase, min_exclusion_slack);
  v.holds = exclusion_ok && max_increase <= kMonotonicTol;
  return v;
}

TheoremVerdict run_check(TheoremId id, const MultipartiteState& s) {
  switch (id) {
    case TheoremId::T1: return check_exclusion(s);
    case TheoremId::C1: return check_cor1(s);
    case TheoremId::T2: return check_t2(s);
    case TheoremId::C2: return check_cor2(s);
    case TheoremId::NOISE: return check_noise_monotonicity(s, kDefaultNoiseGrid);
    case TheoremId::T3: return check_receiver_monogamy(s);
    case TheoremId::C3: return check_cor3(s);
    case TheoremId::C4: return check_cor4(s);
    case TheoremId::C5: return check_cor5(s);
    case TheoremId::T4: return check_multiport_monogamy(s);
  }
  throw std::invalid_argument("unknown theorem id");
}

bool check_applicable_to(TheoremId id, std::size_t parties, bool pure, bool qubits) {
  switch (id) {
    case TheoremId::T1:
    case TheoremId::C1:
    case TheoremId::T3:
    case TheoremId::C4:
    case TheoremId::NOISE:
      return parties == 3;
    case TheoremId::C3:
      return parties == 3 && pure;
    case TheoremId::C5:
      return parties == 3 && pure && qubits;
    case TheoremId::T2:
    case TheoremId::C2:
    case TheoremId::T4:
      return parties >= 3;
  }
  return false;
}

}  // namespace qdc
