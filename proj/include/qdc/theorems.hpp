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

#ifndef QDC_THEOREMS_HPP_
#define QDC_THEOREMS_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "qdc/capacity.hpp"

namespace qdc {

// Verdict tolerance: two entropy evaluations each carry <= 1e-9 of
// eigensolver error, so an inequality is accepted with this much slack.
inline constexpr double kVerdictTol = 1e-8;

enum class TheoremId { T1, C1, T2, C2, NOISE, T3, C3, C4, C5, T4 };

std::string to_string(TheoremId id);
TheoremId theorem_from_string(const std::string& name);
const std::vector<TheoremId>& all_theorem_ids();

struct TheoremVerdict {
  TheoremId theorem = TheoremId::T1;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;  // rhs - lhs
  bool holds = false;
  bool applicable = true;  // conditional corollaries may be vacuous
  // Premise landed within 1e-6 of the applicability threshold (C3/C4 only);
  // flags sweeps where the conditional classification is noise-sensitive.
  bool premise_near_boundary = false;
  // Number of sender(-group)s with a strict quantum advantage; -1 when the
  // check does not count advantages.
  int advantage_count = -1;
  std::uint64_t state_fingerprint = 0;
};

// T1: with party 0 as the sender, the quantum parts of the capacities to
// parties 1 and 2 sum to at most 2 log2 d_0, and at most one channel has a
// strict advantage.
TheoremVerdict check_exclusion(const MultipartiteState& s);

// C1: full capacities sum to at most 3 log2 d_0.
TheoremVerdict check_cor1(const MultipartiteState& s);

// T2: across all pairs (party 0, party i), at most one reduced state has a
// quantum advantage. The C2 capacity-sum bound is asserted as well.
TheoremVerdict check_t2(const MultipartiteState& s);

// C2: sum over receivers i of the full capacity 0 -> i is at most
// (party count) * log2 d_0.
TheoremVerdict check_cor2(const MultipartiteState& s);

// T3: with party 0 receiving, C_{1->0} + C_{2->0} <= C_{12->0}.
TheoremVerdict check_receiver_monogamy(const MultipartiteState& s);

// C3 (pure states): if C_{0->1} + C_{0->2} <= C_{0->12} then party 0 is
// maximally entangled with the rest; lhs/rhs report the entanglement
// deficit log2 d_0 - S(rho_0) against its 1e-6 allowance.
TheoremVerdict check_cor3(const MultipartiteState& s);

// C4: if C_{0->1} + C_{0->2} <= C_{0->12} then
// log2 d_0 - S(rho_0) <= S(rho_0) + S(rho_1) + S(rho_2) - S(rho_012).
TheoremVerdict check_cor4(const MultipartiteState& s);

// C5 (pure three-qubit states): D_01 + D_02 <= C_{0->1} + C_{0->2}, and
// the discord sum equals the entanglement-of-formation sum. Discord is
// optimizer-bounded, so both comparisons use a 2e-3 band.
TheoremVerdict check_cor5(const MultipartiteState& s);

// T4: the quantum parts over the n cyclic sender groups sum to at most
// (n-2) * sum_j log2 d_j, with at most n-1 groups in advantage.
TheoremVerdict check_multiport_monogamy(const MultipartiteState& s);

// Depolarizing noise on the sender: the exclusion check must hold at every
// strength in the grid and both quantum parts must be non-increasing.
TheoremVerdict check_noise_monotonicity(const MultipartiteState& s,
                                        const std::vector<double>& p_grid);

inline const std::vector<double> kDefaultNoiseGrid = {0.0, 0.25, 0.5, 0.75, 1.0};

// Dispatcher used by the sweep engine and the CLI; NOISE runs on the
// default grid.
TheoremVerdict run_check(TheoremId id, const MultipartiteState& s);

// Party-count / purity / dimension requirements of one check.
bool check_applicable_to(TheoremId id, std::size_t parties, bool pure, bool all_qubits);

}  // namespace qdc

#endif  // QDC_THEOREMS_HPP_
