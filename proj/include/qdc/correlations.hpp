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

#ifndef QDC_CORRELATIONS_HPP_
#define QDC_CORRELATIONS_HPP_

#include "qdc/states.hpp"

namespace qdc {

// Wootters concurrence of a two-qubit state:
// max(0, l1 - l2 - l3 - l4), li the decreasing square roots of the
// eigenvalues of rho (sy x sy) rho* (sy x sy).
double concurrence(const MultipartiteState& s);

struct EofResult {
  double concurrence = 0.0;
  double eof = 0.0;  // bits; h((1 + sqrt(1 - C^2)) / 2) by construction
};

EofResult eof_two_qubit(const MultipartiteState& s);

struct DiscordResult {
  double value = 0.0;  // bits; an upper bound on the true discord
  double theta = 0.0;  // best measurement axis (Bloch polar angle)
  double phi = 0.0;    // best measurement axis (Bloch azimuth)
  int starts_used = 0;
  bool converged = false;
};

/**
 * @brief Quantum discord of a bipartite state with a projective measurement
 *        on one qubit party.
 *
 * D = I(X:Y) - max over rank-1 projective measurements on Y of
 *     [S(rho_X) - sum_m q_m S(rho_X|m)].
 *
 * The maximization runs 32 Fibonacci-sphere starting axes, each refined by
 * coordinate-wise golden-section descent on (theta, phi) down to an angle
 * tolerance of 1e-6. Incomplete maximization can only overstate the result,
 * so the reported value is one-sided within about 1e-3.
 *
 * The measured party must have dimension 2; larger measured dimensions are
 * unsupported and raise std::domain_error.
 */
DiscordResult discord(const MultipartiteState& s, std::size_t measured_party);

// E_AB - D_AC - S(A|C) for a pure three-qubit state. Zero up to optimizer
// error; one-sided in [-1e-3, ~0] because D_AC is an upper bound.
double koashi_winter_residual(const MultipartiteState& s);

}  // namespace qdc

#endif  // QDC_CORRELATIONS_HPP_
