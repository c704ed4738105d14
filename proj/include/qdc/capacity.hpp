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

#ifndef QDC_CAPACITY_HPP_
#define QDC_CAPACITY_HPP_

#include <vector>

#include "qdc/states.hpp"

namespace qdc {

// A strict advantage must clear the classical floor by more than this;
// separates genuine inequality from eigensolver noise.
inline constexpr double kAdvantageEps = 1e-9;

struct CapacityResult {
  std::vector<std::size_t> senders;
  std::size_t receiver = 0;
  double quantum_part = 0.0;
  double classical_floor = 0.0;  // sum of log2 d over senders
  double full_capacity = 0.0;    // max(quantum_part, classical_floor)
  bool advantage = false;        // quantum_part > classical_floor + eps
};

// Quantum part of the dense coding capacity with unitary encoding:
//   sum_{i in senders} log2 d_i + S(rho_receiver) - S(rho_{senders u receiver}).
// Parties outside senders u {receiver} are traced out. May fall below the
// classical floor.
double dc_quantum_part(const MultipartiteState& s, const std::vector<std::size_t>& senders,
                       std::size_t receiver);

CapacityResult dc_capacity(const MultipartiteState& s, const std::vector<std::size_t>& senders,
                           std::size_t receiver);

struct PortGroup {
  std::vector<std::size_t> senders;  // n-2 consecutive parties (mod n)
  std::size_t receiver = 0;          // the party just past the senders
};

// The n cyclic sender groups on a ring of n >= 3 parties: group j has
// senders j..j+n-3 (mod n) and receiver j+n-2 (mod n). Each party receives
// exactly once and each group leaves exactly one party out.
std::vector<PortGroup> cyclic_groups(std::size_t n);

struct Ensemble {
  struct Item {
    double probability = 0.0;
    MultipartiteState state;
  };
  std::vector<Item> items;
};

// chi = S(average state) - sum p_i S(rho_i); nonnegative by concavity.
double holevo_chi(const Ensemble& ensemble);

// Generalized Pauli operators on a d-level system:
//   shift X|j> = |j+1 mod d>, clock Z|j> = w^j |j>, w = exp(2 pi i / d).
ComplexMatrix weyl_shift(std::size_t d);
ComplexMatrix weyl_clock(std::size_t d);
// X^a Z^b, built entrywise: (X^a Z^b)|j> = w^(jb) |j+a mod d>.
ComplexMatrix weyl_operator(std::size_t d, std::size_t a, std::size_t b);

// Uniform ensemble of the d^2 Weyl encodings applied to one sender (or the
// product of independent Weyl sets over several senders). Averaging over
// the set maximally mixes the sender marginal, which makes the ensemble's
// Holevo quantity an independent check of dc_quantum_part.
Ensemble weyl_encoding_ensemble(const MultipartiteState& s, std::size_t sender);
Ensemble weyl_encoding_ensemble(const MultipartiteState& s,
                                const std::vector<std::size_t>& senders);

}  // namespace qdc

#endif  // QDC_CAPACITY_HPP_
