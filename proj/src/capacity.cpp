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

#include "qdc/capacity.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qdc/entropy.hpp"

namespace qdc {

namespace {

void validate_roles(const MultipartiteState& s, const std::vector<std::size_t>& senders,
                    std::size_t receiver) {
  if (senders.empty()) throw std::invalid_argument("sender set must be nonempty");
  if (receiver >= s.parties()) throw std::invalid_argument("receiver index out of range");
  std::vector<std::size_t> sorted = senders;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("sender set contains duplicates");
  if (sorted.back() >= s.parties()) throw std::invalid_argument("sender index out of range");
  if (std::binary_search(sorted.begin(), sorted.end(), receiver))
    throw std::invalid_argument("receiver cannot also be a sender");
}

}  // namespace

double dc_quantum_part(const MultipartiteState& s, const std::vector<std::size_t>& senders,
                       std::size_t receiver) {
  validate_roles(s, senders, receiver);
  double floor_bits = 0.0;
  for (std::size_t p : senders) floor_bits += std::log2(double(s.dim(p)));
  std::vector<std::size_t> joint = senders;
  joint.push_back(receiver);
  std::sort(joint.begin(), joint.end());
  return floor_bits + entropy(s, {receiver}) - entropy(s, joint);
}

CapacityResult dc_capacity(const MultipartiteState& s, const std::vector<std::size_t>& senders,
                           std::size_t receiver) {
  CapacityResult result;
  result.senders = senders;
  result.receiver = receiver;
  result.quantum_part = dc_quantum_part(s, senders, receiver);
  result.classical_floor = 0.0;
  for (std::size_t p : senders) result.classical_floor += std::log2(double(s.dim(p)));
  result.full_capacity = std::max(result.quantum_part, result.classical_floor);
  result.advantage = result.quantum_part > result.classical_floor + kAdvantageEps;
  return result;
}

std::vector<PortGroup> cyclic_groups(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cyclic groups require at least three parties");
  std::vector<PortGroup> groups(n);
  for (std::size_t j = 0; j < n; ++j) {
    groups[j].senders.resize(n - 2);
    for (std::size_t k = 0; k < n - 2; ++k) groups[j].senders[k] = (j + k) % n;
    groups[j].receiver = (j + n - 2) % n;
  }
  return groups;
}

double holevo_chi(const Ensemble& ensemble) {
  if (ensemble.items.empty()) throw std::invalid_argument("ensemble must be nonempty");
  double prob_sum = 0.0;
  for (const Ensemble::Item& item : ensemble.items) {
    if (item.probability < -1e-12)
      throw std::invalid_argument("ensemble probabilities must be nonnegative");
    if (item.state.profile() != ensemble.items.front().state.profile())
      throw std::invalid_argument("ensemble states must share one dimension profile");
    prob_sum += item.probability;
  }
  if (std::abs(prob_sum - 1.0) > 1e-10)
    throw std::invalid_argument("ensemble probabilities must sum to one");

  const std::size_t side = ensemble.items.front().state.density().rows();
  ComplexMatrix average(side, side);
  double member_entropy = 0.0;
  for (const Ensemble::Item& item : ensemble.items) {
    ComplexMatrix weighted = item.state.density();
    weighted *= Complex{item.probability, 0.0};
    average += weighted;
    if (item.probability > 0.0) member_entropy += item.probability * entropy(item.state);
  }
  return entropy_of_density(average) - member_entropy;
}

ComplexMatrix weyl_shift(std::size_t d) {
  return weyl_operator(d, 1, 0);
}

ComplexMatrix weyl_clock(std::size_t d) {
  return weyl_operator(d, 0, 1);
}

ComplexMatrix weyl_operator(std::size_t d, std::size_t a, std::size_t b) {
  if (d < 2) throw std::invalid_argument("weyl operators need dimension >= 2");
  ComplexMatrix u(d, d);
  const double phase_unit = 2.0 * M_PI / double(d);
  for (std::size_t j = 0; j < d; ++j) {
    const double angle = phase_unit * double((j * b) % d);
    u((j + a) % d, j) = Complex(std::cos(angle), std::sin(angle));
  }
  return u;
}

Ensemble weyl_encoding_ensemble(const MultipartiteState& s, std::size_t sender) {
  return weyl_encoding_ensemble(s, std::vector<std::size_t>{sender});
}

Ensemble weyl_encoding_ensemble(const MultipartiteState& s,
                                const std::vector<std::size_t>& senders) {
  if (senders.empty()) throw std::invalid_argument("sender set must be nonempty");
  std::vector<std::size_t> sorted = senders;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("sender set contains duplicates");
  if (sorted.back() >= s.parties()) throw std::invalid_argument("sender index out of range");

  // One (shift, clock) exponent pair per sender; members enumerate the
  // cartesian product in lexicographic order.
  std::size_t member_count = 1;
  for (std::size_t p : sorted) member_count *= s.dim(p) * s.dim(p);
  const double probability = 1.0 / double(member_count);

  Ensemble ensemble;
  ensemble.items.reserve(member_count);
  for (std::size_t index = 0; index < member_count; ++index) {
    std::size_t rest = index;
    ComplexMatrix encoder = ComplexMatrix::identity(s.profile().total_dim());
    for (std::size_t k = sorted.size(); k-- > 0;) {
      const std::size_t d = s.dim(sorted[k]);
      const std::size_t pair = rest % (d * d);
      rest /= d * d;
      const std::size_t a = pair / d;
      const std::size_t b = pair % d;
      if (a == 0 && b == 0) continue;
      encoder = embed_local(s.profile(), sorted[k], weyl_operator(d, a, b)) * encoder;
    }
    ComplexMatrix encoded = encoder * s.density() * encoder.adjoint();
    ensemble.items.push_back(
        {probability, MultipartiteState(std::move(encoded), s.profile(), s.pure_hint())});
  }
  return ensemble;
}

}  // namespace qdc
