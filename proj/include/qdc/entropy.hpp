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

#ifndef QDC_ENTROPY_HPP_
#define QDC_ENTROPY_HPP_

#include <vector>

#include "qdc/states.hpp"

namespace qdc {

// All entropic quantities are in bits (base-2 logarithms).

struct EntropyReport {
  std::vector<std::size_t> subsystem;
  double bits = 0.0;
};

// -sum lambda log2 lambda with 0 log 0 := 0. Eigenvalues in [-1e-10, 0] are
// clamped to zero; anything below -1e-10 raises a positivity error rather
// than being silently clamped.
double entropy_of_density(const ComplexMatrix& rho);

// von Neumann entropy of the reduced state over `keep`.
double entropy(const MultipartiteState& s, const std::vector<std::size_t>& keep);
// Entropy of the full state.
double entropy(const MultipartiteState& s);

EntropyReport entropy_report(const MultipartiteState& s, const std::vector<std::size_t>& keep);

// S(target|condition) = S(target u condition) - S(condition); may be negative.
double conditional_entropy(const MultipartiteState& s, const std::vector<std::size_t>& target,
                           const std::vector<std::size_t>& condition);

// S(x) + S(y) - S(x u y); nonnegative by subadditivity.
double mutual_information(const MultipartiteState& s, const std::vector<std::size_t>& x,
                          const std::vector<std::size_t>& y);

// S(B) + S(C) - S(AB) - S(AC); strong subadditivity makes this <= 0.
double ssa_slack(const MultipartiteState& s, const std::vector<std::size_t>& a,
                 const std::vector<std::size_t>& b, const std::vector<std::size_t>& c);

// Sum of single-party entropies minus the sum over the N cyclic windows of
// N-1 consecutive parties. Nonpositive everywhere, zero on pure states.
double q_functional(const MultipartiteState& s);

// h(x) = -x log2 x - (1-x) log2(1-x).
double binary_entropy(double x);

}  // namespace qdc

#endif  // QDC_ENTROPY_HPP_
