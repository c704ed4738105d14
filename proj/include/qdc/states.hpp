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

#ifndef QDC_STATES_HPP_
#define QDC_STATES_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "qdc/tensor.hpp"

namespace qdc {

// Density operator together with its tensor-factor structure. Construction
// enforces hermiticity (1e-10) and unit trace (1e-10) and symmetrizes the
// matrix once; positive semidefiniteness is enforced wherever eigenvalues
// are actually taken, and eagerly via assert_positive() on untrusted input.
class MultipartiteState {
 public:
  MultipartiteState(ComplexMatrix density, DimensionProfile profile, bool pure_hint = false);

  static MultipartiteState from_amplitudes(const std::vector<Complex>& amplitudes,
                                           DimensionProfile profile);

  const ComplexMatrix& density() const { return density_; }
  const DimensionProfile& profile() const { return profile_; }
  std::size_t parties() const { return profile_.parties(); }
  std::size_t dim(std::size_t party) const { return profile_.dim(party); }

  bool pure_hint() const { return pure_hint_; }
  double purity() const;  // tr(rho^2)
  bool is_pure(double tol = 1e-9) const { return purity() >= 1.0 - tol; }

  MultipartiteState reduce(const std::vector<std::size_t>& keep) const;
  MultipartiteState permuted(const std::vector<std::size_t>& perm) const;

  // Full eigenvalue check: throws if any eigenvalue drops below -1e-10.
  void assert_positive() const;

  // FNV-1a over dims and entry bytes; stable across runs on one platform.
  std::uint64_t fingerprint() const;

 private:
  ComplexMatrix density_;
  DimensionProfile profile_;
  bool pure_hint_ = false;
};

enum class NamedState { ghz, w, bell, product_zero, bell_times_pure };

NamedState named_state_from_string(const std::string& name);
std::string to_string(NamedState name);

// Textbook states as density operators. ghz and w require all local
// dimensions equal; bell requires exactly two equal-dimension parties;
// bell_times_pure puts a Bell pair on parties 0,1 and |0> on the rest.
MultipartiteState named_state(NamedState name, const DimensionProfile& profile);

struct RandomSpec {
  enum class Kind { haar_pure, induced_mixed };

  DimensionProfile profile;
  Kind kind = Kind::haar_pure;
  // induced_mixed only; 0 means the Hilbert-Schmidt default (= total dim).
  std::size_t ancilla_dim = 0;
  std::uint64_t seed = 0;
};

// Haar-random pure state (normalized complex Gaussian vector) or induced
// mixed state (ancilla traced out of a larger Haar-random pure state).
// Deterministic given the seed.
MultipartiteState sample(const RandomSpec& spec);

// Per-sample stream seed so sweep scheduling cannot change results.
std::uint64_t stream_seed(std::uint64_t master_seed, std::uint64_t counter);

// rho -> (1-p) rho + p (I_d/d (x) tr_party rho), identity factor at `party`.
MultipartiteState depolarize_party(const MultipartiteState& s, std::size_t party, double p);

}  // namespace qdc

#endif  // QDC_STATES_HPP_
