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

#ifndef QDC_TESTS_TEST_HELPERS_HPP_
#define QDC_TESTS_TEST_HELPERS_HPP_

#include <complex>
#include <random>
#include <vector>

#include "qdc/matrix.hpp"
#include "qdc/states.hpp"
#include "qdc/tensor.hpp"

namespace qdc_test {

using qdc::Complex;
using qdc::ComplexMatrix;

inline ComplexMatrix random_matrix(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  ComplexMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = Complex(dist(rng), dist(rng));
  return m;
}

inline ComplexMatrix random_hermitian(std::mt19937_64& rng, std::size_t n) {
  return random_matrix(rng, n).hermitized();
}

// Random density matrix: normalized M M^dag of a random square matrix.
inline ComplexMatrix random_density(std::mt19937_64& rng, std::size_t n) {
  const ComplexMatrix m = random_matrix(rng, n);
  ComplexMatrix rho = m * m.adjoint();
  rho *= Complex{1.0 / rho.trace().real(), 0.0};
  return rho;
}

// Gram-Schmidt on random columns: exact enough for invariance tests.
inline ComplexMatrix random_unitary(std::mt19937_64& rng, std::size_t n) {
  ComplexMatrix m = random_matrix(rng, n);
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t prev = 0; prev < c; ++prev) {
      Complex overlap = 0.0;
      for (std::size_t r = 0; r < n; ++r) overlap += std::conj(m(r, prev)) * m(r, c);
      for (std::size_t r = 0; r < n; ++r) m(r, c) -= overlap * m(r, prev);
    }
    double norm2 = 0.0;
    for (std::size_t r = 0; r < n; ++r) norm2 += std::norm(m(r, c));
    const double inv = 1.0 / std::sqrt(norm2);
    for (std::size_t r = 0; r < n; ++r) m(r, c) *= inv;
  }
  return m;
}

inline std::vector<std::size_t> digits_of(std::size_t flat, const std::vector<std::size_t>& dims) {
  std::vector<std::size_t> digits(dims.size());
  for (std::size_t i = dims.size(); i-- > 0;) {
    digits[i] = flat % dims[i];
    flat /= dims[i];
  }
  return digits;
}

// Brute-force partial trace used as an oracle: walks every entry of the
// full matrix and accumulates the ones whose traced digits coincide.
// Deliberately shares no index machinery with the library implementation.
inline ComplexMatrix naive_partial_trace(const ComplexMatrix& m,
                                         const std::vector<std::size_t>& dims,
                                         const std::vector<std::size_t>& keep_sorted) {
  std::size_t kept_dim = 1;
  for (std::size_t p : keep_sorted) kept_dim *= dims[p];
  ComplexMatrix out(kept_dim, kept_dim);
  const std::size_t side = m.rows();
  for (std::size_t r = 0; r < side; ++r) {
    const std::vector<std::size_t> dr = digits_of(r, dims);
    for (std::size_t c = 0; c < side; ++c) {
      const std::vector<std::size_t> dc = digits_of(c, dims);
      bool traced_match = true;
      for (std::size_t p = 0; p < dims.size(); ++p) {
        bool kept = false;
        for (std::size_t k : keep_sorted) kept = kept || k == p;
        if (!kept && dr[p] != dc[p]) {
          traced_match = false;
          break;
        }
      }
      if (!traced_match) continue;
      std::size_t kr = 0, kc = 0;
      for (std::size_t k : keep_sorted) {
        kr = kr * dims[k] + dr[k];
        kc = kc * dims[k] + dc[k];
      }
      out(kr, kc) += m(r, c);
    }
  }
  return out;
}

inline qdc::MultipartiteState random_mixed_state(const std::vector<std::size_t>& dims,
                                                 std::uint64_t seed) {
  return qdc::sample({qdc::DimensionProfile(dims), qdc::RandomSpec::Kind::induced_mixed, 0, seed});
}

inline qdc::MultipartiteState random_pure_state(const std::vector<std::size_t>& dims,
                                                std::uint64_t seed) {
  return qdc::sample({qdc::DimensionProfile(dims), qdc::RandomSpec::Kind::haar_pure, 0, seed});
}

// w |phi+><phi+| + (1-w) I/4, built entrywise.
inline qdc::MultipartiteState werner_state(double w) {
  ComplexMatrix rho(4, 4);
  rho(0, 0) = rho(3, 3) = w / 2.0 + (1.0 - w) / 4.0;
  rho(0, 3) = rho(3, 0) = w / 2.0;
  rho(1, 1) = rho(2, 2) = (1.0 - w) / 4.0;
  return qdc::MultipartiteState(rho, qdc::DimensionProfile({2, 2}));
}

inline qdc::MultipartiteState maximally_mixed(const std::vector<std::size_t>& dims) {
  const qdc::DimensionProfile profile(dims);
  ComplexMatrix rho = ComplexMatrix::identity(profile.total_dim());
  rho *= Complex{1.0 / double(profile.total_dim()), 0.0};
  return qdc::MultipartiteState(rho, profile);
}

}  // namespace qdc_test

#endif  // QDC_TESTS_TEST_HELPERS_HPP_
