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

#include "qdc/eig.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace qdc {

namespace {

constexpr double kOffTol = 1e-12;
constexpr int kMaxSweeps = 100;

double off_diagonal_norm(const ComplexMatrix& a) {
  double sum = 0.0;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      if (r != c) sum += std::norm(a(r, c));
  return std::sqrt(sum);
}

// One Jacobi rotation zeroing A(p,q). The pivot block
//   [ alpha            g*exp(i*phi) ]
//   [ g*exp(-i*phi)    beta         ]
// is diagonalized by U = diag(1, exp(-i*phi)) * Givens(c, s), applied
// two-sided to A and accumulated into V.
void rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q) {
  const Complex apq = a(p, q);
  const double g = std::abs(apq);
  const double alpha = a(p, p).real();
  const double beta = a(q, q).real();
  if (g <= 1e-18 * (1.0 + std::abs(alpha) + std::abs(beta))) {
    a(p, q) = 0.0;
    a(q, p) = 0.0;
    return;
  }

  const Complex phase = apq / g;  // exp(i*phi)
  const double tau = (alpha - beta) / (2.0 * g);
  const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::hypot(1.0, tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;

  // Column pair of U: col_p' = c*col_p + s*conj(phase)*col_q,
  //                   col_q' = -s*col_p + c*conj(phase)*col_q.
  const Complex up = s * std::conj(phase);
  const Complex uq = c * std::conj(phase);

  const std::size_t n = a.rows();
  for (std::size_t k = 0; k < n; ++k) {
    const Complex akp = a(k, p);
    const Complex akq = a(k, q);
    a(k, p) = c * akp + up * akq;
    a(k, q) = -s * akp + uq * akq;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const Complex apk = a(p, k);
    const Complex aqk = a(q, k);
    a(p, k) = c * apk + std::conj(up) * aqk;
    a(q, k) = -s * apk + std::conj(uq) * aqk;
  }
  // Clean up roundoff in the annihilated pair and keep the diagonal real.
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = a(p, p).real();
  a(q, q) = a(q, q).real();

  for (std::size_t k = 0; k < n; ++k) {
    const Complex vkp = v(k, p);
    const Complex vkq = v(k, q);
    v(k, p) = c * vkp + up * vkq;
    v(k, q) = -s * vkp + uq * vkq;
  }
}

}  // namespace

EigenSystem hermitian_eig(const ComplexMatrix& m) {
  if (!m.square()) throw std::invalid_argument("hermitian_eig requires a square matrix");
  if (!m.is_hermitian(kHermitianTol))
    throw std::invalid_argument("hermitian_eig: hermiticity invariant violated");

  const std::size_t n = m.rows();
  ComplexMatrix a = m.hermitized();
  ComplexMatrix v = ComplexMatrix::identity(n);

  double prev_off = std::numeric_limits<double>::infinity();
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    const double off = off_diagonal_norm(a);
    if (off <= kOffTol) break;
    // Quadratic convergence has bottomed out at roundoff level.
    if (off >= prev_off && sweep > 2) break;
    prev_off = off;
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) rotate(a, v, p, q);
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return a(i, i).real() < a(j, j).real();
  });

  EigenSystem out;
  out.values.resize(n);
  out.vectors = ComplexMatrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    for (std::size_t r = 0; r < n; ++r) out.vectors(r, k) = v(r, order[k]);
  }
  return out;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m) {
  return hermitian_eig(m).values;
}

}  // namespace qdc
