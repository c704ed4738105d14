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

#ifndef QDC_EIG_HPP_
#define QDC_EIG_HPP_

#include <vector>

#include "qdc/matrix.hpp"

namespace qdc {

// Hermiticity tolerance enforced at API boundaries.
inline constexpr double kHermitianTol = 1e-10;

struct EigenSystem {
  std::vector<double> values;  // ascending
  ComplexMatrix vectors;       // unitary; column k pairs with values[k]
};

/**
 * @brief Full eigendecomposition of a Hermitian matrix.
 *
 * Cyclic Jacobi sweeps: each 2x2 complex pivot is reduced to a real
 * symmetric block by a phase rotation and annihilated by a Givens rotation.
 * Sweeps continue until the off-diagonal Frobenius norm drops below 1e-12
 * (or stops improving), capped at 100 sweeps.
 *
 * Rejects input whose hermiticity defect exceeds 1e-10; the accepted matrix
 * is symmetrized once before iteration.
 */
EigenSystem hermitian_eig(const ComplexMatrix& m);

// Eigenvalues only (same algorithm, ascending order).
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m);

}  // namespace qdc

#endif  // QDC_EIG_HPP_
