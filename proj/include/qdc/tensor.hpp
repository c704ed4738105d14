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

#ifndef QDC_TENSOR_HPP_
#define QDC_TENSOR_HPP_

#include <cstddef>
#include <vector>

#include "qdc/matrix.hpp"

namespace qdc {

// Ordered list of local Hilbert-space dimensions; party labels are the
// 0-based positions. Parties of dimension 1 are rejected (a trivial sender
// makes every capacity statement vacuous).
class DimensionProfile {
 public:
  explicit DimensionProfile(std::vector<std::size_t> dims);

  std::size_t parties() const { return dims_.size(); }
  std::size_t dim(std::size_t party) const;
  std::size_t total_dim() const { return total_; }
  const std::vector<std::size_t>& dims() const { return dims_; }

  // Dimensions of a subset of parties, in ascending party order.
  DimensionProfile sub_profile(const std::vector<std::size_t>& parties) const;

  bool operator==(const DimensionProfile& other) const { return dims_ == other.dims_; }
  bool operator!=(const DimensionProfile& other) const { return !(*this == other); }

 private:
  std::vector<std::size_t> dims_;
  std::size_t total_ = 1;
};

// Validates that `parties` is a nonempty duplicate-free subset of the
// profile's party indices and returns it sorted ascending.
std::vector<std::size_t> normalize_party_subset(const DimensionProfile& profile,
                                                std::vector<std::size_t> parties);

// Trace over every party not listed in `keep`; kept parties retain their
// original relative order. Trace is preserved.
ComplexMatrix partial_trace(const ComplexMatrix& m, const DimensionProfile& profile,
                            const std::vector<std::size_t>& keep);

// Reorder the tensor factors: output system i is input system perm[i].
// The spectrum is unchanged.
ComplexMatrix permute_systems(const ComplexMatrix& m, const DimensionProfile& profile,
                              const std::vector<std::size_t>& perm);

// op acting on one party, identity elsewhere: I x ... x op x ... x I.
ComplexMatrix embed_local(const DimensionProfile& profile, std::size_t party,
                          const ComplexMatrix& op);

}  // namespace qdc

#endif  // QDC_TENSOR_HPP_
