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

#include "qdc/tensor.hpp"

#include <algorithm>
#include <stdexcept>

namespace qdc {

namespace {

// Row-major tensor strides: the last party varies fastest.
std::vector<std::size_t> strides_for(const std::vector<std::size_t>& dims) {
  std::vector<std::size_t> strides(dims.size(), 1);
  for (std::size_t i = dims.size(); i-- > 1;) strides[i - 1] = strides[i] * dims[i];
  return strides;
}

// Flat offsets of every multi-index over `dims`, measured with `strides`.
std::vector<std::size_t> enumerate_offsets(const std::vector<std::size_t>& dims,
                                           const std::vector<std::size_t>& strides) {
  std::size_t count = 1;
  for (std::size_t d : dims) count *= d;
  std::vector<std::size_t> offsets(count, 0);
  for (std::size_t flat = 0; flat < count; ++flat) {
    std::size_t rest = flat;
    for (std::size_t j = dims.size(); j-- > 0;) {
      offsets[flat] += (rest % dims[j]) * strides[j];
      rest /= dims[j];
    }
  }
  return offsets;
}

}  // namespace

DimensionProfile::DimensionProfile(std::vector<std::size_t> dims) : dims_(std::move(dims)) {
  if (dims_.empty()) throw std::invalid_argument("dimension profile must be nonempty");
  for (std::size_t d : dims_) {
    if (d < 2) throw std::invalid_argument("dimension invariant violated: every local dimension must be >= 2");
    total_ *= d;
  }
}

std::size_t DimensionProfile::dim(std::size_t party) const {
  if (party >= dims_.size()) throw std::invalid_argument("party index out of range");
  return dims_[party];
}

DimensionProfile DimensionProfile::sub_profile(const std::vector<std::size_t>& parties) const {
  std::vector<std::size_t> sub = normalize_party_subset(*this, parties);
  std::vector<std::size_t> dims;
  dims.reserve(sub.size());
  for (std::size_t p : sub) dims.push_back(dims_[p]);
  return DimensionProfile(dims);
}

std::vector<std::size_t> normalize_party_subset(const DimensionProfile& profile,
                                                std::vector<std::size_t> parties) {
  if (parties.empty()) throw std::invalid_argument("party subset must be nonempty");
  std::sort(parties.begin(), parties.end());
  if (std::adjacent_find(parties.begin(), parties.end()) != parties.end())
    throw std::invalid_argument("party subset contains duplicates");
  if (parties.back() >= profile.parties())
    throw std::invalid_argument("party index out of range");
  return parties;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, const DimensionProfile& profile,
                            const std::vector<std::size_t>& keep) {
  if (!m.square() || m.rows() != profile.total_dim())
    throw std::invalid_argument("dimension invariant violated: matrix side must equal the product of local dimensions");
  const std::vector<std::size_t> kept = normalize_party_subset(profile, keep);

  if (kept.size() == profile.parties()) return m;

  const std::vector<std::size_t> strides = strides_for(profile.dims());
  std::vector<std::size_t> traced;
  for (std::size_t p = 0, k = 0; p < profile.parties(); ++p) {
    if (k < kept.size() && kept[k] == p)
      ++k;
    else
      traced.push_back(p);
  }

  std::vector<std::size_t> kept_dims, kept_strides, traced_dims, traced_strides;
  for (std::size_t p : kept) {
    kept_dims.push_back(profile.dim(p));
    kept_strides.push_back(strides[p]);
  }
  for (std::size_t p : traced) {
    traced_dims.push_back(profile.dim(p));
    traced_strides.push_back(strides[p]);
  }

  const std::vector<std::size_t> kept_offsets = enumerate_offsets(kept_dims, kept_strides);
  const std::vector<std::size_t> traced_offsets = enumerate_offsets(traced_dims, traced_strides);

  const std::size_t side = kept_offsets.size();
  ComplexMatrix out(side, side);
  for (std::size_t r = 0; r < side; ++r) {
    for (std::size_t c = 0; c < side; ++c) {
      Complex sum = 0.0;
      for (std::size_t t : traced_offsets)
        sum += m(kept_offsets[r] + t, kept_offsets[c] + t);
      out(r, c) = sum;
    }
  }
  return out;
}

ComplexMatrix permute_systems(const ComplexMatrix& m, const DimensionProfile& profile,
                              const std::vector<std::size_t>& perm) {
  if (!m.square() || m.rows() != profile.total_dim())
    throw std::invalid_argument("dimension invariant violated: matrix side must equal the product of local dimensions");
  const std::size_t n = profile.parties();
  if (perm.size() != n)
    throw std::invalid_argument("permutation length must equal the party count");
  std::vector<bool> seen(n, false);
  for (std::size_t p : perm) {
    if (p >= n || seen[p]) throw std::invalid_argument("invalid party permutation");
    seen[p] = true;
  }

  const std::vector<std::size_t> strides = strides_for(profile.dims());
  std::vector<std::size_t> new_dims(n), new_strides(n);
  for (std::size_t i = 0; i < n; ++i) {
    new_dims[i] = profile.dim(perm[i]);
    new_strides[i] = strides[perm[i]];  // where output digit i lands in the input
  }
  const std::vector<std::size_t> to_input = enumerate_offsets(new_dims, new_strides);

  const std::size_t side = profile.total_dim();
  ComplexMatrix out(side, side);
  for (std::size_t r = 0; r < side; ++r)
    for (std::size_t c = 0; c < side; ++c) out(r, c) = m(to_input[r], to_input[c]);
  return out;
}

ComplexMatrix embed_local(const DimensionProfile& profile, std::size_t party,
                          const ComplexMatrix& op) {
  if (party >= profile.parties()) throw std::invalid_argument("party index out of range");
  if (!op.square() || op.rows() != profile.dim(party))
    throw std::invalid_argument("embedded operator must match the party dimension");
  ComplexMatrix out(1, 1);
  out(0, 0) = 1.0;
  for (std::size_t p = 0; p < profile.parties(); ++p)
    out = kron(out, p == party ? op : ComplexMatrix::identity(profile.dim(p)));
  return out;
}

}  // namespace qdc
