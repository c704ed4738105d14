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

#include "qdc/states.hpp"

#include <cmath>
#include <cstring>
#include <random>
#include <stdexcept>

#include "qdc/eig.hpp"

namespace qdc {

namespace {

constexpr double kTraceTol = 1e-10;
constexpr double kPurityTol = 1e-9;
constexpr double kPositivityTol = 1e-10;

std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Uniform in (0, 1]; never returns 0 so log() below is safe.
double uniform_unit(std::mt19937_64& gen) {
  return (static_cast<double>(gen() >> 11) + 1.0) * 0x1.0p-53;
}

// Box-Muller. std::normal_distribution is implementation-defined, which
// would break the bit-identical-reports contract across toolchains.
std::vector<Complex> gaussian_vector(std::size_t length, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::vector<Complex> v(length);
  for (std::size_t i = 0; i < length; ++i) {
    const double u1 = uniform_unit(gen);
    const double u2 = uniform_unit(gen);
    const double r = std::sqrt(-2.0 * std::log(u1));
    v[i] = Complex(r * std::cos(2.0 * M_PI * u2), r * std::sin(2.0 * M_PI * u2));
  }
  return v;
}

void normalize(std::vector<Complex>& v) {
  double norm2 = 0.0;
  for (const Complex& z : v) norm2 += std::norm(z);
  const double inv = 1.0 / std::sqrt(norm2);
  for (Complex& z : v) z *= inv;
}

ComplexMatrix projector(const std::vector<Complex>& v) {
  ComplexMatrix rho(v.size(), v.size());
  for (std::size_t r = 0; r < v.size(); ++r)
    for (std::size_t c = 0; c < v.size(); ++c) rho(r, c) = v[r] * std::conj(v[c]);
  return rho;
}

void require_equal_dims(const DimensionProfile& profile, const char* what) {
  for (std::size_t p = 1; p < profile.parties(); ++p)
    if (profile.dim(p) != profile.dim(0))
      throw std::invalid_argument(std::string(what) + " requires all local dimensions equal");
}

}  // namespace

MultipartiteState::MultipartiteState(ComplexMatrix density, DimensionProfile profile,
                                     bool pure_hint)
    : density_(std::move(density)), profile_(std::move(profile)), pure_hint_(pure_hint) {
  if (!density_.square() || density_.rows() != profile_.total_dim())
    throw std::invalid_argument(
        "dimension invariant violated: matrix side must equal the product of local dimensions");
  if (!density_.is_hermitian(kHermitianTol))
    throw std::invalid_argument("hermiticity invariant violated");
  density_ = density_.hermitized();
  const Complex tr = density_.trace();
  if (std::abs(tr - Complex{1.0, 0.0}) > kTraceTol)
    throw std::invalid_argument("trace invariant violated");
  if (pure_hint_ && purity() < 1.0 - kPurityTol)
    throw std::invalid_argument("purity invariant violated");
}

MultipartiteState MultipartiteState::from_amplitudes(const std::vector<Complex>& amplitudes,
                                                     DimensionProfile profile) {
  if (amplitudes.size() != profile.total_dim())
    throw std::invalid_argument(
        "dimension invariant violated: amplitude count must equal the product of local dimensions");
  double norm2 = 0.0;
  for (const Complex& z : amplitudes) norm2 += std::norm(z);
  if (std::abs(norm2 - 1.0) > kTraceTol)
    throw std::invalid_argument("trace invariant violated: amplitudes are not normalized");
  return MultipartiteState(projector(amplitudes), std::move(profile), /*pure_hint=*/true);
}

double MultipartiteState::purity() const {
  // tr(rho^2) = sum |rho_ij|^2 for Hermitian rho.
  const double f = density_.frobenius_norm();
  return f * f;
}

MultipartiteState MultipartiteState::reduce(const std::vector<std::size_t>& keep) const {
  ComplexMatrix reduced = partial_trace(density_, profile_, keep);
  return MultipartiteState(std::move(reduced), profile_.sub_profile(keep));
}

MultipartiteState MultipartiteState::permuted(const std::vector<std::size_t>& perm) const {
  ComplexMatrix m = permute_systems(density_, profile_, perm);
  std::vector<std::size_t> dims(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) dims[i] = profile_.dim(perm[i]);
  return MultipartiteState(std::move(m), DimensionProfile(dims), pure_hint_);
}

void MultipartiteState::assert_positive() const {
  const std::vector<double> evs = hermitian_eigenvalues(density_);
  if (!evs.empty() && evs.front() < -kPositivityTol)
    throw std::invalid_argument("positivity invariant violated");
}

std::uint64_t MultipartiteState::fingerprint() const {
  std::uint64_t h = 0xCBF29CE484222325ULL;  // FNV offset basis
  auto mix_bytes = [&h](const void* data, std::size_t len) {
    const auto* bytes = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < len; ++i) {
      h ^= bytes[i];
      h *= 0x100000001B3ULL;
    }
  };
  for (std::size_t d : profile_.dims()) {
    const std::uint64_t v = d;
    mix_bytes(&v, sizeof(v));
  }
  for (const Complex& z : density_.entries()) {
    const double parts[2] = {z.real(), z.imag()};
    mix_bytes(parts, sizeof(parts));
  }
  return h;
}

NamedState named_state_from_string(const std::string& name) {
  if (name == "ghz") return NamedState::ghz;
  if (name == "w") return NamedState::w;
  if (name == "bell") return NamedState::bell;
  if (name == "product_zero") return NamedState::product_zero;
  if (name == "bell_times_pure") return NamedState::bell_times_pure;
  throw std::invalid_argument("unknown named state: " + name);
}

std::string to_string(NamedState name) {
  switch (name) {
    case NamedState::ghz: return "ghz";
    case NamedState::w: return "w";
    case NamedState::bell: return "bell";
    case NamedState::product_zero: return "product_zero";
    case NamedState::bell_times_pure: return "bell_times_pure";
  }
  return "?";
}

MultipartiteState named_state(NamedState name, const DimensionProfile& profile) {
  const std::size_t n = profile.parties();
  const std::size_t total = profile.total_dim();
  std::vector<Complex> amp(total, Complex{0.0, 0.0});

  switch (name) {
    case NamedState::ghz: {
      require_equal_dims(profile, "ghz");
      const std::size_t d = profile.dim(0);
      // |j...j> has flat index j * (d^(n-1) + ... + d + 1).
      std::size_t repunit = 0;
      for (std::size_t p = 0; p < n; ++p) repunit = repunit * d + 1;
      for (std::size_t j = 0; j < d; ++j) amp[j * repunit] = 1.0 / std::sqrt(double(d));
      break;
    }
    case NamedState::w: {
      require_equal_dims(profile, "w");
      const std::size_t d = profile.dim(0);
      std::size_t stride = 1;
      for (std::size_t p = n; p-- > 0;) {
        amp[stride] = 1.0 / std::sqrt(double(n));
        stride *= d;
      }
      break;
    }
    case NamedState::bell: {
      if (n != 2) throw std::invalid_argument("bell requires exactly two parties");
      require_equal_dims(profile, "bell");
      const std::size_t d = profile.dim(0);
      for (std::size_t j = 0; j < d; ++j) amp[j * d + j] = 1.0 / std::sqrt(double(d));
      break;
    }
    case NamedState::product_zero: {
      amp[0] = 1.0;
      break;
    }
    case NamedState::bell_times_pure: {
      if (n < 3) throw std::invalid_argument("bell_times_pure requires at least three parties");
      if (profile.dim(0) != profile.dim(1))
        throw std::invalid_argument("bell_times_pure requires the first two dimensions equal");
      const std::size_t d = profile.dim(0);
      std::size_t tail = 1;
      for (std::size_t p = 2; p < n; ++p) tail *= profile.dim(p);
      // (sum_j |jj>) / sqrt(d) on parties 0,1 and |0> on the rest.
      for (std::size_t j = 0; j < d; ++j) amp[(j * d + j) * tail] = 1.0 / std::sqrt(double(d));
      break;
    }
  }
  return MultipartiteState::from_amplitudes(amp, profile);
}

std::uint64_t stream_seed(std::uint64_t master_seed, std::uint64_t counter) {
  return splitmix64(master_seed ^ (0x9E3779B97F4A7C15ULL * (counter + 1)));
}

MultipartiteState sample(const RandomSpec& spec) {
  const std::size_t dim = spec.profile.total_dim();
  switch (spec.kind) {
    case RandomSpec::Kind::haar_pure: {
      std::vector<Complex> v = gaussian_vector(dim, spec.seed);
      normalize(v);
      return MultipartiteState(projector(v), spec.profile, /*pure_hint=*/true);
    }
    case RandomSpec::Kind::induced_mixed: {
      const std::size_t ancilla = spec.ancilla_dim == 0 ? dim : spec.ancilla_dim;
      std::vector<Complex> v = gaussian_vector(dim * ancilla, spec.seed);
      normalize(v);
      // Trace the ancilla out of |v><v| directly.
      ComplexMatrix rho(dim, dim);
      for (std::size_t r = 0; r < dim; ++r)
        for (std::size_t c = 0; c < dim; ++c) {
          Complex sum = 0.0;
          for (std::size_t a = 0; a < ancilla; ++a)
            sum += v[r * ancilla + a] * std::conj(v[c * ancilla + a]);
          rho(r, c) = sum;
        }
      return MultipartiteState(std::move(rho), spec.profile);
    }
  }
  throw std::invalid_argument("unknown sampling kind");
}

MultipartiteState depolarize_party(const MultipartiteState& s, std::size_t party, double p) {
  if (!(p >= 0.0 && p <= 1.0))
    throw std::invalid_argument("depolarizing strength must lie in [0, 1]");
  const std::size_t n = s.parties();
  if (party >= n) throw std::invalid_argument("party index out of range");
  const std::size_t d = s.dim(party);

  ComplexMatrix noise_term;
  if (n == 1) {
    noise_term = ComplexMatrix::identity(d);
    noise_term *= Complex{1.0 / double(d), 0.0};
  } else {
    std::vector<std::size_t> rest;
    for (std::size_t q = 0; q < n; ++q)
      if (q != party) rest.push_back(q);
    ComplexMatrix reduced = partial_trace(s.density(), s.profile(), rest);
    ComplexMatrix eye = ComplexMatrix::identity(d);
    eye *= Complex{1.0 / double(d), 0.0};
    ComplexMatrix product = kron(eye, reduced);

    // Move the freshly prepended party back to its slot.
    std::vector<std::size_t> dims_after;
    dims_after.push_back(d);
    for (std::size_t q : rest) dims_after.push_back(s.dim(q));
    std::vector<std::size_t> gather(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (i < party)
        gather[i] = i + 1;
      else if (i == party)
        gather[i] = 0;
      else
        gather[i] = i;
    }
    noise_term = permute_systems(product, DimensionProfile(dims_after), gather);
  }

  ComplexMatrix out = s.density();
  out *= Complex{1.0 - p, 0.0};
  noise_term *= Complex{p, 0.0};
  out += noise_term;
  return MultipartiteState(std::move(out), s.profile());
}

}  // namespace qdc
