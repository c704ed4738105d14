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

#include "qdc/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qdc/eig.hpp"

namespace qdc {

namespace {

constexpr double kClampFloor = -1e-10;

double entropy_of_eigenvalues(const std::vector<double>& evs) {
  double bits = 0.0;
  for (double ev : evs) {
    if (ev < kClampFloor) throw std::invalid_argument("positivity invariant violated");
    if (ev <= 0.0) continue;
    bits -= ev * std::log2(ev);
  }
  return bits;
}

void require_disjoint(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b,
                      const char* what) {
  for (std::size_t x : a)
    for (std::size_t y : b)
      if (x == y) throw std::invalid_argument(std::string(what) + ": party sets must be disjoint");
}

std::vector<std::size_t> merged(std::vector<std::size_t> a, const std::vector<std::size_t>& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  return a;
}

}  // namespace

double entropy_of_density(const ComplexMatrix& rho) {
  if (!rho.square()) throw std::invalid_argument("entropy requires a square matrix");
  if (rho.rows() <= 2) {
    if (!rho.is_hermitian(kHermitianTol))
      throw std::invalid_argument("entropy: hermiticity invariant violated");
    if (rho.rows() == 1) return entropy_of_eigenvalues({rho(0, 0).real()});
    // Closed form keeps the discord optimizer cheap.
    const double tr = rho(0, 0).real() + rho(1, 1).real();
    const double det = rho(0, 0).real() * rho(1, 1).real() - std::norm(rho(0, 1));
    const double disc = std::sqrt(std::max(0.0, 0.25 * tr * tr - det));
    return entropy_of_eigenvalues({0.5 * tr - disc, 0.5 * tr + disc});
  }
  return entropy_of_eigenvalues(hermitian_eigenvalues(rho));
}

double entropy(const MultipartiteState& s, const std::vector<std::size_t>& keep) {
  const std::vector<std::size_t> kept = normalize_party_subset(s.profile(), keep);
  if (kept.size() == s.parties()) return entropy_of_density(s.density());
  return entropy_of_density(partial_trace(s.density(), s.profile(), kept));
}

double entropy(const MultipartiteState& s) {
  return entropy_of_density(s.density());
}

EntropyReport entropy_report(const MultipartiteState& s, const std::vector<std::size_t>& keep) {
  EntropyReport report;
  report.subsystem = normalize_party_subset(s.profile(), keep);
  report.bits = entropy(s, report.subsystem);
  return report;
}

double conditional_entropy(const MultipartiteState& s, const std::vector<std::size_t>& target,
                           const std::vector<std::size_t>& condition) {
  require_disjoint(target, condition, "conditional_entropy");
  return entropy(s, merged(target, condition)) - entropy(s, condition);
}

double mutual_information(const MultipartiteState& s, const std::vector<std::size_t>& x,
                          const std::vector<std::size_t>& y) {
  require_disjoint(x, y, "mutual_information");
  return entropy(s, x) + entropy(s, y) - entropy(s, merged(x, y));
}

double ssa_slack(const MultipartiteState& s, const std::vector<std::size_t>& a,
                 const std::vector<std::size_t>& b, const std::vector<std::size_t>& c) {
  require_disjoint(a, b, "ssa_slack");
  require_disjoint(a, c, "ssa_slack");
  require_disjoint(b, c, "ssa_slack");
  return entropy(s, b) + entropy(s, c) - entropy(s, merged(a, b)) - entropy(s, merged(a, c));
}

double q_functional(const MultipartiteState& s) {
  const std::size_t n = s.parties();
  if (n < 3) throw std::invalid_argument("q_functional requires at least three parties");
  double q = 0.0;
  for (std::size_t p = 0; p < n; ++p) q += entropy(s, {p});
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::size_t> window(n - 1);
    for (std::size_t k = 0; k < n - 1; ++k) window[k] = (j + k) % n;
    q -= entropy(s, window);
  }
  return q;
}

double binary_entropy(double x) {
  if (x < 0.0 || x > 1.0) throw std::invalid_argument("binary_entropy argument must lie in [0, 1]");
  double bits = 0.0;
  if (x > 0.0) bits -= x * std::log2(x);
  if (x < 1.0) bits -= (1.0 - x) * std::log2(1.0 - x);
  return bits;
}

}  // namespace qdc
