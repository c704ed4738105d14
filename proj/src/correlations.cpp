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

#include "qdc/correlations.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

#include "qdc/eig.hpp"
#include "qdc/entropy.hpp"

namespace qdc {

namespace {

constexpr int kDiscordStarts = 32;
constexpr double kAngleTol = 1e-6;

void require_two_qubits(const MultipartiteState& s, const char* what) {
  if (s.parties() != 2 || s.dim(0) != 2 || s.dim(1) != 2)
    throw std::invalid_argument(std::string(what) + " requires a two-qubit state");
}

// sy x sy (real in the computational basis).
ComplexMatrix spin_flip_matrix() {
  ComplexMatrix f(4, 4);
  f(0, 3) = -1.0;
  f(1, 2) = 1.0;
  f(2, 1) = 1.0;
  f(3, 0) = -1.0;
  return f;
}

ComplexMatrix hermitian_sqrt(const ComplexMatrix& m) {
  const EigenSystem es = hermitian_eig(m);
  const std::size_t n = m.rows();
  std::vector<double> roots(n);
  for (std::size_t k = 0; k < n; ++k) {
    if (es.values[k] < -1e-10) throw std::invalid_argument("positivity invariant violated");
    roots[k] = std::sqrt(std::max(0.0, es.values[k]));
  }
  ComplexMatrix out(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      Complex sum = 0.0;
      for (std::size_t k = 0; k < n; ++k)
        sum += roots[k] * es.vectors(r, k) * std::conj(es.vectors(c, k));
      out(r, c) = sum;
    }
  return out;
}

// Measurement context shared by all objective evaluations of one discord
// optimization: the density matrix plus flat-index strides that place the
// measured qubit without copying or permuting the state.
struct MeasurementContext {
  const ComplexMatrix* rho = nullptr;
  std::size_t other_dim = 0;
  std::size_t other_stride = 0;
  std::size_t measured_stride = 0;
};

// sum_m q_m S(rho_X|m) for the projective measurement along (theta, phi).
double conditional_entropy_after_measurement(const MeasurementContext& ctx, double theta,
                                             double phi) {
  const Complex e_phi(std::cos(phi), std::sin(phi));
  const double c = std::cos(0.5 * theta);
  const double s = std::sin(0.5 * theta);
  const std::array<std::array<Complex, 2>, 2> axes = {{
      {Complex(c, 0.0), s * e_phi},
      {Complex(s, 0.0), -c * e_phi},
  }};

  const std::size_t dx = ctx.other_dim;
  double total = 0.0;
  ComplexMatrix conditional(dx, dx);
  for (const auto& v : axes) {
    for (std::size_t i = 0; i < dx; ++i)
      for (std::size_t j = 0; j < dx; ++j) {
        Complex sum = 0.0;
        for (std::size_t a = 0; a < 2; ++a)
          for (std::size_t b = 0; b < 2; ++b)
            sum += std::conj(v[a]) *
                   (*ctx.rho)(i * ctx.other_stride + a * ctx.measured_stride,
                              j * ctx.other_stride + b * ctx.measured_stride) *
                   v[b];
        conditional(i, j) = sum;
      }
    const double q = conditional.trace().real();
    if (q < 1e-14) continue;
    ComplexMatrix normalized = conditional;
    normalized *= Complex{1.0 / q, 0.0};
    total += q * entropy_of_density(normalized);
  }
  return total;
}

template <typename F>
double golden_section_min(F&& f, double lo, double hi, double tol, double& arg_min) {
  constexpr double inv_phi = 0.6180339887498949;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = f(x1);
  double f2 = f(x2);
  while (hi - lo > tol) {
    if (f1 <= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = f(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = f(x2);
    }
  }
  arg_min = 0.5 * (lo + hi);
  return f1 <= f2 ? f1 : f2;
}

}  // namespace

double concurrence(const MultipartiteState& s) {
  require_two_qubits(s, "concurrence");
  const ComplexMatrix& rho = s.density();
  const ComplexMatrix flip = spin_flip_matrix();
  const ComplexMatrix rho_tilde = flip * rho.conjugate() * flip;
  const ComplexMatrix root = hermitian_sqrt(rho);
  // sqrt(rho) rho~ sqrt(rho) is Hermitian PSD with eigenvalues li^2.
  const ComplexMatrix r = (root * rho_tilde * root).hermitized();
  std::vector<double> evs = hermitian_eigenvalues(r);
  std::vector<double> lambda(evs.size());
  for (std::size_t k = 0; k < evs.size(); ++k) lambda[k] = std::sqrt(std::max(0.0, evs[k]));
  std::sort(lambda.begin(), lambda.end(), std::greater<>());
  const double c = lambda[0] - lambda[1] - lambda[2] - lambda[3];
  return std::clamp(c, 0.0, 1.0);
}

EofResult eof_two_qubit(const MultipartiteState& s) {
  EofResult result;
  result.concurrence = concurrence(s);
  const double tangle = result.concurrence * result.concurrence;
  result.eof = binary_entropy(0.5 * (1.0 + std::sqrt(std::max(0.0, 1.0 - tangle))));
  return result;
}

DiscordResult discord(const MultipartiteState& s, std::size_t measured_party) {
  if (s.parties() != 2) throw std::invalid_argument("discord requires a bipartite state");
  if (measured_party > 1) throw std::invalid_argument("measured party index out of range");
  if (s.dim(measured_party) != 2)
    throw std::domain_error("discord: measured-party dimension > 2 is unsupported");

  const std::size_t other_party = 1 - measured_party;
  MeasurementContext ctx;
  ctx.rho = &s.density();
  ctx.other_dim = s.dim(other_party);
  // Row-major bipartite flat index: party 0 stride = dim(1), party 1 stride = 1.
  ctx.other_stride = other_party == 0 ? s.dim(1) : 1;
  ctx.measured_stride = measured_party == 0 ? s.dim(1) : 1;

  const double s_measured = entropy(s, {measured_party});
  const double s_joint = entropy(s);

  auto objective = [&ctx](double theta, double phi) {
    return conditional_entropy_after_measurement(ctx, theta, phi);
  };

  DiscordResult result;
  result.starts_used = kDiscordStarts;
  double best = std::numeric_limits<double>::infinity();
  constexpr double golden_angle = M_PI * (3.0 - 2.23606797749978969);  // pi (3 - sqrt 5)

  for (int i = 0; i < kDiscordStarts; ++i) {
    double theta = std::acos(1.0 - 2.0 * (i + 0.5) / kDiscordStarts);
    double phi = std::fmod(i * golden_angle, 2.0 * M_PI);
    double width = 0.6;
    bool converged = false;
    for (int round = 0; round < 64; ++round) {
      const double tol = std::max(width * 1e-2, 0.25 * kAngleTol);
      golden_section_min([&](double t) { return objective(t, phi); }, theta - width,
                         theta + width, tol, theta);
      golden_section_min([&](double p) { return objective(theta, p); }, phi - width, phi + width,
                         tol, phi);
      width *= 0.55;
      if (width < kAngleTol) {
        converged = true;
        break;
      }
    }
    const double value = objective(theta, phi);
    if (value < best) {
      best = value;
      result.theta = theta;
      result.phi = phi;
      result.converged = converged;
    }
  }

  result.value = s_measured - s_joint + best;
  return result;
}

double koashi_winter_residual(const MultipartiteState& s) {
  if (s.parties() != 3 || s.dim(0) != 2 || s.dim(1) != 2 || s.dim(2) != 2)
    throw std::invalid_argument("koashi_winter_residual requires a three-qubit state");
  if (!s.is_pure())
    throw std::invalid_argument("koashi_winter_residual requires a pure global state");

  const double e_ab = eof_two_qubit(s.reduce({0, 1})).eof;
  const double d_ac = discord(s.reduce({0, 2}), 1).value;
  const double cond_a_given_c = entropy(s, {0, 2}) - entropy(s, {2});
  return e_ab - d_ac - cond_a_given_c;
}

}  // namespace qdc
