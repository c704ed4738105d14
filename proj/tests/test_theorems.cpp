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

#include <cmath>
#include <stdexcept>

#include <doctest.h>

#include "qdc/entropy.hpp"
#include "qdc/theorems.hpp"
#include "test_helpers.hpp"

using qdc::Complex;
using qdc::ComplexMatrix;
using qdc::DimensionProfile;
using qdc::MultipartiteState;
using qdc::NamedState;
using qdc::TheoremId;

namespace {

MultipartiteState tilted_ghz(double angle) {
  // cos(angle)|000> + sin(angle)|111>
  std::vector<Complex> amp(8, Complex{0.0, 0.0});
  amp[0] = std::cos(angle);
  amp[7] = std::sin(angle);
  return MultipartiteState::from_amplitudes(amp, DimensionProfile({2, 2, 2}));
}

}  // namespace

TEST_CASE("exclusion saturates with one advantage on bell x pure") {
  const auto s = qdc::named_state(NamedState::bell_times_pure, DimensionProfile({2, 2, 2}));
  const auto v = qdc::check_exclusion(s);
  CHECK(v.holds);
  CHECK(std::abs(v.lhs - 2.0) < 1e-9);
  CHECK(v.rhs == 2.0);
  CHECK(v.advantage_count == 1);
}

TEST_CASE("exclusion saturates with zero advantages on the W state") {
  const auto w = qdc::named_state(NamedState::w, DimensionProfile({2, 2, 2}));
  const auto v = qdc::check_exclusion(w);
  CHECK(v.holds);
  CHECK(std::abs(v.lhs - 2.0) < 1e-8);
  CHECK(v.advantage_count == 0);
}

TEST_CASE("exclusion holds across sampled mixed states") {
  for (const auto& dims : std::vector<std::vector<std::size_t>>{{2, 2, 2}, {2, 3, 2}}) {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
      const auto s = qdc_test::random_mixed_state(dims, qdc::stream_seed(1000, seed));
      const auto v = qdc::check_exclusion(s);
      CHECK(v.holds);
      CHECK(v.advantage_count <= 1);
      CHECK(v.slack >= -1e-8);
    }
  }
}

TEST_CASE("pure tripartite exclusion slack is zero") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto s = qdc_test::random_pure_state({2, 2, 2}, qdc::stream_seed(1050, seed));
    CHECK(std::abs(qdc::check_exclusion(s).slack) < 1e-8);
  }
}

TEST_CASE("capacity-sum bound saturates on bell x pure") {
  const auto s = qdc::named_state(NamedState::bell_times_pure, DimensionProfile({2, 2, 2}));
  const auto v = qdc::check_cor1(s);
  CHECK(v.holds);
  CHECK(std::abs(v.lhs - 3.0) < 1e-9);
  CHECK(v.rhs == 3.0);

  const auto ghz = qdc::named_state(NamedState::ghz, DimensionProfile({2, 2, 2}));
  const auto vg = qdc::check_cor1(ghz);
  CHECK(vg.holds);
  CHECK(std::abs(vg.lhs - 2.0) < 1e-9);
}

TEST_CASE("multi-receiver exclusion counts advantages") {
  const auto ghz4 = qdc::named_state(NamedState::ghz, DimensionProfile({2, 2, 2, 2}));
  const auto v = qdc::check_t2(ghz4);
  CHECK(v.holds);
  CHECK(v.advantage_count == 0);

  const auto chained =
      qdc::named_state(NamedState::bell_times_pure, DimensionProfile({2, 2, 2, 2}));
  const auto vb = qdc::check_t2(chained);
  CHECK(vb.holds);
  CHECK(vb.advantage_count == 1);

  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto s = qdc_test::random_mixed_state({2, 2, 2, 2}, qdc::stream_seed(1100, seed));
    CHECK(qdc::check_t2(s).holds);
  }
  CHECK_THROWS_AS(qdc::check_t2(qdc_test::maximally_mixed({2, 2})), std::invalid_argument);
}

TEST_CASE("receiver capacity sums stay under the dimension bound") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto s = qdc_test::random_mixed_state({2, 2, 2, 2}, qdc::stream_seed(1150, seed));
    const auto v = qdc::check_cor2(s);
    CHECK(v.holds);
    CHECK(v.rhs == 4.0);
  }
}

TEST_CASE("receiver monogamy on named states") {
  // GHZ: each single-sender part is 1 + 1 - 1 = 1; the two-sender part is
  // 2 + 1 - 0 = 3 because the global state is pure.
  const auto ghz = qdc::named_state(NamedState::ghz, DimensionProfile({2, 2, 2}));
  const auto vg = qdc::check_receiver_monogamy(ghz);
  CHECK(vg.holds);
  CHECK(std::abs(vg.lhs - 2.0) < 1e-9);
  CHECK(std::abs(vg.rhs - 3.0) < 1e-9);

  const auto bp = qdc::named_state(NamedState::bell_times_pure, DimensionProfile({2, 2, 2}));
  const auto vb = qdc::check_receiver_monogamy(bp);
  CHECK(vb.holds);
  CHECK(std::abs(vb.lhs - 3.0) < 1e-9);
  CHECK(std::abs(vb.rhs - 3.0) < 1e-9);
}

TEST_CASE("receiver monogamy holds across sampled mixed states") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const auto s = qdc_test::random_mixed_state({2, 2, 2}, qdc::stream_seed(1200, seed));
    const auto v = qdc::check_receiver_monogamy(s);
    CHECK(v.holds);
    CHECK(v.slack >= -1e-8);
  }
}

TEST_CASE("maximal-entanglement condition applies to GHZ but not a tilted GHZ") {
  const auto ghz = qdc::named_state(NamedState::ghz, DimensionProfile({2, 2, 2}));
  const auto vg = qdc::check_cor3(ghz);
  CHECK(vg.applicable);
  CHECK(vg.holds);
  CHECK(std::abs(vg.lhs) < 1e-8);  // entanglement deficit

  const auto tilted = tilted_ghz(M_PI / 8.0);
  const auto vt = qdc::check_cor3(tilted);
  CHECK_FALSE(vt.applicable);
  CHECK(vt.holds);  // vacuous
  // Premise rhs is 1 + h(sin^2(pi/8)) ~ 1.6009 < 2, so no boundary flag.
  CHECK_FALSE(vt.premise_near_boundary);

  CHECK_THROWS_AS(qdc::check_cor3(qdc_test::maximally_mixed({2, 2, 2})),
                  std::invalid_argument);
}

TEST_CASE("maximal-entanglement condition holds across sampled pure states") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto s = qdc_test::random_pure_state({2, 2, 2}, qdc::stream_seed(1300, seed));
    CHECK(qdc::check_cor3(s).holds);
  }
}

TEST_CASE("entropy-sum condition on GHZ and the maximally mixed state") {
  const auto ghz = qdc::named_state(NamedState::ghz, DimensionProfile({2, 2, 2}));
  const auto vg = qdc::check_cor4(ghz);
  CHECK(vg.applicable);
  CHECK(vg.holds);
  CHECK(std::abs(vg.lhs - 0.0) < 1e-9);
  CHECK(std::abs(vg.rhs - 3.0) < 1e-9);

  const auto mm = qdc_test::maximally_mixed({2, 2, 2});
  const auto vm = qdc::check_cor4(mm);
  CHECK(vm.applicable);
  CHECK(vm.holds);
  CHECK(std::abs(vm.lhs) < 1e-9);
  CHECK(std::abs(vm.rhs) < 1e-9);
  CHECK(vm.premise_near_boundary);  // premise is an exact equality here
}

TEST_CASE("entropy-sum condition holds across sampled mixed states") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const auto s = qdc_test::random_mixed_state({2, 2, 2}, qdc::stream_seed(1400, seed));
    CHECK(qdc::check_cor4(s).holds);
  }
}

TEST_CASE("discord lower bound on GHZ and W states") {
  const auto ghz = qdc::named_state(NamedState::ghz, DimensionProfile({2, 2, 2}));
  const auto vg = qdc::check_cor5(ghz);
  CHECK(vg.holds);
  CHECK(vg.lhs <= 1e-6);  // both marginal discords vanish
  CHECK(std::abs(vg.rhs - 2.0) < 1e-9);

  const auto w = qdc::named_state(NamedState::w, DimensionProfile({2, 2, 2}));
  const auto vw = qdc::check_cor5(w);
  CHECK(vw.holds);
  const double eof_w = qdc::binary_entropy(0.5 * (1.0 + std::sqrt(5.0) / 3.0));
  CHECK(std::abs(vw.lhs - 2.0 * eof_w) <= 2e-3);
  CHECK(std::abs(vw.rhs - 2.0) < 1e-9);

  CHECK_THROWS_AS(qdc::check_cor5(qdc_test::maximally_mixed({2, 2, 2})),
                  std::invalid_argument);
  CHECK_THROWS_AS(qdc::check_cor5(qdc_test::random_pure_state({2, 2, 3}, 3)),
                  std::invalid_argument);
}

TEST_CASE("discord lower bound holds across sampled pure three-qubit states") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const auto s = qdc_test::random_pure_state({2, 2, 2}, qdc::stream_seed(1500, seed));
    CHECK(qdc::check_cor5(s).holds);
  }
}

TEST_CASE("multi-port monogamy saturates on GHZ states") {
  const auto ghz3 = qdc::named_state(NamedState::ghz, DimensionProfile({2, 2, 2}));
  const auto v3 = qdc::check_multiport_monogamy(ghz3);
  CHECK(v3.holds);
  CHECK(std::abs(v3.lhs - 3.0) < 1e-9);
  CHECK(v3.rhs == 3.0);

  const auto ghz4 = qdc::named_state(NamedState::ghz, DimensionProfile({2, 2, 2, 2}));
  const auto v4 = qdc::check_multiport_monogamy(ghz4);
  CHECK(v4.holds);
  CHECK(std::abs(v4.lhs - 8.0) < 1e-9);
  CHECK(v4.rhs == 8.0);
}

TEST_CASE("multi-port monogamy across sampled states, including mixed dimensions") {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const auto s = qdc_test::random_mixed_state({2, 2, 2, 2}, qdc::stream_seed(1600, seed));
    const auto v = qdc::check_multiport_monogamy(s);
    CHECK(v.holds);
    CHECK(v.advantage_count <= 3);
  }
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto s = qdc_test::random_mixed_state({2, 3, 2}, qdc::stream_seed(1650, seed));
    CHECK(qdc::check_multiport_monogamy(s).holds);
  }
}

TEST_CASE("multi-port slack equals minus the q functional") {
  const auto s = qdc_test::random_mixed_state({2, 2, 2, 2}, 8080);
  const auto v = qdc::check_multiport_monogamy(s);
  CHECK(std::abs(v.slack + qdc::q_functional(s)) < 1e-9);
}

TEST_CASE("noise monotonicity on bell x pure with frozen midpoint") {
  const auto s = qdc::named_state(NamedState::bell_times_pure, DimensionProfile({2, 2, 2}));
  const auto v = qdc::check_noise_monotonicity(s, {0.0, 0.5, 1.0});
  CHECK(v.holds);

  // Endpoints are forced; the p = 1/2 value follows from the spectrum
  // {5/8, 1/8, 1/8, 1/8} of the half-depolarized Bell marginal.
  const double s_mid = -(0.625 * std::log2(0.625) + 3.0 * 0.125 * std::log2(0.125));
  const double expected_mid = 1.0 + 1.0 - s_mid;
  CHECK(std::abs(qdc::dc_quantum_part(qdc::depolarize_party(s, 0, 0.0), {0}, 1) - 2.0) < 1e-9);
  CHECK(std::abs(qdc::dc_quantum_part(qdc::depolarize_party(s, 0, 0.5), {0}, 1) -
                 expected_mid) < 1e-9);
  CHECK(std::abs(qdc::dc_quantum_part(qdc::depolarize_party(s, 0, 1.0), {0}, 1)) < 1e-9);
}

TEST_CASE("noise check at p=0 agrees with the plain exclusion check") {
  const auto s = qdc_test::random_mixed_state({2, 2, 2}, 909);
  const auto noise = qdc::check_noise_monotonicity(s, {0.0});
  const auto excl = qdc::check_exclusion(s);
  CHECK(noise.holds == excl.holds);
  CHECK(noise.slack <= excl.slack + 1e-12);
}

TEST_CASE("noise monotonicity across sampled states") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto s = qdc_test::random_mixed_state({2, 2, 2}, qdc::stream_seed(1700, seed));
    CHECK(qdc::check_noise_monotonicity(s, qdc::kDefaultNoiseGrid).holds);
  }
  CHECK_THROWS_AS(qdc::check_noise_monotonicity(qdc_test::maximally_mixed({2, 2, 2}),
                                                {0.5, 0.25}),
                  std::invalid_argument);
  CHECK_THROWS_AS(qdc::check_noise_monotonicity(qdc_test::maximally_mixed({2, 2, 2}), {1.5}),
                  std::invalid_argument);
}

TEST_CASE("checks are deterministic in the state fingerprint") {
  const auto s = qdc_test::random_mixed_state({2, 2, 2}, 777);
  const auto a = qdc::check_exclusion(s);
  const auto b = qdc::check_exclusion(s);
  CHECK(a.state_fingerprint == b.state_fingerprint);
  CHECK(a.lhs == b.lhs);
  CHECK(a.rhs == b.rhs);
  CHECK(a.slack == b.slack);
  CHECK(a.holds == b.holds);
}

TEST_CASE("verdict slack semantics match the holds flag") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto s = qdc_test::random_mixed_state({2, 2, 2}, qdc::stream_seed(1800, seed));
    for (TheoremId id : {TheoremId::T1, TheoremId::C1, TheoremId::T3, TheoremId::C4}) {
      const auto v = qdc::run_check(id, s);
      if (v.applicable) CHECK(v.holds == (v.slack >= -1e-8));
    }
  }
}

TEST_CASE("theorem id round-trips through strings") {
  for (TheoremId id : qdc::all_theorem_ids())
    CHECK(qdc::theorem_from_string(qdc::to_string(id)) == id);
  CHECK_THROWS_AS(qdc::theorem_from_string("T9"), std::invalid_argument);
}

TEST_CASE("party-count validation on checks") {
  const auto two = qdc_test::maximally_mixed({2, 2});
  CHECK_THROWS_AS(qdc::check_exclusion(two), std::invalid_argument);
  CHECK_THROWS_AS(qdc::check_receiver_monogamy(two), std::invalid_argument);
  CHECK_THROWS_AS(qdc::check_multiport_monogamy(two), std::invalid_argument);
  const auto four = qdc_test::maximally_mixed({2, 2, 2, 2});
  CHECK_THROWS_AS(qdc::check_exclusion(four), std::invalid_argument);
}
