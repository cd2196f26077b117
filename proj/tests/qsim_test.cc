// Copyright 2026 The qmce Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include <nlohmann/json.hpp>

#include "oracles.h"
#include "qmce/codes.h"
#include "qmce/errors.h"
#include "qmce/qsim.h"
#include "qmce/rng.h"

namespace qmce {
namespace {

StateVector bell() {
  const double h = 1.0 / std::sqrt(2.0);
  return StateVector(2, {h, 0.0, 0.0, h});
}

TEST(StateVector, RejectsBadNormAndCap) {
  EXPECT_THROW(StateVector(1, {1.0, 1.0}), ParameterError);
  EXPECT_THROW(StateVector(2, {1.0, 0.0}), DimensionError);
  EXPECT_THROW(basis_state(BitVector(5), SimLimits{4}), QubitCapExceeded);
}

TEST(Fidelity, Examples) {
  Rng rng(1);
  const StateVector s = random_state(5, rng);
  EXPECT_NEAR(fidelity(s, s), 1.0, 1e-12);
  EXPECT_NEAR(fidelity(basis_state(BitVector::from_string("0")), basis_state(BitVector::from_string("1"))), 0.0,
              1e-15);
  EXPECT_NEAR(fidelity(bell(), basis_state(BitVector::from_string("00"))), 1.0 / std::sqrt(2.0), 1e-12);
  EXPECT_THROW(fidelity(s, basis_state(BitVector(3))), DimensionError);
}

TEST(Tensor, LeadingQubitsComeFromFirstFactor) {
  const StateVector t = tensor(basis_state(BitVector::from_string("10")), basis_state(BitVector::from_string("1")));
  EXPECT_NEAR(std::abs(t.amplitude(BitVector::from_string("101"))), 1.0, 1e-15);
}

TEST(Isometry, IdentityMap) {
  Rng rng(2);
  const StateVector s = random_state(4, rng);
  EXPECT_EQ(max_abs_difference(apply_isometry(s, BitMatrix::identity(4)), s), 0.0);
}

TEST(Isometry, BasisStateGoesToCodeword) {
  const LinearCode code = hamming_7_4();
  const StateVector out = apply_isometry(basis_state(BitVector::from_string("1000")), code.generator());
  EXPECT_NEAR(std::abs(out.amplitude(BitVector::from_string("1000110"))), 1.0, 1e-15);
}

TEST(Isometry, SuperpositionStaysNormalized) {
  const LinearCode code = hamming_7_4();
  const double h = 1.0 / std::sqrt(2.0);
  std::vector<Amplitude> amps(16);
  amps[3] = h;
  amps[12] = h;
  const StateVector out = apply_isometry(StateVector(4, amps), code.generator());
  EXPECT_NEAR(out.norm(), 1.0, 1e-12);
  EXPECT_NEAR(out.amplitude(code.encode(BitVector::from_index(3, 4))).real(), h, 1e-15);
  EXPECT_NEAR(out.amplitude(code.encode(BitVector::from_index(12, 4))).real(), h, 1e-15);
}

TEST(Isometry, RankDeficientThrows) {
  EXPECT_THROW(apply_isometry(basis_state(BitVector(2)), BitMatrix::from_strings({"110", "110"})), NotFullRowRank);
}

TEST(IsometryInverse, RoundTrip) {
  Rng rng(3);
  for (int i = 0; i < 50; ++i) {
    const BitMatrix g = random_full_row_rank(5, 11, rng);
    const StateVector s = random_state(5, rng);
    EXPECT_LE(max_abs_difference(apply_isometry_inverse(apply_isometry(s, g), g), s), 1e-12);
  }
}

TEST(IsometryInverse, CodewordTableRecoversMessage) {
  const LinearCode code = hamming_7_4();
  Rng rng(4);
  const StateVector msg = random_state(4, rng);
  std::vector<Amplitude> amps(128);
  for (std::uint64_t m = 0; m < 16; ++m) {
    amps[code.encode(BitVector::from_index(m, 4)).to_index()] = msg.amplitude(m);
  }
  EXPECT_LE(max_abs_difference(apply_isometry_inverse(StateVector(7, amps), code.generator()), msg), 1e-15);
}

TEST(IsometryInverse, NonCodewordThrows) {
  const LinearCode code = hamming_7_4();
  EXPECT_THROW(apply_isometry_inverse(basis_state(BitVector::unit(7, 6)), code.generator()), SupportOutsideImage);
}

TEST(Paulis, ZeroMasksAreIdentity) {
  Rng rng(5);
  const StateVector s = random_state(6, rng);
  EXPECT_EQ(max_abs_difference(apply_x(s, BitVector(6)), s), 0.0);
  EXPECT_EQ(max_abs_difference(apply_z(s, BitVector(6)), s), 0.0);
  EXPECT_THROW(apply_x(s, BitVector(5)), DimensionError);
}

TEST(Paulis, XReindexesAndZSigns) {
  Rng rng(6);
  const StateVector s = random_state(5, rng);
  const BitVector e = BitVector::from_string("10110");
  const StateVector x = apply_x(s, e);
  const StateVector z = apply_z(s, e);
  for (std::uint64_t m = 0; m < 32; ++m) {
    EXPECT_EQ(x.amplitude(m), s.amplitude(m ^ e.to_index()));
    const double sign = (std::popcount(m & e.to_index()) & 1) ? -1.0 : 1.0;
    EXPECT_EQ(z.amplitude(m), sign * s.amplitude(m));
  }
}

TEST(Hadamard, MatchesNaiveTransform) {
  Rng rng(7);
  for (std::size_t q = 1; q <= 7; ++q) {
    const StateVector s = random_state(q, rng);
    const auto oracle = testing::naive_hadamard(s);
    const StateVector h = apply_h_all(s);
    for (std::uint64_t i = 0; i < s.dimension(); ++i) EXPECT_LE(std::abs(h.amplitude(i) - oracle[i]), 1e-12);
  }
}

TEST(Hadamard, Involution) {
  Rng rng(8);
  for (int i = 0; i < 20; ++i) {
    const StateVector s = random_state(1 + i % 10, rng);
    EXPECT_LE(max_abs_difference(apply_h_all(apply_h_all(s)), s), 1e-12);
  }
}

TEST(Hadamard, ConjugatesXIntoZ) {
  Rng rng(9);
  for (int i = 0; i < 50; ++i) {
    const StateVector s = random_state(6, rng);
    const BitVector e = random_vector(6, rng);
    EXPECT_LE(max_abs_difference(apply_h_all(apply_x(s, e)), apply_z(apply_h_all(s), e)), 1e-12);
  }
}

TEST(Measure, ZeroStateIsDeterministic) {
  Rng rng(10);
  const Measurement m = measure_register(basis_state(BitVector(4)), 0, 4, rng);
  EXPECT_TRUE(m.outcome.is_zero());
  EXPECT_NEAR(m.probability, 1.0, 1e-15);
  EXPECT_THROW(measure_register(basis_state(BitVector(4)), 2, 0, rng), ParameterError);
  EXPECT_THROW(measure_register(basis_state(BitVector(4)), 2, 3, rng), Error);
}

TEST(Measure, BellStatisticsWithinThreeSigma) {
  const int trials = 10000;
  int ones = 0;
  Rng rng(11);
  for (int i = 0; i < trials; ++i) {
    const Measurement m = measure_register(bell(), 0, 1, rng);
    if (m.outcome.get(0)) {
      ++ones;
      EXPECT_NEAR(std::abs(m.collapsed.amplitude(3)), 1.0, 1e-12);
    }
  }
  const double sigma = std::sqrt(trials * 0.25);
  EXPECT_LE(std::abs(ones - trials / 2.0), 3.0 * sigma);
}

TEST(Measure, ClassicalRegisterLeavesRestUntouched) {
  Rng rng(12);
  const StateVector data = random_state(3, rng);
  const StateVector joined = tensor(data, basis_state(BitVector::from_string("101")));
  const Measurement m = measure_register(joined, 3, 3, rng);
  EXPECT_EQ(m.outcome.to_string(), "101");
  const StateVector rest = discard_register(m.collapsed, 3, 3, m.outcome);
  EXPECT_NEAR(fidelity(rest, data), 1.0, 1e-12);
}

TEST(Measure, SameSeedSameOutcomes) {
  Rng rng(13);
  const StateVector s = random_state(6, rng);
  Rng a(99);
  Rng b(99);
  for (int i = 0; i < 50; ++i) {
    EXPECT_EQ(measure_register(s, 1, 4, a).outcome, measure_register(s, 1, 4, b).outcome);
  }
}

TEST(XBasis, ZeroStateIsUniformAndPlusIsPointMass) {
  const auto uniform = xbasis_distribution(basis_state(BitVector(3)));
  for (double p : uniform) EXPECT_NEAR(p, 1.0 / 8.0, 1e-15);
  const double h = 1.0 / std::sqrt(2.0);
  const auto point = xbasis_distribution(StateVector(1, {h, h}));
  EXPECT_NEAR(point[0], 1.0, 1e-15);
  EXPECT_NEAR(point[1], 0.0, 1e-15);
}

TEST(XBasis, InvariantUnderXMasks) {
  Rng rng(14);
  for (int i = 0; i < 50; ++i) {
    const StateVector s = random_state(5, rng);
    const BitVector e = random_vector(5, rng);
    const auto a = xbasis_distribution(s);
    const auto b = xbasis_distribution(apply_x(s, e));
    EXPECT_LE(total_variation(a, b), 1e-12);
  }
}

TEST(FidelityIdentity, ShiftedOverlap) {
  Rng rng(15);
  for (int i = 0; i < 50; ++i) {
    const StateVector s = random_state(4, rng);
    for (std::uint64_t e = 0; e < 16; ++e) {
      EXPECT_NEAR(fidelity(apply_x(s, BitVector::from_index(e, 4)), s), std::abs(testing::shifted_overlap(s, e)),
                  1e-12);
    }
  }
  const StateVector basis = basis_state(BitVector::from_string("0110"));
  EXPECT_EQ(fidelity(apply_x(basis, BitVector::from_string("0001")), basis), 0.0);
}

TEST(Json, StateRoundTripAndLoaderChecks) {
  Rng rng(16);
  const StateVector s = random_state(3, rng);
  const StateVector back = state_from_json(state_to_json(s));
  EXPECT_EQ(max_abs_difference(back, s), 0.0);
  nlohmann::json j = state_to_json(s);
  j["amplitudes"][0][0] = j["amplitudes"][0][0].get<double>() + 0.01;
  EXPECT_THROW(state_from_json(j), Error);
  j = state_to_json(s);
  j["format_version"] = 2;
  EXPECT_THROW(state_from_json(j), FormatError);
}

}  // namespace
}  // namespace qmce
