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

#ifndef QMCE_ATTACKS_H
#define QMCE_ATTACKS_H

#include <cstddef>
#include <cstdint>
#include <functional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "qmce/gf2.h"
#include "qmce/pke.h"
#include "qmce/qsim.h"

namespace qmce {

// ---------------------------------------------------------------- ciphertext transforms

struct AttackOutcome {
  /// Measured r(I ^ G'^- G').
  BitVector leak;
  /// X(rG'^-) applied to the original message.
  StateVector residual_state;
  /// The right inverse G'^- used for the transform.
  BitMatrix applied_inverse;
};

/// I ^ X G for a right inverse X of G (n x n). Its kernel contains the
/// row space of G, so its rank is at most n - k.
BitMatrix complement_projector(const BitMatrix& g, const BitMatrix& right_inv);

/// Maps |c> to |c ^ cG'^-G'>|cG'^-> for the family member selected by U,
/// measures the first register and keeps the second.
///
/// On an honest cipher the first register always equals r(I ^ G'^-G'), so
/// the measurement is deterministic and the residual is X(rG'^-)|psi>.
AttackOutcome attack_transform(const PublicKey& pk, const StateVector& cipher, const BitMatrix& u,
                               std::uint64_t measurement_seed = 0, const SimLimits& limits = {});

struct DoubleAttackOutcome {
  AttackOutcome outer;        // against G2'; residual is X(r2 G2'^-) of the H-layer state
  StateVector after_hadamard; // Z(r2 G2'^-) Sum_m a_m |mG1' ^ r1>
  AttackOutcome inner;        // against G1'
};

/// Outer transform on G2', H on all n qubits, inner transform on G1'.
DoubleAttackOutcome attack_transform_double(const DoublePublicKey& pk, const StateVector& cipher,
                                            const BitMatrix& u_second, const BitMatrix& u_first,
                                            std::uint64_t measurement_seed = 0, const SimLimits& limits = {});

/// c G2'^-; bit i equals m_i ^ r.e_i for the i-th column e_i.
BitVector classical_bit_leak(const BitVector& cipher, const BitMatrix& right_inv);

// ---------------------------------------------------------------- low-weight search

inline constexpr std::size_t kMaxExhaustiveSearchLength = 20;

enum class SearchEngine { kGreedy, kRandom, kExhaustive };

std::string_view engine_name(SearchEngine engine);
SearchEngine parse_engine(std::string_view name);

struct SearchResult {
  std::size_t column = 0;
  BitVector u;       // chosen column of U
  BitVector e;       // g_i ^ (I ^ G1'^- G') u
  std::size_t weight = 0;
  SearchEngine engine = SearchEngine::kGreedy;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
};

/// e for a given u; the search engines' results must reproduce through it.
BitVector search_error_vector(const BitMatrix& g1inv, const BitMatrix& g_prime, std::size_t column,
                              const BitVector& u);

/// Looks for u making column `column` of the right inverse
/// G1'^- ^ U ^ G1'^- G' U light.
///
/// greedy: steepest single-bit descent from u = 0, then from `budget`
///   random starting points (the same points the random engine samples,
///   so greedy never does worse than random at equal budget and seed).
/// random: best of `budget` uniform u.
/// exhaustive: all 2^n u; throws BudgetError above n = 20.
SearchResult low_weight_search(const BitMatrix& g1inv, const BitMatrix& g_prime, std::size_t column,
                               SearchEngine engine, std::uint64_t budget, std::uint64_t seed);

struct SearchInstance {
  BitMatrix g_prime;
  BitMatrix g1inv;
};

/// Random full-row-rank k x n G' and its canonical right inverse.
SearchInstance random_search_instance(std::size_t n, std::size_t k, std::uint64_t seed);

// ---------------------------------------------------------------- exact leak probability

/// Pr[r.e = 0] for r uniform over weight-t vectors of length n and a fixed
/// e of weight w: sum over even j of C(w,j) C(n-w,t-j) / C(n,t).
Rational prob_r_dot_e_zero(std::size_t n, std::size_t t, std::size_t w);

/// Decimal expansion rounded to `significant` digits (fixed notation).
std::string to_decimal(const Rational& value, int significant = 30);

// ---------------------------------------------------------------- distinguishability

enum class MeasurementBasis { kComputational, kX };

using StatePreparer = std::function<StateVector(Rng&)>;

struct DistinguishabilityReport {
  std::uint64_t trials = 0;
  double tv_estimate = 0.0;      // 1/2 sum |p_a - p_b| over empirical frequencies
  double chi_square = 0.0;       // two-sample homogeneity statistic
  std::size_t degrees_of_freedom = 0;
  double z = 0.0;                // (chi2 - dof) / sqrt(2 dof)
};

/// Each trial prepares a fresh state from both sides and measures it in the
/// given basis. Trial i draws from streams derived from (seed, i), so the
/// result does not depend on evaluation order. Throws ParameterError for
/// zero trials.
DistinguishabilityReport distinguishability_trial(const StatePreparer& prep_a, const StatePreparer& prep_b,
                                                  MeasurementBasis basis, std::uint64_t trials,
                                                  std::uint64_t seed);

// ---------------------------------------------------------------- CSV reports

struct SearchRecord {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t t = 0;
  SearchResult result;
};

/// First line is "# config: <json>", then a header and one row per record.
void write_search_report(std::ostream& out, const nlohmann::json& config, std::span<const SearchRecord> records);

struct AttackRecord {
  std::string layer;
  std::uint64_t u_seed = 0;
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t t = 0;
  BitVector leak;
  std::size_t projector_rank = 0;  // rank of I ^ G'^- G'
  std::size_t residual_qubits = 0;
};

AttackRecord make_attack_record(std::string layer, std::uint64_t u_seed, const PublicKey& pk,
                                const AttackOutcome& outcome);

void write_attack_report(std::ostream& out, const nlohmann::json& config, std::span<const AttackRecord> records);

}  // namespace qmce

#endif  // QMCE_ATTACKS_H
