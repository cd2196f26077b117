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

#ifndef QMCE_QSIM_H
#define QMCE_QSIM_H

#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include <nlohmann/json.hpp>

#include "qmce/gf2.h"
#include "qmce/rng.h"

namespace qmce {

using Amplitude = std::complex<double>;

inline constexpr double kNormTolerance = 1e-9;
/// Amplitudes with magnitude at or below this are treated as outside the
/// support by the basis-map inverses (Walsh-Hadamard round-off lands far
/// below it).
inline constexpr double kSupportTolerance = 1e-12;
inline constexpr std::size_t kDefaultQubitCap = 24;

struct SimLimits {
  std::size_t max_qubits = kDefaultQubitCap;
};

/// Normalized pure state over q qubits. Basis index b = sum_i b_i 2^(q-1-i):
/// qubit 0 is the leftmost bit and the most significant index bit.
class StateVector {
 public:
  /// Throws DimensionError on a size mismatch, QubitCapExceeded above the
  /// cap and ParameterError if the norm is off by more than kNormTolerance.
  StateVector(std::size_t qubits, std::vector<Amplitude> amplitudes, const SimLimits& limits = {});

  /// Rescales to unit norm first; throws ParameterError for the zero vector.
  static StateVector normalized(std::size_t qubits, std::vector<Amplitude> amplitudes,
                                const SimLimits& limits = {});

  std::size_t qubits() const noexcept { return qubits_; }
  std::size_t dimension() const noexcept { return amplitudes_.size(); }
  std::span<const Amplitude> amplitudes() const noexcept { return amplitudes_; }
  Amplitude amplitude(std::uint64_t index) const { return amplitudes_.at(index); }
  Amplitude amplitude(const BitVector& basis) const;
  double norm() const;

 private:
  std::size_t qubits_;
  std::vector<Amplitude> amplitudes_;
};

StateVector basis_state(const BitVector& bits, const SimLimits& limits = {});
/// Haar-like random state: i.i.d. complex Gaussian amplitudes, normalized.
StateVector random_state(std::size_t qubits, Rng& rng, const SimLimits& limits = {});
/// a occupies the leading qubits.
StateVector tensor(const StateVector& a, const StateVector& b, const SimLimits& limits = {});

Amplitude inner_product(const StateVector& a, const StateVector& b);
/// |<a|b>|, clamped to [0, 1].
double fidelity(const StateVector& a, const StateVector& b);
/// max_i |a_i - b_i|.
double max_abs_difference(const StateVector& a, const StateVector& b);

/// Sum_m a_m |m> -> Sum_m a_m |mG> as an amplitude re-index. Throws
/// NotFullRowRank when m -> mG is not injective.
StateVector apply_isometry(const StateVector& s, const BitMatrix& g, const SimLimits& limits = {});

/// Inverse of apply_isometry on states supported in the row space of G.
/// Throws SupportOutsideImage for any supported basis state outside it.
StateVector apply_isometry_inverse(const StateVector& s, const BitMatrix& g);

/// Generic injective basis map |b> -> |map(b)> into out_qubits qubits.
/// Throws ParameterError if two supported basis states collide.
StateVector apply_basis_map(const StateVector& s, std::size_t out_qubits,
                            const std::function<std::uint64_t(std::uint64_t)>& map,
                            const SimLimits& limits = {});

/// X(e): a_m -> a_(m ^ e).
StateVector apply_x(const StateVector& s, const BitVector& e);
/// Z(b): a_m -> (-1)^(b.m) a_m.
StateVector apply_z(const StateVector& s, const BitVector& b);
/// Normalized H on every qubit (fast Walsh-Hadamard transform).
StateVector apply_h_all(const StateVector& s);

/// Marginal distribution of qubits [first, first + count), indexed by the
/// register value (qubit `first` most significant).
std::vector<double> register_distribution(const StateVector& s, std::size_t first, std::size_t count);

struct Measurement {
  BitVector outcome;
  double probability;
  StateVector collapsed;
};

/// Samples the register from its marginal and renormalizes the rest. The
/// collapsed state keeps all q qubits.
Measurement measure_register(const StateVector& s, std::size_t first, std::size_t count, Rng& rng);

/// Drops a register that holds the given value with certainty (e.g. right
/// after measuring it) and returns the state of the remaining qubits.
/// Throws ParameterError if the register is not in that basis state.
StateVector discard_register(const StateVector& s, std::size_t first, std::size_t count,
                             const BitVector& value);

std::vector<double> computational_distribution(const StateVector& s);
/// Exact |<x|H^q|s>|^2 for every x.
std::vector<double> xbasis_distribution(const StateVector& s);
double total_variation(std::span<const double> p, std::span<const double> q);

/// Row images of G as basis indices; mask i is the index of row i.
std::vector<std::uint64_t> row_index_masks(const BitMatrix& g);
/// Index of mG given the index of m (k input bits).
std::uint64_t map_index(std::uint64_t m, std::span<const std::uint64_t> masks);

nlohmann::json state_to_json(const StateVector& s);
/// Rejects norm deviation above 1e-6, then renormalizes.
StateVector state_from_json(const nlohmann::json& j, const SimLimits& limits = {});

}  // namespace qmce

#endif  // QMCE_QSIM_H
