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

#include "qmce/qsim.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>
#include <utility>

#include "qmce/errors.h"

namespace qmce {
namespace {

constexpr int kFormatVersion = 1;
constexpr double kJsonNormTolerance = 1e-6;

void check_qubits(std::size_t qubits, const SimLimits& limits) {
  if (qubits > limits.max_qubits || qubits >= 63) {
    throw QubitCapExceeded("state of " + std::to_string(qubits) + " qubits exceeds the cap of " +
                           std::to_string(limits.max_qubits));
  }
}

double squared_norm(std::span<const Amplitude> amps) {
  double total = 0.0;
  for (const auto& a : amps) total += std::norm(a);
  return total;
}

void check_mask(const StateVector& s, const BitVector& mask, const char* op) {
  if (mask.size() != s.qubits()) {
    throw DimensionError(std::string(op) + ": mask length " + std::to_string(mask.size()) +
                         " does not match " + std::to_string(s.qubits()) + " qubits");
  }
}

void check_register(const StateVector& s, std::size_t first, std::size_t count) {
  if (count == 0) {
    throw ParameterError("register range is empty");
  }
  if (first + count > s.qubits()) {
    throw DimensionError("register range exceeds the state");
  }
}

// Limits for results no larger than an existing state.
SimLimits same_size(const StateVector& s) { return SimLimits{std::max(kDefaultQubitCap, s.qubits())}; }

}  // namespace

// ---------------------------------------------------------------- StateVector

StateVector::StateVector(std::size_t qubits, std::vector<Amplitude> amplitudes, const SimLimits& limits)
    : qubits_(qubits), amplitudes_(std::move(amplitudes)) {
  check_qubits(qubits, limits);
  if (amplitudes_.size() != (std::size_t{1} << qubits)) {
    throw DimensionError("state of " + std::to_string(qubits) + " qubits needs 2^" + std::to_string(qubits) +
                         " amplitudes");
  }
  const double n2 = squared_norm(amplitudes_);
  if (std::abs(n2 - 1.0) > kNormTolerance) {
    throw ParameterError("state is not normalized (|psi|^2 = " + std::to_string(n2) + ")");
  }
}

StateVector StateVector::normalized(std::size_t qubits, std::vector<Amplitude> amplitudes,
                                    const SimLimits& limits) {
  const double n2 = squared_norm(amplitudes);
  if (!(n2 > 0.0)) {
    throw ParameterError("cannot normalize the zero vector");
  }
  const double scale = 1.0 / std::sqrt(n2);
  for (auto& a : amplitudes) a *= scale;
  return StateVector(qubits, std::move(amplitudes), limits);
}

Amplitude StateVector::amplitude(const BitVector& basis) const {
  if (basis.size() != qubits_) {
    throw DimensionError("basis label length does not match qubit count");
  }
  return amplitudes_.at(basis.to_index());
}

double StateVector::norm() const { return std::sqrt(squared_norm(amplitudes_)); }

StateVector basis_state(const BitVector& bits, const SimLimits& limits) {
  check_qubits(bits.size(), limits);
  std::vector<Amplitude> amps(std::size_t{1} << bits.size());
  amps[bits.to_index()] = 1.0;
  return StateVector(bits.size(), std::move(amps), limits);
}

StateVector random_state(std::size_t qubits, Rng& rng, const SimLimits& limits) {
  check_qubits(qubits, limits);
  std::vector<Amplitude> amps(std::size_t{1} << qubits);
  for (auto& a : amps) {
    const double re = rng.normal();
    const double im = rng.normal();
    a = Amplitude(re, im);
  }
  return StateVector::normalized(qubits, std::move(amps), limits);
}

StateVector tensor(const StateVector& a, const StateVector& b, const SimLimits& limits) {
  const std::size_t q = a.qubits() + b.qubits();
  check_qubits(q, limits);
  std::vector<Amplitude> amps(std::size_t{1} << q);
  for (std::size_t i = 0; i < a.dimension(); ++i) {
    for (std::size_t j = 0; j < b.dimension(); ++j) {
      amps[i * b.dimension() + j] = a.amplitude(i) * b.amplitude(j);
    }
  }
  return StateVector(q, std::move(amps), limits);
}

Amplitude inner_product(const StateVector& a, const StateVector& b) {
  if (a.qubits() != b.qubits()) {
    throw DimensionError("inner_product: qubit counts differ");
  }
  Amplitude acc = 0.0;
  for (std::size_t i = 0; i < a.dimension(); ++i) {
    acc += std::conj(a.amplitude(i)) * b.amplitude(i);
  }
  return acc;
}

double fidelity(const StateVector& a, const StateVector& b) {
  return std::min(1.0, std::abs(inner_product(a, b)));
}

double max_abs_difference(const StateVector& a, const StateVector& b) {
  if (a.qubits() != b.qubits()) {
    throw DimensionError("max_abs_difference: qubit counts differ");
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < a.dimension(); ++i) {
    worst = std::max(worst, std::abs(a.amplitude(i) - b.amplitude(i)));
  }
  return worst;
}

// ---------------------------------------------------------------- basis maps

std::vector<std::uint64_t> row_index_masks(const BitMatrix& g) {
  if (g.cols() > 64) {
    throw DimensionError("row_index_masks: more than 64 columns");
  }
  std::vector<std::uint64_t> masks(g.rows());
  for (std::size_t r = 0; r < g.rows(); ++r) masks[r] = g.row(r).to_index();
  return masks;
}

std::uint64_t map_index(std::uint64_t m, std::span<const std::uint64_t> masks) {
  const std::size_t k = masks.size();
  std::uint64_t out = 0;
  for (std::size_t i = 0; i < k; ++i) {
    if ((m >> (k - 1 - i)) & 1U) out ^= masks[i];
  }
  return out;
}

StateVector apply_isometry(const StateVector& s, const BitMatrix& g, const SimLimits& limits) {
  if (g.rows() != s.qubits()) {
    throw DimensionError("apply_isometry: matrix has " + std::to_string(g.rows()) + " rows for a " +
                         std::to_string(s.qubits()) + "-qubit state");
  }
  if (rank(g) != g.rows()) {
    throw NotFullRowRank("apply_isometry: m -> mG is not injective");
  }
  check_qubits(g.cols(), limits);
  const auto masks = row_index_masks(g);
  std::vector<Amplitude> out(std::size_t{1} << g.cols());
  for (std::uint64_t m = 0; m < s.dimension(); ++m) {
    out[map_index(m, masks)] = s.amplitude(m);
  }
  return StateVector(g.cols(), std::move(out), limits);
}

StateVector apply_isometry_inverse(const StateVector& s, const BitMatrix& g) {
  if (g.cols() != s.qubits()) {
    throw DimensionError("apply_isometry_inverse: matrix has " + std::to_string(g.cols()) +
                         " columns for a " + std::to_string(s.qubits()) + "-qubit state");
  }
  const BitMatrix inverse = right_inverse(g);
  const auto forward = row_index_masks(g);
  const auto backward = row_index_masks(inverse);
  std::vector<Amplitude> out(std::size_t{1} << g.rows());
  for (std::uint64_t c = 0; c < s.dimension(); ++c) {
    const Amplitude a = s.amplitude(c);
    if (std::abs(a) <= kSupportTolerance) {
      continue;
    }
    const std::uint64_t m = map_index(c, backward);
    if (map_index(m, forward) != c) {
      throw SupportOutsideImage("basis state " + BitVector::from_index(c, s.qubits()).to_string() +
                                " is not in the row space of the matrix");
    }
    out[m] = a;
  }
  return StateVector::normalized(g.rows(), std::move(out), same_size(s));
}

StateVector apply_basis_map(const StateVector& s, std::size_t out_qubits,
                            const std::function<std::uint64_t(std::uint64_t)>& map,
                            const SimLimits& limits) {
  check_qubits(out_qubits, limits);
  std::vector<Amplitude> out(std::size_t{1} << out_qubits);
  std::vector<bool> used(out.size(), false);
  for (std::uint64_t b = 0; b < s.dimension(); ++b) {
    const Amplitude a = s.amplitude(b);
    if (std::abs(a) <= kSupportTolerance) {
      continue;
    }
    const std::uint64_t image = map(b);
    if (image >= out.size()) {
      throw DimensionError("apply_basis_map: image index out of range");
    }
    if (used[image]) {
      throw ParameterError("apply_basis_map: map is not injective on the support");
    }
    used[image] = true;
    out[image] = a;
  }
  return StateVector::normalized(out_qubits, std::move(out), limits);
}

StateVector apply_x(const StateVector& s, const BitVector& e) {
  check_mask(s, e, "apply_x");
  const std::uint64_t mask = e.to_index();
  std::vector<Amplitude> out(s.dimension());
  for (std::uint64_t m = 0; m < s.dimension(); ++m) {
    out[m ^ mask] = s.amplitude(m);
  }
  return StateVector(s.qubits(), std::move(out), same_size(s));
}

StateVector apply_z(const StateVector& s, const BitVector& b) {
  check_mask(s, b, "apply_z");
  const std::uint64_t mask = b.to_index();
  std::vector<Amplitude> out(s.amplitudes().begin(), s.amplitudes().end());
  for (std::uint64_t m = 0; m < out.size(); ++m) {
    if (std::popcount(m & mask) & 1) out[m] = -out[m];
  }
  return StateVector(s.qubits(), std::move(out), same_size(s));
}

StateVector apply_h_all(const StateVector& s) {
  std::vector<Amplitude> a(s.amplitudes().begin(), s.amplitudes().end());
  for (std::size_t half = 1; half < a.size(); half <<= 1) {
    for (std::size_t block = 0; block < a.size(); block += 2 * half) {
      for (std::size_t i = block; i < block + half; ++i) {
        const Amplitude x = a[i];
        const Amplitude y = a[i + half];
        a[i] = x + y;
        a[i + half] = x - y;
      }
    }
  }
  const double scale = std::pow(2.0, -0.5 * static_cast<double>(s.qubits()));
  for (auto& x : a) x *= scale;
  return StateVector(s.qubits(), std::move(a), same_size(s));
}

// ---------------------------------------------------------------- measurement

std::vector<double> register_distribution(const StateVector& s, std::size_t first, std::size_t count) {
  check_register(s, first, count);
  const std::size_t shift = s.qubits() - first - count;
  const std::uint64_t mask = (std::uint64_t{1} << count) - 1;
  std::vector<double> p(std::size_t{1} << count, 0.0);
  for (std::uint64_t b = 0; b < s.dimension(); ++b) {
    p[(b >> shift) & mask] += std::norm(s.amplitude(b));
  }
  return p;
}

Measurement measure_register(const StateVector& s, std::size_t first, std::size_t count, Rng& rng) {
  const auto p = register_distribution(s, first, count);
  // Inverse-CDF sampling; trailing zero-probability outcomes are skipped so
  // round-off cannot select them.
  double x = rng.uniform01();
  std::size_t outcome = p.size();
  std::size_t last_nonzero = 0;
  for (std::size_t v = 0; v < p.size(); ++v) {
    if (p[v] <= 0.0) continue;
    last_nonzero = v;
    if (x < p[v]) {
      outcome = v;
      break;
    }
    x -= p[v];
  }
  if (outcome == p.size()) outcome = last_nonzero;

  const std::size_t shift = s.qubits() - first - count;
  const std::uint64_t mask = (std::uint64_t{1} << count) - 1;
  std::vector<Amplitude> out(s.dimension());
  for (std::uint64_t b = 0; b < s.dimension(); ++b) {
    if (((b >> shift) & mask) == outcome) out[b] = s.amplitude(b);
  }
  return Measurement{BitVector::from_index(outcome, count), p[outcome],
                     StateVector::normalized(s.qubits(), std::move(out), same_size(s))};
}

StateVector discard_register(const StateVector& s, std::size_t first, std::size_t count, const BitVector& value) {
  check_register(s, first, count);
  if (value.size() != count) {
    throw DimensionError("discard_register: value length does not match register");
  }
  const auto p = register_distribution(s, first, count);
  const std::uint64_t v = value.to_index();
  if (std::abs(p[v] - 1.0) > kNormTolerance) {
    throw ParameterError("discard_register: register is not in the basis state " + value.to_string());
  }
  const std::size_t rest = s.qubits() - count;
  const std::size_t low_bits = s.qubits() - first - count;
  const std::uint64_t low_mask = (std::uint64_t{1} << low_bits) - 1;
  std::vector<Amplitude> out(std::size_t{1} << rest);
  for (std::uint64_t r = 0; r < out.size(); ++r) {
    const std::uint64_t high = r >> low_bits;
    const std::uint64_t low = r & low_mask;
    const std::uint64_t full = (((high << count) | v) << low_bits) | low;
    out[r] = s.amplitude(full);
  }
  return StateVector::normalized(rest, std::move(out), same_size(s));
}

std::vector<double> computational_distribution(const StateVector& s) {
  std::vector<double> p(s.dimension());
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = std::norm(s.amplitude(i));
  return p;
}

std::vector<double> xbasis_distribution(const StateVector& s) {
  return computational_distribution(apply_h_all(s));
}

double total_variation(std::span<const double> p, std::span<const double> q) {
  if (p.size() != q.size()) {
    throw DimensionError("total_variation: distributions differ in size");
  }
  double acc = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) acc += std::abs(p[i] - q[i]);
  return 0.5 * acc;
}

// ---------------------------------------------------------------- JSON

nlohmann::json state_to_json(const StateVector& s) {
  nlohmann::json amps = nlohmann::json::array();
  for (const auto& a : s.amplitudes()) {
    amps.push_back({a.real(), a.imag()});
  }
  return nlohmann::json{{"format_version", kFormatVersion}, {"qubits", s.qubits()}, {"amplitudes", std::move(amps)}};
}

StateVector state_from_json(const nlohmann::json& j, const SimLimits& limits) {
  try {
    if (j.at("format_version").get<int>() != kFormatVersion) {
      throw FormatError("unsupported state format_version");
    }
    const auto qubits = j.at("qubits").get<std::size_t>();
    check_qubits(qubits, limits);
    const auto& arr = j.at("amplitudes");
    if (!arr.is_array() || arr.size() != (std::size_t{1} << qubits)) {
      throw FormatError("amplitude count does not match qubits");
    }
    std::vector<Amplitude> amps;
    amps.reserve(arr.size());
    for (const auto& pair : arr) {
      if (!pair.is_array() || pair.size() != 2) {
        throw FormatError("each amplitude must be [re, im]");
      }
      amps.emplace_back(pair[0].get<double>(), pair[1].get<double>());
    }
    const double n2 = squared_norm(amps);
    if (std::abs(std::sqrt(n2) - 1.0) > kJsonNormTolerance) {
      throw FormatError("state norm deviates from 1 by more than 1e-6");
    }
    if (std::abs(std::sqrt(n2) - 1.0) <= kNormTolerance) {
      return StateVector(qubits, std::move(amps), limits);
    }
    return StateVector::normalized(qubits, std::move(amps), limits);
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("state JSON: ") + e.what());
  }
}

}  // namespace qmce
