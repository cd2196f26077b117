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

#ifndef QMCE_CODES_H
#define QMCE_CODES_H

#include <cstddef>
#include <cstdint>
#include <unordered_map>

#include <boost/multiprecision/cpp_int.hpp>
#include <nlohmann/json.hpp>

#include "qmce/gf2.h"

namespace qmce {

/// Largest code length for which minimum distance and the syndrome table
/// are computed by exhaustive enumeration.
inline constexpr std::size_t kMaxExhaustiveCodeLength = 24;

/// Binary [n, k, d] code with an exact syndrome-table decoder for errors
/// of weight <= t.
class LinearCode {
 public:
  /// Validates G (full row rank) and H (G H^T = 0, rank n - k), computes d
  /// by enumeration and builds the table. Throws ParameterError when t
  /// exceeds floor((d - 1) / 2) or the table has a collision.
  LinearCode(BitMatrix generator, BitMatrix parity_check, std::size_t t);

  std::size_t n() const noexcept { return generator_.cols(); }
  std::size_t k() const noexcept { return generator_.rows(); }
  std::size_t d() const noexcept { return distance_; }
  std::size_t t() const noexcept { return t_; }
  const BitMatrix& generator() const noexcept { return generator_; }
  const BitMatrix& parity_check() const noexcept { return parity_check_; }
  std::size_t syndrome_table_size() const noexcept { return table_.size(); }

  BitVector encode(const BitVector& message) const;
  BitVector syndrome(const BitVector& word) const;
  /// Minimal-weight error with the given syndrome; throws UnknownSyndrome
  /// if no error of weight <= t produces it.
  BitVector decode_error(const BitVector& syndrome) const;

 private:
  BitMatrix generator_;
  BitMatrix parity_check_;
  std::size_t distance_ = 0;
  std::size_t t_ = 0;
  std::unordered_map<std::uint64_t, BitVector> table_;
};

/// Minimum nonzero codeword weight, by Gray-code enumeration of all 2^k
/// messages.
std::size_t minimum_distance(const BitMatrix& generator);

/// Standard-form [7,4,3] Hamming code, G = [I | A], t = 1.
LinearCode hamming_7_4();

/// Random [n, k] code: full-row-rank G, H from its null space, true d,
/// and t = min(requested_t, floor((d - 1) / 2)). Requires n <= 24, k < n.
LinearCode random_code(std::size_t n, std::size_t k, std::size_t requested_t, std::uint64_t seed);

void to_json(nlohmann::json& j, const LinearCode& code);
/// Rebuilds the syndrome table; the stored d must match the recomputed one.
LinearCode code_from_json(const nlohmann::json& j);

using BigInt = boost::multiprecision::cpp_int;

BigInt binomial(std::size_t n, std::size_t r);

/// Enumerative (combinadic) constant-weight code: k-bit messages map to
/// the first 2^k weight-t strings of length n in lexicographic order.
class ConstantWeightCode {
 public:
  ConstantWeightCode(std::size_t n, std::size_t t);

  std::size_t n() const noexcept { return n_; }
  std::size_t t() const noexcept { return t_; }
  /// floor(log2 C(n, t)).
  std::size_t k() const noexcept { return k_; }

  BitVector encode(const BitVector& message) const;
  /// Throws DecodeError for wrong weight or words outside the image.
  BitVector decode(const BitVector& word) const;

  /// Lexicographic rank among all weight-t strings of length n.
  BigInt rank_of(const BitVector& word) const;
  BitVector unrank(const BigInt& index) const;

 private:
  std::size_t n_;
  std::size_t t_;
  std::size_t k_;
};

}  // namespace qmce

#endif  // QMCE_CODES_H
