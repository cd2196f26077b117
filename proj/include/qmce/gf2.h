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

#ifndef QMCE_GF2_H
#define QMCE_GF2_H

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "qmce/rng.h"

namespace qmce {

/// Row vector over GF(2), bit-packed.
///
/// Bit 0 is the leftmost character of the textual form and the most
/// significant bit of the basis-state index (see to_index()). Pad bits in
/// the last word are always zero.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t len);

  /// Parses a string of '0'/'1' characters.
  static BitVector from_string(std::string_view bits);
  /// Inverse of to_index(): bit i is index bit (len - 1 - i).
  static BitVector from_index(std::uint64_t index, std::size_t len);
  static BitVector unit(std::size_t len, std::size_t position);
  static BitVector ones(std::size_t len);

  std::size_t size() const noexcept { return len_; }
  bool get(std::size_t i) const;
  void set(std::size_t i, bool value = true);
  void flip(std::size_t i);

  std::size_t weight() const noexcept;
  bool is_zero() const noexcept;
  /// Inner product mod 2.
  bool dot(const BitVector& other) const;
  /// Basis-state index; requires size() <= 64.
  std::uint64_t to_index() const;
  std::string to_string() const;

  BitVector& operator^=(const BitVector& other);
  friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
  friend bool operator==(const BitVector&, const BitVector&) = default;

  std::span<const std::uint64_t> words() const noexcept { return words_; }

 private:
  std::size_t len_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Dense matrix over GF(2), stored as packed rows.
///
/// Zero-row matrices are allowed; they arise as bases of trivial null
/// spaces.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols);

  static BitMatrix identity(std::size_t n);
  static BitMatrix from_rows(std::vector<BitVector> rows, std::size_t cols);
  static BitMatrix from_strings(const std::vector<std::string>& rows);
  /// Permutation matrix with a 1 at (i, perm[i]), so (vP)[perm[i]] = v[i].
  static BitMatrix permutation(std::span<const std::size_t> perm);

  std::size_t rows() const noexcept { return row_data_.size(); }
  std::size_t cols() const noexcept { return cols_; }

  bool get(std::size_t r, std::size_t c) const { return row_data_.at(r).get(c); }
  void set(std::size_t r, std::size_t c, bool value = true) { row_data_.at(r).set(c, value); }
  const BitVector& row(std::size_t r) const { return row_data_.at(r); }
  BitVector& row(std::size_t r) { return row_data_.at(r); }
  BitVector column(std::size_t c) const;

  BitMatrix transpose() const;
  std::vector<std::string> to_strings() const;

  BitMatrix& operator^=(const BitMatrix& other);
  friend BitMatrix operator^(BitMatrix a, const BitMatrix& b) { return a ^= b; }
  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t cols_ = 0;
  std::vector<BitVector> row_data_;
};

BitMatrix mat_mul(const BitMatrix& a, const BitMatrix& b);
/// Row vector times matrix: vA.
BitVector vec_mat(const BitVector& v, const BitMatrix& a);
/// Matrix times column vector: Ax, returned as a vector of length rows.
BitVector mat_vec(const BitMatrix& a, const BitVector& x);

inline BitMatrix operator*(const BitMatrix& a, const BitMatrix& b) { return mat_mul(a, b); }
inline BitVector operator*(const BitVector& v, const BitMatrix& a) { return vec_mat(v, a); }

BitMatrix hstack(const BitMatrix& left, const BitMatrix& right);
BitMatrix vstack(const BitMatrix& top, const BitMatrix& bottom);

/// Reduced row echelon form with the elimination recorded:
/// transform * input == reduced. Pivots are chosen leftmost-first.
struct RowEchelon {
  BitMatrix reduced;
  BitMatrix transform;
  std::vector<std::size_t> pivot_columns;
};

RowEchelon row_reduce(const BitMatrix& a);
std::size_t rank(const BitMatrix& a);

/// Throws SingularMatrix unless a is square with full rank.
BitMatrix invert(const BitMatrix& a);

/// Canonical X with GX = I for full-row-rank G (k x n, k <= n).
/// Free variables are zero; throws NotFullRowRank.
BitMatrix right_inverse(const BitMatrix& g);

/// Member G1inv ^ U ^ G1inv*G*U of the right-inverse family of G.
/// Every n x k matrix U yields a right inverse, and every right inverse
/// arises this way.
BitMatrix right_inverse_member(const BitMatrix& g, const BitMatrix& g1inv, const BitMatrix& u);

/// Basis (as rows) of {x : A x^T = 0}; zero rows when A has full column rank.
BitMatrix null_space(const BitMatrix& a);

bool is_permutation(const BitMatrix& a);

// Sampling. Every routine consumes the caller's stream only, so results
// are a pure function of the seed.

enum class WeightMode {
  kExact,     // weight exactly t
  kAtMost,    // uniform over all vectors of weight <= t
};

BitVector random_vector(std::size_t len, Rng& rng);
BitVector random_weight_vector(std::size_t len, std::size_t t, Rng& rng,
                               WeightMode mode = WeightMode::kExact);
BitMatrix random_matrix(std::size_t rows, std::size_t cols, Rng& rng);
BitMatrix random_invertible(std::size_t n, Rng& rng);
BitMatrix random_full_row_rank(std::size_t rows, std::size_t cols, Rng& rng);
std::vector<std::size_t> random_permutation_indices(std::size_t n, Rng& rng);
BitMatrix random_permutation(std::size_t n, Rng& rng);

// JSON: a vector is one '0'/'1' string, a matrix an array of row strings.
void to_json(nlohmann::json& j, const BitVector& v);
void from_json(const nlohmann::json& j, BitVector& v);
void to_json(nlohmann::json& j, const BitMatrix& m);
void from_json(const nlohmann::json& j, BitMatrix& m);

}  // namespace qmce

#endif  // QMCE_GF2_H
