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

#include "qmce/gf2.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <utility>

#include "qmce/errors.h"

namespace qmce {
namespace {

constexpr std::size_t kWordBits = 64;
constexpr int kMaxSamplingAttempts = 1000;

std::size_t word_count(std::size_t len) { return (len + kWordBits - 1) / kWordBits; }

}  // namespace

// ---------------------------------------------------------------- BitVector

BitVector::BitVector(std::size_t len) : len_(len), words_(word_count(len), 0) {}

BitVector BitVector::from_string(std::string_view bits) {
  BitVector v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      v.set(i);
    } else if (bits[i] != '0') {
      throw FormatError("bit string may only contain '0' and '1'");
    }
  }
  return v;
}

BitVector BitVector::from_index(std::uint64_t index, std::size_t len) {
  if (len > 64) {
    throw DimensionError("from_index: length exceeds 64 bits");
  }
  BitVector v(len);
  for (std::size_t i = 0; i < len; ++i) {
    if ((index >> (len - 1 - i)) & 1U) {
      v.set(i);
    }
  }
  return v;
}

BitVector BitVector::unit(std::size_t len, std::size_t position) {
  BitVector v(len);
  v.set(position);
  return v;
}

BitVector BitVector::ones(std::size_t len) {
  BitVector v(len);
  for (std::size_t i = 0; i < len; ++i) {
    v.set(i);
  }
  return v;
}

bool BitVector::get(std::size_t i) const {
  if (i >= len_) {
    throw DimensionError("bit index out of range");
  }
  return (words_[i / kWordBits] >> (i % kWordBits)) & 1U;
}

void BitVector::set(std::size_t i, bool value) {
  if (i >= len_) {
    throw DimensionError("bit index out of range");
  }
  const std::uint64_t mask = std::uint64_t{1} << (i % kWordBits);
  if (value) {
    words_[i / kWordBits] |= mask;
  } else {
    words_[i / kWordBits] &= ~mask;
  }
}

void BitVector::flip(std::size_t i) {
  if (i >= len_) {
    throw DimensionError("bit index out of range");
  }
  words_[i / kWordBits] ^= std::uint64_t{1} << (i % kWordBits);
}

std::size_t BitVector::weight() const noexcept {
  std::size_t w = 0;
  for (auto word : words_) {
    w += static_cast<std::size_t>(std::popcount(word));
  }
  return w;
}

bool BitVector::is_zero() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

bool BitVector::dot(const BitVector& other) const {
  if (other.len_ != len_) {
    throw DimensionError("dot: length mismatch");
  }
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    acc ^= words_[i] & other.words_[i];
  }
  return (std::popcount(acc) & 1) != 0;
}

std::uint64_t BitVector::to_index() const {
  if (len_ > 64) {
    throw DimensionError("to_index: length exceeds 64 bits");
  }
  std::uint64_t index = 0;
  for (std::size_t i = 0; i < len_; ++i) {
    if (get(i)) {
      index |= std::uint64_t{1} << (len_ - 1 - i);
    }
  }
  return index;
}

std::string BitVector::to_string() const {
  std::string s(len_, '0');
  for (std::size_t i = 0; i < len_; ++i) {
    if (get(i)) {
      s[i] = '1';
    }
  }
  return s;
}

BitVector& BitVector::operator^=(const BitVector& other) {
  if (other.len_ != len_) {
    throw DimensionError("xor: length mismatch");
  }
  for (std::size_t i = 0; i < words_.size(); ++i) {
    words_[i] ^= other.words_[i];
  }
  return *this;
}

// ---------------------------------------------------------------- BitMatrix

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols) : cols_(cols), row_data_(rows, BitVector(cols)) {}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m.set(i, i);
  }
  return m;
}

BitMatrix BitMatrix::from_rows(std::vector<BitVector> rows, std::size_t cols) {
  for (const auto& r : rows) {
    if (r.size() != cols) {
      throw DimensionError("from_rows: row length mismatch");
    }
  }
  BitMatrix m;
  m.cols_ = cols;
  m.row_data_ = std::move(rows);
  return m;
}

BitMatrix BitMatrix::from_strings(const std::vector<std::string>& rows) {
  if (rows.empty() || rows.front().empty()) {
    throw FormatError("matrix must have at least one row and one column");
  }
  std::vector<BitVector> parsed;
  parsed.reserve(rows.size());
  for (const auto& s : rows) {
    if (s.size() != rows.front().size()) {
      throw FormatError("matrix rows have unequal lengths");
    }
    parsed.push_back(BitVector::from_string(s));
  }
  return from_rows(std::move(parsed), rows.front().size());
}

BitMatrix BitMatrix::permutation(std::span<const std::size_t> perm) {
  BitMatrix m(perm.size(), perm.size());
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (perm[i] >= perm.size() || seen[perm[i]]) {
      throw ParameterError("not a permutation");
    }
    seen[perm[i]] = true;
    m.set(i, perm[i]);
  }
  return m;
}

BitVector BitMatrix::column(std::size_t c) const {
  BitVector v(rows());
  for (std::size_t r = 0; r < rows(); ++r) {
    if (row_data_[r].get(c)) {
      v.set(r);
    }
  }
  return v;
}

BitMatrix BitMatrix::transpose() const {
  BitMatrix t(cols_, rows());
  for (std::size_t r = 0; r < rows(); ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (row_data_[r].get(c)) {
        t.set(c, r);
      }
    }
  }
  return t;
}

std::vector<std::string> BitMatrix::to_strings() const {
  std::vector<std::string> out;
  out.reserve(rows());
  for (const auto& r : row_data_) {
    out.push_back(r.to_string());
  }
  return out;
}

BitMatrix& BitMatrix::operator^=(const BitMatrix& other) {
  if (other.rows() != rows() || other.cols_ != cols_) {
    throw DimensionError("matrix xor: dimension mismatch");
  }
  for (std::size_t r = 0; r < rows(); ++r) {
    row_data_[r] ^= other.row_data_[r];
  }
  return *this;
}

// ---------------------------------------------------------------- products

BitVector vec_mat(const BitVector& v, const BitMatrix& a) {
  if (v.size() != a.rows()) {
    throw DimensionError("vec_mat: vector length " + std::to_string(v.size()) +
                         " does not match matrix rows " + std::to_string(a.rows()));
  }
  BitVector out(a.cols());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v.get(i)) {
      out ^= a.row(i);
    }
  }
  return out;
}

BitVector mat_vec(const BitMatrix& a, const BitVector& x) {
  if (x.size() != a.cols()) {
    throw DimensionError("mat_vec: vector length does not match matrix columns");
  }
  BitVector out(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    if (a.row(r).dot(x)) {
      out.set(r);
    }
  }
  return out;
}

BitMatrix mat_mul(const BitMatrix& a, const BitMatrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionError("mat_mul: inner dimensions " + std::to_string(a.cols()) + " and " +
                         std::to_string(b.rows()) + " differ");
  }
  BitMatrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    out.row(r) = vec_mat(a.row(r), b);
  }
  return out;
}

BitMatrix hstack(const BitMatrix& left, const BitMatrix& right) {
  if (left.rows() != right.rows()) {
    throw DimensionError("hstack: row counts differ");
  }
  BitMatrix out(left.rows(), left.cols() + right.cols());
  for (std::size_t r = 0; r < left.rows(); ++r) {
    for (std::size_t c = 0; c < left.cols(); ++c) {
      out.set(r, c, left.get(r, c));
    }
    for (std::size_t c = 0; c < right.cols(); ++c) {
      out.set(r, left.cols() + c, right.get(r, c));
    }
  }
  return out;
}

BitMatrix vstack(const BitMatrix& top, const BitMatrix& bottom) {
  if (top.cols() != bottom.cols()) {
    throw DimensionError("vstack: column counts differ");
  }
  std::vector<BitVector> rows;
  rows.reserve(top.rows() + bottom.rows());
  for (std::size_t r = 0; r < top.rows(); ++r) rows.push_back(top.row(r));
  for (std::size_t r = 0; r < bottom.rows(); ++r) rows.push_back(bottom.row(r));
  return BitMatrix::from_rows(std::move(rows), top.cols());
}

// ---------------------------------------------------------------- elimination

RowEchelon row_reduce(const BitMatrix& a) {
  RowEchelon out{a, BitMatrix::identity(a.rows()), {}};
  BitMatrix& m = out.reduced;
  BitMatrix& t = out.transform;
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < m.cols() && pivot_row < m.rows(); ++c) {
    std::size_t r = pivot_row;
    while (r < m.rows() && !m.get(r, c)) {
      ++r;
    }
    if (r == m.rows()) {
      continue;
    }
    std::swap(m.row(r), m.row(pivot_row));
    std::swap(t.row(r), t.row(pivot_row));
    for (std::size_t other = 0; other < m.rows(); ++other) {
      if (other != pivot_row && m.get(other, c)) {
        m.row(other) ^= m.row(pivot_row);
        t.row(other) ^= t.row(pivot_row);
      }
    }
    out.pivot_columns.push_back(c);
    ++pivot_row;
  }
  return out;
}

std::size_t rank(const BitMatrix& a) { return row_reduce(a).pivot_columns.size(); }

BitMatrix invert(const BitMatrix& a) {
  if (a.rows() != a.cols()) {
    throw DimensionError("invert: matrix is not square");
  }
  RowEchelon e = row_reduce(a);
  if (e.pivot_columns.size() != a.rows()) {
    throw SingularMatrix("invert: matrix has rank " + std::to_string(e.pivot_columns.size()) +
                         " < " + std::to_string(a.rows()));
  }
  return std::move(e.transform);
}

BitMatrix right_inverse(const BitMatrix& g) {
  RowEchelon e = row_reduce(g);
  if (e.pivot_columns.size() != g.rows()) {
    throw NotFullRowRank("right_inverse: rank " + std::to_string(e.pivot_columns.size()) +
                         " < " + std::to_string(g.rows()) + " rows");
  }
  // R = T G is in RREF; solving R x = T e_j with free variables zero puts
  // row i of T at pivot position p_i.
  BitMatrix x(g.cols(), g.rows());
  for (std::size_t i = 0; i < e.pivot_columns.size(); ++i) {
    x.row(e.pivot_columns[i]) = e.transform.row(i);
  }
  return x;
}

BitMatrix right_inverse_member(const BitMatrix& g, const BitMatrix& g1inv, const BitMatrix& u) {
  if (g1inv.rows() != g.cols() || g1inv.cols() != g.rows() || u.rows() != g.cols() ||
      u.cols() != g.rows()) {
    throw DimensionError("right_inverse_member: expected n x k inverse and U");
  }
  return g1inv ^ u ^ mat_mul(g1inv, mat_mul(g, u));
}

BitMatrix null_space(const BitMatrix& a) {
  RowEchelon e = row_reduce(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : e.pivot_columns) {
    is_pivot[p] = true;
  }
  std::vector<BitVector> basis;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) {
      continue;
    }
    BitVector x(a.cols());
    x.set(f);
    for (std::size_t i = 0; i < e.pivot_columns.size(); ++i) {
      if (e.reduced.get(i, f)) {
        x.set(e.pivot_columns[i]);
      }
    }
    basis.push_back(std::move(x));
  }
  return BitMatrix::from_rows(std::move(basis), a.cols());
}

bool is_permutation(const BitMatrix& a) {
  if (a.rows() != a.cols()) {
    return false;
  }
  std::vector<bool> column_used(a.cols(), false);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    if (a.row(r).weight() != 1) {
      return false;
    }
    for (std::size_t c = 0; c < a.cols(); ++c) {
      if (a.get(r, c)) {
        if (column_used[c]) {
          return false;
        }
        column_used[c] = true;
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------- sampling

BitVector random_vector(std::size_t len, Rng& rng) {
  BitVector v(len);
  for (std::size_t i = 0; i < len; ++i) {
    if (rng.next_bit()) {
      v.set(i);
    }
  }
  return v;
}

BitVector random_weight_vector(std::size_t len, std::size_t t, Rng& rng, WeightMode mode) {
  if (t > len) {
    throw ParameterError("random_weight_vector: weight " + std::to_string(t) +
                         " exceeds length " + std::to_string(len));
  }
  std::size_t weight = t;
  if (mode == WeightMode::kAtMost && t > 0) {
    // Relative masses C(len, w) / C(len, t), built downward from w = t so
    // nothing overflows at large len.
    std::vector<double> mass(t + 1);
    mass[t] = 1.0;
    for (std::size_t w = t; w > 0; --w) {
      mass[w - 1] = mass[w] * static_cast<double>(w) / static_cast<double>(len - w + 1);
    }
    double total = 0.0;
    for (double m : mass) total += m;
    double x = rng.uniform01() * total;
    weight = t;
    for (std::size_t w = 0; w <= t; ++w) {
      if (x < mass[w]) {
        weight = w;
        break;
      }
      x -= mass[w];
    }
  }
  // Partial Fisher-Yates picks a uniform subset of positions.
  std::vector<std::size_t> positions(len);
  for (std::size_t i = 0; i < len; ++i) positions[i] = i;
  BitVector v(len);
  for (std::size_t i = 0; i < weight; ++i) {
    const std::size_t j = i + rng.uniform_below(len - i);
    std::swap(positions[i], positions[j]);
    v.set(positions[i]);
  }
  return v;
}

BitMatrix random_matrix(std::size_t rows, std::size_t cols, Rng& rng) {
  BitMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    m.row(r) = random_vector(cols, rng);
  }
  return m;
}

BitMatrix random_invertible(std::size_t n, Rng& rng) {
  for (int attempt = 0; attempt < kMaxSamplingAttempts; ++attempt) {
    BitMatrix m = random_matrix(n, n, rng);
    if (rank(m) == n) {
      return m;
    }
  }
  throw InternalError("random_invertible: sampling exhausted");
}

BitMatrix random_full_row_rank(std::size_t rows, std::size_t cols, Rng& rng) {
  if (rows > cols) {
    throw ParameterError("random_full_row_rank: rows exceed columns");
  }
  for (int attempt = 0; attempt < kMaxSamplingAttempts; ++attempt) {
    BitMatrix m = random_matrix(rows, cols, rng);
    if (rank(m) == rows) {
      return m;
    }
  }
  throw InternalError("random_full_row_rank: sampling exhausted");
}

std::vector<std::size_t> random_permutation_indices(std::size_t n, Rng& rng) {
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  for (std::size_t i = n; i > 1; --i) {
    std::swap(perm[i - 1], perm[rng.uniform_below(i)]);
  }
  return perm;
}

BitMatrix random_permutation(std::size_t n, Rng& rng) {
  const auto perm = random_permutation_indices(n, rng);
  return BitMatrix::permutation(perm);
}

// ---------------------------------------------------------------- JSON

void to_json(nlohmann::json& j, const BitVector& v) { j = v.to_string(); }

void from_json(const nlohmann::json& j, BitVector& v) {
  if (!j.is_string()) {
    throw FormatError("bit vector must be a '0'/'1' string");
  }
  v = BitVector::from_string(j.get<std::string>());
}

void to_json(nlohmann::json& j, const BitMatrix& m) { j = m.to_strings(); }

void from_json(const nlohmann::json& j, BitMatrix& m) {
  if (!j.is_array()) {
    throw FormatError("bit matrix must be an array of row strings");
  }
  std::vector<std::string> rows;
  for (const auto& r : j) {
    if (!r.is_string()) {
      throw FormatError("bit matrix rows must be strings");
    }
    rows.push_back(r.get<std::string>());
  }
  m = BitMatrix::from_strings(rows);
}

}  // namespace qmce
