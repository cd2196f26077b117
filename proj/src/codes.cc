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

#include "qmce/codes.h"

#include <bit>
#include <functional>
#include <string>
#include <utility>

#include "qmce/errors.h"

namespace qmce {
namespace {

constexpr int kFormatVersion = 1;

// Calls fn on every length-n vector of weight w, in lexicographic order of
// the chosen position sets.
void for_each_weight_vector(std::size_t n, std::size_t w, const std::function<void(const BitVector&)>& fn) {
  std::vector<std::size_t> pos(w);
  for (std::size_t i = 0; i < w; ++i) pos[i] = i;
  while (true) {
    BitVector v(n);
    for (auto p : pos) v.set(p);
    fn(v);
    // Advance to the next combination.
    std::size_t i = w;
    while (i > 0 && pos[i - 1] == n - w + (i - 1)) {
      --i;
    }
    if (i == 0) {
      return;
    }
    ++pos[i - 1];
    for (std::size_t j = i; j < w; ++j) {
      pos[j] = pos[j - 1] + 1;
    }
  }
}

BigInt message_to_integer(const BitVector& message) {
  BigInt x = 0;
  for (std::size_t i = 0; i < message.size(); ++i) {
    x <<= 1;
    if (message.get(i)) x |= 1;
  }
  return x;
}

BitVector integer_to_message(BigInt x, std::size_t k) {
  BitVector m(k);
  for (std::size_t i = k; i > 0; --i) {
    if ((x & 1) != 0) m.set(i - 1);
    x >>= 1;
  }
  return m;
}

}  // namespace

std::size_t minimum_distance(const BitMatrix& generator) {
  const std::size_t k = generator.rows();
  if (k == 0 || k >= 64) {
    throw ParameterError("minimum_distance: unsupported dimension");
  }
  if (generator.cols() > kMaxExhaustiveCodeLength) {
    throw BudgetError("minimum_distance: length exceeds exhaustive limit");
  }
  std::vector<std::uint64_t> rows(k);
  for (std::size_t r = 0; r < k; ++r) rows[r] = generator.row(r).to_index();
  std::uint64_t word = 0;
  std::size_t best = generator.cols() + 1;
  for (std::uint64_t i = 1; i < (std::uint64_t{1} << k); ++i) {
    word ^= rows[static_cast<std::size_t>(std::countr_zero(i))];
    const auto w = static_cast<std::size_t>(std::popcount(word));
    if (w < best) best = w;
  }
  // best stays at n + 1 only when some nonzero message encodes to 0.
  if (best == generator.cols() + 1 || best == 0) {
    throw NotFullRowRank("minimum_distance: generator is not injective");
  }
  return best;
}

// ---------------------------------------------------------------- LinearCode

LinearCode::LinearCode(BitMatrix generator, BitMatrix parity_check, std::size_t t)
    : generator_(std::move(generator)), parity_check_(std::move(parity_check)), t_(t) {
  const std::size_t len = n();
  if (k() == 0 || k() >= len) {
    throw ParameterError("code requires 0 < k < n");
  }
  if (len > kMaxExhaustiveCodeLength) {
    throw BudgetError("code length " + std::to_string(len) + " exceeds the exhaustive limit of " +
                      std::to_string(kMaxExhaustiveCodeLength));
  }
  if (rank(generator_) != k()) {
    throw NotFullRowRank("generator matrix is not full row rank");
  }
  if (parity_check_.cols() != len || parity_check_.rows() != len - k() ||
      rank(parity_check_) != len - k()) {
    throw ParameterError("parity-check matrix must be (n-k) x n with full rank");
  }
  const BitMatrix check_t = parity_check_.transpose();
  if (mat_mul(generator_, check_t) != BitMatrix(k(), len - k())) {
    throw ParameterError("G H^T != 0");
  }
  distance_ = minimum_distance(generator_);
  if (t_ > (distance_ - 1) / 2) {
    throw ParameterError("t = " + std::to_string(t_) + " exceeds floor((d-1)/2) for d = " +
                         std::to_string(distance_));
  }
  for (std::size_t w = 0; w <= t_; ++w) {
    for_each_weight_vector(len, w, [&](const BitVector& e) {
      const std::uint64_t key = vec_mat(e, check_t).to_index();
      if (!table_.emplace(key, e).second) {
        throw ParameterError("syndrome collision at weight " + std::to_string(w));
      }
    });
  }
}

BitVector LinearCode::encode(const BitVector& message) const {
  if (message.size() != k()) {
    throw DimensionError("encode: message length must be k");
  }
  return vec_mat(message, generator_);
}

BitVector LinearCode::syndrome(const BitVector& word) const {
  if (word.size() != n()) {
    throw DimensionError("syndrome: word length must be n");
  }
  return mat_vec(parity_check_, word);
}

BitVector LinearCode::decode_error(const BitVector& syndrome) const {
  if (syndrome.size() != n() - k()) {
    throw DimensionError("decode_error: syndrome length must be n - k");
  }
  const auto it = table_.find(syndrome.to_index());
  if (it == table_.end()) {
    throw UnknownSyndrome("syndrome " + syndrome.to_string() + " is not produced by any error of weight <= " +
                          std::to_string(t_));
  }
  return it->second;
}

LinearCode hamming_7_4() {
  BitMatrix g = BitMatrix::from_strings({
      "1000110",
      "0100101",
      "0010011",
      "0001111",
  });
  BitMatrix h = BitMatrix::from_strings({
      "1101100",
      "1011010",
      "0111001",
  });
  return LinearCode(std::move(g), std::move(h), 1);
}

LinearCode random_code(std::size_t n, std::size_t k, std::size_t requested_t, std::uint64_t seed) {
  if (n > kMaxExhaustiveCodeLength) {
    throw BudgetError("random_code: n exceeds the exhaustive limit");
  }
  if (k == 0 || k >= n) {
    throw ParameterError("random_code: requires 0 < k < n");
  }
  Rng rng(seed);
  BitMatrix g = random_full_row_rank(k, n, rng);
  BitMatrix h = null_space(g);
  const std::size_t d = minimum_distance(g);
  const std::size_t t = std::min(requested_t, (d - 1) / 2);
  return LinearCode(std::move(g), std::move(h), t);
}

void to_json(nlohmann::json& j, const LinearCode& code) {
  j = nlohmann::json{{"format_version", kFormatVersion},
                     {"n", code.n()},
                     {"k", code.k()},
                     {"d", code.d()},
                     {"t", code.t()},
                     {"G", code.generator()},
                     {"H", code.parity_check()}};
}

LinearCode code_from_json(const nlohmann::json& j) {
  try {
    if (j.at("format_version").get<int>() != kFormatVersion) {
      throw FormatError("unsupported code format_version");
    }
    LinearCode code(j.at("G").get<BitMatrix>(), j.at("H").get<BitMatrix>(), j.at("t").get<std::size_t>());
    if (code.n() != j.at("n").get<std::size_t>() || code.k() != j.at("k").get<std::size_t>() ||
        code.d() != j.at("d").get<std::size_t>()) {
      throw FormatError("code header (n, k, d) disagrees with the matrices");
    }
    return code;
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("code JSON: ") + e.what());
  }
}

// ---------------------------------------------------------------- constant weight

BigInt binomial(std::size_t n, std::size_t r) {
  if (r > n) return 0;
  if (r > n - r) r = n - r;
  BigInt c = 1;
  for (std::size_t i = 1; i <= r; ++i) {
    c *= n - r + i;
    c /= i;
  }
  return c;
}

ConstantWeightCode::ConstantWeightCode(std::size_t n, std::size_t t) : n_(n), t_(t), k_(0) {
  if (t > n) {
    throw ParameterError("constant-weight code requires t <= n");
  }
  const BigInt count = binomial(n, t);
  k_ = static_cast<std::size_t>(boost::multiprecision::msb(count));
  if (k_ == 0) {
    throw ParameterError("constant-weight code has fewer than two codewords");
  }
}

BitVector ConstantWeightCode::unrank(const BigInt& index) const {
  BigInt x = index;
  std::size_t remaining = t_;
  BitVector w(n_);
  for (std::size_t i = 0; i < n_ && remaining > 0; ++i) {
    // Strings with a 0 here come first.
    const BigInt with_zero = binomial(n_ - i - 1, remaining);
    if (x >= with_zero) {
      w.set(i);
      x -= with_zero;
      --remaining;
    }
  }
  return w;
}

BigInt ConstantWeightCode::rank_of(const BitVector& word) const {
  if (word.size() != n_ || word.weight() != t_) {
    throw DecodeError("word has wrong length or weight for this constant-weight code");
  }
  BigInt x = 0;
  std::size_t remaining = t_;
  for (std::size_t i = 0; i < n_ && remaining > 0; ++i) {
    if (word.get(i)) {
      x += binomial(n_ - i - 1, remaining);
      --remaining;
    }
  }
  return x;
}

BitVector ConstantWeightCode::encode(const BitVector& message) const {
  if (message.size() != k_) {
    throw DimensionError("cw_encode: message length must be k = " + std::to_string(k_));
  }
  return unrank(message_to_integer(message));
}

BitVector ConstantWeightCode::decode(const BitVector& word) const {
  const BigInt x = rank_of(word);
  if (x >= (BigInt(1) << k_)) {
    throw DecodeError("word lies outside the image of the message space");
  }
  return integer_to_message(x, k_);
}

}  // namespace qmce
