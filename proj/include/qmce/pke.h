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

#ifndef QMCE_PKE_H
#define QMCE_PKE_H

#include <cstddef>
#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>
#include <nlohmann/json.hpp>

#include "qmce/codes.h"
#include "qmce/gf2.h"
#include "qmce/qsim.h"
#include "qmce/rng.h"

namespace qmce {

/// Scrambled generator G' = SGP and error weight t.
struct PublicKey {
  BitMatrix g_prime;
  std::size_t t = 0;

  std::size_t k() const noexcept { return g_prime.rows(); }
  std::size_t n() const noexcept { return g_prime.cols(); }
};

/// (S, code, P) with S invertible and P a permutation.
class PrivateKey {
 public:
  PrivateKey(BitMatrix scrambler, LinearCode code, BitMatrix permutation);

  const BitMatrix& scrambler() const noexcept { return scrambler_; }
  const BitMatrix& scrambler_inverse() const noexcept { return scrambler_inverse_; }
  const LinearCode& code() const noexcept { return code_; }
  const BitMatrix& permutation() const noexcept { return permutation_; }
  const BitMatrix& permutation_inverse() const noexcept { return permutation_inverse_; }

  PublicKey public_key() const;

 private:
  BitMatrix scrambler_;
  BitMatrix scrambler_inverse_;
  LinearCode code_;
  BitMatrix permutation_;
  BitMatrix permutation_inverse_;
};

struct KeyPair {
  PublicKey public_key;
  PrivateKey private_key;
};

/// Samples S and P from the seed and forms G' = SGP.
KeyPair keygen(const LinearCode& code, std::uint64_t seed);
/// Assembles a key pair from explicit S and P (validated).
KeyPair keygen_from_parts(BitMatrix scrambler, const LinearCode& code, BitMatrix permutation);

/// Sum_m a_m |m> -> Sum_m a_m |mG' ^ r> with a fresh r drawn from rng.
/// The error vector is not returned.
StateVector encrypt(const PublicKey& pk, const StateVector& message, Rng& rng,
                    WeightMode mode = WeightMode::kExact, const SimLimits& limits = {});
/// Deterministic core of encrypt() for a caller-chosen error vector.
StateVector encrypt_with_error(const PublicKey& pk, const StateVector& message, const BitVector& error,
                               const SimLimits& limits = {});

struct DecryptOptions {
  /// Route the syndrome through an ancilla register and a sampled
  /// measurement instead of reading it off the support.
  bool simulate_syndrome_measurement = false;
  std::uint64_t measurement_seed = 0;
  SimLimits limits;
};

/// The syndrome of the P^-1-reindexed cipher, i.e. rP^-1 H^T. Every basis
/// state in the support must agree; throws SupportOutsideImage otherwise.
BitVector decryption_syndrome(const PrivateKey& sk, const StateVector& cipher);

/// Undo P, read the syndrome, strip the decoded error, then map
/// mSG -> mS -> m. Throws UnknownSyndrome when the error exceeded t and
/// SupportOutsideImage for malformed ciphers.
StateVector decrypt(const PrivateKey& sk, const StateVector& cipher, const DecryptOptions& options = {});

// ---------------------------------------------------------------- double encryption

struct DoublePublicKey {
  PublicKey first;   // [n, k]
  PublicKey second;  // [n', n]
};

/// Two key pairs where the second layer encrypts the first layer's n qubits.
class DoubleKey {
 public:
  DoubleKey(KeyPair first, KeyPair second);

  const KeyPair& first() const noexcept { return first_; }
  const KeyPair& second() const noexcept { return second_; }
  DoublePublicKey public_keys() const { return {first_.public_key, second_.public_key}; }

 private:
  KeyPair first_;
  KeyPair second_;
};

/// Random [n_prime, k] code with t taken from its true distance; seeds are
/// re-derived until t >= 1.
LinearCode second_layer_code(std::size_t n_prime, std::size_t k, std::uint64_t seed);

DoubleKey keygen_double(const LinearCode& first, const LinearCode& second, std::uint64_t seed);

/// encrypt_2 . H^n . encrypt_1
StateVector encrypt_double(const DoublePublicKey& pk, const StateVector& message, Rng& rng,
                           WeightMode mode = WeightMode::kExact, const SimLimits& limits = {});
StateVector encrypt_double_with_errors(const DoublePublicKey& pk, const StateVector& message,
                                       const BitVector& first_error, const BitVector& second_error,
                                       const SimLimits& limits = {});
/// decrypt_1 . H^n . decrypt_2
StateVector decrypt_double(const DoubleKey& key, const StateVector& cipher, const DecryptOptions& options = {});

// ---------------------------------------------------------------- parameter arithmetic

using Rational = boost::multiprecision::cpp_rational;

struct ExpansionReport {
  Rational cipher_expansion;   // n' / k
  Rational key_bit_expansion;  // (n' + n) / n
};

ExpansionReport expansion_report(std::size_t k, std::size_t n, std::size_t n_prime);

// ---------------------------------------------------------------- key files

nlohmann::json public_key_to_json(const PublicKey& pk);
PublicKey public_key_from_json(const nlohmann::json& j);
nlohmann::json private_key_to_json(const PrivateKey& sk);
PrivateKey private_key_from_json(const nlohmann::json& j);
/// With include_private = false only the two public halves are written.
nlohmann::json double_key_to_json(const DoubleKey& key, bool include_private);
DoublePublicKey double_public_key_from_json(const nlohmann::json& j);
DoubleKey double_key_from_json(const nlohmann::json& j);

}  // namespace qmce

#endif  // QMCE_PKE_H
