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

#include "qmce/pke.h"

#include <optional>
#include <string>
#include <utility>

#include "qmce/errors.h"

namespace qmce {
namespace {

constexpr int kFormatVersion = 1;
constexpr int kMaxSecondLayerSeeds = 64;

void check_version(const nlohmann::json& j, const char* expected_kind) {
  if (j.at("format_version").get<int>() != kFormatVersion) {
    throw FormatError("unsupported key format_version");
  }
  if (j.at("kind").get<std::string>() != expected_kind) {
    throw FormatError(std::string("expected a key file of kind '") + expected_kind + "'");
  }
}

template <typename Fn>
auto with_json_errors(const char* what, Fn&& fn) {
  try {
    return fn();
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string(what) + ": " + e.what());
  }
}

}  // namespace

// ---------------------------------------------------------------- keys

PrivateKey::PrivateKey(BitMatrix scrambler, LinearCode code, BitMatrix permutation)
    : scrambler_(std::move(scrambler)), code_(std::move(code)), permutation_(std::move(permutation)) {
  if (scrambler_.rows() != code_.k() || scrambler_.cols() != code_.k()) {
    throw DimensionError("scrambler must be k x k");
  }
  if (permutation_.rows() != code_.n() || !is_permutation(permutation_)) {
    throw ParameterError("P must be an n x n permutation matrix");
  }
  scrambler_inverse_ = invert(scrambler_);
  permutation_inverse_ = permutation_.transpose();
}

PublicKey PrivateKey::public_key() const {
  return PublicKey{mat_mul(mat_mul(scrambler_, code_.generator()), permutation_), code_.t()};
}

KeyPair keygen_from_parts(BitMatrix scrambler, const LinearCode& code, BitMatrix permutation) {
  PrivateKey sk(std::move(scrambler), code, std::move(permutation));
  PublicKey pk = sk.public_key();
  return KeyPair{std::move(pk), std::move(sk)};
}

KeyPair keygen(const LinearCode& code, std::uint64_t seed) {
  Rng rng(seed);
  BitMatrix s = random_invertible(code.k(), rng);
  BitMatrix p = random_permutation(code.n(), rng);
  KeyPair keys = keygen_from_parts(std::move(s), code, std::move(p));
  if (rank(keys.public_key.g_prime) != code.k()) {
    throw InternalError("keygen: G' lost rank");
  }
  return keys;
}

// ---------------------------------------------------------------- single layer

StateVector encrypt_with_error(const PublicKey& pk, const StateVector& message, const BitVector& error,
                               const SimLimits& limits) {
  if (message.qubits() != pk.k()) {
    throw DimensionError("encrypt: message has " + std::to_string(message.qubits()) + " qubits, key expects " +
                         std::to_string(pk.k()));
  }
  if (error.size() != pk.n()) {
    throw DimensionError("encrypt: error vector length must be n");
  }
  return apply_x(apply_isometry(message, pk.g_prime, limits), error);
}

StateVector encrypt(const PublicKey& pk, const StateVector& message, Rng& rng, WeightMode mode,
                    const SimLimits& limits) {
  const BitVector error = random_weight_vector(pk.n(), pk.t, rng, mode);
  return encrypt_with_error(pk, message, error, limits);
}

BitVector decryption_syndrome(const PrivateKey& sk, const StateVector& cipher) {
  const LinearCode& code = sk.code();
  if (cipher.qubits() != code.n()) {
    throw DimensionError("decrypt: cipher has " + std::to_string(cipher.qubits()) + " qubits, key expects " +
                         std::to_string(code.n()));
  }
  const StateVector unpermuted = apply_isometry(cipher, sk.permutation_inverse());
  std::optional<BitVector> syndrome;
  for (std::uint64_t c = 0; c < unpermuted.dimension(); ++c) {
    if (std::abs(unpermuted.amplitude(c)) <= kSupportTolerance) continue;
    BitVector s = code.syndrome(BitVector::from_index(c, code.n()));
    if (!syndrome) {
      syndrome = std::move(s);
    } else if (*syndrome != s) {
      throw SupportOutsideImage("cipher support spans more than one syndrome");
    }
  }
  return *syndrome;
}

StateVector decrypt(const PrivateKey& sk, const StateVector& cipher, const DecryptOptions& options) {
  const LinearCode& code = sk.code();
  if (cipher.qubits() != code.n()) {
    throw DimensionError("decrypt: cipher has " + std::to_string(cipher.qubits()) + " qubits, key expects " +
                         std::to_string(code.n()));
  }
  StateVector state = apply_isometry(cipher, sk.permutation_inverse(), options.limits);

  BitVector syndrome;
  if (options.simulate_syndrome_measurement) {
    // |c>|0> -> |c>|cH^T>, then measure and drop the ancilla.
    const BitMatrix with_syndrome = hstack(BitMatrix::identity(code.n()), code.parity_check().transpose());
    const StateVector extended = apply_isometry(state, with_syndrome, options.limits);
    Rng rng(options.measurement_seed);
    Measurement m = measure_register(extended, code.n(), code.n() - code.k(), rng);
    // A cipher whose support spans several syndromes would collapse here
    // instead of failing; reject it like the direct route does.
    if (std::abs(m.probability - 1.0) > kNormTolerance) {
      throw SupportOutsideImage("syndrome measurement was not deterministic");
    }
    syndrome = m.outcome;
    state = discard_register(m.collapsed, code.n(), code.n() - code.k(), syndrome);
  } else {
    syndrome = decryption_syndrome(sk, cipher);
  }

  const BitVector error = code.decode_error(syndrome);
  state = apply_x(state, error);
  state = apply_isometry_inverse(state, code.generator());
  return apply_isometry(state, sk.scrambler_inverse(), options.limits);
}

// ---------------------------------------------------------------- double layer

DoubleKey::DoubleKey(KeyPair first, KeyPair second) : first_(std::move(first)), second_(std::move(second)) {
  if (second_.public_key.k() != first_.public_key.n()) {
    throw DimensionError("double key: second layer must encrypt " + std::to_string(first_.public_key.n()) +
                         " qubits");
  }
}

LinearCode second_layer_code(std::size_t n_prime, std::size_t k, std::uint64_t seed) {
  for (int attempt = 0; attempt < kMaxSecondLayerSeeds; ++attempt) {
    LinearCode code = random_code(n_prime, k, n_prime, derive_seed(seed, static_cast<std::uint64_t>(attempt)));
    if (code.t() >= 1) {
      return code;
    }
  }
  throw ParameterError("no [" + std::to_string(n_prime) + "," + std::to_string(k) +
                       "] code with d >= 3 found for this seed");
}

DoubleKey keygen_double(const LinearCode& first, const LinearCode& second, std::uint64_t seed) {
  return DoubleKey(keygen(first, derive_seed(seed, 0)), keygen(second, derive_seed(seed, 1)));
}

StateVector encrypt_double_with_errors(const DoublePublicKey& pk, const StateVector& message,
                                       const BitVector& first_error, const BitVector& second_error,
                                       const SimLimits& limits) {
  if (pk.second.k() != pk.first.n()) {
    throw DimensionError("double key: layer dimensions are incompatible");
  }
  const StateVector inner = encrypt_with_error(pk.first, message, first_error, limits);
  return encrypt_with_error(pk.second, apply_h_all(inner), second_error, limits);
}

StateVector encrypt_double(const DoublePublicKey& pk, const StateVector& message, Rng& rng, WeightMode mode,
                           const SimLimits& limits) {
  if (pk.second.k() != pk.first.n()) {
    throw DimensionError("double key: layer dimensions are incompatible");
  }
  const StateVector inner = encrypt(pk.first, message, rng, mode, limits);
  return encrypt(pk.second, apply_h_all(inner), rng, mode, limits);
}

StateVector decrypt_double(const DoubleKey& key, const StateVector& cipher, const DecryptOptions& options) {
  DecryptOptions inner_options = options;
  inner_options.measurement_seed = derive_seed(options.measurement_seed, 1);
  const StateVector outer = decrypt(key.second().private_key, cipher, options);
  return decrypt(key.first().private_key, apply_h_all(outer), inner_options);
}

ExpansionReport expansion_report(std::size_t k, std::size_t n, std::size_t n_prime) {
  if (k == 0 || n == 0 || n_prime == 0) {
    throw ParameterError("expansion_report: parameters must be positive");
  }
  using boost::multiprecision::cpp_int;
  return ExpansionReport{Rational(cpp_int(n_prime), cpp_int(k)), Rational(cpp_int(n_prime + n), cpp_int(n))};
}

// ---------------------------------------------------------------- JSON

nlohmann::json public_key_to_json(const PublicKey& pk) {
  return nlohmann::json{{"format_version", kFormatVersion},
                        {"kind", "public"},
                        {"parameters", {{"n", pk.n()}, {"k", pk.k()}, {"t", pk.t}}},
                        {"matrices", {{"G_prime", pk.g_prime}}}};
}

PublicKey public_key_from_json(const nlohmann::json& j) {
  return with_json_errors("public key", [&] {
    check_version(j, "public");
    PublicKey pk{j.at("matrices").at("G_prime").get<BitMatrix>(), j.at("parameters").at("t").get<std::size_t>()};
    const auto& params = j.at("parameters");
    if (pk.n() != params.at("n").get<std::size_t>() || pk.k() != params.at("k").get<std::size_t>()) {
      throw FormatError("public key parameters disagree with G'");
    }
    if (rank(pk.g_prime) != pk.k()) {
      throw FormatError("public key G' is not full row rank");
    }
    if (pk.t > pk.n()) {
      throw FormatError("public key t exceeds n");
    }
    return pk;
  });
}

nlohmann::json private_key_to_json(const PrivateKey& sk) {
  const LinearCode& code = sk.code();
  return nlohmann::json{
      {"format_version", kFormatVersion},
      {"kind", "private"},
      {"parameters", {{"n", code.n()}, {"k", code.k()}, {"d", code.d()}, {"t", code.t()}}},
      {"matrices",
       {{"S", sk.scrambler()}, {"G", code.generator()}, {"H", code.parity_check()}, {"P", sk.permutation()}}}};
}

PrivateKey private_key_from_json(const nlohmann::json& j) {
  return with_json_errors("private key", [&] {
    check_version(j, "private");
    const auto& params = j.at("parameters");
    const auto& mats = j.at("matrices");
    LinearCode code(mats.at("G").get<BitMatrix>(), mats.at("H").get<BitMatrix>(), params.at("t").get<std::size_t>());
    if (code.n() != params.at("n").get<std::size_t>() || code.k() != params.at("k").get<std::size_t>() ||
        code.d() != params.at("d").get<std::size_t>()) {
      throw FormatError("private key parameters disagree with the matrices");
    }
    return PrivateKey(mats.at("S").get<BitMatrix>(), std::move(code), mats.at("P").get<BitMatrix>());
  });
}

nlohmann::json double_key_to_json(const DoubleKey& key, bool include_private) {
  auto layer = [&](const KeyPair& pair) {
    nlohmann::json j{{"public", public_key_to_json(pair.public_key)}};
    if (include_private) j["private"] = private_key_to_json(pair.private_key);
    return j;
  };
  return nlohmann::json{{"format_version", kFormatVersion},
                        {"kind", "double"},
                        {"parameters",
                         {{"k", key.first().public_key.k()},
                          {"n", key.first().public_key.n()},
                          {"n_prime", key.second().public_key.n()},
                          {"t1", key.first().public_key.t},
                          {"t2", key.second().public_key.t}}},
                        {"includes_private", include_private},
                        {"first", layer(key.first())},
                        {"second", layer(key.second())}};
}

DoublePublicKey double_public_key_from_json(const nlohmann::json& j) {
  return with_json_errors("double key", [&] {
    check_version(j, "double");
    DoublePublicKey pk{public_key_from_json(j.at("first").at("public")),
                       public_key_from_json(j.at("second").at("public"))};
    if (pk.second.k() != pk.first.n()) {
      throw DimensionError("double key: layer dimensions are incompatible");
    }
    return pk;
  });
}

DoubleKey double_key_from_json(const nlohmann::json& j) {
  return with_json_errors("double key", [&] {
    check_version(j, "double");
    if (!j.at("includes_private").get<bool>()) {
      throw FormatError("double key file carries only public halves");
    }
    auto layer = [](const nlohmann::json& l) {
      PublicKey pk = public_key_from_json(l.at("public"));
      PrivateKey sk = private_key_from_json(l.at("private"));
      if (sk.public_key().g_prime != pk.g_prime || sk.public_key().t != pk.t) {
        throw FormatError("double key: private half does not match its public half");
      }
      return KeyPair{std::move(pk), std::move(sk)};
    };
    return DoubleKey(layer(j.at("first")), layer(j.at("second")));
  });
}

}  // namespace qmce
