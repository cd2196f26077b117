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

#include "cli.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "qmce/attacks.h"
#include "qmce/codes.h"
#include "qmce/errors.h"
#include "qmce/feasibility.h"
#include "qmce/gf2.h"
#include "qmce/pke.h"
#include "qmce/qsim.h"

namespace qmce::cli {
namespace {

using nlohmann::json;

constexpr int kFormatVersion = 1;

struct Options {
  std::size_t max_qubits = kDefaultQubitCap;
  std::uint64_t seed = 0;
  std::string code = "hamming7_4";
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t t = 0;
  std::size_t n_prime = 15;
  std::size_t w = 0;
  std::size_t search_t = 2;
  std::vector<std::string> out_pair;
  std::string out;
  std::string pub;
  std::string priv;
  std::string in;
  std::string cipher;
  std::string report;
  std::string residual_out;
  std::string engine = "greedy";
  std::uint64_t budget = 0;
  std::string seeds = "0";
  std::size_t column = 0;
  std::uint64_t u_seed = 0;
  bool leq_weight = false;
  bool simulate_measurement = false;
  std::uint64_t measure_seed = 0;
  std::string mode;
  std::string bits;
  std::string matrix;
  std::string domain = "full";
  std::string scenario;
};

// ---------------------------------------------------------------- file helpers

json load_json(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw FormatError("cannot open '" + path + "'");
  }
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw FormatError("'" + path + "' is not valid JSON: " + e.what());
  }
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw FormatError("cannot write '" + path + "'");
  }
  out << text;
}

void write_json(const std::string& path, const json& j) { write_text(path, j.dump(2) + "\n"); }

json with_config(json artifact, const json& config) {
  artifact["config"] = config;
  return artifact;
}

struct SeedRange {
  std::uint64_t first;
  std::uint64_t last;
};

std::uint64_t parse_u64(std::string_view text) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw ParameterError("'" + std::string(text) + "' is not an unsigned integer");
  }
  return v;
}

// "S" or inclusive "S..T".
SeedRange parse_seed_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const auto s = parse_u64(text);
    return {s, s};
  }
  SeedRange r{parse_u64(std::string_view(text).substr(0, dots)), parse_u64(std::string_view(text).substr(dots + 2))};
  if (r.last < r.first) {
    throw ParameterError("seed range is empty");
  }
  return r;
}

BitMatrix random_u(std::size_t n, std::size_t k, std::uint64_t seed) {
  Rng rng(seed);
  return random_matrix(n, k, rng);
}

LinearCode first_layer_code(const Options& o) {
  if (o.code == "hamming7_4") {
    return hamming_7_4();
  }
  if (o.code == "random") {
    return random_code(o.n, o.k, o.t, derive_seed(o.seed, 100));
  }
  throw ParameterError("unknown code '" + o.code + "'");
}

json config_of(const std::string& command, const Options& o, std::initializer_list<std::string> keys) {
  json c{{"command", command}, {"seed", o.seed}, {"max_qubits", o.max_qubits}};
  for (const auto& key : keys) {
    if (key == "code") c["code"] = o.code;
    if (key == "n") c["n"] = o.n;
    if (key == "k") c["k"] = o.k;
    if (key == "t") c["t"] = o.t;
    if (key == "search_t") c["t"] = o.search_t;
    if (key == "n_prime") c["n_prime"] = o.n_prime;
    if (key == "engine") c["engine"] = o.engine;
    if (key == "budget") c["budget"] = o.budget;
    if (key == "seeds") c["seeds"] = o.seeds;
    if (key == "column") c["column"] = o.column;
    if (key == "u_seed") c["u_seed"] = o.u_seed;
    if (key == "leq_weight") c["leq_weight"] = o.leq_weight;
    if (key == "pub") c["pub"] = o.pub;
    if (key == "priv") c["priv"] = o.priv;
    if (key == "in") c["in"] = o.in;
    if (key == "cipher") c["cipher"] = o.cipher;
    if (key == "mode") c["mode"] = o.mode;
  }
  return c;
}

// ---------------------------------------------------------------- key and state commands

int cmd_keygen(const Options& o, std::ostream& out) {
  const LinearCode code = first_layer_code(o);
  const KeyPair keys = keygen(code, o.seed);
  const json config = config_of("keygen", o, {"code", "n", "k", "t"});
  write_json(o.out_pair.at(0), with_config(public_key_to_json(keys.public_key), config));
  write_json(o.out_pair.at(1), with_config(private_key_to_json(keys.private_key), config));
  out << fmt::format("keygen: [{},{},{}] code, t={}, seed={}\n", code.n(), code.k(), code.d(), code.t(), o.seed);
  return kSuccess;
}

int cmd_keygen_double(const Options& o, std::ostream& out) {
  const LinearCode first = first_layer_code(o);
  const LinearCode second = second_layer_code(o.n_prime, first.n(), derive_seed(o.seed, 2));
  const DoubleKey key = keygen_double(first, second, o.seed);
  const json config = config_of("keygen-double", o, {"code", "n", "k", "t", "n_prime"});
  write_json(o.out_pair.at(0), with_config(double_key_to_json(key, false), config));
  write_json(o.out_pair.at(1), with_config(double_key_to_json(key, true), config));
  out << fmt::format("keygen-double: [{},{},{}] t1={} then [{},{},{}] t2={}, seed={}\n", first.n(), first.k(),
                     first.d(), first.t(), second.n(), second.k(), second.d(), second.t(), o.seed);
  return kSuccess;
}

int cmd_encrypt(const Options& o, bool twice, std::ostream& out) {
  const SimLimits limits{o.max_qubits};
  const StateVector message = state_from_json(load_json(o.in), limits);
  Rng rng(o.seed);
  const WeightMode mode = o.leq_weight ? WeightMode::kAtMost : WeightMode::kExact;
  const StateVector cipher = twice ? encrypt_double(double_public_key_from_json(load_json(o.pub)), message, rng, mode, limits)
                                   : encrypt(public_key_from_json(load_json(o.pub)), message, rng, mode, limits);
  write_json(o.out, with_config(state_to_json(cipher), config_of(twice ? "encrypt2" : "encrypt", o, {"pub", "in", "leq_weight"})));
  out << fmt::format("encrypted {} qubits into {} qubits\n", message.qubits(), cipher.qubits());
  return kSuccess;
}

int cmd_decrypt(const Options& o, bool twice, std::ostream& out) {
  const SimLimits limits{o.max_qubits};
  const StateVector cipher = state_from_json(load_json(o.in), limits);
  DecryptOptions options{o.simulate_measurement, o.measure_seed, limits};
  const StateVector plain = twice ? decrypt_double(double_key_from_json(load_json(o.priv)), cipher, options)
                                  : decrypt(private_key_from_json(load_json(o.priv)), cipher, options);
  write_json(o.out, with_config(state_to_json(plain), config_of(twice ? "decrypt2" : "decrypt", o, {"priv", "in"})));
  out << fmt::format("decrypted {} qubits into {} qubits\n", cipher.qubits(), plain.qubits());
  return kSuccess;
}

// ---------------------------------------------------------------- analysis commands

int cmd_attack(const Options& o, std::ostream& out) {
  const SimLimits limits{o.max_qubits};
  const StateVector cipher = state_from_json(load_json(o.cipher), limits);
  const json config = config_of("attack", o, {"mode", "pub", "cipher", "u_seed"});
  std::vector<AttackRecord> records;
  StateVector residual = cipher;
  if (o.mode == "single") {
    const PublicKey pk = public_key_from_json(load_json(o.pub));
    const AttackOutcome outcome = attack_transform(pk, cipher, random_u(pk.n(), pk.k(), o.u_seed), o.u_seed, limits);
    records.push_back(make_attack_record("single", o.u_seed, pk, outcome));
    residual = outcome.residual_state;
  } else if (o.mode == "double") {
    const DoublePublicKey pk = double_public_key_from_json(load_json(o.pub));
    const DoubleAttackOutcome outcome = attack_transform_double(
        pk, cipher, random_u(pk.second.n(), pk.second.k(), derive_seed(o.u_seed, 0)),
        random_u(pk.first.n(), pk.first.k(), derive_seed(o.u_seed, 1)), o.u_seed, limits);
    records.push_back(make_attack_record("second", o.u_seed, pk.second, outcome.outer));
    records.push_back(make_attack_record("first", o.u_seed, pk.first, outcome.inner));
    residual = outcome.inner.residual_state;
  } else {
    throw ParameterError("attack mode must be 'single' or 'double'");
  }
  std::ostringstream csv;
  write_attack_report(csv, config, records);
  write_text(o.report, csv.str());
  if (!o.residual_out.empty()) {
    write_json(o.residual_out, with_config(state_to_json(residual), config));
  }
  for (const auto& r : records) {
    out << fmt::format("{}: leak={} projector_rank={}\n", r.layer, r.leak.to_string(), r.projector_rank);
  }
  return kSuccess;
}

int cmd_search(const Options& o, std::ostream& out) {
  const SearchEngine engine = parse_engine(o.engine);
  const SeedRange range = parse_seed_range(o.seeds);
  std::vector<SearchRecord> records;
  for (std::uint64_t s = range.first;; ++s) {
    const SearchInstance inst = random_search_instance(o.n, o.k, s);
    records.push_back({o.n, o.k, o.search_t, low_weight_search(inst.g1inv, inst.g_prime, o.column, engine, o.budget, s)});
    if (s == range.last) break;
  }
  std::ostringstream csv;
  write_search_report(csv, config_of("search", o, {"engine", "n", "k", "search_t", "budget", "seeds", "column"}), records);
  write_text(o.report, csv.str());
  std::size_t lo = o.n + 1;
  std::size_t hi = 0;
  double total = 0.0;
  for (const auto& r : records) {
    lo = std::min(lo, r.result.weight);
    hi = std::max(hi, r.result.weight);
    total += static_cast<double>(r.result.weight);
  }
  out << fmt::format("search: engine={} instances={} mean_weight={:.4f} min_weight={} max_weight={}\n", o.engine,
                     records.size(), total / static_cast<double>(records.size()), lo, hi);
  return kSuccess;
}

int cmd_prob(const Options& o, std::ostream& out) {
  const Rational p = prob_r_dot_e_zero(o.n, o.t, o.w);
  out << p.str() << "\n" << to_decimal(p) << "\n";
  return kSuccess;
}

int cmd_cwcode(const Options& o, std::ostream& out) {
  const ConstantWeightCode cw(o.n, o.t);
  const BitVector input = BitVector::from_string(o.bits);
  if (o.mode == "encode") {
    out << cw.encode(input).to_string() << "\n";
  } else if (o.mode == "decode") {
    out << cw.decode(input).to_string() << "\n";
  } else {
    throw ParameterError("cwcode mode must be 'encode' or 'decode'");
  }
  return kSuccess;
}

int cmd_feasible(const Options& o, std::ostream& out) {
  const json j = load_json(o.matrix);
  BitMatrix m;
  try {
    if (j.at("format_version").get<int>() != kFormatVersion) {
      throw FormatError("unsupported matrix format_version");
    }
    m = j.at("matrix").get<BitMatrix>();
  } catch (const json::exception& e) {
    throw FormatError(std::string("matrix file: ") + e.what());
  }
  const FeasibilityResult r = check_feasible({m, parse_domain(o.domain)});
  if (r.feasible) {
    out << "feasible\n";
  } else {
    out << "infeasible " << r.witness->first.to_string() << " " << r.witness->second.to_string() << "\n";
  }
  return kSuccess;
}

int cmd_ratios(const Options& o, std::ostream& out) {
  const ExpansionReport r = expansion_report(o.k, o.n, o.n_prime);
  out << fmt::format("k={} n={} n_prime={}\n", o.k, o.n, o.n_prime);
  out << "cipher_expansion=" << r.cipher_expansion.str() << " (" << to_decimal(r.cipher_expansion) << ")\n";
  out << "key_bit_expansion=" << r.key_bit_expansion.str() << " (" << to_decimal(r.key_bit_expansion) << ")\n";
  return kSuccess;
}

// ---------------------------------------------------------------- demos

int demo_roundtrip(const Options& o, std::ostream& out) {
  const KeyPair keys = keygen(hamming_7_4(), o.seed);
  Rng rng(derive_seed(o.seed, 1));
  double min_fidelity = 1.0;
  for (int i = 0; i < 100; ++i) {
    const StateVector s = random_state(4, rng);
    min_fidelity = std::min(min_fidelity, fidelity(decrypt(keys.private_key, encrypt(keys.public_key, s, rng)), s));
  }
  int exact = 0;
  for (std::uint64_t m = 0; m < 16; ++m) {
    const StateVector s = basis_state(BitVector::from_index(m, 4));
    for (std::size_t pos = 0; pos < 7; ++pos) {
      const StateVector c = encrypt_with_error(keys.public_key, s, BitVector::unit(7, pos));
      if (max_abs_difference(decrypt(keys.private_key, c), s) == 0.0) ++exact;
    }
  }
  const bool pass = min_fidelity >= 1.0 - kNormTolerance && exact == 112;
  out << fmt::format("roundtrip: {} min_fidelity={:.15f} exact_sweep={}/112\n", pass ? "PASS" : "FAIL", min_fidelity,
                     exact);
  return pass ? kSuccess : kScenarioFailed;
}

int demo_classical_recovery(const Options& o, std::ostream& out) {
  const KeyPair keys = keygen(hamming_7_4(), o.seed);
  Rng rng(derive_seed(o.seed, 1));
  int recovered = 0;
  int cases = 0;
  for (std::uint64_t mi = 0; mi < 16; ++mi) {
    const BitVector m0 = BitVector::from_index(mi, 4);
    for (std::size_t pos = 0; pos < 7; ++pos) {
      ++cases;
      const BitVector classical = vec_mat(m0, keys.public_key.g_prime) ^ BitVector::unit(7, pos);
      const StateVector plain = decrypt(keys.private_key, basis_state(classical));
      const Measurement meas = measure_register(plain, 0, 4, rng);
      if (meas.outcome == m0 && std::abs(meas.probability - 1.0) <= 1e-12) ++recovered;
    }
  }
  const bool pass = recovered == cases;
  out << fmt::format("theorem1: {} recovered={}/{} with probability 1\n", pass ? "PASS" : "FAIL", recovered, cases);
  return pass ? kSuccess : kScenarioFailed;
}

int demo_attacker_identity(const Options& o, std::ostream& out) {
  const LinearCode first = hamming_7_4();
  const DoubleKey key = keygen_double(first, second_layer_code(15, first.n(), derive_seed(o.seed, 2)), o.seed);
  const DoublePublicKey pk = key.public_keys();
  Rng rng(derive_seed(o.seed, 3));
  const StateVector message = random_state(first.k(), rng);
  const BitVector r1 = random_weight_vector(pk.first.n(), pk.first.t, rng);
  const BitVector r2 = random_weight_vector(pk.second.n(), pk.second.t, rng);
  const StateVector cipher = encrypt_double_with_errors(pk, message, r1, r2);
  const DoubleAttackOutcome attack =
      attack_transform_double(pk, cipher, random_matrix(pk.second.n(), pk.second.k(), rng),
                              random_matrix(pk.first.n(), pk.first.k(), rng));

  // Z(r2 G2'^-) Sum_m a_m |mG1' ^ r1>, and X(r1 G1'^-) Sum_m a_m (-1)^(...) |m>.
  const BitVector phase = vec_mat(r2, attack.outer.applied_inverse);
  const BitVector shift = vec_mat(r1, attack.inner.applied_inverse);
  std::vector<Amplitude> intermediate(std::size_t{1} << pk.first.n());
  std::vector<Amplitude> residual(message.dimension());
  for (std::uint64_t m = 0; m < message.dimension(); ++m) {
    const BitVector mv = BitVector::from_index(m, pk.first.k());
    const BitVector c = vec_mat(mv, pk.first.g_prime) ^ r1;
    const double sign = phase.dot(c) ? -1.0 : 1.0;
    intermediate[c.to_index()] = sign * message.amplitude(m);
    residual[(mv ^ shift).to_index()] = sign * message.amplitude(m);
  }
  const double d_mid = max_abs_difference(attack.after_hadamard, StateVector(pk.first.n(), intermediate));
  const double d_end = max_abs_difference(attack.inner.residual_state, StateVector(pk.first.k(), residual));
  const bool pass = d_mid <= kNormTolerance && d_end <= kNormTolerance;
  out << fmt::format("eq9: {} intermediate_max_diff={:.3e} residual_max_diff={:.3e} peak_qubits={}\n",
                     pass ? "PASS" : "FAIL", d_mid, d_end, pk.second.n() + pk.second.k());
  return pass ? kSuccess : kScenarioFailed;
}

int cmd_demo(const Options& o, std::ostream& out) {
  if (o.scenario == "roundtrip") return demo_roundtrip(o, out);
  if (o.scenario == "theorem1") return demo_classical_recovery(o, out);
  if (o.scenario == "eq9") return demo_attacker_identity(o, out);
  throw ParameterError("unknown demo '" + o.scenario + "'");
}

int exit_code_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::kFormat:
      return kFormat;
    case ErrorKind::kDimension:
    case ErrorKind::kParameter:
      return kDimension;
    case ErrorKind::kBudget:
      return kBudget;
    case ErrorKind::kInternal:
      return kScenarioFailed;
  }
  return kScenarioFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quantum McEliece encryption toolkit", "qmce"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--max-qubits", o.max_qubits, "Simulator qubit cap")->capture_default_str();

  auto* keygen_cmd = app.add_subcommand("keygen", "Generate a key pair");
  keygen_cmd->add_option("--code", o.code, "hamming7_4 | random")->capture_default_str();
  keygen_cmd->add_option("--n", o.n, "Random code length");
  keygen_cmd->add_option("--k", o.k, "Random code dimension");
  keygen_cmd->add_option("--t", o.t, "Requested correction radius");
  keygen_cmd->add_option("--seed", o.seed)->required();
  keygen_cmd->add_option("--out", o.out_pair, "Public and private key paths")->expected(2)->required();

  auto* keygen2_cmd = app.add_subcommand("keygen-double", "Generate a double-encryption key bundle");
  keygen2_cmd->add_option("--code", o.code, "First-layer code: hamming7_4 | random")->capture_default_str();
  keygen2_cmd->add_option("--n", o.n);
  keygen2_cmd->add_option("--k", o.k);
  keygen2_cmd->add_option("--t", o.t);
  keygen2_cmd->add_option("--nprime", o.n_prime, "Second-layer code length")->capture_default_str();
  keygen2_cmd->add_option("--seed", o.seed)->required();
  keygen2_cmd->add_option("--out", o.out_pair, "Public and private bundle paths")->expected(2)->required();

  auto add_encrypt = [&](const char* name, const char* help) {
    auto* c = app.add_subcommand(name, help);
    c->add_option("--pub", o.pub)->required();
    c->add_option("--in", o.in, "Message state JSON")->required();
    c->add_option("--seed", o.seed)->required();
    c->add_option("--out", o.out)->required();
    c->add_flag("--leq-weight", o.leq_weight, "Draw errors uniformly of weight <= t");
    return c;
  };
  auto* encrypt_cmd = add_encrypt("encrypt", "Encrypt a state");
  auto* encrypt2_cmd = add_encrypt("encrypt2", "Double-encrypt a state");

  auto add_decrypt = [&](const char* name, const char* help) {
    auto* c = app.add_subcommand(name, help);
    c->add_option("--priv", o.priv)->required();
    c->add_option("--in", o.in, "Cipher state JSON")->required();
    c->add_option("--out", o.out)->required();
    c->add_flag("--simulate-measurement", o.simulate_measurement, "Measure the syndrome on an ancilla register");
    c->add_option("--measure-seed", o.measure_seed);
    return c;
  };
  auto* decrypt_cmd = add_decrypt("decrypt", "Decrypt a state");
  auto* decrypt2_cmd = add_decrypt("decrypt2", "Decrypt a double-encrypted state");

  auto* attack_cmd = app.add_subcommand("attack", "Run the ciphertext transform attack");
  attack_cmd->add_option("mode", o.mode, "single | double")->required();
  attack_cmd->add_option("--pub", o.pub)->required();
  attack_cmd->add_option("--cipher", o.cipher)->required();
  attack_cmd->add_option("--u-seed", o.u_seed)->required();
  attack_cmd->add_option("--report", o.report)->required();
  attack_cmd->add_option("--residual-out", o.residual_out);

  auto* search_cmd = app.add_subcommand("search", "Low-weight right-inverse column search");
  search_cmd->add_option("--engine", o.engine)->capture_default_str();
  search_cmd->add_option("--n", o.n)->required();
  search_cmd->add_option("--k", o.k)->required();
  search_cmd->add_option("--t", o.search_t, "Error weight for the leak probability column")->capture_default_str();
  search_cmd->add_option("--budget", o.budget)->capture_default_str();
  search_cmd->add_option("--seeds", o.seeds, "S or S..T (inclusive)")->capture_default_str();
  search_cmd->add_option("--column", o.column)->capture_default_str();
  search_cmd->add_option("--report", o.report)->required();

  auto* prob_cmd = app.add_subcommand("prob", "Exact Pr[r.e = 0]");
  prob_cmd->add_option("--n", o.n)->required();
  prob_cmd->add_option("--t", o.t)->required();
  prob_cmd->add_option("--w", o.w)->required();

  auto* cw_cmd = app.add_subcommand("cwcode", "Constant-weight encode/decode");
  cw_cmd->add_option("mode", o.mode, "encode | decode")->required();
  cw_cmd->add_option("--n", o.n)->required();
  cw_cmd->add_option("--t", o.t)->required();
  cw_cmd->add_option("--bits", o.bits, "Message (encode) or codeword (decode)")->required();

  auto* feasible_cmd = app.add_subcommand("feasible", "Check a basis map for physical feasibility");
  feasible_cmd->add_option("--matrix", o.matrix)->required();
  feasible_cmd->add_option("--domain", o.domain, "full | cw:<t>")->capture_default_str();

  auto* ratios_cmd = app.add_subcommand("ratios", "Double-encryption expansion ratios");
  ratios_cmd->add_option("--k", o.k)->required();
  ratios_cmd->add_option("--n", o.n)->required();
  ratios_cmd->add_option("--nprime", o.n_prime)->required();

  auto* demo_cmd = app.add_subcommand("demo", "Run a named scenario");
  demo_cmd->add_option("scenario", o.scenario, "roundtrip | theorem1 | eq9")->required();
  demo_cmd->add_option("--seed", o.seed)->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsage;
  }

  try {
    if (keygen_cmd->parsed()) return cmd_keygen(o, out);
    if (keygen2_cmd->parsed()) return cmd_keygen_double(o, out);
    if (encrypt_cmd->parsed()) return cmd_encrypt(o, false, out);
    if (encrypt2_cmd->parsed()) return cmd_encrypt(o, true, out);
    if (decrypt_cmd->parsed()) return cmd_decrypt(o, false, out);
    if (decrypt2_cmd->parsed()) return cmd_decrypt(o, true, out);
    if (attack_cmd->parsed()) return cmd_attack(o, out);
    if (search_cmd->parsed()) return cmd_search(o, out);
    if (prob_cmd->parsed()) return cmd_prob(o, out);
    if (cw_cmd->parsed()) return cmd_cwcode(o, out);
    if (feasible_cmd->parsed()) return cmd_feasible(o, out);
    if (ratios_cmd->parsed()) return cmd_ratios(o, out);
    if (demo_cmd->parsed()) return cmd_demo(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e);
  }
  return kUsage;
}

}  // namespace qmce::cli
