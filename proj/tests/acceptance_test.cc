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

// Acceptance gate: runs every criterion and prints one PASS/FAIL line each.

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <set>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "cli.h"
#include "qmce/attacks.h"
#include "qmce/codes.h"
#include "qmce/feasibility.h"
#include "qmce/gf2.h"
#include "qmce/pke.h"
#include "qmce/qsim.h"
#include "qmce/rng.h"

namespace {

using namespace qmce;
namespace fs = std::filesystem;

struct Verdict {
  bool pass;
  std::string detail;
};

class Timer {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::complex<double> shifted_overlap(const StateVector& s, std::uint64_t e) {
  std::complex<double> acc = 0.0;
  for (std::uint64_t m = 0; m < s.dimension(); ++m) acc += std::conj(s.amplitude(m)) * s.amplitude(m ^ e);
  return acc;
}

DoubleKey double_key(std::uint64_t seed) {
  return keygen_double(hamming_7_4(), second_layer_code(15, 7, derive_seed(seed, 2)), seed);
}

Verdict roundtrip() {
  const Timer timer;
  const KeyPair keys = keygen(hamming_7_4(), 2026);
  Rng rng(1);
  double min_fid = 1.0;
  for (int i = 0; i < 100; ++i) {
    const StateVector s = random_state(4, rng);
    min_fid = std::min(min_fid, fidelity(decrypt(keys.private_key, encrypt(keys.public_key, s, rng)), s));
  }
  int exact = 0;
  for (std::uint64_t m = 0; m < 16; ++m) {
    const StateVector s = basis_state(BitVector::from_index(m, 4));
    for (std::size_t pos = 0; pos < 7; ++pos) {
      if (max_abs_difference(decrypt(keys.private_key, encrypt_with_error(keys.public_key, s, BitVector::unit(7, pos))),
                             s) == 0.0) {
        ++exact;
      }
    }
  }
  const double t = timer.seconds();
  return {min_fid >= 1.0 - 1e-9 && exact == 112 && t < 5.0,
          fmt::format("min fidelity {:.15f}, exact sweep {}/112, {:.3f} s", min_fid, exact, t)};
}

Verdict classical_recovery() {
  const Timer timer;
  const KeyPair keys = keygen(hamming_7_4(), 2027);
  Rng rng(2);
  int ok = 0;
  for (std::uint64_t m = 0; m < 16; ++m) {
    const BitVector m0 = BitVector::from_index(m, 4);
    for (std::size_t pos = 0; pos < 7; ++pos) {
      const BitVector c0 = vec_mat(m0, keys.public_key.g_prime) ^ BitVector::unit(7, pos);
      const StateVector plain = decrypt(keys.private_key, basis_state(c0));
      const auto dist = register_distribution(plain, 0, 4);
      const Measurement meas = measure_register(plain, 0, 4, rng);
      if (meas.outcome == m0 && dist[m] == 1.0) ++ok;
    }
  }
  const double t = timer.seconds();
  return {ok == 112 && t < 5.0, fmt::format("{}/112 recovered with probability 1, {:.3f} s", ok, t)};
}

Verdict fidelity_identity() {
  Rng rng(3);
  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    const StateVector s = random_state(5, rng);
    for (int j = 0; j < 20; ++j) {
      const BitVector e = random_vector(5, rng);
      const double lhs = std::abs(inner_product(s, apply_x(s, e)));
      worst = std::max(worst, std::abs(lhs - std::abs(shifted_overlap(s, e.to_index()))));
    }
  }
  return {worst <= 1e-12, fmt::format("max deviation {:.3e} over 1000 (s, e)", worst)};
}

Verdict xbasis_invariance() {
  Rng rng(4);
  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    const StateVector s = random_state(6, rng);
    const BitVector e = random_vector(6, rng);
    worst = std::max(worst, total_variation(xbasis_distribution(s), xbasis_distribution(apply_x(s, e))));
  }
  return {worst <= 1e-12, fmt::format("max TV distance {:.3e} over 50 (s, e)", worst)};
}

Verdict operator_identity() {
  const Timer timer;
  const DoubleKey key = double_key(2028);
  const DoublePublicKey pk = key.public_keys();
  Rng rng(5);
  double d_mid = 0.0;
  double d_end = 0.0;
  for (int trial = 0; trial < 5; ++trial) {
    const StateVector msg = random_state(4, rng);
    const BitVector r1 = random_weight_vector(7, pk.first.t, rng);
    const BitVector r2 = random_weight_vector(15, pk.second.t, rng);
    const BitMatrix u2 = random_matrix(15, 7, rng);
    const BitMatrix u1 = random_matrix(7, 4, rng);
    const DoubleAttackOutcome out = attack_transform_double(pk, encrypt_double_with_errors(pk, msg, r1, r2), u2, u1);
    const BitVector phase = vec_mat(r2, right_inverse_member(pk.second.g_prime, right_inverse(pk.second.g_prime), u2));
    const BitVector shift = vec_mat(r1, right_inverse_member(pk.first.g_prime, right_inverse(pk.first.g_prime), u1));
    std::vector<Amplitude> mid(128);
    std::vector<Amplitude> end(16);
    for (std::uint64_t m = 0; m < 16; ++m) {
      const BitVector mv = BitVector::from_index(m, 4);
      const BitVector c = vec_mat(mv, pk.first.g_prime) ^ r1;
      const double sign = phase.dot(c) ? -1.0 : 1.0;
      mid[c.to_index()] = sign * msg.amplitude(m);
      end[(mv ^ shift).to_index()] = sign * msg.amplitude(m);
    }
    d_mid = std::max(d_mid, max_abs_difference(out.after_hadamard, StateVector(7, mid)));
    d_end = std::max(d_end, max_abs_difference(out.inner.residual_state, StateVector(4, end)));
  }
  const double t = timer.seconds();
  return {d_mid <= 1e-9 && d_end <= 1e-9 && t < 60.0,
          fmt::format("intermediate {:.3e}, residual {:.3e}, peak {} qubits, {:.3f} s", d_mid, d_end,
                      pk.second.n() + pk.second.k(), t)};
}

Verdict right_inverse_family() {
  Rng rng(6);
  int ok = 0;
  int total = 0;
  for (auto [n, k] : {std::pair<std::size_t, std::size_t>{7, 4}, {15, 7}, {31, 16}}) {
    for (int i = 0; i < 1000; ++i) {
      const BitMatrix g = random_full_row_rank(k, n, rng);
      const BitMatrix x = right_inverse_member(g, right_inverse(g), random_matrix(n, k, rng));
      ++total;
      if (mat_mul(g, x) == BitMatrix::identity(k)) ++ok;
    }
  }
  return {ok == total, fmt::format("{}/{} pairs satisfy G'X = I", ok, total)};
}

Verdict leak_probability() {
  const Timer timer;
  const Rational p = prob_r_dot_e_zero(1024, 50, 225);
  const double t = timer.seconds();
  const Rational gap = p - Rational(1, 2);
  const bool pass = gap > 0 && gap <= Rational(1, 1000000000000LL) && t < 1.0;
  return {pass, fmt::format("Pr = {} = {}; Pr - 1/2 = {}; {:.3f} s", to_decimal(p), p.str(), to_decimal(gap), t)};
}

Verdict search_oracle() {
  int ordered = 0;
  int greedy_hits = 0;
  double ex_sum = 0.0;
  double gr_sum = 0.0;
  double rd_sum = 0.0;
  const int instances = 100;
  for (int i = 0; i < instances; ++i) {
    const std::uint64_t seed = derive_seed(2029, static_cast<std::uint64_t>(i));
    const SearchInstance inst = random_search_instance(16, 8, seed);
    const auto ex = low_weight_search(inst.g1inv, inst.g_prime, 0, SearchEngine::kExhaustive, 0, seed);
    const auto gr = low_weight_search(inst.g1inv, inst.g_prime, 0, SearchEngine::kGreedy, 20, seed);
    const auto rd = low_weight_search(inst.g1inv, inst.g_prime, 0, SearchEngine::kRandom, 20, seed);
    if (ex.weight <= gr.weight && gr.weight <= rd.weight) ++ordered;
    if (gr.weight == ex.weight) ++greedy_hits;
    ex_sum += static_cast<double>(ex.weight);
    gr_sum += static_cast<double>(gr.weight);
    rd_sum += static_cast<double>(rd.weight);
  }
  return {ordered == instances,
          fmt::format("ordering held on {}/{}; greedy reached the exhaustive minimum on {:.2f}; mean weights "
                      "exhaustive {:.2f}, greedy {:.2f}, random {:.2f}",
                      ordered, instances, greedy_hits / static_cast<double>(instances), ex_sum / instances,
                      gr_sum / instances, rd_sum / instances)};
}

Verdict feasibility() {
  Rng rng(7);
  int infeasible = 0;
  int feasible = 0;
  for (int i = 0; i < 100; ++i) {
    const std::size_t k = 1 + rng.uniform_below(10);
    const std::size_t n = k + 1 + rng.uniform_below(10);
    const BitMatrix h = random_matrix(n, k, rng);
    const FeasibilityResult r = check_feasible({h, Domain::full()});
    if (!r.feasible && r.witness && r.witness->first != r.witness->second &&
        vec_mat(r.witness->first, h) == vec_mat(r.witness->second, h)) {
      ++infeasible;
    }
    if (check_feasible({random_full_row_rank(k, n, rng), Domain::full()}).feasible) ++feasible;
  }
  int matched = 0;
  int cases = 0;
  for (std::size_t n = 1; n <= 12; ++n) {
    for (std::size_t t = 0; t <= n; ++t) {
      ++cases;
      const BitMatrix a = annihilator_space(n, Domain::constant_weight(t));
      bool ok = rank(a) == a.rows();
      if (t == 0) {
        ok = ok && a.rows() == n;
      } else if (t == n) {
        // Domain is the single all-ones word: its complement is the even-weight space.
        ok = ok && a.rows() == n - 1;
        for (std::size_t r = 0; r < a.rows(); ++r) ok = ok && a.row(r).weight() % 2 == 0;
      } else if (t % 2 == 0) {
        ok = ok && a.rows() == 1 && a.row(0) == BitVector::ones(n);
      } else {
        ok = ok && a.rows() == 0;
      }
      if (ok) ++matched;
    }
  }
  return {infeasible == 100 && feasible == 100 && matched == cases,
          fmt::format("{}/100 tall maps infeasible with valid witness, {}/100 encodings feasible, annihilator "
                      "characterization {}/{}",
                      infeasible, feasible, matched, cases)};
}

Verdict constant_weight() {
  const Timer timer;
  const ConstantWeightCode cw(12, 3);
  std::set<std::string> words;
  int ok = 0;
  for (std::uint64_t m = 0; m < 128; ++m) {
    const BitVector msg = BitVector::from_index(m, cw.k());
    const BitVector w = cw.encode(msg);
    words.insert(w.to_string());
    if (w.weight() == 3 && cw.decode(w) == msg) ++ok;
  }
  const double t = timer.seconds();
  return {cw.k() == 7 && ok == 128 && words.size() == 128 && t < 1.0,
          fmt::format("k = {}, {}/128 roundtrip at weight 3, {} distinct codewords, {:.3f} s", cw.k(), ok, words.size(),
                      t)};
}

Verdict ratios() {
  const ExpansionReport r = expansion_report(524, 1024, 2048);
  const bool pass = r.key_bit_expansion == Rational(3) && r.cipher_expansion >= Rational(39, 10) &&
                    r.cipher_expansion <= Rational(4);
  return {pass, fmt::format("key bit expansion {}, cipher expansion {} = {}", r.key_bit_expansion.str(),
                            r.cipher_expansion.str(), to_decimal(r.cipher_expansion, 6))};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Verdict cli_determinism() {
  const fs::path dir = fs::temp_directory_path() / "qmce_acceptance_cli";
  fs::remove_all(dir);
  fs::create_directories(dir);
  const auto p = [&](const char* name) { return (dir / name).string(); };
  {
    Rng rng(8);
    std::ofstream(p("m.json")) << state_to_json(random_state(4, rng)).dump();
  }
  const std::vector<std::vector<std::string>> commands{
      {"keygen", "--seed", "7", "--out", p("pub.json"), p("priv.json")},
      {"keygen", "--code", "random", "--n", "12", "--k", "4", "--t", "2", "--seed", "3", "--out", p("rpub.json"),
       p("rpriv.json")},
      {"encrypt", "--pub", p("pub.json"), "--in", p("m.json"), "--seed", "1", "--out", p("c.json")},
      {"encrypt", "--pub", p("pub.json"), "--in", p("m.json"), "--seed", "1", "--leq-weight", "--out", p("cl.json")},
      {"decrypt", "--priv", p("priv.json"), "--in", p("c.json"), "--simulate-measurement", "--measure-seed", "4",
       "--out", p("d.json")},
      {"attack", "single", "--pub", p("pub.json"), "--cipher", p("c.json"), "--u-seed", "5", "--report", p("a.csv"),
       "--residual-out", p("r.json")},
      {"keygen-double", "--seed", "9", "--out", p("dp.json"), p("dk.json")},
      {"encrypt2", "--pub", p("dp.json"), "--in", p("m.json"), "--seed", "2", "--out", p("c2.json")},
      {"decrypt2", "--priv", p("dk.json"), "--in", p("c2.json"), "--out", p("d2.json")},
      {"attack", "double", "--pub", p("dp.json"), "--cipher", p("c2.json"), "--u-seed", "6", "--report", p("a2.csv"),
       "--residual-out", p("r2.json")},
      {"search", "--engine", "greedy", "--n", "16", "--k", "8", "--budget", "10", "--seeds", "0..9", "--report",
       p("sg.csv")},
      {"search", "--engine", "random", "--n", "16", "--k", "8", "--budget", "10", "--seeds", "0..9", "--report",
       p("sr.csv")},
      {"search", "--engine", "exhaustive", "--n", "14", "--k", "7", "--seeds", "0..4", "--report", p("se.csv")},
      {"prob", "--n", "1024", "--t", "50", "--w", "225"},
      {"demo", "roundtrip", "--seed", "3"},
      {"demo", "eq9", "--seed", "3"},
  };
  const std::vector<const char*> files{"pub.json", "priv.json", "rpub.json", "rpriv.json", "c.json", "cl.json",
                                       "d.json",   "a.csv",     "r.json",    "dp.json",    "dk.json", "c2.json",
                                       "d2.json",  "a2.csv",    "r2.json",   "sg.csv",     "sr.csv",  "se.csv"};
  const auto pass_once = [&](std::vector<std::string>& outputs) {
    bool all_ok = true;
    for (const auto& cmd : commands) {
      std::ostringstream out;
      std::ostringstream err;
      all_ok = all_ok && cli::run(cmd, out, err) == 0;
      outputs.push_back(out.str());
    }
    for (const char* f : files) {
      outputs.push_back(slurp(dir / f));
      fs::remove(dir / f);
    }
    return all_ok;
  };
  std::vector<std::string> first;
  std::vector<std::string> second;
  const bool ok1 = pass_once(first);
  const bool ok2 = pass_once(second);
  std::size_t identical = 0;
  for (std::size_t i = 0; i < first.size(); ++i) {
    if (!first[i].empty() && first[i] == second[i]) ++identical;
  }
  fs::remove_all(dir);
  return {ok1 && ok2 && identical == first.size(),
          fmt::format("{}/{} outputs byte-identical across reruns ({} commands)", identical, first.size(),
                      commands.size())};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
      {"roundtrip correctness", roundtrip},
      {"classical ciphertext recovery", classical_recovery},
      {"mask fidelity identity", fidelity_identity},
      {"X-basis invariance under bit flips", xbasis_invariance},
      {"double-scheme attacker operator identity", operator_identity},
      {"right-inverse family", right_inverse_family},
      {"exact leak probability", leak_probability},
      {"search engine ordering", search_oracle},
      {"basis map feasibility", feasibility},
      {"constant-weight code", constant_weight},
      {"expansion ratios", ratios},
      {"CLI determinism", cli_determinism},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v{false, ""};
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    if (!v.pass) ++failures;
    std::cout << fmt::format("[{:>2}] {} {}: {}", i + 1, v.pass ? "PASS" : "FAIL", criteria[i].first, v.detail)
              << std::endl;
  }
  std::cout << fmt::format("{} of {} criteria passed", criteria.size() - failures, criteria.size()) << std::endl;
  return failures == 0 ? 0 : 1;
}
