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

#include "qmce/attacks.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <string>
#include <utility>

#include "qmce/codes.h"
#include "qmce/errors.h"

namespace qmce {
namespace {

using boost::multiprecision::cpp_int;

// Samples an index from a probability table by inverse CDF.
std::size_t sample_index(std::span<const double> p, Rng& rng) {
  double x = rng.uniform01();
  std::size_t last_nonzero = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0.0) continue;
    last_nonzero = i;
    if (x < p[i]) return i;
    x -= p[i];
  }
  return last_nonzero;
}

cpp_int pow10(int e) {
  cpp_int r = 1;
  for (int i = 0; i < e; ++i) r *= 10;
  return r;
}

}  // namespace

// ---------------------------------------------------------------- ciphertext transforms

BitMatrix complement_projector(const BitMatrix& g, const BitMatrix& right_inv) {
  return BitMatrix::identity(g.cols()) ^ mat_mul(right_inv, g);
}

AttackOutcome attack_transform(const PublicKey& pk, const StateVector& cipher, const BitMatrix& u,
                               std::uint64_t measurement_seed, const SimLimits& limits) {
  const std::size_t n = pk.n();
  if (cipher.qubits() != n) {
    throw DimensionError("attack_transform: cipher has " + std::to_string(cipher.qubits()) +
                         " qubits, public key expects " + std::to_string(n));
  }
  BitMatrix inverse = right_inverse_member(pk.g_prime, right_inverse(pk.g_prime), u);
  // c -> (c ^ cG'^-G', cG'^-) is injective: c is recovered as v ^ wG'.
  const BitMatrix transform = hstack(complement_projector(pk.g_prime, inverse), inverse);
  const StateVector extended = apply_isometry(cipher, transform, limits);
  Rng rng(measurement_seed);
  Measurement m = measure_register(extended, 0, n, rng);
  StateVector residual = discard_register(m.collapsed, 0, n, m.outcome);
  return AttackOutcome{std::move(m.outcome), std::move(residual), std::move(inverse)};
}

DoubleAttackOutcome attack_transform_double(const DoublePublicKey& pk, const StateVector& cipher,
                                            const BitMatrix& u_second, const BitMatrix& u_first,
                                            std::uint64_t measurement_seed, const SimLimits& limits) {
  if (pk.second.k() != pk.first.n()) {
    throw DimensionError("attack_transform_double: layer dimensions are incompatible");
  }
  AttackOutcome outer = attack_transform(pk.second, cipher, u_second, derive_seed(measurement_seed, 0), limits);
  StateVector after_hadamard = apply_h_all(outer.residual_state);
  AttackOutcome inner = [&] {
    try {
      return attack_transform(pk.first, after_hadamard, u_first, derive_seed(measurement_seed, 1), limits);
    } catch (const ParameterError& e) {
      // Family members always invert the map, so this is a logic fault.
      throw InternalError(std::string("attack_transform_double: inner transform failed: ") + e.what());
    }
  }();
  return DoubleAttackOutcome{std::move(outer), std::move(after_hadamard), std::move(inner)};
}

BitVector classical_bit_leak(const BitVector& cipher, const BitMatrix& right_inv) {
  return vec_mat(cipher, right_inv);
}

// ---------------------------------------------------------------- low-weight search

std::string_view engine_name(SearchEngine engine) {
  switch (engine) {
    case SearchEngine::kGreedy:
      return "greedy";
    case SearchEngine::kRandom:
      return "random";
    case SearchEngine::kExhaustive:
      return "exhaustive";
  }
  return "unknown";
}

SearchEngine parse_engine(std::string_view name) {
  if (name == "greedy") return SearchEngine::kGreedy;
  if (name == "random") return SearchEngine::kRandom;
  if (name == "exhaustive") return SearchEngine::kExhaustive;
  throw ParameterError("unknown search engine '" + std::string(name) + "'");
}

BitVector search_error_vector(const BitMatrix& g1inv, const BitMatrix& g_prime, std::size_t column,
                              const BitVector& u) {
  const BitMatrix projector = complement_projector(g_prime, g1inv);
  return g1inv.column(column) ^ mat_vec(projector, u);
}

SearchResult low_weight_search(const BitMatrix& g1inv, const BitMatrix& g_prime, std::size_t column,
                               SearchEngine engine, std::uint64_t budget, std::uint64_t seed) {
  const std::size_t n = g_prime.cols();
  if (g1inv.rows() != n || g1inv.cols() != g_prime.rows()) {
    throw DimensionError("low_weight_search: right inverse must be n x k");
  }
  if (column >= g_prime.rows()) {
    throw DimensionError("low_weight_search: column index out of range");
  }
  const BitMatrix projector = complement_projector(g_prime, g1inv);
  std::vector<BitVector> columns;
  columns.reserve(n);
  for (std::size_t j = 0; j < n; ++j) columns.push_back(projector.column(j));
  const BitVector target = g1inv.column(column);

  SearchResult best{column, BitVector(n), target, target.weight(), engine, 0, seed};
  auto consider = [&](const BitVector& u, const BitVector& e) {
    if (e.weight() < best.weight) {
      best.u = u;
      best.e = e;
      best.weight = e.weight();
    }
  };
  auto evaluate = [&](const BitVector& u) {
    BitVector e = target;
    for (std::size_t j = 0; j < n; ++j) {
      if (u.get(j)) e ^= columns[j];
    }
    return e;
  };
  auto start_point = [&](std::uint64_t trial) {
    Rng rng(derive_seed(seed, trial));
    return random_vector(n, rng);
  };
  // Steepest descent over single-bit flips of u; ties go to the lowest j.
  auto descend = [&](BitVector u) {
    BitVector e = evaluate(u);
    while (true) {
      std::size_t best_w = e.weight();
      std::size_t best_j = n;
      for (std::size_t j = 0; j < n; ++j) {
        const std::size_t w = (e ^ columns[j]).weight();
        if (w < best_w) {
          best_w = w;
          best_j = j;
        }
      }
      if (best_j == n) break;
      u.flip(best_j);
      e ^= columns[best_j];
    }
    consider(u, e);
  };

  switch (engine) {
    case SearchEngine::kGreedy:
      descend(BitVector(n));
      for (std::uint64_t trial = 0; trial < budget; ++trial) descend(start_point(trial));
      best.trials = budget + 1;
      break;
    case SearchEngine::kRandom: {
      if (budget == 0) {
        throw ParameterError("random search needs a positive budget");
      }
      // Start above any reachable weight so the first sample always counts.
      best.weight = n + 1;
      for (std::uint64_t trial = 0; trial < budget; ++trial) {
        const BitVector u = start_point(trial);
        consider(u, evaluate(u));
      }
      best.trials = budget;
      break;
    }
    case SearchEngine::kExhaustive: {
      if (n > kMaxExhaustiveSearchLength) {
        throw BudgetError("exhaustive search over 2^" + std::to_string(n) + " candidates exceeds the limit of 2^" +
                          std::to_string(kMaxExhaustiveSearchLength));
      }
      BitVector u(n);
      BitVector e = target;
      const std::uint64_t total = std::uint64_t{1} << n;
      for (std::uint64_t i = 1; i < total; ++i) {
        const auto j = static_cast<std::size_t>(std::countr_zero(i));
        u.flip(j);
        e ^= columns[j];
        consider(u, e);
      }
      best.trials = total;
      break;
    }
  }
  return best;
}

SearchInstance random_search_instance(std::size_t n, std::size_t k, std::uint64_t seed) {
  Rng rng(seed);
  BitMatrix g = random_full_row_rank(k, n, rng);
  BitMatrix inv = right_inverse(g);
  return SearchInstance{std::move(g), std::move(inv)};
}

// ---------------------------------------------------------------- exact leak probability

Rational prob_r_dot_e_zero(std::size_t n, std::size_t t, std::size_t w) {
  if (t > n || w > n) {
    throw ParameterError("prob_r_dot_e_zero: requires t, w <= n");
  }
  cpp_int favourable = 0;
  for (std::size_t j = 0; j <= std::min(w, t); j += 2) {
    favourable += binomial(w, j) * binomial(n - w, t - j);
  }
  return Rational(favourable, binomial(n, t));
}

std::string to_decimal(const Rational& value, int significant) {
  if (significant < 1) {
    throw ParameterError("to_decimal: need at least one significant digit");
  }
  cpp_int num = boost::multiprecision::numerator(value);
  const cpp_int den = boost::multiprecision::denominator(value);
  std::string sign;
  if (num < 0) {
    sign = "-";
    num = -num;
  }
  if (num == 0) {
    return "0." + std::string(static_cast<std::size_t>(significant - 1), '0');
  }
  // Exponent e with 10^e <= value < 10^(e+1).
  int e = 0;
  while (num >= den * pow10(e + 1)) ++e;
  while (num * pow10(-e) < den) --e;
  const int shift = significant - 1 - e;
  cpp_int scaled_num = shift >= 0 ? num * pow10(shift) : num;
  cpp_int scaled_den = shift >= 0 ? den : den * pow10(-shift);
  cpp_int digits_int = (2 * scaled_num + scaled_den) / (2 * scaled_den);  // round half up
  std::string digits = digits_int.str();
  if (static_cast<int>(digits.size()) > significant) {
    digits.pop_back();
    ++e;
  }
  std::string out;
  if (e < 0) {
    out = "0." + std::string(static_cast<std::size_t>(-e - 1), '0') + digits;
  } else if (e + 1 >= significant) {
    out = digits + std::string(static_cast<std::size_t>(e + 1 - significant), '0');
  } else {
    out = digits.substr(0, static_cast<std::size_t>(e + 1)) + "." + digits.substr(static_cast<std::size_t>(e + 1));
  }
  return sign + out;
}

// ---------------------------------------------------------------- distinguishability

DistinguishabilityReport distinguishability_trial(const StatePreparer& prep_a, const StatePreparer& prep_b,
                                                  MeasurementBasis basis, std::uint64_t trials,
                                                  std::uint64_t seed) {
  if (trials == 0) {
    throw ParameterError("distinguishability_trial: trials must be positive");
  }
  std::map<std::uint64_t, std::pair<std::uint64_t, std::uint64_t>> counts;
  auto measure = [&](const StatePreparer& prep, std::uint64_t stream) {
    Rng rng(stream);
    const StateVector s = prep(rng);
    const auto p = basis == MeasurementBasis::kX ? xbasis_distribution(s) : computational_distribution(s);
    return static_cast<std::uint64_t>(sample_index(p, rng));
  };
  for (std::uint64_t i = 0; i < trials; ++i) {
    ++counts[measure(prep_a, derive_seed(seed, 2 * i))].first;
    ++counts[measure(prep_b, derive_seed(seed, 2 * i + 1))].second;
  }

  DistinguishabilityReport report;
  report.trials = trials;
  const double total = static_cast<double>(trials);
  double tv = 0.0;
  double chi2 = 0.0;
  for (const auto& [outcome, ab] : counts) {
    const double a = static_cast<double>(ab.first);
    const double b = static_cast<double>(ab.second);
    tv += std::abs(a - b) / total;
    chi2 += (a - b) * (a - b) / (a + b);
  }
  report.tv_estimate = 0.5 * tv;
  report.chi_square = chi2;
  report.degrees_of_freedom = counts.size() - 1;
  if (report.degrees_of_freedom > 0) {
    const double dof = static_cast<double>(report.degrees_of_freedom);
    report.z = (chi2 - dof) / std::sqrt(2.0 * dof);
  }
  return report;
}

// ---------------------------------------------------------------- CSV reports

void write_search_report(std::ostream& out, const nlohmann::json& config, std::span<const SearchRecord> records) {
  out << "# config: " << config.dump() << "\n";
  out << "seed,engine,n,k,t,column,trials,weight_e,u,e,pr_r_dot_e_zero,pr_numerator,pr_denominator\n";
  for (const auto& rec : records) {
    const SearchResult& r = rec.result;
    const Rational pr = prob_r_dot_e_zero(rec.n, rec.t, r.weight);
    out << r.seed << ',' << engine_name(r.engine) << ',' << rec.n << ',' << rec.k << ',' << rec.t << ',' << r.column
        << ',' << r.trials << ',' << r.weight << ',' << r.u.to_string() << ',' << r.e.to_string() << ','
        << to_decimal(pr) << ',' << boost::multiprecision::numerator(pr) << ','
        << boost::multiprecision::denominator(pr) << "\n";
  }
}

AttackRecord make_attack_record(std::string layer, std::uint64_t u_seed, const PublicKey& pk,
                                const AttackOutcome& outcome) {
  return AttackRecord{std::move(layer),
                      u_seed,
                      pk.n(),
                      pk.k(),
                      pk.t,
                      outcome.leak,
                      rank(complement_projector(pk.g_prime, outcome.applied_inverse)),
                      outcome.residual_state.qubits()};
}

void write_attack_report(std::ostream& out, const nlohmann::json& config, std::span<const AttackRecord> records) {
  out << "# config: " << config.dump() << "\n";
  out << "layer,u_seed,n,k,t,leak,leak_weight,projector_rank,residual_qubits\n";
  for (const auto& rec : records) {
    out << rec.layer << ',' << rec.u_seed << ',' << rec.n << ',' << rec.k << ',' << rec.t << ','
        << rec.leak.to_string() << ',' << rec.leak.weight() << ',' << rec.projector_rank << ','
        << rec.residual_qubits << "\n";
  }
}

}  // namespace qmce
