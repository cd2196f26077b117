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

#ifndef QMCE_FEASIBILITY_H
#define QMCE_FEASIBILITY_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "qmce/gf2.h"

namespace qmce {

inline constexpr std::size_t kMaxExhaustiveDomainLength = 24;

/// Set of input strings a basis map is applied to.
struct Domain {
  enum class Kind { kFull, kConstantWeight };
  Kind kind = Kind::kFull;
  std::size_t weight = 0;  // only for kConstantWeight

  static Domain full() { return {Kind::kFull, 0}; }
  static Domain constant_weight(std::size_t t) { return {Kind::kConstantWeight, t}; }
};

/// Parses "full" or "cw:<t>".
Domain parse_domain(std::string_view text);

/// The basis map m -> mH for an n x k matrix H, restricted to a domain of
/// n-bit strings.
struct BasisMapSpec {
  BitMatrix matrix;
  Domain domain;
};

struct FeasibilityResult {
  bool feasible = false;
  /// For infeasible maps: m1 != m2 with m1 H = m2 H.
  std::optional<std::pair<BitVector, BitVector>> witness;
};

/// Feasible iff m -> mH is injective on the domain, which is exactly when a
/// reversible extension with ancillas exists. Full domains are decided by
/// elimination; constant-weight domains by an exhaustive scan (BudgetError
/// above n = 24).
FeasibilityResult check_feasible(const BasisMapSpec& spec);

/// All weight-t strings of length n as basis indices, lexicographic order.
std::vector<std::uint64_t> constant_weight_indices(std::size_t n, std::size_t t);

/// Basis (rows) of {a : m.a = 0 for every m in the domain}.
BitMatrix annihilator_space(std::size_t n, const Domain& domain);

}  // namespace qmce

#endif  // QMCE_FEASIBILITY_H
