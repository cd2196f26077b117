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

#include "qmce/feasibility.h"

#include <charconv>
#include <string>
#include <unordered_map>

#include "qmce/errors.h"
#include "qmce/qsim.h"

namespace qmce {
namespace {

void check_domain(std::size_t n, const Domain& domain) {
  if (n == 0) {
    throw DimensionError("domain strings must have positive length");
  }
  if (domain.kind == Domain::Kind::kConstantWeight) {
    if (domain.weight > n) {
      throw ParameterError("constant-weight domain needs t <= n");
    }
    if (n > kMaxExhaustiveDomainLength) {
      throw BudgetError("constant-weight domain of length " + std::to_string(n) +
                        " exceeds the exhaustive limit of " + std::to_string(kMaxExhaustiveDomainLength));
    }
  }
}

}  // namespace

Domain parse_domain(std::string_view text) {
  if (text == "full") {
    return Domain::full();
  }
  if (text.starts_with("cw:")) {
    const std::string_view digits = text.substr(3);
    std::size_t t = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), t);
    if (ec == std::errc() && ptr == digits.data() + digits.size() && !digits.empty()) {
      return Domain::constant_weight(t);
    }
  }
  throw ParameterError("domain must be 'full' or 'cw:<t>'");
}

std::vector<std::uint64_t> constant_weight_indices(std::size_t n, std::size_t t) {
  if (t > n || n > 63) {
    throw ParameterError("constant_weight_indices: requires t <= n <= 63");
  }
  std::vector<std::uint64_t> out;
  if (t == 0) {
    out.push_back(0);
    return out;
  }
  // With bit 0 as the most significant index bit, lexicographic string
  // order is ascending index order; Gosper's hack walks it directly.
  const std::uint64_t limit = std::uint64_t{1} << n;
  std::uint64_t v = (std::uint64_t{1} << t) - 1;
  while (v < limit) {
    out.push_back(v);
    const std::uint64_t c = v & (~v + 1);
    const std::uint64_t r = v + c;
    v = (((r ^ v) >> 2) / c) | r;
  }
  return out;
}

FeasibilityResult check_feasible(const BasisMapSpec& spec) {
  const BitMatrix& h = spec.matrix;
  const std::size_t n = h.rows();
  check_domain(n, spec.domain);

  if (spec.domain.kind == Domain::Kind::kFull) {
    // Collisions m1 H = m2 H are exactly nonzero z = m1 ^ m2 with zH = 0.
    const BitMatrix kernel = null_space(h.transpose());
    if (kernel.rows() == 0) {
      return FeasibilityResult{true, std::nullopt};
    }
    const BitVector& z = kernel.row(0);
    std::size_t p = 0;
    while (!z.get(p)) ++p;
    const BitVector m2 = BitVector::unit(n, p);
    return FeasibilityResult{false, std::make_pair(z ^ m2, m2)};
  }

  if (h.cols() > 64) {
    throw DimensionError("check_feasible: image wider than 64 bits");
  }
  const auto masks = row_index_masks(h);
  std::unordered_map<std::uint64_t, std::uint64_t> seen;
  for (const std::uint64_t w : constant_weight_indices(n, spec.domain.weight)) {
    const auto [it, inserted] = seen.emplace(map_index(w, masks), w);
    if (!inserted) {
      return FeasibilityResult{false,
                               std::make_pair(BitVector::from_index(it->second, n), BitVector::from_index(w, n))};
    }
  }
  return FeasibilityResult{true, std::nullopt};
}

BitMatrix annihilator_space(std::size_t n, const Domain& domain) {
  check_domain(n, domain);
  if (domain.kind == Domain::Kind::kFull) {
    return BitMatrix(0, n);
  }
  // Incremental basis of the domain span, keyed by leading bit.
  std::vector<std::uint64_t> basis(n, 0);
  std::size_t dim = 0;
  for (std::uint64_t w : constant_weight_indices(n, domain.weight)) {
    for (std::size_t b = n; b > 0 && w != 0; --b) {
      const std::uint64_t bit = std::uint64_t{1} << (b - 1);
      if (!(w & bit)) continue;
      if (basis[b - 1] == 0) {
        basis[b - 1] = w;
        ++dim;
        w = 0;
      } else {
        w ^= basis[b - 1];
      }
    }
    if (dim == n) break;
  }
  std::vector<BitVector> rows;
  for (auto v : basis) {
    if (v != 0) rows.push_back(BitVector::from_index(v, n));
  }
  if (rows.empty()) {
    return BitMatrix::identity(n);
  }
  return null_space(BitMatrix::from_rows(std::move(rows), n));
}

}  // namespace qmce
