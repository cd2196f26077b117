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

#ifndef QMCE_RNG_H
#define QMCE_RNG_H

#include <cstdint>
#include <random>

namespace qmce {

/// SplitMix64 finalizer; used to derive independent per-trial streams
/// from a (master seed, index) pair.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

/// Seeded generator whose output sequence is fixed by the seed alone.
///
/// std::mt19937_64 is fully specified by the standard, but the std
/// distributions are not, so bounded integers, uniforms and normals are
/// derived here from the raw 64-bit stream.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }
  bool next_bit() { return (engine_() >> 63) != 0; }

  /// Uniform in [0, bound); bound must be positive.
  std::uint64_t uniform_below(std::uint64_t bound);

  /// Uniform in [0, 1) with 53 random bits.
  double uniform01();

  /// Standard normal via Box-Muller.
  double normal();

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace qmce

#endif  // QMCE_RNG_H
