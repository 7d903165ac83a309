// Copyright 2026 The Catchall Authors. All Rights Reserved.
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

#pragma once

#include <array>
#include <cstdint>
#include <limits>

namespace catchall {

// Identifier recorded in run manifests. Changing any generator below must
// change this string.
inline constexpr const char* kRngAlgorithm =
    "xoshiro256** seeded by splitmix64; normals by Marsaglia polar method";

/// One step of splitmix64 on a caller-held state.
std::uint64_t splitmix64_next(std::uint64_t& state);

/// Seed for an independent stream, a fixed function of (seed, stream).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

/// xoshiro256** (Blackman & Vigna). Satisfies UniformRandomBitGenerator.
class Xoshiro256 {
 public:
  using result_type = std::uint64_t;

  explicit Xoshiro256(std::uint64_t seed);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }

  result_type operator()();

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform();

 private:
  std::array<std::uint64_t, 4> s_;
};

/// Standard normal draws. std::normal_distribution is implementation
/// defined, so it cannot give bit-identical paths across toolchains.
class NormalSource {
 public:
  explicit NormalSource(std::uint64_t seed) : gen_(seed) {}

  double operator()();

 private:
  Xoshiro256 gen_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace catchall
