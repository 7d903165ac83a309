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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "catchall/core_model.hpp"

namespace catchall {

enum class SeriesOrigin { kLatent, kObserved, kArma, kIngested };

const char* to_string(SeriesOrigin origin);

/// A univariate series indexed t = 1..T. Holds at least two finite values.
class SeriesPath {
 public:
  SeriesPath(std::vector<double> values, SeriesOrigin origin,
             std::optional<std::uint64_t> seed);

  /// Series read from outside the library (no seed).
  static SeriesPath ingested(std::vector<double> values);

  std::span<const double> values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  /// 1-based, matching the t = 1..T convention.
  double at(std::size_t t) const { return values_.at(t - 1); }
  SeriesOrigin origin() const noexcept { return origin_; }
  std::optional<std::uint64_t> seed() const noexcept { return seed_; }

 private:
  std::vector<double> values_;
  SeriesOrigin origin_;
  std::optional<std::uint64_t> seed_;
};

enum class InnovationDist { kGaussian };

struct SimConfig {
  std::size_t length = 0;
  std::size_t burn_in = 0;
  std::uint64_t seed = 0;
  InnovationDist innovations = InnovationDist::kGaussian;
};

// Stream ids fed to derive_seed so latent, observation and ARMA draws never
// share a generator.
inline constexpr std::uint64_t kLatentStream = 0;
inline constexpr std::uint64_t kObservationStream = 1;
inline constexpr std::uint64_t kArmaStream = 2;

/// Latent AR(1) path started from its stationary law. Accepts any
/// |theta| < 1 and sigma2_eps >= 0; a zero innovation variance yields the
/// all-zero path.
SeriesPath simulate_latent(const StructuralParams& p, const SimConfig& cfg);

/// Adds N(0, sigma2_eta) noise drawn from the observation stream of `seed`.
SeriesPath observe(const SeriesPath& latent, double sigma2_eta,
                   std::uint64_t seed);

/// ARMA(1,1) path started from the joint stationary law of (y_0, u_0).
SeriesPath simulate_arma(const Arma11Params& a, const SimConfig& cfg);

}  // namespace catchall
