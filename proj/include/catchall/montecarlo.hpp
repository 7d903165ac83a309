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
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "catchall/core_model.hpp"
#include "catchall/estimate.hpp"

namespace catchall {

struct ExperimentConfig {
  StructuralParams dgp{0.9, 1.0, 1.0};
  std::size_t sample_size = 5000;
  std::size_t replications = 500;
  std::vector<int> horizons{1, 2, 5, 10};
  std::optional<WeightScheme> weights;
  std::uint64_t master_seed = 20090101;
  bool parallel = false;
};

/// Throws kConfigInvalid unless R >= 2, the DGP is valid and every horizon
/// (including weighted ones) fits in T - 2. `need_horizons` is false for the
/// spectral experiment.
void validate(const ExperimentConfig& cfg, bool need_horizons = true);

/// Seed of replication r; fixed function of (master_seed, r).
std::uint64_t replication_seed(std::uint64_t master_seed, std::size_t r);

/// Observed series of replication r: latent path plus measurement error,
/// both drawn from streams of replication_seed(master_seed, r).
SeriesPath replication_path(const ExperimentConfig& cfg, std::size_t r);

/// Runs task(r) for r = 0..count-1, on worker threads when `parallel`.
/// Tasks must only write to per-r slots; the first exception is rethrown.
void for_each_replication(std::size_t count, bool parallel,
                          const std::function<void(std::size_t)>& task);

struct BiasRow {
  std::string label;  // "k=<k>" or "weights"
  int k = 0;          // 0 for the weighted row
  double mean = 0.0;
  double sd = 0.0;
  double plim = 0.0;
  double bias = 0.0;  // mean - plim
  double mcse = 0.0;  // sd / sqrt(R - failures)
  std::size_t failures = 0;
};

struct BiasTable {
  std::vector<BiasRow> rows;
  std::size_t replications = 0;
};

struct VarianceRow {
  std::string label;
  int k = 0;
  double t_var = 0.0;   // T * var(theta_hat)
  double oracle = 0.0;  // asy_variance_factor; NaN for the weighted row
  double ratio = 0.0;   // t_var / oracle
  std::size_t failures = 0;
};

struct VarianceTable {
  std::vector<VarianceRow> rows;
  std::size_t replications = 0;
};

/// Closed-form estimates at each horizon (and the catch-all minimizer when
/// weights are configured). Failed replications are counted and excluded.
BiasTable run_bias_experiment(const ExperimentConfig& cfg);

VarianceTable run_variance_experiment(const ExperimentConfig& cfg);

struct CoverageReplication {
  std::size_t replication = 0;
  double coverage = 0.0;  // interior ordinates with lower <= f_x <= upper
  double f_bar = 0.0;
  bool bound_holds = false;  // f_bar >= sigma2_eta
  double peak_freq = 0.0;
  double peak_error_bins = 0.0;
};

struct CoverageReport {
  std::vector<CoverageReplication> replications;
  std::size_t half_width = 0;
  double true_peak_freq = 0.0;
  double mean_coverage = 0.0;
  double bound_hold_fraction = 0.0;
  double peak_within_two_bins_fraction = 0.0;
  double mean_peak_error_bins = 0.0;
};

/// Smoothed-periodogram bounds against the true latent density. A half-width
/// of 0 selects default_half_width(T).
CoverageReport run_spectral_coverage(const ExperimentConfig& cfg,
                                     std::size_t half_width);

}  // namespace catchall
