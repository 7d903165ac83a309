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

#include "catchall/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <thread>

#include "catchall/error.hpp"
#include "catchall/random.hpp"
#include "catchall/simulate.hpp"
#include "catchall/spectral.hpp"

namespace catchall {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

[[noreturn]] void config_error(const std::string& what) {
  throw Error(ErrorCode::kConfigInvalid, what);
}

struct Moments {
  double mean = kNaN;
  double var = kNaN;  // unbiased
  std::size_t count = 0;
};

// Fixed summation order: replication index ascending.
Moments moments(const std::vector<std::optional<double>>& draws) {
  Moments m;
  double sum = 0.0;
  for (const auto& d : draws) {
    if (d) {
      sum += *d;
      ++m.count;
    }
  }
  if (m.count == 0) {
    return m;
  }
  m.mean = sum / static_cast<double>(m.count);
  if (m.count < 2) {
    return m;
  }
  double ss = 0.0;
  for (const auto& d : draws) {
    if (d) {
      ss += (*d - m.mean) * (*d - m.mean);
    }
  }
  m.var = ss / static_cast<double>(m.count - 1);
  return m;
}

// Column c of the draw matrix holds horizon c, the last column the weighted
// estimator when configured.
std::vector<std::vector<std::optional<double>>> collect_estimates(
    const ExperimentConfig& cfg) {
  const std::size_t columns = cfg.horizons.size() + (cfg.weights ? 1 : 0);
  std::vector<std::vector<std::optional<double>>> draws(
      columns, std::vector<std::optional<double>>(cfg.replications));
  for_each_replication(cfg.replications, cfg.parallel, [&](std::size_t r) {
    const SeriesPath y = replication_path(cfg, r);
    for (std::size_t c = 0; c < cfg.horizons.size(); ++c) {
      try {
        draws[c][r] = estimate_closed_form(y, Horizon(cfg.horizons[c])).theta_hat;
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kNonpositiveRatio) {
          throw;
        }
      }
    }
    if (cfg.weights) {
      draws.back()[r] = estimate_catchall(y, *cfg.weights).theta_hat;
    }
  });
  return draws;
}

std::string horizon_label(int k) { return "k=" + std::to_string(k); }

}  // namespace

void validate(const ExperimentConfig& cfg, bool need_horizons) {
  try {
    validate(cfg.dgp);
  } catch (const Error& e) {
    config_error(e.what());
  }
  if (cfg.replications < 2) {
    config_error("replications must be >= 2");
  }
  if (cfg.sample_size < 2) {
    config_error("sample size must be >= 2");
  }
  if (need_horizons && cfg.horizons.empty() && !cfg.weights) {
    config_error("at least one horizon is required");
  }
  int max_k = 0;
  for (int k : cfg.horizons) {
    if (k < 1) {
      config_error("horizons must be >= 1");
    }
    max_k = std::max(max_k, k);
  }
  if (cfg.weights) {
    max_k = std::max(max_k, cfg.weights->max_horizon());
  }
  if (static_cast<std::size_t>(max_k) + 2 > cfg.sample_size) {
    config_error("max horizon must be <= T - 2");
  }
}

std::uint64_t replication_seed(std::uint64_t master_seed, std::size_t r) {
  return derive_seed(master_seed, static_cast<std::uint64_t>(r));
}

SeriesPath replication_path(const ExperimentConfig& cfg, std::size_t r) {
  const std::uint64_t seed = replication_seed(cfg.master_seed, r);
  const SeriesPath x =
      simulate_latent(cfg.dgp, SimConfig{cfg.sample_size, 0, seed});
  return observe(x, cfg.dgp.sigma2_eta, seed);
}

void for_each_replication(std::size_t count, bool parallel,
                          const std::function<void(std::size_t)>& task) {
  if (!parallel) {
    for (std::size_t r = 0; r < count; ++r) {
      task(r);
    }
    return;
  }
  const std::size_t workers = std::clamp<std::size_t>(
      std::thread::hardware_concurrency(), 2, std::max<std::size_t>(count, 2));
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t r = next++; r < count; r = next++) {
          try {
            task(r);
          } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) {
              failure = std::current_exception();
            }
            next = count;
          }
        }
      });
    }
  }
  if (failure) {
    std::rethrow_exception(failure);
  }
}

BiasTable run_bias_experiment(const ExperimentConfig& cfg) {
  validate(cfg);
  const auto draws = collect_estimates(cfg);
  BiasTable table;
  table.replications = cfg.replications;
  for (std::size_t c = 0; c < draws.size(); ++c) {
    const bool weighted = c == cfg.horizons.size();
    BiasRow row;
    row.k = weighted ? 0 : cfg.horizons[c];
    row.label = weighted ? "weights" : horizon_label(row.k);
    const Moments m = moments(draws[c]);
    row.mean = m.mean;
    row.sd = std::sqrt(m.var);
    row.plim = weighted ? population_catchall(cfg.dgp, *cfg.weights)
                        : plim_k(cfg.dgp, Horizon(row.k));
    row.bias = row.mean - row.plim;
    row.failures = cfg.replications - m.count;
    row.mcse = row.sd / std::sqrt(static_cast<double>(m.count));
    table.rows.push_back(row);
  }
  return table;
}

VarianceTable run_variance_experiment(const ExperimentConfig& cfg) {
  validate(cfg);
  const auto draws = collect_estimates(cfg);
  VarianceTable table;
  table.replications = cfg.replications;
  for (std::size_t c = 0; c < draws.size(); ++c) {
    const bool weighted = c == cfg.horizons.size();
    VarianceRow row;
    row.k = weighted ? 0 : cfg.horizons[c];
    row.label = weighted ? "weights" : horizon_label(row.k);
    const Moments m = moments(draws[c]);
    row.t_var = static_cast<double>(cfg.sample_size) * m.var;
    row.oracle = weighted ? kNaN
                          : asy_variance_factor(cfg.dgp.theta, Horizon(row.k));
    row.ratio = row.t_var / row.oracle;
    row.failures = cfg.replications - m.count;
    table.rows.push_back(row);
  }
  return table;
}

CoverageReport run_spectral_coverage(const ExperimentConfig& cfg,
                                     std::size_t half_width) {
  validate(cfg, /*need_horizons=*/false);
  if (cfg.sample_size < 8) {
    config_error("spectral coverage needs T >= 8");
  }
  CoverageReport report;
  report.half_width =
      half_width == 0 ? default_half_width(cfg.sample_size) : half_width;

  const SpectralCurve dense = spectrum_ar1(cfg.dgp, frequency_grid());
  const auto true_peak = dominant_peak(find_features(dense));
  report.true_peak_freq = true_peak ? true_peak->freq : 0.0;
  const double bin =
      2.0 * std::acos(-1.0) / static_cast<double>(cfg.sample_size);

  report.replications.resize(cfg.replications);
  for_each_replication(cfg.replications, cfg.parallel, [&](std::size_t r) {
    const SeriesPath y = replication_path(cfg, r);
    const SpectralCurve smoothed = smooth(periodogram(y), report.half_width);
    const SpectralBounds bounds = identification_bounds(smoothed);
    const SpectralCurve fx = spectrum_ar1(cfg.dgp, smoothed.freqs());

    std::size_t inside = 0;
    const std::size_t n = fx.size();
    for (std::size_t i = 1; i + 1 < n; ++i) {
      const double truth = fx.values()[i];
      if (bounds.lower.values()[i] <= truth &&
          truth <= bounds.upper.values()[i]) {
        ++inside;
      }
    }
    CoverageReplication& rep = report.replications[r];
    rep.replication = r;
    rep.coverage = n > 2 ? static_cast<double>(inside) / static_cast<double>(n - 2)
                         : 0.0;
    rep.f_bar = noise_variance_bound(bounds);
    rep.bound_holds = rep.f_bar >= cfg.dgp.sigma2_eta;
    const auto peak = dominant_peak(find_features(smoothed));
    rep.peak_freq = peak ? peak->freq : kNaN;
    rep.peak_error_bins = std::abs(rep.peak_freq - report.true_peak_freq) / bin;
  });

  double coverage_sum = 0.0;
  double error_sum = 0.0;
  std::size_t holds = 0;
  std::size_t near_peak = 0;
  for (const CoverageReplication& rep : report.replications) {
    coverage_sum += rep.coverage;
    error_sum += rep.peak_error_bins;
    holds += rep.bound_holds ? 1 : 0;
    // Tolerance absorbs rounding in the bin arithmetic.
    near_peak += rep.peak_error_bins <= 2.0 + 1e-9 ? 1 : 0;
  }
  const auto reps = static_cast<double>(cfg.replications);
  report.mean_coverage = coverage_sum / reps;
  report.mean_peak_error_bins = error_sum / reps;
  report.bound_hold_fraction = static_cast<double>(holds) / reps;
  report.peak_within_two_bins_fraction = static_cast<double>(near_peak) / reps;
  return report;
}

}  // namespace catchall
