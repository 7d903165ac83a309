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

#include <cmath>
#include <cstring>
#include <stdexcept>

#include <gtest/gtest.h>

#include "catchall/error.hpp"

namespace catchall {
namespace {

bool same_bits(double a, double b) {
  return std::memcmp(&a, &b, sizeof(double)) == 0;
}

ExperimentConfig small_config() {
  ExperimentConfig cfg;
  cfg.sample_size = 1000;
  cfg.replications = 40;
  cfg.horizons = {1, 3};
  cfg.master_seed = 7;
  return cfg;
}

TEST(MonteCarlo, NoNoiseMeansNoBias) {
  ExperimentConfig cfg;
  cfg.dgp = {0.9, 1.0, 0.0};
  cfg.sample_size = 20000;
  cfg.replications = 2;
  cfg.horizons = {1, 2, 5};
  const BiasTable t = run_bias_experiment(cfg);
  ASSERT_EQ(t.rows.size(), 3u);
  for (const BiasRow& r : t.rows) {
    EXPECT_EQ(r.plim, 0.9);
  }
  EXPECT_NEAR(t.rows[0].mean, 0.9, 0.02);
}

TEST(MonteCarlo, BiasTableDeterministicAndSchedulingInvariant) {
  ExperimentConfig cfg = small_config();
  cfg.weights = WeightScheme::equal(1, 4);
  const BiasTable a = run_bias_experiment(cfg);
  const BiasTable b = run_bias_experiment(cfg);
  cfg.parallel = true;
  const BiasTable c = run_bias_experiment(cfg);
  ASSERT_EQ(a.rows.size(), 3u);
  EXPECT_EQ(a.rows.back().label, "weights");
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    for (const BiasTable* other : {&b, &c}) {
      EXPECT_TRUE(same_bits(a.rows[i].mean, other->rows[i].mean));
      EXPECT_TRUE(same_bits(a.rows[i].sd, other->rows[i].sd));
      EXPECT_TRUE(same_bits(a.rows[i].plim, other->rows[i].plim));
      EXPECT_EQ(a.rows[i].failures, other->rows[i].failures);
    }
  }
}

TEST(MonteCarlo, WeightedRowUsesPopulationMinimizer) {
  ExperimentConfig cfg = small_config();
  cfg.weights = WeightScheme::point_mass(Horizon(3));
  const BiasTable t = run_bias_experiment(cfg);
  EXPECT_NEAR(t.rows.back().plim, plim_k(cfg.dgp, Horizon(3)), 1e-7);
  EXPECT_NEAR(t.rows.back().mean, t.rows[1].mean, 1e-6);
}

TEST(MonteCarlo, FailuresAreCountedAndExcluded) {
  ExperimentConfig cfg;
  cfg.sample_size = 60;
  cfg.replications = 200;
  cfg.horizons = {1, 45};
  const BiasTable t = run_bias_experiment(cfg);
  EXPECT_EQ(t.rows[0].failures, 0u);
  const BiasRow& long_row = t.rows[1];
  EXPECT_GT(long_row.failures, 0u);
  EXPECT_LE(long_row.failures, cfg.replications);
  const double effective = static_cast<double>(cfg.replications - long_row.failures);
  EXPECT_NEAR(long_row.mcse, long_row.sd / std::sqrt(effective), 1e-15);
}

TEST(MonteCarlo, VarianceTableBasics) {
  ExperimentConfig cfg;
  cfg.dgp = {0.9, 1.0, 0.0};
  cfg.sample_size = 2000;
  cfg.replications = 100;
  cfg.horizons = {1};
  const VarianceTable t = run_variance_experiment(cfg);
  ASSERT_EQ(t.rows.size(), 1u);
  // Order-of-magnitude agreement only.
  EXPECT_TRUE(std::isfinite(t.rows[0].t_var));
  EXPECT_GT(t.rows[0].ratio, 0.1);
  EXPECT_LT(t.rows[0].ratio, 10.0);
  EXPECT_EQ(t.rows[0].oracle, asy_variance_factor(0.9, Horizon(1)));
}

TEST(MonteCarlo, VarianceGrowsAtLongHorizons) {
  ExperimentConfig cfg;
  cfg.replications = 200;
  cfg.horizons = {10, 20, 30};
  const VarianceTable t = run_variance_experiment(cfg);
  EXPECT_LT(t.rows[0].t_var, t.rows[1].t_var);
  EXPECT_LT(t.rows[1].t_var, t.rows[2].t_var);
}

TEST(MonteCarlo, ConfigValidation) {
  auto code = [](const ExperimentConfig& cfg) {
    try {
      run_bias_experiment(cfg);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::kInternal;
  };
  ExperimentConfig cfg = small_config();
  cfg.replications = 1;
  EXPECT_EQ(code(cfg), ErrorCode::kConfigInvalid);
  cfg = small_config();
  cfg.horizons = {999};
  EXPECT_EQ(code(cfg), ErrorCode::kConfigInvalid);
  cfg = small_config();
  cfg.dgp.theta = -0.5;
  EXPECT_EQ(code(cfg), ErrorCode::kConfigInvalid);
  cfg = small_config();
  cfg.horizons.clear();
  EXPECT_EQ(code(cfg), ErrorCode::kConfigInvalid);
  cfg = small_config();
  cfg.weights = WeightScheme::point_mass(Horizon(999));
  EXPECT_EQ(code(cfg), ErrorCode::kConfigInvalid);
}

TEST(MonteCarlo, ReplicationSeedsAreStable) {
  EXPECT_EQ(replication_seed(1, 0), replication_seed(1, 0));
  EXPECT_NE(replication_seed(1, 0), replication_seed(1, 1));
  EXPECT_NE(replication_seed(1, 0), replication_seed(2, 0));
}

TEST(MonteCarlo, ParallelRethrows) {
  EXPECT_THROW(for_each_replication(10, true,
                                    [](std::size_t r) {
                                      if (r == 7) throw std::runtime_error("boom");
                                    }),
               std::runtime_error);
}

TEST(MonteCarlo, SpectralCoverageReport) {
  ExperimentConfig cfg;
  cfg.sample_size = 1024;
  cfg.replications = 20;
  const CoverageReport a = run_spectral_coverage(cfg, 0);
  EXPECT_EQ(a.half_width, 16u);
  ASSERT_EQ(a.replications.size(), 20u);
  EXPECT_EQ(a.true_peak_freq, 0.0);
  for (const CoverageReplication& r : a.replications) {
    EXPECT_GE(r.coverage, 0.0);
    EXPECT_LE(r.coverage, 1.0);
    EXPECT_GT(r.f_bar, 0.0);
    EXPECT_GE(r.peak_error_bins, 1.0 - 1e-9);
  }
  EXPECT_GE(a.bound_hold_fraction, 0.0);
  EXPECT_LE(a.bound_hold_fraction, 1.0);

  cfg.parallel = true;
  const CoverageReport b = run_spectral_coverage(cfg, 0);
  for (std::size_t i = 0; i < a.replications.size(); ++i) {
    EXPECT_TRUE(same_bits(a.replications[i].f_bar, b.replications[i].f_bar));
    EXPECT_TRUE(same_bits(a.replications[i].coverage, b.replications[i].coverage));
  }

  cfg.dgp.sigma2_eta = 0.0;
  cfg.parallel = false;
  const CoverageReport c = run_spectral_coverage(cfg, 8);
  EXPECT_EQ(c.bound_hold_fraction, 1.0);  // any f_bar >= 0
}

}  // namespace
}  // namespace catchall
