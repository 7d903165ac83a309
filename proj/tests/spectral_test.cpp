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

#include "catchall/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "catchall/error.hpp"
#include "catchall/random.hpp"
#include "oracles.hpp"

namespace catchall {
namespace {

const StructuralParams kDefault{0.9, 1.0, 1.0};
constexpr double kPi = std::numbers::pi;

SeriesPath white_noise(std::size_t n, std::uint64_t seed) {
  NormalSource normal(seed);
  std::vector<double> v(n);
  for (double& x : v) x = normal();
  return SeriesPath::ingested(std::move(v));
}

SeriesPath noisy_path(std::size_t n, std::uint64_t seed) {
  return observe(simulate_latent(kDefault, {n, 0, seed}), 1.0, seed);
}

double variance(const std::vector<double>& v) {
  const double m = testing::sample_mean(v);
  double s = 0.0;
  for (double x : v) s += (x - m) * (x - m);
  return s / static_cast<double>(v.size() - 1);
}

std::vector<StructuralParams> grid_dgps() {
  std::vector<StructuralParams> out;
  for (double theta : {0.1, 0.3, 0.5, 0.7, 0.9}) {
    for (double ratio : {0.1, 1.0, 10.0}) {
      out.push_back({theta, 1.0, ratio});
    }
  }
  return out;
}

TEST(Spectrum, Ar1Values) {
  const SpectralCurve fx = spectrum_ar1(kDefault, {0.0, kPi});
  EXPECT_NEAR(fx.values()[0], 100.0, 1e-10);
  EXPECT_NEAR(fx.values()[1], 0.277008310249307505, 1e-14);
  const SpectralCurve white = spectrum_ar1({0.0, 2.0, 0.0}, frequency_grid(17));
  for (double v : white.values()) {
    EXPECT_EQ(v, 2.0);
  }
}

TEST(Spectrum, ObservedValues) {
  const auto grid = frequency_grid();
  const SpectralCurve fy = spectrum_y(kDefault, grid);
  EXPECT_NEAR(fy.values()[0], 101.0, 1e-10);
  const auto min_it = std::min_element(fy.values().begin(), fy.values().end());
  EXPECT_NEAR(*min_it, 1.277008310249307505, 1e-12);
  EXPECT_EQ(min_it - fy.values().begin(), static_cast<long>(grid.size() - 1));
  EXPECT_EQ(spectrum_y({0.9, 1.0, 0.0}, grid).values(),
            spectrum_ar1({0.9, 1.0, 0.0}, grid).values());
}

TEST(Spectrum, ConventionRecoversVariance) {
  for (const StructuralParams& p : grid_dgps()) {
    const auto grid = frequency_grid(4096);
    const SpectralCurve curve = spectrum_ar1(p, grid);
    const auto f = curve.values();
    double integral = 0.0;
    for (std::size_t i = 1; i < grid.size(); ++i) {
      integral += 0.5 * (f[i] + f[i - 1]) * (grid[i] - grid[i - 1]);
    }
    EXPECT_NEAR(2.0 * integral / (2.0 * kPi) / latent_variance(p), 1.0, 0.01)
        << p.theta;
  }
}

TEST(Periodogram, PureCosineConcentrates) {
  const std::size_t n = 64;
  const std::size_t j = 5;
  std::vector<double> v(n);
  for (std::size_t t = 1; t <= n; ++t) {
    v[t - 1] = std::cos(2.0 * kPi * j * t / n);
  }
  const SpectralCurve pg = periodogram(SeriesPath::ingested(v));
  ASSERT_EQ(pg.size(), n / 2);
  EXPECT_NEAR(pg.values()[j - 1], n / 4.0, 1e-10);
  for (std::size_t i = 0; i < pg.size(); ++i) {
    if (i != j - 1) EXPECT_LT(pg.values()[i], 1e-20);
  }
  EXPECT_NEAR(pg.freqs()[j - 1], 2.0 * kPi * j / n, 1e-15);
  EXPECT_EQ(pg.freqs().back(), kPi);
}

TEST(Periodogram, MatchesDirectDefinition) {
  for (std::size_t n : {257u, 300u, 1024u}) {
    const SeriesPath y = noisy_path(n, n);
    const SpectralCurve pg = periodogram(y);
    for (std::size_t j = 1; j <= n / 2; ++j) {
      const double naive = testing::naive_periodogram(y.values(), j);
      ASSERT_NEAR(pg.values()[j - 1], naive, 1e-8 * std::max(1.0, naive))
          << "T=" << n << " j=" << j;
    }
  }
}

TEST(Periodogram, ParsevalEnergy) {
  for (std::size_t n : {8u, 9u, 101u, 4096u}) {
    const SeriesPath y = noisy_path(n, 3 * n);
    const double m = testing::sample_mean(y.values());
    double ss = 0.0;
    for (double v : y.values()) ss += (v - m) * (v - m);
    EXPECT_NEAR(periodogram_energy(periodogram(y)), ss, 1e-8 * ss) << n;
  }
}

TEST(Periodogram, WhiteNoiseIsFlat) {
  const SpectralCurve pg = periodogram(white_noise(4096, 77));
  const double avg = testing::sample_mean(pg.values());
  EXPECT_NEAR(avg, 1.0, 0.05);
}

TEST(Periodogram, AverageTracksTheoreticalDensity) {
  // A single ordinate averaged over 100 seeds still has 10% relative sd,
  // so compare blocks of 16 adjacent ordinates (relative sd 2.5%). The
  // first block is skipped: leakage from the sharp peak at 0 biases it.
  const std::size_t n = 4096;
  const std::size_t half = n / 2;
  std::vector<double> mean_i(half, 0.0);
  for (std::uint64_t s = 0; s < 100; ++s) {
    const SpectralCurve pg = periodogram(noisy_path(n, 9000 + s));
    for (std::size_t i = 0; i < half; ++i) mean_i[i] += pg.values()[i] / 100.0;
  }
  const SpectralCurve fy =
      spectrum_y(kDefault, periodogram(noisy_path(n, 1)).freqs());
  const std::size_t block = 16;
  for (std::size_t b = 1; b + 1 < half / block; ++b) {
    double est = 0.0;
    double truth = 0.0;
    for (std::size_t i = b * block; i < (b + 1) * block; ++i) {
      est += mean_i[i];
      truth += fy.values()[i];
    }
    EXPECT_NEAR(est / truth, 1.0, 0.10) << "block " << b;
  }
}

TEST(Periodogram, TooShort) {
  try {
    periodogram(SeriesPath::ingested({1, 2, 3, 4, 5, 6, 7}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSeriesTooShort);
  }
}

TEST(Smooth, FlatStaysFlat) {
  const std::size_t n = 64;
  const auto freqs = periodogram(white_noise(n, 1)).freqs();
  const SpectralCurve flat(freqs, std::vector<double>(freqs.size(), 2.5),
                           CurveKind::kPeriodogram, n);
  for (std::size_t m : {1u, 4u, 16u}) {
    const SpectralCurve s = smooth(flat, m);
    EXPECT_EQ(s.kind(), CurveKind::kSmoothed);
    for (double v : s.values()) EXPECT_NEAR(v, 2.5, 1e-14);
  }
}

TEST(Smooth, ReflectionUsesFullWindow) {
  const std::size_t n = 16;
  const auto freqs = periodogram(white_noise(n, 1)).freqs();
  std::vector<double> v{1, 2, 3, 4, 5, 6, 7, 8};
  const SpectralCurve pg(freqs, v, CurveKind::kPeriodogram, n);
  const SpectralCurve s = smooth(pg, 2);
  // Index 0 window: {3, 2, 1, 2, 3}; last: {6, 7, 8, 7, 6}.
  EXPECT_NEAR(s.values()[0], 11.0 / 5.0, 1e-15);
  EXPECT_NEAR(s.values()[7], 34.0 / 5.0, 1e-15);
  EXPECT_NEAR(s.values()[3], 4.0, 1e-15);
}

TEST(Smooth, WhiteNoiseConsistency) {
  const SpectralCurve pg = periodogram(white_noise(4096, 5));
  const SpectralCurve s = smooth(pg, 32);
  std::size_t close = 0;
  std::size_t interior = 0;
  for (std::size_t i = 32; i + 32 < s.size(); ++i) {
    ++interior;
    // Each value averages 65 unit exponentials: sd about 0.124.
    close += std::abs(s.values()[i] - 1.0) <= 0.4 ? 1 : 0;
  }
  EXPECT_GE(static_cast<double>(close) / interior, 0.95);

  double previous = variance(pg.values());
  for (std::size_t m : {2u, 8u, 32u, 128u}) {
    const double v = variance(smooth(pg, m).values());
    EXPECT_LT(v, previous) << m;
    previous = v;
  }
}

TEST(Smooth, BadHalfWidth) {
  const SpectralCurve pg = periodogram(white_noise(64, 2));
  for (std::size_t m : {0u, 17u}) {
    try {
      smooth(pg, m);
      FAIL() << m;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kBadHalfWidth);
    }
  }
  EXPECT_NO_THROW(smooth(pg, 16));
  EXPECT_THROW(smooth(smooth(pg, 2), 2), Error);
  EXPECT_EQ(default_half_width(4096), 32u);
  EXPECT_EQ(default_half_width(8), 1u);
}

TEST(Bounds, TheoreticalDefault) {
  const SpectralBounds b = identification_bounds(spectrum_y(kDefault, frequency_grid()));
  EXPECT_NEAR(b.f_bar, 1.277008310249307505, 1e-12);
  EXPECT_NEAR(b.lower.values()[0], 101.0 - 1.277008310249307505, 1e-10);
  EXPECT_NEAR(b.upper.values()[0], 101.0, 1e-10);
  EXPECT_EQ(b.lower.values().back(), 0.0);
  EXPECT_EQ(b.lower.kind(), CurveKind::kLowerBound);
  EXPECT_EQ(b.upper.kind(), CurveKind::kUpperBound);
  EXPECT_EQ(noise_variance_bound(b), b.f_bar);
}

TEST(Bounds, ConstantCurve) {
  const SpectralCurve c(frequency_grid(9), std::vector<double>(9, 3.0),
                        CurveKind::kTheoreticalY);
  const SpectralBounds b = identification_bounds(c);
  for (std::size_t i = 0; i < 9; ++i) {
    EXPECT_EQ(b.lower.values()[i], 0.0);
    EXPECT_EQ(b.upper.values()[i], 3.0);
  }
}

TEST(Bounds, SandwichAndWidthOverGrid) {
  const auto grid = frequency_grid();
  for (const StructuralParams& p : grid_dgps()) {
    const SpectralCurve fx = spectrum_ar1(p, grid);
    const SpectralBounds b = identification_bounds(spectrum_y(p, grid));
    const double scale = *std::max_element(b.upper.values().begin(),
                                           b.upper.values().end());
    const double ulp4 = 4.0 * scale * std::numeric_limits<double>::epsilon();
    for (std::size_t i = 0; i < grid.size(); ++i) {
      ASSERT_LE(b.lower.values()[i], fx.values()[i] + 1e-12);
      ASSERT_LE(fx.values()[i], b.upper.values()[i] + 1e-12);
      ASSERT_LE(std::abs(b.upper.values()[i] - b.lower.values()[i] - b.f_bar), ulp4);
    }
    const double min_fx = *std::min_element(fx.values().begin(), fx.values().end());
    EXPECT_NEAR(noise_variance_bound(b), min_fx + p.sigma2_eta, 1e-12);
    EXPECT_GE(noise_variance_bound(b), p.sigma2_eta);
  }
}

TEST(Bounds, WhiteLatentProcess) {
  const SpectralBounds b =
      identification_bounds(spectrum_y({0.0, 1.7, 0.0}, frequency_grid(33)));
  EXPECT_EQ(b.f_bar, 1.7);
}

TEST(Bounds, RejectsRawPeriodogram) {
  EXPECT_THROW(identification_bounds(periodogram(white_noise(64, 3))), Error);
}

TEST(Features, Ar1PeakAtZeroTroughAtPi) {
  const SpectralFeatures f = find_features(spectrum_y(kDefault, frequency_grid()));
  ASSERT_EQ(f.peaks.size(), 1u);
  ASSERT_EQ(f.troughs.size(), 1u);
  EXPECT_EQ(f.peaks[0].freq, 0.0);
  EXPECT_EQ(f.troughs[0].freq, kPi);
  EXPECT_EQ(dominant_peak(f)->index, 0u);
}

TEST(Features, BoundsShareExtremumLocations) {
  const SpectralCurve smoothed = smooth(periodogram(noisy_path(4096, 4)), 32);
  const SpectralBounds b = identification_bounds(smoothed);
  const SpectralFeatures up = find_features(b.upper);
  const SpectralFeatures lo = find_features(b.lower);
  ASSERT_EQ(up.peaks.size(), lo.peaks.size());
  ASSERT_EQ(up.troughs.size(), lo.troughs.size());
  for (std::size_t i = 0; i < up.peaks.size(); ++i) {
    EXPECT_EQ(up.peaks[i].index, lo.peaks[i].index);
  }
  for (std::size_t i = 0; i < up.troughs.size(); ++i) {
    EXPECT_EQ(up.troughs[i].index, lo.troughs[i].index);
  }
}

TEST(Features, OffsetInvarianceProperty) {
  // Integer-valued curves keep every offset exact.
  std::mt19937_64 rng(12345);
  std::uniform_int_distribution<int> value(0, 6);
  std::uniform_int_distribution<int> offset(1, 1000);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 3 + trial % 40;
    std::vector<double> v(n);
    for (double& x : v) x = value(rng);
    const double c = offset(rng);
    std::vector<double> shifted = v;
    for (double& x : shifted) x += c;
    const auto grid = frequency_grid(n);
    const SpectralFeatures a =
        find_features(SpectralCurve(grid, v, CurveKind::kSmoothed));
    const SpectralFeatures b =
        find_features(SpectralCurve(grid, shifted, CurveKind::kSmoothed));
    ASSERT_EQ(a.peaks.size(), b.peaks.size());
    ASSERT_EQ(a.troughs.size(), b.troughs.size());
    for (std::size_t i = 0; i < a.peaks.size(); ++i) {
      ASSERT_EQ(a.peaks[i].index, b.peaks[i].index);
    }
    for (std::size_t i = 0; i < a.troughs.size(); ++i) {
      ASSERT_EQ(a.troughs[i].index, b.troughs[i].index);
    }
  }
}

TEST(Features, PlateausAndEndpoints) {
  const auto grid = frequency_grid(8);
  const SpectralFeatures f = find_features(
      SpectralCurve(grid, {1, 3, 3, 3, 2, 2, 4, 0}, CurveKind::kSmoothed));
  ASSERT_EQ(f.peaks.size(), 2u);
  EXPECT_EQ(f.peaks[0].index, 1u);
  EXPECT_EQ(f.peaks[1].index, 6u);
  ASSERT_EQ(f.troughs.size(), 3u);
  EXPECT_EQ(f.troughs[0].index, 0u);
  EXPECT_EQ(f.troughs[1].index, 4u);
  EXPECT_EQ(f.troughs[2].index, 7u);

  const SpectralFeatures flat = find_features(
      SpectralCurve(frequency_grid(5), std::vector<double>(5, 1.0), CurveKind::kSmoothed));
  EXPECT_TRUE(flat.peaks.empty());
  EXPECT_TRUE(flat.troughs.empty());
  EXPECT_THROW(find_features(SpectralCurve({0.0, 1.0}, {1.0, 2.0}, CurveKind::kSmoothed)),
               Error);
}

TEST(Curve, Invariants) {
  EXPECT_THROW(SpectralCurve({0.0, 0.0}, {1.0, 1.0}, CurveKind::kSmoothed), Error);
  EXPECT_THROW(SpectralCurve({0.0, 4.0}, {1.0, 1.0}, CurveKind::kSmoothed), Error);
  EXPECT_THROW(SpectralCurve({0.0, 1.0}, {1.0, -1.0}, CurveKind::kSmoothed), Error);
  EXPECT_THROW(SpectralCurve({0.0, 1.0}, {1.0}, CurveKind::kSmoothed), Error);
}

}  // namespace
}  // namespace catchall
