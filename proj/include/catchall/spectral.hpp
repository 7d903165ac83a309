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
#include <optional>
#include <vector>

#include "catchall/core_model.hpp"
#include "catchall/simulate.hpp"

namespace catchall {

// Densities use f(lambda) = sum_h gamma_h exp(-i h lambda) on [0, pi], so
// white noise of variance s2 has the flat density s2 and adding white
// measurement error shifts a density by exactly sigma2_eta.

enum class CurveKind {
  kTheoreticalX,
  kTheoreticalY,
  kPeriodogram,
  kSmoothed,
  kLowerBound,
  kUpperBound,
};

const char* to_string(CurveKind kind);

class SpectralCurve {
 public:
  /// `sample_size` is the length T of the series behind an estimated curve
  /// and 0 for theoretical ones.
  SpectralCurve(std::vector<double> freqs, std::vector<double> values,
                CurveKind kind, std::size_t sample_size = 0);

  const std::vector<double>& freqs() const noexcept { return freqs_; }
  const std::vector<double>& values() const noexcept { return values_; }
  CurveKind kind() const noexcept { return kind_; }
  std::size_t sample_size() const noexcept { return sample_size_; }
  std::size_t size() const noexcept { return values_.size(); }

 private:
  std::vector<double> freqs_;
  std::vector<double> values_;
  CurveKind kind_;
  std::size_t sample_size_;
};

struct SpectralBounds {
  SpectralCurve lower;
  SpectralCurve upper;
  double f_bar;  // min of the upper curve; also the interval width
};

struct Extremum {
  std::size_t index;
  double freq;
  double value;
};

struct SpectralFeatures {
  std::vector<Extremum> peaks;
  std::vector<Extremum> troughs;
};

inline constexpr std::size_t kDefaultGridPoints = 4096;

/// `points` equally spaced frequencies from 0 to pi inclusive.
std::vector<double> frequency_grid(std::size_t points = kDefaultGridPoints);

/// sigma2_eps / (1 - 2 theta cos(lambda) + theta^2). Accepts |theta| < 1.
SpectralCurve spectrum_ar1(const StructuralParams& p,
                           const std::vector<double>& grid);

/// spectrum_ar1 shifted up by sigma2_eta.
SpectralCurve spectrum_y(const StructuralParams& p,
                         const std::vector<double>& grid);

/// I(lambda_j) = |sum_{t=1}^T (y_t - ybar) e^{-i t lambda_j}|^2 / T at
/// lambda_j = 2 pi j / T, j = 1..floor(T/2). Direct evaluation with an
/// exact (j * t mod T) twiddle table. Needs T >= 8.
SpectralCurve periodogram(const SeriesPath& y);

/// Sum of the ordinates over a full period, j = 1..T-1, using
/// I_j = I_{T-j}. Equals sum_t (y_t - ybar)^2 by Parseval.
double periodogram_energy(const SpectralCurve& pg);

/// floor(sqrt(T) / 2), at least 1.
std::size_t default_half_width(std::size_t sample_size);

/// Daniell smoother: flat average over 2m+1 ordinates. Windows that run past
/// either end are reflected about the end ordinate without repeating it.
/// Requires 1 <= m <= floor(T/4).
SpectralCurve smooth(const SpectralCurve& pg, std::size_t half_width);

/// Interval [fy - f_bar, fy] for the latent density, f_bar = min fy.
SpectralBounds identification_bounds(const SpectralCurve& fy);

/// f_bar, an upper bound on the measurement-error variance.
double noise_variance_bound(const SpectralBounds& b);

/// Discrete local extrema. Runs of equal values are one candidate reported
/// at their leftmost index; a candidate is a peak (trough) when it is
/// strictly above (below) every neighbouring run that exists. A constant
/// curve has no extrema. Needs at least 3 points.
SpectralFeatures find_features(const SpectralCurve& f);

/// Highest peak (leftmost on ties), if any.
std::optional<Extremum> dominant_peak(const SpectralFeatures& features);

}  // namespace catchall
