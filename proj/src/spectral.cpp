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
#include <numbers>
#include <numeric>
#include <utility>

#include "catchall/error.hpp"

namespace catchall {

namespace {

void check_spectral_params(const StructuralParams& p) {
  if (!(std::abs(p.theta) < 1.0) || !(p.sigma2_eps >= 0.0) ||
      !(p.sigma2_eta >= 0.0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "spectrum needs |theta| < 1 and nonnegative variances");
  }
}

}  // namespace

const char* to_string(CurveKind kind) {
  switch (kind) {
    case CurveKind::kTheoreticalX:
      return "theoretical_x";
    case CurveKind::kTheoreticalY:
      return "theoretical_y";
    case CurveKind::kPeriodogram:
      return "periodogram";
    case CurveKind::kSmoothed:
      return "smoothed";
    case CurveKind::kLowerBound:
      return "lower_bound";
    case CurveKind::kUpperBound:
      return "upper_bound";
  }
  return "unknown";
}

SpectralCurve::SpectralCurve(std::vector<double> freqs,
                             std::vector<double> values, CurveKind kind,
                             std::size_t sample_size)
    : freqs_(std::move(freqs)),
      values_(std::move(values)),
      kind_(kind),
      sample_size_(sample_size) {
  if (freqs_.empty() || freqs_.size() != values_.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "curve needs matching nonempty frequency and value arrays");
  }
  for (std::size_t i = 0; i < freqs_.size(); ++i) {
    if (!(freqs_[i] >= 0.0 && freqs_[i] <= std::numbers::pi) ||
        (i > 0 && !(freqs_[i] > freqs_[i - 1]))) {
      throw Error(ErrorCode::kInvalidArgument,
                  "frequencies must increase strictly within [0, pi]");
    }
    if (!std::isfinite(values_[i]) || values_[i] < 0.0) {
      throw Error(ErrorCode::kInvalidArgument,
                  "density values must be finite and nonnegative");
    }
  }
}

std::vector<double> frequency_grid(std::size_t points) {
  if (points < 2) {
    throw Error(ErrorCode::kInvalidArgument, "grid needs at least 2 points");
  }
  std::vector<double> grid(points);
  const double step = std::numbers::pi / static_cast<double>(points - 1);
  for (std::size_t i = 0; i < points; ++i) {
    grid[i] = step * static_cast<double>(i);
  }
  grid.back() = std::numbers::pi;
  return grid;
}

SpectralCurve spectrum_ar1(const StructuralParams& p,
                           const std::vector<double>& grid) {
  check_spectral_params(p);
  std::vector<double> values(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    values[i] = p.sigma2_eps /
                (1.0 - 2.0 * p.theta * std::cos(grid[i]) + p.theta * p.theta);
  }
  return SpectralCurve(grid, std::move(values), CurveKind::kTheoreticalX);
}

SpectralCurve spectrum_y(const StructuralParams& p,
                         const std::vector<double>& grid) {
  const SpectralCurve fx = spectrum_ar1(p, grid);
  std::vector<double> values = fx.values();
  for (double& v : values) {
    v += p.sigma2_eta;
  }
  return SpectralCurve(grid, std::move(values), CurveKind::kTheoreticalY);
}

SpectralCurve periodogram(const SeriesPath& y) {
  const std::size_t n = y.size();
  if (n < 8) {
    throw Error(ErrorCode::kSeriesTooShort, "periodogram needs T >= 8");
  }
  const auto v = y.values();
  const double mean =
      std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(n);
  std::vector<double> centered(v.begin(), v.end());
  for (double& x : centered) {
    x -= mean;
  }

  const double two_pi = 2.0 * std::numbers::pi;
  std::vector<double> cos_table(n);
  std::vector<double> sin_table(n);
  for (std::size_t m = 0; m < n; ++m) {
    const double angle = two_pi * static_cast<double>(m) / static_cast<double>(n);
    cos_table[m] = std::cos(angle);
    sin_table[m] = std::sin(angle);
  }

  const std::size_t half = n / 2;
  std::vector<double> freqs(half);
  std::vector<double> values(half);
  for (std::size_t j = 1; j <= half; ++j) {
    double re = 0.0;
    double im = 0.0;
    std::size_t phase = j % n;  // j * t mod n for t = 1
    for (std::size_t t = 1; t <= n; ++t) {
      re += centered[t - 1] * cos_table[phase];
      im -= centered[t - 1] * sin_table[phase];
      phase += j;
      if (phase >= n) {
        phase -= n;
      }
    }
    freqs[j - 1] = two_pi * static_cast<double>(j) / static_cast<double>(n);
    values[j - 1] = (re * re + im * im) / static_cast<double>(n);
  }
  freqs.back() = std::min(freqs.back(), std::numbers::pi);
  return SpectralCurve(std::move(freqs), std::move(values),
                       CurveKind::kPeriodogram, n);
}

double periodogram_energy(const SpectralCurve& pg) {
  const std::size_t n = pg.sample_size();
  if (pg.kind() != CurveKind::kPeriodogram || n == 0) {
    throw Error(ErrorCode::kInvalidArgument, "expected a periodogram");
  }
  const auto& v = pg.values();
  double energy = 0.0;
  for (std::size_t j = 1; j <= v.size(); ++j) {
    const bool nyquist = (n % 2 == 0) && j == n / 2;
    energy += nyquist ? v[j - 1] : 2.0 * v[j - 1];
  }
  return energy;
}

std::size_t default_half_width(std::size_t sample_size) {
  const auto m = static_cast<std::size_t>(
      std::floor(std::sqrt(static_cast<double>(sample_size)) / 2.0));
  return std::max<std::size_t>(m, 1);
}

SpectralCurve smooth(const SpectralCurve& pg, std::size_t half_width) {
  if (pg.kind() != CurveKind::kPeriodogram) {
    throw Error(ErrorCode::kInvalidArgument, "smooth expects a periodogram");
  }
  const std::size_t n = pg.size();
  const std::size_t max_m = pg.sample_size() / 4;
  if (half_width < 1 || half_width > max_m || half_width + 1 > n) {
    throw Error(ErrorCode::kBadHalfWidth,
                "half-width must lie in [1, floor(T/4)]");
  }
  const auto& in = pg.values();
  const auto last = static_cast<std::ptrdiff_t>(n - 1);
  const auto m = static_cast<std::ptrdiff_t>(half_width);
  auto reflect = [last](std::ptrdiff_t i) {
    if (i < 0) {
      return -i;
    }
    if (i > last) {
      return 2 * last - i;
    }
    return i;
  };
  std::vector<double> out(n);
  for (std::ptrdiff_t j = 0; j <= last; ++j) {
    double sum = 0.0;
    for (std::ptrdiff_t i = j - m; i <= j + m; ++i) {
      sum += in[static_cast<std::size_t>(reflect(i))];
    }
    out[static_cast<std::size_t>(j)] = sum / static_cast<double>(2 * m + 1);
  }
  return SpectralCurve(pg.freqs(), std::move(out), CurveKind::kSmoothed,
                       pg.sample_size());
}

SpectralBounds identification_bounds(const SpectralCurve& fy) {
  if (fy.kind() != CurveKind::kTheoreticalY &&
      fy.kind() != CurveKind::kSmoothed) {
    throw Error(ErrorCode::kInvalidArgument,
                "bounds need a theoretical or smoothed density of y");
  }
  const auto& v = fy.values();
  const double f_bar = *std::min_element(v.begin(), v.end());
  std::vector<double> lower(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    lower[i] = v[i] - f_bar;
  }
  return SpectralBounds{
      SpectralCurve(fy.freqs(), std::move(lower), CurveKind::kLowerBound,
                    fy.sample_size()),
      SpectralCurve(fy.freqs(), v, CurveKind::kUpperBound, fy.sample_size()),
      f_bar};
}

double noise_variance_bound(const SpectralBounds& b) { return b.f_bar; }

SpectralFeatures find_features(const SpectralCurve& f) {
  const auto& v = f.values();
  if (v.size() < 3) {
    throw Error(ErrorCode::kInvalidArgument,
                "feature search needs at least 3 points");
  }
  // Collapse runs of equal values; each run is represented by its first index.
  std::vector<std::size_t> starts;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i == 0 || v[i] != v[i - 1]) {
      starts.push_back(i);
    }
  }
  SpectralFeatures out;
  if (starts.size() < 2) {
    return out;
  }
  for (std::size_t r = 0; r < starts.size(); ++r) {
    const double here = v[starts[r]];
    const bool has_left = r > 0;
    const bool has_right = r + 1 < starts.size();
    const double left = has_left ? v[starts[r - 1]] : 0.0;
    const double right = has_right ? v[starts[r + 1]] : 0.0;
    const Extremum e{starts[r], f.freqs()[starts[r]], here};
    if ((!has_left || here > left) && (!has_right || here > right)) {
      out.peaks.push_back(e);
    } else if ((!has_left || here < left) && (!has_right || here < right)) {
      out.troughs.push_back(e);
    }
  }
  return out;
}

std::optional<Extremum> dominant_peak(const SpectralFeatures& features) {
  std::optional<Extremum> best;
  for (const Extremum& e : features.peaks) {
    if (!best || e.value > best->value) {
      best = e;
    }
  }
  return best;
}

}  // namespace catchall
