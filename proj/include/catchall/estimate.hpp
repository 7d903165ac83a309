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
#include <map>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "catchall/core_model.hpp"
#include "catchall/minimize.hpp"
#include "catchall/simulate.hpp"

namespace catchall {

/// Nonnegative weights over forecast horizons. Weights are never
/// normalized; the argmin does not depend on their overall scale.
class WeightScheme {
 public:
  explicit WeightScheme(std::map<int, double> weights);

  static WeightScheme point_mass(Horizon k);
  /// Weight 1 on every horizon in [first, last].
  static WeightScheme equal(int first, int last);

  const std::map<int, double>& weights() const noexcept { return weights_; }
  int max_horizon() const { return weights_.rbegin()->first; }

  /// The single positively weighted horizon, if there is exactly one.
  std::optional<Horizon> as_point_mass() const;

  friend bool operator==(const WeightScheme&, const WeightScheme&) = default;

 private:
  std::map<int, double> weights_;
};

enum class EstimateMethod { kClosedForm, kMinimizer };

const char* to_string(EstimateMethod method);

struct EstimateResult {
  double theta_hat = 0.0;
  double objective_value = 0.0;
  EstimateMethod method = EstimateMethod::kClosedForm;
  std::variant<Horizon, WeightScheme> horizons = Horizon(1);
  /// Residual count per horizon (T - k).
  std::map<int, std::size_t> n_terms;
  /// Set when a closed-form root falls outside (0, 1).
  bool outside_unit_interval = false;
};

/// Search interval and tolerances for the numerical minimizer.
using SearchOptions = GridGoldenOptions;

/// Q(theta) = sum_k w_k sum_{s=1}^{T-k} (y_{s+k} - theta^k y_s)^2, evaluated
/// from per-horizon moment sums so each call costs O(#horizons).
class CatchallObjective {
 public:
  CatchallObjective(const SeriesPath& y, const WeightScheme& w);

  double operator()(double theta) const;

  /// Sum_{s=1}^{T-k} y_s y_{s+k} / Sum_{s=1}^{T-k} y_s^2 for a stored horizon.
  double moment_ratio(int k) const;

  const std::map<int, std::size_t>& n_terms() const noexcept { return n_terms_; }

 private:
  struct Term {
    int k;
    double weight;
    double lead_sq;   // sum y_{s+k}^2
    double cross;     // sum y_s y_{s+k}
    double base_sq;   // sum y_s^2
  };
  std::vector<Term> terms_;
  std::map<int, std::size_t> n_terms_;
};

/// e_s = y_{s+k} - theta^k y_s for s = 1..T-k.
std::vector<double> kstep_residuals(const SeriesPath& y, double theta,
                                    Horizon k);

/// Explicit minimizer of the single-horizon objective: the k-th root of the
/// lag-k / lag-0 moment ratio over pairs (y_s, y_{s+k}), s = 1..T-k. Throws
/// kNonpositiveRatio when that ratio is <= 0.
EstimateResult estimate_closed_form(const SeriesPath& y, Horizon k);

/// Numerical argmin of the weighted objective over (opts.lo, opts.hi).
EstimateResult estimate_catchall(const SeriesPath& y, const WeightScheme& w,
                                 const SearchOptions& opts = {});

/// (theta, Q(theta)) for every grid value, in grid order.
std::vector<std::pair<double, double>> profile_objective(
    const SeriesPath& y, const WeightScheme& w,
    const std::vector<double>& thetas);

/// Population analogue of estimate_catchall: the minimizer of
/// sum_k w_k (gamma_0 - 2 theta^k gamma_k + theta^{2k} gamma_0). For a point
/// mass at k this is plim_k.
double population_catchall(const StructuralParams& p, const WeightScheme& w,
                           const SearchOptions& opts = {});

/// Copy of y with its sample mean removed.
SeriesPath demeaned(const SeriesPath& y);

}  // namespace catchall
