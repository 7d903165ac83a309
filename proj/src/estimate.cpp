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

#include "catchall/estimate.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "catchall/error.hpp"

namespace catchall {

namespace {

void check_horizon_fits(int k, std::size_t length) {
  if (length < 2 || static_cast<std::size_t>(k) > length - 2) {
    throw Error(ErrorCode::kHorizonTooLarge,
                "horizon " + std::to_string(k) + " exceeds T - 2 for T = " +
                    std::to_string(length));
  }
}

void check_search(const SearchOptions& opts) {
  if (!(opts.lo > 0.0 && opts.hi < 1.0 && opts.lo < opts.hi)) {
    throw Error(ErrorCode::kSearchDomainEmpty,
                "search interval must be a nonempty subset of (0, 1)");
  }
}

}  // namespace

WeightScheme::WeightScheme(std::map<int, double> weights)
    : weights_(std::move(weights)) {
  bool any_positive = false;
  for (const auto& [k, w] : weights_) {
    if (k < 1) {
      throw Error(ErrorCode::kInvalidArgument, "weight horizons must be >= 1");
    }
    if (!std::isfinite(w) || w < 0.0) {
      throw Error(ErrorCode::kInvalidArgument,
                  "weights must be finite and nonnegative");
    }
    any_positive = any_positive || w > 0.0;
  }
  if (!any_positive) {
    throw Error(ErrorCode::kInvalidArgument,
                "at least one weight must be positive");
  }
}

WeightScheme WeightScheme::point_mass(Horizon k) {
  return WeightScheme({{k.value(), 1.0}});
}

WeightScheme WeightScheme::equal(int first, int last) {
  std::map<int, double> w;
  for (int k = first; k <= last; ++k) {
    w[k] = 1.0;
  }
  return WeightScheme(std::move(w));
}

std::optional<Horizon> WeightScheme::as_point_mass() const {
  std::optional<Horizon> found;
  for (const auto& [k, w] : weights_) {
    if (w > 0.0) {
      if (found) {
        return std::nullopt;
      }
      found = Horizon(k);
    }
  }
  return found;
}

const char* to_string(EstimateMethod method) {
  return method == EstimateMethod::kClosedForm ? "closed_form" : "minimizer";
}

CatchallObjective::CatchallObjective(const SeriesPath& y,
                                     const WeightScheme& w) {
  const auto v = y.values();
  const std::size_t n = v.size();
  for (const auto& [k, weight] : w.weights()) {
    check_horizon_fits(k, n);
    const std::size_t count = n - static_cast<std::size_t>(k);
    Term term{k, weight, 0.0, 0.0, 0.0};
    for (std::size_t s = 0; s < count; ++s) {
      term.lead_sq += v[s + k] * v[s + k];
      term.cross += v[s] * v[s + k];
      term.base_sq += v[s] * v[s];
    }
    terms_.push_back(term);
    n_terms_[k] = count;
  }
}

double CatchallObjective::operator()(double theta) const {
  double q = 0.0;
  for (const Term& t : terms_) {
    if (t.weight == 0.0) {
      continue;
    }
    const double tk = std::pow(theta, t.k);
    q += t.weight * (t.lead_sq - 2.0 * tk * t.cross + tk * tk * t.base_sq);
  }
  return q;
}

double CatchallObjective::moment_ratio(int k) const {
  for (const Term& t : terms_) {
    if (t.k == k) {
      if (t.base_sq == 0.0) {
        throw Error(ErrorCode::kInvalidArgument,
                    "series has a zero sum of squares");
      }
      return t.cross / t.base_sq;
    }
  }
  throw Error(ErrorCode::kInvalidArgument, "horizon not in weight scheme");
}

std::vector<double> kstep_residuals(const SeriesPath& y, double theta,
                                    Horizon k) {
  check_horizon_fits(k.value(), y.size());
  const auto v = y.values();
  const double tk = std::pow(theta, k.value());
  const std::size_t count = v.size() - static_cast<std::size_t>(k.value());
  std::vector<double> e(count);
  for (std::size_t s = 0; s < count; ++s) {
    e[s] = v[s + k.value()] - tk * v[s];
  }
  return e;
}

EstimateResult estimate_closed_form(const SeriesPath& y, Horizon k) {
  const WeightScheme w = WeightScheme::point_mass(k);
  const CatchallObjective q(y, w);
  const double ratio = q.moment_ratio(k.value());
  if (!(ratio > 0.0)) {
    throw Error(ErrorCode::kNonpositiveRatio,
                "lag-" + std::to_string(k.value()) +
                    " moment ratio is not positive; horizon too long for "
                    "this sample");
  }
  EstimateResult r;
  r.theta_hat = std::pow(ratio, 1.0 / k.value());
  r.objective_value = q(r.theta_hat);
  r.method = EstimateMethod::kClosedForm;
  r.horizons = k;
  r.n_terms = q.n_terms();
  r.outside_unit_interval = !(r.theta_hat > 0.0 && r.theta_hat < 1.0);
  return r;
}

EstimateResult estimate_catchall(const SeriesPath& y, const WeightScheme& w,
                                 const SearchOptions& opts) {
  check_search(opts);
  const CatchallObjective q(y, w);
  const ScalarMinimum m =
      grid_golden_minimize([&q](double theta) { return q(theta); }, opts);
  EstimateResult r;
  r.theta_hat = m.x;
  r.objective_value = m.value;
  r.method = EstimateMethod::kMinimizer;
  r.horizons = w;
  r.n_terms = q.n_terms();
  return r;
}

std::vector<std::pair<double, double>> profile_objective(
    const SeriesPath& y, const WeightScheme& w,
    const std::vector<double>& thetas) {
  if (thetas.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "empty theta grid");
  }
  const CatchallObjective q(y, w);
  std::vector<std::pair<double, double>> out;
  out.reserve(thetas.size());
  for (double theta : thetas) {
    if (!(theta > 0.0 && theta < 1.0)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "profile grid values must lie in (0, 1)");
    }
    out.emplace_back(theta, q(theta));
  }
  return out;
}

double population_catchall(const StructuralParams& p, const WeightScheme& w,
                           const SearchOptions& opts) {
  check_search(opts);
  const double gamma0 = autocov_y(p, 0);
  std::vector<std::pair<int, double>> lagged;  // (k, w_k * gamma_k)
  double total_weight = 0.0;
  for (const auto& [k, weight] : w.weights()) {
    lagged.emplace_back(k, weight * autocov_y(p, static_cast<std::size_t>(k)));
    total_weight += weight;
  }
  auto population_q = [&](double theta) {
    double q = total_weight * gamma0;
    for (const auto& [k, wg] : lagged) {
      const double tk = std::pow(theta, k);
      const double wk = w.weights().at(k);
      q += -2.0 * tk * wg + tk * tk * wk * gamma0;
    }
    return q;
  };
  return grid_golden_minimize(population_q, opts).x;
}

SeriesPath demeaned(const SeriesPath& y) {
  const auto v = y.values();
  const double mean =
      std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
  std::vector<double> out(v.begin(), v.end());
  for (double& x : out) {
    x -= mean;
  }
  return SeriesPath(std::move(out), y.origin(), y.seed());
}

}  // namespace catchall
