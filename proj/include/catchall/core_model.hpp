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

namespace catchall {

/// Latent AR(1) observed with additive white measurement error:
///   x_t = theta * x_{t-1} + eps_t,   y_t = x_t + eta_t.
struct StructuralParams {
  double theta = 0.0;
  double sigma2_eps = 1.0;
  double sigma2_eta = 0.0;
};

/// Observable ARMA(1,1) form y_t = theta * y_{t-1} + u_t - alpha * u_{t-1}.
struct Arma11Params {
  double theta = 0.0;
  double alpha = 0.0;
  double sigma2_u = 1.0;
};

struct ReducedMoments {
  double sigma2_x = 0.0;
  double sigma2_y = 0.0;
  double c = 0.0;  // bias constant alpha * sigma2_u / (theta * sigma2_y)
};

/// Forecast horizon k >= 1.
class Horizon {
 public:
  explicit Horizon(int k);

  int value() const noexcept { return k_; }

  friend bool operator==(Horizon, Horizon) = default;
  friend auto operator<=>(Horizon, Horizon) = default;

 private:
  int k_;
};

/// Throws kInvalidArgument unless 0 < theta < 1, sigma2_eps > 0 and
/// sigma2_eta >= 0.
void validate(const StructuralParams& p);

/// Throws kInvalidArgument unless 0 < theta < 1, 0 <= alpha < 1 and
/// sigma2_u > 0.
void validate(const Arma11Params& a);

/// Stationary variance of the latent AR(1): sigma2_eps / (1 - theta^2).
double latent_variance(const StructuralParams& p);

/// Population autocovariance of y at lag h. The measurement error only
/// contributes at lag 0.
double autocov_y(const StructuralParams& p, std::size_t lag);

/// Invertible ARMA(1,1) with the same second-order structure as y.
///
/// Matching lags 0 and 1 gives alpha * sigma2_u = theta * sigma2_eta and,
/// after eliminating sigma2_u,
///   theta*s2eta*alpha^2 - [s2eps + (1+theta^2)*s2eta]*alpha + theta*s2eta = 0.
/// The roots are reciprocal; the one inside the unit circle is returned.
Arma11Params reduce_to_arma(const StructuralParams& p);

/// Autocovariances of an ARMA(1,1) at lags 0 and 1.
double arma_autocov0(const Arma11Params& a);
double arma_autocov1(const Arma11Params& a);

/// sigma2_x, sigma2_y and c. c comes from the reduced-form parameters and is
/// checked against 1 - c = sigma2_x / sigma2_y; a mismatch beyond 1e-10
/// raises kInternal.
ReducedMoments bias_constant(const StructuralParams& p);

/// Probability limit of the single-horizon estimator: theta * (1-c)^(1/k).
double plim_k(const StructuralParams& p, Horizon k);

/// Asymptotic variance factor (1 / (k * theta^k))^2 of T * var(theta_hat_k).
double asy_variance_factor(double theta, Horizon k);

}  // namespace catchall
