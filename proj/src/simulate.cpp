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

#include "catchall/simulate.hpp"

#include <cmath>
#include <utility>

#include "catchall/error.hpp"
#include "catchall/random.hpp"

namespace catchall {

namespace {

void check_config(const SimConfig& cfg) {
  if (cfg.length < 2) {
    throw Error(ErrorCode::kInvalidArgument, "series length must be >= 2");
  }
}

}  // namespace

const char* to_string(SeriesOrigin origin) {
  switch (origin) {
    case SeriesOrigin::kLatent:
      return "latent";
    case SeriesOrigin::kObserved:
      return "observed";
    case SeriesOrigin::kArma:
      return "arma";
    case SeriesOrigin::kIngested:
      return "ingested";
  }
  return "unknown";
}

SeriesPath::SeriesPath(std::vector<double> values, SeriesOrigin origin,
                       std::optional<std::uint64_t> seed)
    : values_(std::move(values)), origin_(origin), seed_(seed) {
  if (values_.size() < 2) {
    throw Error(ErrorCode::kSeriesTooShort,
                "a series needs at least 2 observations");
  }
  for (double v : values_) {
    if (!std::isfinite(v)) {
      throw Error(ErrorCode::kInvalidArgument, "series contains a non-finite value");
    }
  }
}

SeriesPath SeriesPath::ingested(std::vector<double> values) {
  return SeriesPath(std::move(values), SeriesOrigin::kIngested, std::nullopt);
}

SeriesPath simulate_latent(const StructuralParams& p, const SimConfig& cfg) {
  check_config(cfg);
  if (!(std::abs(p.theta) < 1.0) || !(p.sigma2_eps >= 0.0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "simulation needs |theta| < 1 and sigma2_eps >= 0");
  }
  NormalSource normal(derive_seed(cfg.seed, kLatentStream));
  const double sd_eps = std::sqrt(p.sigma2_eps);
  const double sd_x = std::sqrt(p.sigma2_eps / (1.0 - p.theta * p.theta));

  double x = sd_x * normal();
  for (std::size_t i = 0; i < cfg.burn_in; ++i) {
    x = p.theta * x + sd_eps * normal();
  }
  std::vector<double> values(cfg.length);
  for (double& v : values) {
    x = p.theta * x + sd_eps * normal();
    v = x;
  }
  return SeriesPath(std::move(values), SeriesOrigin::kLatent, cfg.seed);
}

SeriesPath observe(const SeriesPath& latent, double sigma2_eta,
                   std::uint64_t seed) {
  if (!(sigma2_eta >= 0.0) || !std::isfinite(sigma2_eta)) {
    throw Error(ErrorCode::kInvalidArgument,
                "negative measurement-error variance");
  }
  std::vector<double> values(latent.values().begin(), latent.values().end());
  if (sigma2_eta > 0.0) {
    NormalSource normal(derive_seed(seed, kObservationStream));
    const double sd = std::sqrt(sigma2_eta);
    for (double& v : values) {
      v += sd * normal();
    }
  }
  return SeriesPath(std::move(values), SeriesOrigin::kObserved, seed);
}

SeriesPath simulate_arma(const Arma11Params& a, const SimConfig& cfg) {
  check_config(cfg);
  validate(a);
  NormalSource normal(derive_seed(cfg.seed, kArmaStream));
  const double sd_u = std::sqrt(a.sigma2_u);
  // Cov(y_0, u_0) = sigma2_u, so y_0 = u_0 + sqrt(gamma_0 - sigma2_u) * z,
  // and gamma_0 - sigma2_u = sigma2_u (alpha - theta)^2 / (1 - theta^2).
  double u_prev = sd_u * normal();
  const double resid_var =
      a.sigma2_u * (a.alpha - a.theta) * (a.alpha - a.theta) /
      (1.0 - a.theta * a.theta);
  double y = u_prev + std::sqrt(resid_var) * normal();

  auto step = [&] {
    const double u = sd_u * normal();
    y = a.theta * y + u - a.alpha * u_prev;
    u_prev = u;
  };
  for (std::size_t i = 0; i < cfg.burn_in; ++i) {
    step();
  }
  std::vector<double> values(cfg.length);
  for (double& v : values) {
    step();
    v = y;
  }
  return SeriesPath(std::move(values), SeriesOrigin::kArma, cfg.seed);
}

}  // namespace catchall
