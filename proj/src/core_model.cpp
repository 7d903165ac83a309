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

#include "catchall/core_model.hpp"

#include <cmath>
#include <sstream>

#include "catchall/error.hpp"

namespace catchall {

namespace {

[[noreturn]] void invalid(const std::string& what) {
  throw Error(ErrorCode::kInvalidArgument, what);
}

bool finite(double v) { return std::isfinite(v); }

}  // namespace

Horizon::Horizon(int k) : k_(k) {
  if (k < 1) {
    invalid("horizon must be >= 1, got " + std::to_string(k));
  }
}

void validate(const StructuralParams& p) {
  if (!finite(p.theta) || !(p.theta > 0.0 && p.theta < 1.0)) {
    std::ostringstream os;
    os << "theta must lie in (0, 1), got " << p.theta;
    invalid(os.str());
  }
  if (!finite(p.sigma2_eps) || !(p.sigma2_eps > 0.0)) {
    invalid("sigma2_eps must be > 0");
  }
  if (!finite(p.sigma2_eta) || p.sigma2_eta < 0.0) {
    invalid("sigma2_eta must be >= 0");
  }
}

void validate(const Arma11Params& a) {
  if (!finite(a.theta) || !(a.theta > 0.0 && a.theta < 1.0)) {
    invalid("theta must lie in (0, 1)");
  }
  if (!finite(a.alpha) || a.alpha < 0.0 || a.alpha >= 1.0) {
    invalid("alpha must lie in [0, 1)");
  }
  if (!finite(a.sigma2_u) || !(a.sigma2_u > 0.0)) {
    invalid("sigma2_u must be > 0");
  }
}

double latent_variance(const StructuralParams& p) {
  validate(p);
  return p.sigma2_eps / (1.0 - p.theta * p.theta);
}

double autocov_y(const StructuralParams& p, std::size_t lag) {
  const double sigma2_x = latent_variance(p);
  if (lag == 0) {
    return sigma2_x + p.sigma2_eta;
  }
  return std::pow(p.theta, static_cast<double>(lag)) * sigma2_x;
}

Arma11Params reduce_to_arma(const StructuralParams& p) {
  validate(p);
  if (p.sigma2_eta == 0.0) {
    return {p.theta, 0.0, p.sigma2_eps};
  }
  const double a = p.theta * p.sigma2_eta;  // also the constant term
  const double b = p.sigma2_eps + (1.0 + p.theta * p.theta) * p.sigma2_eta;
  const double disc = b * b - 4.0 * a * a;
  if (!(disc > 0.0)) {
    throw Error(ErrorCode::kInternal, "no invertible ARMA(1,1) root");
  }
  const double big = 0.5 * (b + std::sqrt(disc));  // root outside the unit circle
  // Roots multiply to one, so the invertible root is a / big and
  // sigma2_u = a / alpha = big.
  return {p.theta, a / big, big};
}

double arma_autocov0(const Arma11Params& a) {
  return a.sigma2_u * (1.0 + a.alpha * a.alpha - 2.0 * a.theta * a.alpha) /
         (1.0 - a.theta * a.theta);
}

double arma_autocov1(const Arma11Params& a) {
  return a.theta * arma_autocov0(a) - a.alpha * a.sigma2_u;
}

ReducedMoments bias_constant(const StructuralParams& p) {
  validate(p);
  const Arma11Params arma = reduce_to_arma(p);
  ReducedMoments m;
  m.sigma2_x = latent_variance(p);
  m.sigma2_y = m.sigma2_x + p.sigma2_eta;
  m.c = arma.alpha * arma.sigma2_u / (p.theta * m.sigma2_y);
  if (std::abs((1.0 - m.c) - m.sigma2_x / m.sigma2_y) > 1e-10) {
    throw Error(ErrorCode::kInternal,
                "bias constant disagrees with sigma2_x / sigma2_y");
  }
  return m;
}

double plim_k(const StructuralParams& p, Horizon k) {
  const ReducedMoments m = bias_constant(p);
  return p.theta * std::pow(1.0 - m.c, 1.0 / k.value());
}

double asy_variance_factor(double theta, Horizon k) {
  if (!finite(theta) || !(theta > 0.0 && theta < 1.0)) {
    invalid("theta must lie in (0, 1)");
  }
  const double denom = k.value() * std::pow(theta, k.value());
  return 1.0 / (denom * denom);
}

}  // namespace catchall
