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

#include "catchall/minimize.hpp"

#include <algorithm>
#include <cmath>

#include "catchall/error.hpp"

namespace catchall {

ScalarMinimum golden_section_minimize(const std::function<double(double)>& f,
                                      double lo, double hi, double tolerance,
                                      int max_iterations) {
  if (!(lo <= hi)) {
    throw Error(ErrorCode::kSearchDomainEmpty, "empty search interval");
  }
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo;
  double b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  int evals = 2;
  for (int i = 0; i < max_iterations && (b - a) > tolerance; ++i) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
    ++evals;
  }
  ScalarMinimum best{0.5 * (a + b), 0.0, evals + 1};
  best.value = f(best.x);
  if (fc < best.value) {
    best.x = c;
    best.value = fc;
  }
  if (fd < best.value) {
    best.x = d;
    best.value = fd;
  }
  return best;
}

ScalarMinimum grid_golden_minimize(const std::function<double(double)>& f,
                                   const GridGoldenOptions& opts) {
  if (!(opts.lo < opts.hi) || !std::isfinite(opts.lo) ||
      !std::isfinite(opts.hi)) {
    throw Error(ErrorCode::kSearchDomainEmpty, "empty search interval");
  }
  const int n = std::max(opts.grid_points, 3);
  const double step = (opts.hi - opts.lo) / (n - 1);
  auto node = [&](int i) { return i == n - 1 ? opts.hi : opts.lo + i * step; };

  int best_i = 0;
  double best_value = f(node(0));
  for (int i = 1; i < n; ++i) {
    const double v = f(node(i));
    if (v < best_value) {
      best_value = v;
      best_i = i;
    }
  }
  ScalarMinimum refined = golden_section_minimize(
      f, node(std::max(best_i - 1, 0)), node(std::min(best_i + 1, n - 1)),
      opts.tolerance, opts.max_iterations);
  refined.evaluations += n;
  if (best_value < refined.value) {
    refined.x = node(best_i);
    refined.value = best_value;
  }
  return refined;
}

}  // namespace catchall
