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

#include <functional>

namespace catchall {

struct ScalarMinimum {
  double x = 0.0;
  double value = 0.0;
  int evaluations = 0;
};

/// Golden-section search on [lo, hi] for a unimodal f, stopping once the
/// bracket is narrower than `tolerance`.
ScalarMinimum golden_section_minimize(const std::function<double(double)>& f,
                                      double lo, double hi, double tolerance,
                                      int max_iterations = 500);

struct GridGoldenOptions {
  double lo = 1e-4;
  double hi = 1.0 - 1e-4;
  int grid_points = 512;
  double tolerance = 1e-8;
  int max_iterations = 500;
};

/// Evaluates f on an evenly spaced grid over [lo, hi] (endpoints included),
/// then refines by golden section between the neighbours of the best grid
/// point. Guards against the other local minima a multi-term objective can
/// have.
ScalarMinimum grid_golden_minimize(const std::function<double(double)>& f,
                                   const GridGoldenOptions& opts);

}  // namespace catchall
