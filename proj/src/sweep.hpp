// Copyright 2026 The hsurf Authors
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
#include <optional>
#include <vector>

#include "collision.hpp"

namespace hsurf {

struct ExperimentParams {
  double side = 0.5;
  int iterations = 8;
  int depth = 1;
  double eps = tol::narrow_eps;
  Twist twist = Twist::ccw;
  int antiprism_align = 0;
};

struct ExperimentResult {
  double side = 0.0;
  int iterations = 0;  // requested
  bool intersecting = false;
  std::optional<int> first_iteration;
  long triangle_count = 0;
  double wall_seconds = 0.0;
  IntersectionReport report;
};

/// Builds the surface at the given side length, testing for self-intersection
/// after the seed and after every iteration.  Stops early at the first
/// intersection (later iterations cannot remove it); first_iteration records
/// when it appeared.
ExperimentResult run_experiment(const ExperimentParams& params);

/// Same, but also hands back the complex as built (at the stopping point).
ExperimentResult run_experiment(const ExperimentParams& params,
                                std::optional<SurfaceComplex>& complex_out);

struct ThresholdParams {
  double lo = 0.40;
  double hi = 0.60;
  double tolerance = 0.005;
  int iterations = 8;
  int depth = 1;
  double eps = tol::narrow_eps;
  Twist twist = Twist::ccw;
  int antiprism_align = 0;
};

struct ThresholdResult {
  double bracket_low = 0.0;   // intersecting endpoint
  double bracket_high = 0.0;  // non-intersecting endpoint
  int iterations = 0;
  int depth = 0;
  std::vector<ExperimentResult> evaluations;
  bool non_monotone_warning = false;
};

/// Bisects over the side length to localize the minimal non-intersecting
/// value.  Both endpoints are validated up front (low must intersect, high
/// must not); BracketInvalid otherwise.  Monotonicity of the predicate is
/// assumed, not proven: every evaluation is recorded so anomalies stay
/// visible, and an inversion across the evaluation list raises the
/// non_monotone_warning flag.
ThresholdResult find_threshold(const ThresholdParams& params);

}  // namespace hsurf
