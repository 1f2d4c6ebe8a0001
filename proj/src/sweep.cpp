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

#include "sweep.hpp"

#include <chrono>
#include <cstdio>

namespace hsurf {

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

}  // namespace

ExperimentResult run_experiment(const ExperimentParams& params,
                                std::optional<SurfaceComplex>& complex_out) {
  if (params.iterations < 0) {
    throw Error(ErrorCode::invalid_argument, "iteration count must be >= 0");
  }
  auto start = std::chrono::steady_clock::now();
  ExperimentResult result;
  result.side = params.side;
  result.iterations = params.iterations;

  SurfaceComplex complex =
      SurfaceComplex::seed(params.side, params.twist, params.antiprism_align);
  for (int k = 0;; ++k) {
    IntersectionReport report =
        detect_self_intersections(complex, params.depth, params.eps);
    if (report.intersecting) {
      report.first_iteration = k;
      result.intersecting = true;
      result.first_iteration = k;
      result.report = std::move(report);
      break;
    }
    if (k == params.iterations) {
      result.report = std::move(report);
      break;
    }
    complex.iterate(params.twist);
  }

  result.triangle_count = static_cast<long>(complex.triangles().size());
  result.wall_seconds = seconds_since(start);
  complex_out = std::move(complex);
  return result;
}

ExperimentResult run_experiment(const ExperimentParams& params) {
  std::optional<SurfaceComplex> ignored;
  return run_experiment(params, ignored);
}

ThresholdResult find_threshold(const ThresholdParams& params) {
  if (!(params.lo < params.hi)) {
    throw Error(ErrorCode::bracket_invalid, "low endpoint must be below high");
  }
  if (!(params.tolerance > 0.0)) {
    throw Error(ErrorCode::bracket_invalid, "tolerance must be positive");
  }

  auto evaluate = [&](double side) {
    ExperimentParams ep;
    ep.side = side;
    ep.iterations = params.iterations;
    ep.depth = params.depth;
    ep.eps = params.eps;
    ep.twist = params.twist;
    ep.antiprism_align = params.antiprism_align;
    return run_experiment(ep);
  };

  ThresholdResult result;
  result.iterations = params.iterations;
  result.depth = params.depth;

  ExperimentResult at_lo = evaluate(params.lo);
  if (!at_lo.intersecting) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "surface at low endpoint %.6g does not intersect",
                  params.lo);
    throw Error(ErrorCode::bracket_invalid, buf);
  }
  result.evaluations.push_back(std::move(at_lo));

  ExperimentResult at_hi = evaluate(params.hi);
  if (at_hi.intersecting) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "surface at high endpoint %.6g intersects",
                  params.hi);
    throw Error(ErrorCode::bracket_invalid, buf);
  }
  result.evaluations.push_back(std::move(at_hi));

  double lo = params.lo, hi = params.hi;
  while (hi - lo > params.tolerance) {
    double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;  // tolerance below double resolution
    ExperimentResult at_mid = evaluate(mid);
    (at_mid.intersecting ? lo : hi) = mid;
    result.evaluations.push_back(std::move(at_mid));
  }
  result.bracket_low = lo;
  result.bracket_high = hi;

  // An inversion (non-intersecting below an intersecting side) would mean
  // the predicate is not monotone at this resolution.
  for (const ExperimentResult& a : result.evaluations) {
    for (const ExperimentResult& b : result.evaluations) {
      if (a.side < b.side && !a.intersecting && b.intersecting) {
        result.non_monotone_warning = true;
      }
    }
  }
  return result;
}

}  // namespace hsurf
