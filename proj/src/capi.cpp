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

#include "hsurf.h"

#include <new>
#include <string>

#include "export.hpp"
#include "sweep.hpp"

using namespace hsurf;

struct hsurf_complex {
  SurfaceComplex impl;
};

struct hsurf_report {
  IntersectionReport impl;
  int depth = 1;
  double eps = tol::narrow_eps;
};

struct hsurf_threshold {
  ThresholdResult impl;
};

namespace {

thread_local std::string g_last_error;

hsurf_status status_of(const Error& e) {
  switch (e.code()) {
    case ErrorCode::invalid_point:
    case ErrorCode::placement_residual:
    case ErrorCode::merge_ambiguity:
      return HSURF_ERR_NUMERIC;
    case ErrorCode::bracket_invalid:
      return HSURF_ERR_BRACKET;
    case ErrorCode::io_error:
      return HSURF_ERR_IO;
    case ErrorCode::unsupported_schema:
      return HSURF_ERR_UNSUPPORTED;
    default:
      return HSURF_ERR_INVALID_ARGUMENT;
  }
}

hsurf_status fail(hsurf_status s, const char* message) {
  g_last_error = message;
  return s;
}

template <typename Fn>
hsurf_status guarded(Fn&& fn) {
  try {
    fn();
    return HSURF_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return status_of(e);
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return HSURF_ERR_NUMERIC;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return HSURF_ERR_INVALID_ARGUMENT;
  }
}

Twist twist_of(hsurf_twist t) { return t == HSURF_TWIST_CW ? Twist::cw : Twist::ccw; }

ExperimentParams experiment_params(const hsurf_build_params& b,
                                   const hsurf_check_params& c) {
  ExperimentParams p;
  p.side = b.side;
  p.iterations = b.iterations;
  p.twist = twist_of(b.twist);
  p.antiprism_align = b.antiprism_align;
  p.depth = c.depth;
  p.eps = c.eps > 0.0 ? c.eps : tol::narrow_eps;
  return p;
}

}  // namespace

extern "C" {

void hsurf_build_params_init(hsurf_build_params* p) {
  if (!p) return;
  p->side = 0.5;
  p->iterations = 3;
  p->twist = HSURF_TWIST_CCW;
  p->antiprism_align = 0;
}

void hsurf_check_params_init(hsurf_check_params* p) {
  if (!p) return;
  p->depth = 1;
  p->eps = tol::narrow_eps;
}

const char* hsurf_last_error(void) { return g_last_error.c_str(); }

const char* hsurf_status_name(hsurf_status s) {
  switch (s) {
    case HSURF_OK: return "ok";
    case HSURF_ERR_INVALID_ARGUMENT: return "invalid argument";
    case HSURF_ERR_NUMERIC: return "numeric fault";
    case HSURF_ERR_IO: return "io error";
    case HSURF_ERR_BRACKET: return "invalid bracket";
    case HSURF_ERR_UNSUPPORTED: return "unsupported schema";
  }
  return "unknown";
}

hsurf_status hsurf_build(const hsurf_build_params* params, hsurf_complex** out) {
  if (!params || !out) {
    return fail(HSURF_ERR_INVALID_ARGUMENT, "null parameter");
  }
  return guarded([&] {
    SurfaceComplex c = SurfaceComplex::seed(params->side, twist_of(params->twist),
                                            params->antiprism_align);
    if (params->iterations < 0) {
      throw Error(ErrorCode::invalid_argument, "iteration count must be >= 0");
    }
    for (int i = 0; i < params->iterations; ++i) c.iterate(twist_of(params->twist));
    *out = new hsurf_complex{std::move(c)};
  });
}

void hsurf_complex_free(hsurf_complex* c) { delete c; }

int64_t hsurf_complex_solid_count(const hsurf_complex* c) {
  return c ? static_cast<int64_t>(c->impl.solids().size()) : 0;
}
int64_t hsurf_complex_prism_count(const hsurf_complex* c) {
  return c ? c->impl.prism_count() : 0;
}
int64_t hsurf_complex_antiprism_count(const hsurf_complex* c) {
  return c ? c->impl.antiprism_count() : 0;
}
int64_t hsurf_complex_triangle_count(const hsurf_complex* c) {
  return c ? static_cast<int64_t>(c->impl.triangles().size()) : 0;
}
int64_t hsurf_complex_open_frame_count(const hsurf_complex* c) {
  return c ? static_cast<int64_t>(c->impl.open_frames().size()) : 0;
}
int64_t hsurf_complex_vertex_count(const hsurf_complex* c) {
  return c ? c->impl.merged().count() : 0;
}
int hsurf_complex_iterations(const hsurf_complex* c) {
  return c ? c->impl.iterations_done() : 0;
}
double hsurf_complex_side(const hsurf_complex* c) {
  return c ? c->impl.side() : 0.0;
}

hsurf_status hsurf_check(const hsurf_complex* c, const hsurf_check_params* params,
                         hsurf_report** out) {
  if (!c || !params || !out) {
    return fail(HSURF_ERR_INVALID_ARGUMENT, "null parameter");
  }
  return guarded([&] {
    double eps = params->eps > 0.0 ? params->eps : tol::narrow_eps;
    IntersectionReport r = detect_self_intersections(c->impl, params->depth, eps);
    *out = new hsurf_report{std::move(r), params->depth, eps};
  });
}

hsurf_status hsurf_run_experiment(const hsurf_build_params* build,
                                  const hsurf_check_params* check,
                                  hsurf_report** report_out,
                                  hsurf_complex** complex_out) {
  if (!build || !check) {
    return fail(HSURF_ERR_INVALID_ARGUMENT, "null parameter");
  }
  return guarded([&] {
    std::optional<SurfaceComplex> complex;
    ExperimentResult r = run_experiment(experiment_params(*build, *check), complex);
    if (report_out) {
      double eps = check->eps > 0.0 ? check->eps : tol::narrow_eps;
      *report_out = new hsurf_report{std::move(r.report), check->depth, eps};
    }
    if (complex_out) *complex_out = new hsurf_complex{std::move(*complex)};
  });
}

void hsurf_report_free(hsurf_report* r) { delete r; }

int hsurf_report_intersecting(const hsurf_report* r) {
  return r && r->impl.intersecting ? 1 : 0;
}
int hsurf_report_first_iteration(const hsurf_report* r) {
  return r && r->impl.first_iteration ? *r->impl.first_iteration : -1;
}
int64_t hsurf_report_pair_count(const hsurf_report* r) {
  return r ? static_cast<int64_t>(r->impl.pairs.size()) : 0;
}
int64_t hsurf_report_grazing_count(const hsurf_report* r) {
  return r ? static_cast<int64_t>(r->impl.grazing.size()) : 0;
}

hsurf_status hsurf_report_pair(const hsurf_report* r, int64_t i, int* a, int* b) {
  if (!r || i < 0 || i >= static_cast<int64_t>(r->impl.pairs.size()) || !a || !b) {
    return fail(HSURF_ERR_INVALID_ARGUMENT, "pair index out of range");
  }
  *a = r->impl.pairs[static_cast<size_t>(i)].first;
  *b = r->impl.pairs[static_cast<size_t>(i)].second;
  return HSURF_OK;
}

hsurf_status hsurf_report_grazing(const hsurf_report* r, int64_t i, int* a, int* b) {
  if (!r || i < 0 || i >= static_cast<int64_t>(r->impl.grazing.size()) || !a || !b) {
    return fail(HSURF_ERR_INVALID_ARGUMENT, "grazing index out of range");
  }
  *a = r->impl.grazing[static_cast<size_t>(i)].first;
  *b = r->impl.grazing[static_cast<size_t>(i)].second;
  return HSURF_OK;
}

void hsurf_sweep_params_init(hsurf_sweep_params* p) {
  if (!p) return;
  p->lo = 0.40;
  p->hi = 0.60;
  p->tolerance = 0.005;
  p->iterations = 8;
  p->depth = 1;
  p->eps = tol::narrow_eps;
  p->twist = HSURF_TWIST_CCW;
  p->antiprism_align = 0;
}

hsurf_status hsurf_sweep(const hsurf_sweep_params* params, hsurf_threshold** out) {
  if (!params || !out) {
    return fail(HSURF_ERR_INVALID_ARGUMENT, "null parameter");
  }
  return guarded([&] {
    ThresholdParams p;
    p.lo = params->lo;
    p.hi = params->hi;
    p.tolerance = params->tolerance;
    p.iterations = params->iterations;
    p.depth = params->depth;
    p.eps = params->eps > 0.0 ? params->eps : tol::narrow_eps;
    p.twist = twist_of(params->twist);
    p.antiprism_align = params->antiprism_align;
    *out = new hsurf_threshold{find_threshold(p)};
  });
}

void hsurf_threshold_free(hsurf_threshold* t) { delete t; }

double hsurf_threshold_low(const hsurf_threshold* t) {
  return t ? t->impl.bracket_low : 0.0;
}
double hsurf_threshold_high(const hsurf_threshold* t) {
  return t ? t->impl.bracket_high : 0.0;
}
int hsurf_threshold_non_monotone(const hsurf_threshold* t) {
  return t && t->impl.non_monotone_warning ? 1 : 0;
}
int64_t hsurf_threshold_evaluation_count(const hsurf_threshold* t) {
  return t ? static_cast<int64_t>(t->impl.evaluations.size()) : 0;
}

hsurf_status hsurf_threshold_evaluation(const hsurf_threshold* t, int64_t i,
                                        double* side, int* intersecting,
                                        int* first_iteration) {
  if (!t || i < 0 || i >= static_cast<int64_t>(t->impl.evaluations.size())) {
    return fail(HSURF_ERR_INVALID_ARGUMENT, "evaluation index out of range");
  }
  const ExperimentResult& e = t->impl.evaluations[static_cast<size_t>(i)];
  if (side) *side = e.side;
  if (intersecting) *intersecting = e.intersecting ? 1 : 0;
  if (first_iteration) *first_iteration = e.first_iteration ? *e.first_iteration : -1;
  return HSURF_OK;
}

hsurf_status hsurf_export_obj(const hsurf_complex* c, int depth, const char* path) {
  if (!c || !path) return fail(HSURF_ERR_INVALID_ARGUMENT, "null parameter");
  return guarded([&] { export_obj(c->impl, depth, std::string(path)); });
}

hsurf_status hsurf_export_pov(const hsurf_complex* c, const char* path) {
  if (!c || !path) return fail(HSURF_ERR_INVALID_ARGUMENT, "null parameter");
  return guarded([&] { export_povray(c->impl, std::string(path)); });
}

hsurf_status hsurf_export_json(const hsurf_complex* c, const char* command,
                               const hsurf_check_params* check,
                               const hsurf_report* report, const char* path) {
  if (!c || !path) return fail(HSURF_ERR_INVALID_ARGUMENT, "null parameter");
  return guarded([&] {
    RunConfig config;
    config.command = command ? command : "build";
    config.side = c->impl.side();
    config.iterations = c->impl.iterations_done();
    config.twist = c->impl.twist();
    config.antiprism_align = c->impl.antiprism_align();
    if (check) {
      config.depth = check->depth;
      config.eps = check->eps > 0.0 ? check->eps : tol::narrow_eps;
    }
    config.format = "json";
    config.output = path;
    export_json(c->impl, config, report ? &report->impl : nullptr,
                std::string(path));
  });
}

}  // extern "C"
