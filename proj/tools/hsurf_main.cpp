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

// hsurf command line: build / check / sweep / render on top of the C API.
// Messages go to stderr, data to files or stdout.  Exit codes: 0 success
// (and, for check, no self-intersection), 1 self-intersection found,
// 2 usage or configuration error, 3 numeric fault.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "hsurf.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIntersecting = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNumeric = 3;

struct Options {
  double side = 0.5;
  int iterations = 3;
  std::string twist = "ccw";
  int antiprism_align = 0;
  int depth = 1;
  double eps = 1e-9;
  std::string format = "obj";
  std::string output;
  double lo = 0.40;
  double hi = 0.60;
  double tolerance = 0.005;
  std::string config_path;
};

int exit_code_of(hsurf_status s) {
  switch (s) {
    case HSURF_OK: return kExitOk;
    case HSURF_ERR_NUMERIC: return kExitNumeric;
    default: return kExitUsage;
  }
}

int report_failure(hsurf_status s) {
  std::cerr << "error (" << hsurf_status_name(s) << "): " << hsurf_last_error()
            << "\n";
  return exit_code_of(s);
}

// Config file values fill in everything the command line left untouched.
int apply_config_file(const Options& defaults, Options& opts, const CLI::App& cmd) {
  if (opts.config_path.empty()) return kExitOk;
  std::ifstream is(opts.config_path);
  if (!is) {
    std::cerr << "error: cannot read config file " << opts.config_path << "\n";
    return kExitUsage;
  }
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(is);
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: bad config file: " << e.what() << "\n";
    return kExitUsage;
  }
  auto keep_cli = [&](const char* flag) {
    const CLI::Option* o = cmd.get_option_no_throw(flag);
    return o != nullptr && o->count() > 0;
  };
  try {
    if (!keep_cli("--side") && j.contains("side")) opts.side = j["side"];
    if (!keep_cli("--iterations") && j.contains("iterations"))
      opts.iterations = j["iterations"];
    if (!keep_cli("--twist") && j.contains("twist")) opts.twist = j["twist"];
    if (!keep_cli("--antiprism-align") && j.contains("antiprism_align"))
      opts.antiprism_align = j["antiprism_align"];
    if (!keep_cli("--depth") && j.contains("depth")) opts.depth = j["depth"];
    if (!keep_cli("--eps") && j.contains("eps")) opts.eps = j["eps"];
    if (!keep_cli("--format") && j.contains("format")) opts.format = j["format"];
    if (!keep_cli("--output") && j.contains("output")) opts.output = j["output"];
    if (!keep_cli("--lo") && j.contains("lo")) opts.lo = j["lo"];
    if (!keep_cli("--hi") && j.contains("hi")) opts.hi = j["hi"];
    if (!keep_cli("--tol") && j.contains("tolerance")) opts.tolerance = j["tolerance"];
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: bad config value: " << e.what() << "\n";
    return kExitUsage;
  }
  (void)defaults;
  return kExitOk;
}

int validate(const Options& o) {
  if (!(o.side > 0)) {
    std::cerr << "error: --side must be positive\n";
    return kExitUsage;
  }
  if (o.iterations < 0) {
    std::cerr << "error: --iterations must be >= 0\n";
    return kExitUsage;
  }
  if (o.twist != "ccw" && o.twist != "cw") {
    std::cerr << "error: --twist must be ccw or cw\n";
    return kExitUsage;
  }
  if (o.antiprism_align < 0 || o.antiprism_align > 3) {
    std::cerr << "error: --antiprism-align must be in 0..3\n";
    return kExitUsage;
  }
  if (o.depth < 0 || o.depth > 6) {
    std::cerr << "error: --depth must be in 0..6\n";
    return kExitUsage;
  }
  if (!(o.eps > 0)) {
    std::cerr << "error: --eps must be positive\n";
    return kExitUsage;
  }
  return kExitOk;
}

hsurf_build_params build_params(const Options& o) {
  hsurf_build_params p;
  hsurf_build_params_init(&p);
  p.side = o.side;
  p.iterations = o.iterations;
  p.twist = o.twist == "cw" ? HSURF_TWIST_CW : HSURF_TWIST_CCW;
  p.antiprism_align = o.antiprism_align;
  return p;
}

hsurf_check_params check_params(const Options& o) {
  hsurf_check_params p;
  hsurf_check_params_init(&p);
  p.depth = o.depth;
  p.eps = o.eps;
  return p;
}

void describe_complex(const hsurf_complex* c) {
  std::cerr << "side " << hsurf_complex_side(c) << ", "
            << hsurf_complex_iterations(c) << " iterations: "
            << hsurf_complex_solid_count(c) << " solids ("
            << hsurf_complex_prism_count(c) << " prisms, "
            << hsurf_complex_antiprism_count(c) << " antiprisms), "
            << hsurf_complex_triangle_count(c) << " triangles, "
            << hsurf_complex_open_frame_count(c) << " open frames, "
            << hsurf_complex_vertex_count(c) << " vertices\n";
}

int export_to(const Options& o, const hsurf_complex* c, const std::string& format,
              const std::string& path, const char* command) {
  hsurf_status s;
  if (format == "obj") {
    s = hsurf_export_obj(c, o.depth, path.c_str());
  } else if (format == "pov") {
    s = hsurf_export_pov(c, path.c_str());
  } else if (format == "json") {
    hsurf_check_params cp = check_params(o);
    s = hsurf_export_json(c, command, &cp, nullptr, path.c_str());
  } else {
    std::cerr << "error: unknown format '" << format << "' (obj|pov|json)\n";
    return kExitUsage;
  }
  if (s != HSURF_OK) return report_failure(s);
  std::cerr << "wrote " << path << "\n";
  return kExitOk;
}

int cmd_build(const Options& o) {
  if (o.output.empty()) {
    std::cerr << "error: build requires --output\n";
    return kExitUsage;
  }
  hsurf_build_params bp = build_params(o);
  hsurf_complex* c = nullptr;
  hsurf_status s = hsurf_build(&bp, &c);
  if (s != HSURF_OK) return report_failure(s);
  describe_complex(c);
  int rc = export_to(o, c, o.format, o.output, "build");
  hsurf_complex_free(c);
  return rc;
}

int cmd_render(const Options& o) {
  if (o.output.empty()) {
    std::cerr << "error: render requires --output\n";
    return kExitUsage;
  }
  hsurf_build_params bp = build_params(o);
  hsurf_complex* c = nullptr;
  hsurf_status s = hsurf_build(&bp, &c);
  if (s != HSURF_OK) return report_failure(s);
  describe_complex(c);
  int rc = export_to(o, c, "pov", o.output, "render");
  hsurf_complex_free(c);
  return rc;
}

int cmd_check(const Options& o) {
  hsurf_build_params bp = build_params(o);
  hsurf_check_params cp = check_params(o);
  hsurf_complex* c = nullptr;
  hsurf_report* r = nullptr;
  hsurf_status s = hsurf_run_experiment(&bp, &cp, &r, &c);
  if (s != HSURF_OK) return report_failure(s);
  describe_complex(c);

  bool intersecting = hsurf_report_intersecting(r) != 0;
  int first = hsurf_report_first_iteration(r);
  if (intersecting) {
    std::cerr << "result: SELF-INTERSECTING (first at iteration " << first << ", "
              << hsurf_report_pair_count(r) << " crossing pairs, "
              << hsurf_report_grazing_count(r) << " grazing)\n";
  } else {
    std::cerr << "result: no self-intersection ("
              << hsurf_report_grazing_count(r) << " grazing contacts)\n";
  }

  nlohmann::json out;
  out["command"] = "check";
  out["side"] = o.side;
  out["iterations"] = o.iterations;
  out["twist"] = o.twist;
  out["antiprism_align"] = o.antiprism_align;
  out["depth"] = o.depth;
  out["eps"] = o.eps;
  out["intersecting"] = intersecting;
  out["first_iteration"] =
      first >= 0 ? nlohmann::json(first) : nlohmann::json(nullptr);
  nlohmann::json pairs = nlohmann::json::array();
  for (int64_t i = 0; i < hsurf_report_pair_count(r); ++i) {
    int a = 0, b = 0;
    hsurf_report_pair(r, i, &a, &b);
    pairs.push_back(nlohmann::json::array({a, b}));
  }
  out["pairs"] = std::move(pairs);
  nlohmann::json grazing = nlohmann::json::array();
  for (int64_t i = 0; i < hsurf_report_grazing_count(r); ++i) {
    int a = 0, b = 0;
    hsurf_report_grazing(r, i, &a, &b);
    grazing.push_back(nlohmann::json::array({a, b}));
  }
  out["grazing"] = std::move(grazing);
  std::cout << out.dump(1) << "\n";

  int rc = kExitOk;
  if (!o.output.empty()) {
    hsurf_status es = hsurf_export_json(c, "check", &cp, r, o.output.c_str());
    rc = es == HSURF_OK ? kExitOk : report_failure(es);
    if (es == HSURF_OK) std::cerr << "wrote " << o.output << "\n";
  }
  hsurf_report_free(r);
  hsurf_complex_free(c);
  if (rc != kExitOk) return rc;
  return intersecting ? kExitIntersecting : kExitOk;
}

int cmd_sweep(const Options& o) {
  hsurf_sweep_params sp;
  hsurf_sweep_params_init(&sp);
  sp.lo = o.lo;
  sp.hi = o.hi;
  sp.tolerance = o.tolerance;
  sp.iterations = o.iterations;
  sp.depth = o.depth;
  sp.eps = o.eps;
  sp.twist = o.twist == "cw" ? HSURF_TWIST_CW : HSURF_TWIST_CCW;
  sp.antiprism_align = o.antiprism_align;

  if (!(sp.lo < sp.hi) || !(sp.tolerance > 0)) {
    std::cerr << "error: sweep needs --lo < --hi and positive --tol\n";
    return kExitUsage;
  }

  hsurf_threshold* t = nullptr;
  hsurf_status s = hsurf_sweep(&sp, &t);
  if (s != HSURF_OK) return report_failure(s);

  double lo = hsurf_threshold_low(t), hi = hsurf_threshold_high(t);
  std::cerr << "threshold bracket [" << lo << ", " << hi << "] at "
            << o.iterations << " iterations, depth " << o.depth << " ("
            << hsurf_threshold_evaluation_count(t) << " evaluations";
  if (hsurf_threshold_non_monotone(t)) std::cerr << ", NON-MONOTONE";
  std::cerr << ")\n";

  nlohmann::json out;
  out["command"] = "sweep";
  out["bracket_low"] = lo;
  out["bracket_high"] = hi;
  out["iterations"] = o.iterations;
  out["depth"] = o.depth;
  out["twist"] = o.twist;
  out["antiprism_align"] = o.antiprism_align;
  out["tolerance"] = o.tolerance;
  out["non_monotone_warning"] = hsurf_threshold_non_monotone(t) != 0;
  nlohmann::json evals = nlohmann::json::array();
  for (int64_t i = 0; i < hsurf_threshold_evaluation_count(t); ++i) {
    double side = 0;
    int inter = 0, first = -1;
    hsurf_threshold_evaluation(t, i, &side, &inter, &first);
    nlohmann::json e;
    e["side"] = side;
    e["intersecting"] = inter != 0;
    e["first_iteration"] = first >= 0 ? nlohmann::json(first) : nlohmann::json(nullptr);
    evals.push_back(std::move(e));
  }
  out["evaluations"] = std::move(evals);
  std::string text = out.dump(1) + "\n";
  std::cout << text;
  if (!o.output.empty()) {
    std::ofstream os(o.output, std::ios::binary);
    if (!os) {
      std::cerr << "error: cannot write " << o.output << "\n";
      hsurf_threshold_free(t);
      return kExitUsage;
    }
    os << text;
    std::cerr << "wrote " << o.output << "\n";
  }
  hsurf_threshold_free(t);
  return kExitOk;
}

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--side,-s", o.side, "hyperbolic side length");
  cmd->add_option("--iterations,-n", o.iterations, "gluing iterations after the seed");
  cmd->add_option("--twist", o.twist, "prism twist direction (ccw|cw)");
  cmd->add_option("--antiprism-align", o.antiprism_align,
                  "antiprism base rotation (0..3)");
  cmd->add_option("--depth", o.depth, "face subdivision depth (0..6)");
  cmd->add_option("--eps", o.eps, "narrow-phase distance snap");
  cmd->add_option("--output,-o", o.output, "output file");
  cmd->add_option("--config", o.config_path, "JSON config file (flags win)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hyperbolic {3,7} prism/antiprism surface builder"};
  app.require_subcommand(1);

  Options defaults;
  Options o;

  CLI::App* build = app.add_subcommand("build", "construct the surface and export it");
  add_common(build, o);
  build->add_option("--format", o.format, "output format (obj|pov|json)");

  CLI::App* check =
      app.add_subcommand("check", "construct and test for self-intersection");
  add_common(check, o);

  CLI::App* sweep =
      app.add_subcommand("sweep", "bisect the side length for the threshold");
  add_common(sweep, o);
  sweep->add_option("--lo", o.lo, "intersecting endpoint");
  sweep->add_option("--hi", o.hi, "non-intersecting endpoint");
  sweep->add_option("--tol", o.tolerance, "bracket width target");

  CLI::App* render = app.add_subcommand("render", "emit the POV-Ray CSG scene");
  add_common(render, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  CLI::App* cmd = app.get_subcommands().front();
  int rc = apply_config_file(defaults, o, *cmd);
  if (rc != kExitOk) return rc;
  rc = validate(o);
  if (rc != kExitOk) return rc;

  if (cmd == build) return cmd_build(o);
  if (cmd == check) return cmd_check(o);
  if (cmd == sweep) return cmd_sweep(o);
  if (cmd == render) return cmd_render(o);
  return kExitUsage;
}
