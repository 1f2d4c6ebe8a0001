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

#include "export.hpp"

#include <bit>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <tuple>

#include <json.hpp>

namespace hsurf {

namespace {

std::string g17(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw Error(ErrorCode::io_error, "cannot open for writing: " + path);
  return os;
}

using VertexKey = std::tuple<std::uint64_t, std::uint64_t, std::uint64_t>;

VertexKey key_of(Vec3 v) {
  return {std::bit_cast<std::uint64_t>(v.x), std::bit_cast<std::uint64_t>(v.y),
          std::bit_cast<std::uint64_t>(v.z)};
}

}  // namespace

const char* twist_name(Twist t) { return t == Twist::ccw ? "ccw" : "cw"; }

Twist twist_from_name(const std::string& name) {
  if (name == "ccw") return Twist::ccw;
  if (name == "cw") return Twist::cw;
  throw Error(ErrorCode::invalid_argument, "twist must be 'ccw' or 'cw'");
}

void export_obj(const SurfaceComplex& complex, int depth, std::ostream& os) {
  const MergedVertices& merged = complex.merged();
  os << "# hsurf triangle surface, side " << g17(complex.side()) << ", "
     << complex.iterations_done() << " iterations, subdivision depth " << depth
     << "\n";

  for (const Vec3& v : merged.coords) {
    os << "v " << g17(v.x) << " " << g17(v.y) << " " << g17(v.z) << "\n";
  }

  int next_id = merged.count();  // 0-based; obj faces are written 1-based
  std::vector<std::string> extra;
  std::vector<std::array<int, 3>> faces;
  const std::vector<SurfaceTriangle>& tris = complex.triangles();
  for (size_t ti = 0; ti < tris.size(); ++ti) {
    std::map<VertexKey, int> local;
    for (int k = 0; k < 3; ++k) {
      local[key_of(tris[ti].corners[k].vec())] = merged.triangle_ids[ti][k];
    }
    for (const FlatTri& f : subdivide(tris[ti], depth)) {
      std::array<int, 3> ids{};
      for (int k = 0; k < 3; ++k) {
        auto [it, inserted] = local.try_emplace(key_of(f.v[k]), next_id);
        if (inserted) {
          extra.push_back("v " + g17(f.v[k].x) + " " + g17(f.v[k].y) + " " +
                          g17(f.v[k].z) + "\n");
          ++next_id;
        }
        ids[k] = it->second;
      }
      faces.push_back(ids);
    }
  }
  for (const std::string& line : extra) os << line;
  for (const std::array<int, 3>& f : faces) {
    os << "f " << f[0] + 1 << " " << f[1] + 1 << " " << f[2] + 1 << "\n";
  }
}

void export_obj(const SurfaceComplex& complex, int depth, const std::string& path) {
  std::ofstream os = open_out(path);
  export_obj(complex, depth, os);
  if (!os) throw Error(ErrorCode::io_error, "write failed: " + path);
}

namespace {

constexpr double kSlabHalfWidth = 1e-6;

void emit_halfspace(std::ostream& os, const HPlane& wall, Vec3 inside) {
  if (wall.is_planar()) {
    Vec3 n = wall.planar().normal;
    if (dot(n, inside) > 0.0) n = -n;  // pov plane{<n>, d} keeps n.x <= d
    os << "  plane { <" << g17(n.x) << ", " << g17(n.y) << ", " << g17(n.z)
       << ">, 0 }\n";
  } else {
    const SphereMirror& s = wall.sphere();
    bool keep_inside = norm(inside - s.center) < s.radius;
    os << "  sphere { <" << g17(s.center.x) << ", " << g17(s.center.y) << ", "
       << g17(s.center.z) << ">, " << g17(s.radius)
       << (keep_inside ? "" : " inverse") << " }\n";
  }
}

// Hyperbolic plane through the geodesic of (p, q), built from a third point
// on the geodesic's extension.  A straight (diametral) geodesic has no such
// sphere; it only occurs with a planar carrier, where the wall orthogonal to
// the carrier through the chord does the job.
HPlane edge_wall(const Point& p, const Point& q, const HPlane& carrier) {
  Point ext = geodesic_point(p, q, 2.0);
  try {
    return plane_through(p, q, ext);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::collinear_points || !carrier.is_planar()) throw;
    Vec3 n = normalized(cross(q.vec() - p.vec(), carrier.planar().normal));
    return HPlane(PlanarMirror{n});
  }
}

}  // namespace

void export_povray(const SurfaceComplex& complex, std::ostream& os) {
  os << "// hsurf surface scene: " << complex.triangles().size()
     << " curved triangles, side " << g17(complex.side()) << ", "
     << complex.iterations_done() << " iterations\n"
     << "// Render with +DHSURF_VIEW=\"top\" or \"side\" (declare below).\n"
     << "#version 3.7;\n"
     << "global_settings { assumed_gamma 1.0 }\n"
     << "background { rgb 1 }\n"
     << "#ifndef (HSURF_VIEW)\n"
     << "#declare HSURF_VIEW = \"top\";\n"
     << "#end\n"
     << "#if (strcmp(HSURF_VIEW, \"top\") = 0)\n"
     << "camera { location <0, 0, 2.2> look_at <0, 0, 0> angle 50 }\n"
     << "#else // side\n"
     << "camera { location <2.2, 0, 0> look_at <0, 0, 0> sky <0, 0, 1> angle 50 }\n"
     << "#end\n"
     << "light_source { <4, 2, 5> rgb 1 }\n"
     << "light_source { <-3, -4, 2> rgb 0.5 shadowless }\n"
     << "#declare hsurf_face = texture { pigment { rgb <0.55, 0.70, 0.95> } "
        "finish { ambient 0.15 diffuse 0.75 } }\n";

  const std::vector<SurfaceTriangle>& tris = complex.triangles();
  for (size_t i = 0; i < tris.size(); ++i) {
    const SurfaceTriangle& t = tris[i];
    const Point& p = t.corners[0];
    const Point& q = t.corners[1];
    const Point& r = t.corners[2];
    HPlane carrier = plane_through(p, q, r);
    Vec3 centroid = (p.vec() + q.vec() + r.vec()) / 3.0;

    os << "// triangle " << i << " (solid " << t.solid << ", face " << t.face
       << ")\n"
       << "intersection {\n";
    if (carrier.is_planar()) {
      Vec3 n = carrier.planar().normal;
      os << "  plane { <" << g17(n.x) << ", " << g17(n.y) << ", " << g17(n.z)
         << ">, " << g17(kSlabHalfWidth) << " }\n"
         << "  plane { <" << g17(-n.x) << ", " << g17(-n.y) << ", " << g17(-n.z)
         << ">, " << g17(kSlabHalfWidth) << " }\n";
    } else {
      const SphereMirror& s = carrier.sphere();
      os << "  sphere { <" << g17(s.center.x) << ", " << g17(s.center.y) << ", "
         << g17(s.center.z) << ">, " << g17(s.radius) << " }\n";
    }
    emit_halfspace(os, edge_wall(p, q, carrier), centroid);
    emit_halfspace(os, edge_wall(q, r, carrier), centroid);
    emit_halfspace(os, edge_wall(r, p, carrier), centroid);
    os << "  texture { hsurf_face }\n"
       << "}\n";
  }
}

void export_povray(const SurfaceComplex& complex, const std::string& path) {
  std::ofstream os = open_out(path);
  export_povray(complex, os);
  if (!os) throw Error(ErrorCode::io_error, "write failed: " + path);
}

namespace {

using nlohmann::json;

json config_to_json(const RunConfig& c) {
  json j;
  j["command"] = c.command;
  j["side"] = c.side;
  j["iterations"] = c.iterations;
  j["twist"] = twist_name(c.twist);
  j["antiprism_align"] = c.antiprism_align;
  j["depth"] = c.depth;
  j["eps"] = c.eps;
  j["merge_eps"] = c.merge_eps;
  j["format"] = c.format;
  j["output"] = c.output;
  j["lo"] = c.lo;
  j["hi"] = c.hi;
  j["tolerance"] = c.tolerance;
  return j;
}

RunConfig config_from_json(const json& j) {
  RunConfig c;
  c.command = j.value("command", c.command);
  c.side = j.value("side", c.side);
  c.iterations = j.value("iterations", c.iterations);
  if (j.contains("twist")) c.twist = twist_from_name(j.at("twist").get<std::string>());
  c.antiprism_align = j.value("antiprism_align", c.antiprism_align);
  c.depth = j.value("depth", c.depth);
  c.eps = j.value("eps", c.eps);
  c.merge_eps = j.value("merge_eps", c.merge_eps);
  c.format = j.value("format", c.format);
  c.output = j.value("output", c.output);
  c.lo = j.value("lo", c.lo);
  c.hi = j.value("hi", c.hi);
  c.tolerance = j.value("tolerance", c.tolerance);
  return c;
}

json report_to_json(const IntersectionReport& r) {
  json j;
  j["intersecting"] = r.intersecting;
  j["first_iteration"] =
      r.first_iteration ? json(*r.first_iteration) : json(nullptr);
  json pairs = json::array();
  for (auto [a, b] : r.pairs) pairs.push_back(json::array({a, b}));
  j["pairs"] = std::move(pairs);
  json grazing = json::array();
  for (auto [a, b] : r.grazing) grazing.push_back(json::array({a, b}));
  j["grazing"] = std::move(grazing);
  return j;
}

IntersectionReport report_from_json(const json& j) {
  IntersectionReport r;
  r.intersecting = j.at("intersecting").get<bool>();
  if (!j.at("first_iteration").is_null()) {
    r.first_iteration = j.at("first_iteration").get<int>();
  }
  for (const json& p : j.at("pairs")) {
    r.pairs.emplace_back(p.at(0).get<int>(), p.at(1).get<int>());
  }
  for (const json& p : j.at("grazing")) {
    r.grazing.emplace_back(p.at(0).get<int>(), p.at(1).get<int>());
  }
  return r;
}

}  // namespace

void export_json(const SurfaceComplex& complex, const RunConfig& config,
                 const IntersectionReport* report, std::ostream& os) {
  const MergedVertices& merged = complex.merged();
  json j;
  j["schema_version"] = kDumpSchemaVersion;
  j["config"] = config_to_json(config);

  json vertices = json::array();
  for (const Vec3& v : merged.coords) {
    vertices.push_back(json::array({v.x, v.y, v.z}));
  }
  j["vertices"] = std::move(vertices);

  json solids = json::array();
  for (const PlacedSolid& s : complex.solids()) {
    json js;
    js["id"] = s.id;
    js["kind"] = kind_name(s.kind);
    js["iteration"] = s.iteration;
    js["parent"] = s.parent_face
                       ? json::array({s.parent_face->first, s.parent_face->second})
                       : json(nullptr);
    js["vertices"] = merged.per_solid[s.id];
    solids.push_back(std::move(js));
  }
  j["solids"] = std::move(solids);

  json triangles = json::array();
  const std::vector<SurfaceTriangle>& tris = complex.triangles();
  for (size_t i = 0; i < tris.size(); ++i) {
    json jt;
    jt["v"] = merged.triangle_ids[i];
    jt["solid"] = tris[i].solid;
    jt["face"] = tris[i].face;
    triangles.push_back(std::move(jt));
  }
  j["triangles"] = std::move(triangles);

  json frames = json::array();
  for (const OpenFrame& of : complex.open_frames()) {
    const std::vector<int>& face =
        canonical_solid(complex.solids()[of.solid].kind).faces[of.face];
    json jf;
    json ids = json::array();
    for (int local : face) ids.push_back(merged.per_solid[of.solid][local]);
    jf["v"] = std::move(ids);
    jf["solid"] = of.solid;
    jf["face"] = of.face;
    frames.push_back(std::move(jf));
  }
  j["open_frames"] = std::move(frames);

  if (report) j["report"] = report_to_json(*report);

  os << j.dump(1) << "\n";
}

void export_json(const SurfaceComplex& complex, const RunConfig& config,
                 const IntersectionReport* report, const std::string& path) {
  std::ofstream os = open_out(path);
  export_json(complex, config, report, os);
  if (!os) throw Error(ErrorCode::io_error, "write failed: " + path);
}

SurfaceDump load_dump(std::istream& is) {
  json j;
  try {
    j = json::parse(is);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::io_error, std::string("dump parse error: ") + e.what());
  }
  try {
    SurfaceDump d;
    d.schema_version = j.at("schema_version").get<int>();
    if (d.schema_version != kDumpSchemaVersion) {
      throw Error(ErrorCode::unsupported_schema,
                  "unsupported dump schema version " +
                      std::to_string(d.schema_version));
    }
    d.config = config_from_json(j.at("config"));
    for (const json& v : j.at("vertices")) {
      Vec3 p{v.at(0).get<double>(), v.at(1).get<double>(), v.at(2).get<double>()};
      if (norm2(p) >= 1.0) {
        throw Error(ErrorCode::invalid_point, "dump vertex outside the unit ball");
      }
      d.vertices.push_back(p);
    }
    int vertex_count = static_cast<int>(d.vertices.size());
    auto check_id = [&](int id) {
      if (id < 0 || id >= vertex_count) {
        throw Error(ErrorCode::io_error, "dump references missing vertex id");
      }
      return id;
    };
    for (const json& s : j.at("solids")) {
      SurfaceDump::Solid out;
      out.id = s.at("id").get<int>();
      out.kind = s.at("kind").get<std::string>();
      out.iteration = s.at("iteration").get<int>();
      if (!s.at("parent").is_null()) {
        out.parent = {s.at("parent").at(0).get<int>(), s.at("parent").at(1).get<int>()};
      }
      for (const json& id : s.at("vertices")) out.vertices.push_back(check_id(id));
      d.solids.push_back(std::move(out));
    }
    for (const json& t : j.at("triangles")) {
      SurfaceDump::Triangle out;
      for (int k = 0; k < 3; ++k) out.v[k] = check_id(t.at("v").at(k).get<int>());
      out.solid = t.at("solid").get<int>();
      out.face = t.at("face").get<int>();
      d.triangles.push_back(out);
    }
    for (const json& f : j.at("open_frames")) {
      SurfaceDump::Frame out;
      for (int k = 0; k < 4; ++k) out.v[k] = check_id(f.at("v").at(k).get<int>());
      out.solid = f.at("solid").get<int>();
      out.face = f.at("face").get<int>();
      d.open_frames.push_back(out);
    }
    if (j.contains("report")) d.report = report_from_json(j.at("report"));
    return d;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::io_error, std::string("malformed dump: ") + e.what());
  }
}

SurfaceDump load_dump(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw Error(ErrorCode::io_error, "cannot open for reading: " + path);
  return load_dump(is);
}

}  // namespace hsurf
