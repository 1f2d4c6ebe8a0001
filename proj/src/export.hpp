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

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "collision.hpp"

namespace hsurf {

inline constexpr int kDumpSchemaVersion = 1;

/// Resolved run configuration, echoed into dumps.  The JSON config file uses
/// the same field names as the dump's "config" block.
struct RunConfig {
  std::string command = "build";
  double side = 0.5;
  int iterations = 3;
  Twist twist = Twist::ccw;
  int antiprism_align = 0;
  int depth = 1;
  double eps = tol::narrow_eps;
  double merge_eps = tol::merge_radius;
  std::string format = "obj";
  std::string output;
  // sweep-only
  double lo = 0.40;
  double hi = 0.60;
  double tolerance = 0.005;
};

/// Flat mesh of the exposed triangles: merged vertices first, then the
/// subdivision vertices of each face; 4^depth faces per surface triangle,
/// winding inherited from the owning solid.  Byte-stable for a fixed config.
void export_obj(const SurfaceComplex& complex, int depth, std::ostream& os);
void export_obj(const SurfaceComplex& complex, int depth, const std::string& path);

/// POV-Ray scene: every surface triangle becomes a CSG intersection of its
/// carrier (the sphere of the hyperbolic plane through its corners, or a thin
/// slab when that plane passes through the origin) with three half-spaces
/// bounded by the hyperbolic planes through its edge geodesics.  Includes
/// switchable "top" / "side" camera presets.
void export_povray(const SurfaceComplex& complex, std::ostream& os);
void export_povray(const SurfaceComplex& complex, const std::string& path);

/// Canonical JSON dump: sorted keys, shortest round-trip floats, schema
/// version field.  Lossless for coordinates, ids, and config.
void export_json(const SurfaceComplex& complex, const RunConfig& config,
                 const IntersectionReport* report, std::ostream& os);
void export_json(const SurfaceComplex& complex, const RunConfig& config,
                 const IntersectionReport* report, const std::string& path);

/// Parsed form of the canonical dump (geometry is not re-assembled).
struct SurfaceDump {
  int schema_version = 0;
  RunConfig config;
  std::vector<Vec3> vertices;
  struct Solid {
    int id = 0;
    std::string kind;
    int iteration = 0;
    std::optional<std::pair<int, int>> parent;
    std::vector<int> vertices;
  };
  std::vector<Solid> solids;
  struct Triangle {
    std::array<int, 3> v{};
    int solid = 0;
    int face = 0;
  };
  std::vector<Triangle> triangles;
  struct Frame {
    std::array<int, 4> v{};
    int solid = 0;
    int face = 0;
  };
  std::vector<Frame> open_frames;
  std::optional<IntersectionReport> report;
};

/// Throws UnsupportedSchema when the file's schema version is unknown.
SurfaceDump load_dump(std::istream& is);
SurfaceDump load_dump(const std::string& path);

const char* twist_name(Twist t);
Twist twist_from_name(const std::string& name);

}  // namespace hsurf
