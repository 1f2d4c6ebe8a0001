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

#include <optional>
#include <utility>
#include <vector>

#include "solids.hpp"

namespace hsurf {

/// Handedness of the prism attachment onto a square face.  The two choices
/// differ by one cyclic shift of the target frame labeling and produce
/// mirror-related placements.
enum class Twist { ccw, cw };

/// Cyclically relabels the frame corners by k steps: the new anchor is the
/// old corner k positions along the face cycle.
SquareFrame shift_frame(const SquareFrame& f, int k);

/// ccw keeps the frame labeling; cw shifts it by one corner.
SquareFrame twist_frame(const SquareFrame& f, Twist twist);

struct PlacedSolid {
  int id = 0;
  SolidKind kind = SolidKind::triangular_prism;
  double side = 0.0;
  std::vector<Point> vertices;
  int iteration = 0;
  std::optional<std::pair<int, int>> parent_face;  // (solid id, face id)
  Isometry isometry;                               // canonical (scaled) -> placed
};

/// Relocates a scaled solid so that its attachment face lands on `target`,
/// using the bisector/rotate/bisector sequence: reflect the solid's anchor
/// to the origin over N, reflect the target's anchor to the origin over M,
/// rotate about the origin to align the remaining two labeled vertices, and
/// reflect back over M.  The solid ends up on the target's outward side.
PlacedSolid place_solid(const ScaledSolid& proto, int attach_face,
                        const SquareFrame& target);

/// Convenience form matching the gluing step: scale, twist the target
/// labeling, place.
PlacedSolid place_solid(SolidKind kind, double side, const SquareFrame& target,
                        int attach_face, Twist twist);

struct SurfaceTriangle {
  std::array<Point, 3> corners;
  int solid = 0;
  int face = 0;
};

struct OpenFrame {
  SquareFrame frame;
  int solid = 0;
  int face = 0;
};

struct GluedPair {
  int solid_a = 0, face_a = 0;  // existing face
  int solid_b = 0, face_b = 0;  // newly attached face
};

/// Global vertex identification produced by merge_vertices.
struct MergedVertices {
  std::vector<Vec3> coords;                     // representative per global id
  std::vector<std::vector<int>> per_solid;      // solid -> local vertex -> global id
  std::vector<std::array<int, 3>> triangle_ids; // per surface triangle
  std::vector<char> on_open_frame;              // per global id
  int count() const { return static_cast<int>(coords.size()); }
};

/// The growing assembly: placed solids, glued face pairs, the open square
/// frontier, and the exposed triangles.  Construction is deterministic and
/// single-threaded; a finished complex is safe to share read-only.
class SurfaceComplex {
 public:
  /// Prism at the origin plus an antiprism glued to each of its three square
  /// faces: 4 solids, 3 open frames, 26 surface triangles.
  static SurfaceComplex seed(double side, Twist twist = Twist::ccw,
                             int antiprism_align = 0);

  /// No solids, no frames; useful as an exporter edge case.
  static SurfaceComplex empty(double side);

  /// One gluing round: a prism onto every open frame, then an antiprism onto
  /// each of the two free squares of every new prism.  Doubles the frontier.
  void iterate(Twist twist);

  const std::vector<PlacedSolid>& solids() const { return solids_; }
  const std::vector<OpenFrame>& open_frames() const { return open_; }
  const std::vector<GluedPair>& glued_pairs() const { return glued_; }
  const std::vector<SurfaceTriangle>& triangles() const { return triangles_; }
  double side() const { return side_; }
  int iterations_done() const { return iterations_done_; }
  int antiprism_align() const { return align_; }
  Twist twist() const { return twist_; }
  long prism_count() const { return prisms_; }
  long antiprism_count() const { return antiprisms_; }

  /// Cached global vertex table; built on first use after each growth step.
  const MergedVertices& merged() const;

 private:
  SurfaceComplex() = default;
  int add_solid(PlacedSolid&& solid);
  void add_triangles_of(int solid_id);
  SquareFrame placed_face_frame(int solid_id, int face_id, bool reversed) const;
  void attach_antiprisms(int prism_id, int iteration);

  std::vector<PlacedSolid> solids_;
  std::vector<OpenFrame> open_;
  std::vector<GluedPair> glued_;
  std::vector<SurfaceTriangle> triangles_;
  double side_ = 0.0;
  Twist twist_ = Twist::ccw;
  int align_ = 0;
  int iterations_done_ = 0;
  long prisms_ = 0;
  long antiprisms_ = 0;
  ScaledSolid prism_proto_;
  ScaledSolid antiprism_proto_;
  mutable std::optional<MergedVertices> merged_cache_;
};

/// Spec operation: identical to SurfaceComplex::seed.
inline SurfaceComplex seed_complex(double side, Twist twist = Twist::ccw,
                                   int antiprism_align = 0) {
  return SurfaceComplex::seed(side, twist, antiprism_align);
}

/// Vertices within merge_radius of each other share a global id.  Throws
/// MergeAmbiguity when two distinct lattice vertices come within 10x the
/// merge radius (a tolerance misconfiguration, not a geometry event).
MergedVertices merge_vertices(const SurfaceComplex& complex);

/// Triangle count incident to each merged vertex.
std::vector<int> triangle_valences(const SurfaceComplex& complex);

}  // namespace hsurf
