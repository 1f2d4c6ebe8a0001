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

#include "assembly.hpp"

namespace hsurf {

/// Flat (chordal) triangle approximating a piece of a curved face.
struct FlatTri {
  std::array<Vec3, 3> v;
  int parent = 0;  // surface triangle index
  int piece = 0;   // subdivision index within the parent
};

/// Geodesic midpoint refinement of a surface triangle into 4^depth flats.
/// All generated vertices stay on the hyperbolic plane through the corners.
/// Throws DepthExceeded for depth > 6.
std::vector<FlatTri> subdivide(const SurfaceTriangle& tri, int depth);

/// Closed triangle-triangle intersection via separating axes with a
/// symmetric distance snap: the triangles count as separated only when some
/// axis shows a gap above eps.  Throws DegenerateTriangle on zero-area input.
bool tri_tri_intersect(const FlatTri& a, const FlatTri& b, double eps);

/// Same predicate, returning the smallest axis overlap on intersection (a
/// penetration-depth proxy; near zero for grazing contact).
std::optional<double> tri_tri_overlap_depth(const FlatTri& a, const FlatTri& b,
                                            double eps);

/// Conservative candidate pairs (i < j) whose inflated bounding boxes
/// overlap, from a median-split BVH.  No false negatives.
std::vector<std::pair<int, int>> broad_phase(const std::vector<FlatTri>& tris,
                                             double pad = tol::aabb_pad);

struct IntersectionReport {
  bool intersecting = false;
  std::vector<std::pair<int, int>> pairs;    // offending parent triangle ids
  std::vector<std::pair<int, int>> grazing;  // contacts below the penetration floor
  std::optional<int> first_iteration;        // filled by incremental drivers
};

/// Whether the exposed triangle surface self-intersects.  Every surface
/// triangle is subdivided at `depth`; broad-phase pairs are tested and a
/// pair is excluded when the parent triangles share a merged vertex, belong
/// to the same solid, or belong to a glued solid pair.  Contacts with
/// penetration below 10*eps are recorded as grazing and do not count.
IntersectionReport detect_self_intersections(const SurfaceComplex& complex,
                                             int depth, double eps = tol::narrow_eps);

}  // namespace hsurf
