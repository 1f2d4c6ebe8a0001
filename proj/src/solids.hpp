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

#include <span>
#include <utility>
#include <vector>

#include "geom.hpp"

namespace hsurf {

enum class SolidKind { triangular_prism, square_antiprism };

const char* kind_name(SolidKind k);

/// A uniform (right, equilateral) Euclidean solid with edge length 1,
/// centered at the origin.  Face vertex order is counterclockwise viewed
/// from outside; that single convention drives all gluing orientation.
struct CanonicalSolid {
  SolidKind kind;
  std::vector<Vec3> vertices;
  std::vector<std::vector<int>> faces;
  std::vector<std::pair<int, int>> edges;
  double circumradius = 0.0;
};

/// Triangle vertices at angles 90/210/330 degrees in the xy-plane, at
/// heights z = -1/2 and +1/2.  Faces: [tri bottom, tri top, 3 squares].
CanonicalSolid canonical_prism();

/// Unit-edge squares at z = -h/2 (angles 0/90/180/270) and z = +h/2
/// (offset +45 degrees), h = 2^(-1/4).  Faces: [sq bottom, sq top, 8 tris].
CanonicalSolid canonical_antiprism();

/// Shared immutable instance per kind.
const CanonicalSolid& canonical_solid(SolidKind kind);

/// A canonical solid shrunk into the ball so that every edge has the same
/// hyperbolic length `side`.  Combinatorics live on canonical_solid(kind).
struct ScaledSolid {
  SolidKind kind;
  double scale = 0.0;  // Euclidean factor applied to the canonical vertices
  double side = 0.0;   // hyperbolic edge length
  std::vector<Point> vertices;
};

/// Finds the unique t in (0, 1/circumradius) with hyperbolic edge length
/// equal to `side`; the edge-length function is strictly increasing in t and
/// unbounded near the ball, so bisection always lands.  Throws InvalidSide
/// for side <= 0.
ScaledSolid scale_to_hyperbolic(const CanonicalSolid& solid, double side);

/// The three labeled vertices of a square face ("purple", "blue", "green"
/// in gluing order), the fourth corner, and an outward hint.
struct SquareFrame {
  Point anchor;
  Point second;
  Point third;
  Point fourth;
  Vec3 outward;

  std::array<Point, 4> corners() const { return {anchor, second, third, fourth}; }
  double side() const { return hyp_distance(anchor, second); }
};

/// Builds a frame from a solid's square face.  `reversed` walks the face in
/// the opposite direction, which is how a solid presents its own attachment
/// face to a target (glued faces have anti-aligned windings).  Validates the
/// four sides agree within edge tolerance.
SquareFrame frame_from_face(std::span<const Point> solid_vertices,
                            const std::vector<int>& face, Vec3 body_center,
                            bool reversed);

/// Frame of a square face of an origin-centered scaled solid, in stored
/// outward-oriented order.  Throws NotASquareFace for triangle faces.
SquareFrame face_frame(const ScaledSolid& solid, int face_id);

/// Same face walked in reverse: the orientation a new solid leads with when
/// glued onto somebody else's frame.
SquareFrame attachment_frame(const ScaledSolid& solid, int face_id);

}  // namespace hsurf
