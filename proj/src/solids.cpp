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

#include "solids.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace hsurf {

const char* kind_name(SolidKind k) {
  return k == SolidKind::triangular_prism ? "prism" : "antiprism";
}

CanonicalSolid canonical_prism() {
  constexpr double pi = std::numbers::pi;
  const double r = 1.0 / std::sqrt(3.0);  // circumradius of a unit equilateral triangle
  CanonicalSolid s;
  s.kind = SolidKind::triangular_prism;
  for (double z : {-0.5, 0.5}) {
    for (int i = 0; i < 3; ++i) {
      double a = pi / 2.0 + i * (2.0 * pi / 3.0);  // 90, 210, 330 degrees
      s.vertices.push_back({r * std::cos(a), r * std::sin(a), z});
    }
  }
  s.faces = {
      {0, 2, 1},        // bottom triangle, outward -z
      {3, 4, 5},        // top triangle, outward +z
      {0, 1, 4, 3},     // squares: (b_i, b_j, t_j, t_i)
      {1, 2, 5, 4},
      {2, 0, 3, 5},
  };
  s.edges = {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}};
  s.circumradius = std::sqrt(7.0 / 12.0);
  return s;
}

CanonicalSolid canonical_antiprism() {
  constexpr double pi = std::numbers::pi;
  const double r = 1.0 / std::sqrt(2.0);    // circumradius of a unit square
  const double h = std::pow(2.0, -0.25);    // height giving unit lateral edges
  CanonicalSolid s;
  s.kind = SolidKind::square_antiprism;
  for (int i = 0; i < 4; ++i) {
    double a = i * (pi / 2.0);
    s.vertices.push_back({r * std::cos(a), r * std::sin(a), -h / 2.0});
  }
  for (int i = 0; i < 4; ++i) {
    double a = pi / 4.0 + i * (pi / 2.0);
    s.vertices.push_back({r * std::cos(a), r * std::sin(a), h / 2.0});
  }
  s.faces = {
      {0, 3, 2, 1},  // bottom square, outward -z
      {4, 5, 6, 7},  // top square, outward +z
  };
  for (int i = 0; i < 4; ++i) {
    int j = (i + 1) % 4;
    s.faces.push_back({i, j, 4 + i});          // base-edge triangles
  }
  for (int i = 0; i < 4; ++i) {
    int j = (i + 1) % 4;
    s.faces.push_back({4 + j, 4 + i, j});      // top-edge triangles
  }
  for (int i = 0; i < 4; ++i) {
    int j = (i + 1) % 4;
    s.edges.emplace_back(i, j);
    s.edges.emplace_back(4 + i, 4 + j);
    s.edges.emplace_back(i, 4 + i);
    s.edges.emplace_back(i, 4 + (i + 3) % 4);
  }
  s.circumradius = std::sqrt(r * r + h * h / 4.0);
  return s;
}

const CanonicalSolid& canonical_solid(SolidKind kind) {
  static const CanonicalSolid prism = canonical_prism();
  static const CanonicalSolid antiprism = canonical_antiprism();
  return kind == SolidKind::triangular_prism ? prism : antiprism;
}

namespace {

double edge_length_at(const CanonicalSolid& solid, double t) {
  auto [a, b] = solid.edges.front();
  return hyp_distance(Point(t * solid.vertices[a]), Point(t * solid.vertices[b]));
}

}  // namespace

ScaledSolid scale_to_hyperbolic(const CanonicalSolid& solid, double side) {
  if (!(side > 0.0)) {
    throw Error(ErrorCode::invalid_side, "side length must be positive");
  }
  // Keep the probe vertices strictly inside the Point margin; edges still
  // reach hyperbolic length ~40 near this bound, far beyond any use.
  double lo = 0.0;
  double hi = (1.0 - 1e-9) / solid.circumradius;
  if (edge_length_at(solid, hi) < side) {
    throw Error(ErrorCode::invalid_side, "side length not representable in the ball");
  }
  for (int i = 0; i < 200; ++i) {
    double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    double len = edge_length_at(solid, mid);
    if (std::abs(len - side) < 1e-13) {
      lo = hi = mid;
      break;
    }
    (len < side ? lo : hi) = mid;
  }
  double t = 0.5 * (lo + hi);
  ScaledSolid out;
  out.kind = solid.kind;
  out.scale = t;
  out.side = side;
  out.vertices.reserve(solid.vertices.size());
  for (const Vec3& v : solid.vertices) out.vertices.emplace_back(t * v);
  return out;
}

SquareFrame frame_from_face(std::span<const Point> solid_vertices,
                            const std::vector<int>& face, Vec3 body_center,
                            bool reversed) {
  if (face.size() != 4) {
    throw Error(ErrorCode::not_a_square_face, "face is not a square");
  }
  std::array<Point, 4> c;
  for (int i = 0; i < 4; ++i) {
    c[i] = solid_vertices[face[reversed ? (4 - i) % 4 : i]];
  }
  SquareFrame f{c[0], c[1], c[2], c[3], Vec3{}};
  // Quad normal from the diagonals, signed away from the solid body.
  Vec3 n = cross(c[2].vec() - c[0].vec(), c[3].vec() - c[1].vec());
  Vec3 center = 0.25 * (c[0].vec() + c[1].vec() + c[2].vec() + c[3].vec());
  Vec3 nu = normalized(n);
  f.outward = dot(nu, center - body_center) >= 0.0 ? nu : -nu;

  std::array<double, 4> sides;
  for (int i = 0; i < 4; ++i) sides[i] = hyp_distance(c[i], c[(i + 1) % 4]);
  auto [mn, mx] = std::minmax_element(sides.begin(), sides.end());
  if (*mx - *mn > tol::edge_uniform) {
    throw Error(ErrorCode::invalid_argument, "face sides are not uniform");
  }
  Vec3 u = c[1].vec() - c[0].vec(), v = c[2].vec() - c[0].vec();
  if (norm(cross(u, v)) <= tol::collinear * norm(u) * norm(v)) {
    throw Error(ErrorCode::invalid_argument, "frame vertices are collinear");
  }
  return f;
}

namespace {

SquareFrame scaled_face_frame(const ScaledSolid& solid, int face_id, bool reversed) {
  const CanonicalSolid& canon = canonical_solid(solid.kind);
  if (face_id < 0 || face_id >= static_cast<int>(canon.faces.size())) {
    throw Error(ErrorCode::not_a_square_face, "face id out of range");
  }
  const std::vector<int>& face = canon.faces[face_id];
  if (face.size() != 4) {
    throw Error(ErrorCode::not_a_square_face, "face is not a square");
  }
  return frame_from_face(solid.vertices, face, Vec3{}, reversed);
}

}  // namespace

SquareFrame face_frame(const ScaledSolid& solid, int face_id) {
  return scaled_face_frame(solid, face_id, false);
}

SquareFrame attachment_frame(const ScaledSolid& solid, int face_id) {
  return scaled_face_frame(solid, face_id, true);
}

}  // namespace hsurf
