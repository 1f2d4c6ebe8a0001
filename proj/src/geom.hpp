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

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace hsurf {

// Project-wide numeric guards.  All geometry below is plain double; at the
// depths this library is used for (11 gluing iterations, side ~0.5) points
// stay around |p| <= 1 - 3e-5, well clear of the open-ball margin.
namespace tol {
inline constexpr double ball_eps = 1e-12;           // open-ball margin for Point
inline constexpr double mirror_orth = 1e-12;        // |c|^2 - r^2 = 1 residual
inline constexpr double rotation_orth = 1e-10;      // R^T R = I and det = +1
inline constexpr double frame_congruence = 1e-7;    // rotation_from_frames precondition
inline constexpr double collinear = 1e-10;          // relative: sine of spanned angle
inline constexpr double coplanar_origin = 1e-10;    // Euclidean distance of O to plane
inline constexpr double placement_residual = 1e-6;  // hard fault bound in place_solid
inline constexpr double glue = 1e-7;                // glued faces coincide within this
inline constexpr double merge_radius = 1e-7;        // vertex identification radius
inline constexpr double edge_uniform = 1e-8;        // edge lengths vs nominal side
inline constexpr double narrow_eps = 1e-9;          // triangle test distance snap
inline constexpr double aabb_pad = 1e-8;            // broad-phase box inflation
}  // namespace tol

enum class ErrorCode {
  invalid_point,
  degenerate_bisector,
  frame_degenerate,
  frame_mismatch,
  collinear_points,
  not_a_square_face,
  invalid_side,
  depth_exceeded,
  degenerate_triangle,
  placement_residual,
  merge_ambiguity,
  bracket_invalid,
  unsupported_schema,
  io_error,
  invalid_argument,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

struct Vec3 {
  double x = 0.0, y = 0.0, z = 0.0;
};

inline Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline Vec3 operator*(double s, Vec3 v) { return {s * v.x, s * v.y, s * v.z}; }
inline Vec3 operator*(Vec3 v, double s) { return s * v; }
inline Vec3 operator/(Vec3 v, double s) { return {v.x / s, v.y / s, v.z / s}; }
inline Vec3 operator-(Vec3 v) { return {-v.x, -v.y, -v.z}; }
inline double dot(Vec3 a, Vec3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec3 cross(Vec3 a, Vec3 b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm2(Vec3 v) { return dot(v, v); }
inline double norm(Vec3 v) { return std::sqrt(norm2(v)); }

/// Unit vector in the direction of v; throws on (near-)zero input.
Vec3 normalized(Vec3 v);

/// A location in the open unit ball.  Construction rejects |v|^2 >= 1 - ball_eps.
class Point {
 public:
  Point() = default;  // origin
  explicit Point(Vec3 v);
  Point(double x, double y, double z) : Point(Vec3{x, y, z}) {}
  const Vec3& vec() const { return v_; }

 private:
  Vec3 v_;
};

inline Point origin() { return Point{}; }

struct Mat3 {
  // Row-major.
  std::array<double, 9> m{1, 0, 0, 0, 1, 0, 0, 0, 1};

  static Mat3 identity() { return Mat3{}; }
  static Mat3 from_columns(Vec3 c0, Vec3 c1, Vec3 c2);
  Vec3 operator*(Vec3 v) const;
  Mat3 operator*(const Mat3& o) const;
  Mat3 transposed() const;
  double det() const;
};

struct PlanarMirror {
  Vec3 normal;  // unit; the plane passes through the origin
};

struct SphereMirror {
  Vec3 center;
  double radius = 0.0;  // |center|^2 = radius^2 + 1
};

/// A hyperbolic plane of the ball model: a Euclidean plane through the origin
/// or a sphere orthogonal to the unit sphere.  Doubles as the reflection
/// primitive (Euclidean mirror image / sphere inversion).
class HPlane {
 public:
  explicit HPlane(PlanarMirror p);
  explicit HPlane(SphereMirror s);

  bool is_planar() const { return std::holds_alternative<PlanarMirror>(rep_); }
  const PlanarMirror& planar() const { return std::get<PlanarMirror>(rep_); }
  const SphereMirror& sphere() const { return std::get<SphereMirror>(rep_); }

  Vec3 reflect(Vec3 x) const;
  /// Distance-like residual of x from the plane (0 when x lies on it).
  double residual(Vec3 x) const;

 private:
  std::variant<PlanarMirror, SphereMirror> rep_;
};

/// Proper rotation about the origin.
class Rotation {
 public:
  Rotation() = default;  // identity
  explicit Rotation(const Mat3& m);
  static Rotation identity() { return Rotation{}; }
  const Mat3& matrix() const { return m_; }
  Vec3 apply(Vec3 v) const { return m_ * v; }
  Rotation inverse() const;

 private:
  Mat3 m_;
};

/// An ordered sequence of primitive maps (origin rotations, plane
/// reflections), applied left-to-right.  Kept as a sequence on purpose:
/// reflections are orientation-reversing, so no single closed form covers
/// the whole group, and sequences compose exactly.
class Isometry {
 public:
  using Primitive = std::variant<Rotation, HPlane>;

  Isometry() = default;
  static Isometry identity() { return {}; }

  Isometry& then(Rotation r);
  Isometry& then(HPlane h);

  Vec3 apply_vec(Vec3 x) const;
  Point apply(const Point& x) const;
  Isometry inverse() const;
  bool is_identity() const { return prims_.empty(); }
  const std::vector<Primitive>& primitives() const { return prims_; }

 private:
  std::vector<Primitive> prims_;
};

/// apply(compose(outer, inner), x) == outer(inner(x)); pure list concatenation.
Isometry compose(const Isometry& outer, const Isometry& inner);

/// Hyperbolic distance, d = 2 asinh(|u-v| / sqrt((1-|u|^2)(1-|v|^2))).
double hyp_distance(const Point& u, const Point& v);

/// Perpendicular bisector between p and the origin, as a sphere orthogonal to
/// the unit sphere: center p/|p|^2, radius sqrt((1-|p|^2))/|p|.  Reflecting p
/// in it yields O.  Throws DegenerateBisector for p at the origin.
HPlane bisector_with_origin(const Point& p);

Point reflect(const HPlane& m, const Point& x);

/// Proper rotation R with R b_src = b_dst and R g_src = g_dst, built from
/// Gram-Schmidt frames (normalize b, orthogonalized g, cross product) as
/// R = F_dst F_src^T.  The pairs must be congruent about the origin (equal
/// norms and equal spanned angle within frame_congruence).
Rotation rotation_from_frames(const Point& b_src, const Point& g_src,
                              const Point& b_dst, const Point& g_dst);

/// The hyperbolic plane through three points: the plane through O when they
/// are coplanar with it, otherwise the unique sphere through all three that
/// meets the unit sphere orthogonally (solve 2 c.v = |v|^2 + 1).
HPlane plane_through(const Point& p, const Point& q, const Point& r);

/// Point at hyperbolic distance fraction * d(u,v) from u along the geodesic
/// towards v.  Fractions outside [0,1] extrapolate along the same geodesic.
Point geodesic_point(const Point& u, const Point& v, double fraction);

}  // namespace hsurf
