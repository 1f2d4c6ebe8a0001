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

#include "geom.hpp"

#include <algorithm>
#include <cstdio>

namespace hsurf {

Vec3 normalized(Vec3 v) {
  double n = norm(v);
  if (n < 1e-300) {
    throw Error(ErrorCode::invalid_argument, "cannot normalize zero vector");
  }
  return v / n;
}

Point::Point(Vec3 v) : v_(v) {
  if (norm2(v) >= 1.0 - tol::ball_eps) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "point (%g, %g, %g) outside the open unit ball",
                  v.x, v.y, v.z);
    throw Error(ErrorCode::invalid_point, buf);
  }
}

Mat3 Mat3::from_columns(Vec3 c0, Vec3 c1, Vec3 c2) {
  Mat3 r;
  r.m = {c0.x, c1.x, c2.x, c0.y, c1.y, c2.y, c0.z, c1.z, c2.z};
  return r;
}

Vec3 Mat3::operator*(Vec3 v) const {
  return {m[0] * v.x + m[1] * v.y + m[2] * v.z,
          m[3] * v.x + m[4] * v.y + m[5] * v.z,
          m[6] * v.x + m[7] * v.y + m[8] * v.z};
}

Mat3 Mat3::operator*(const Mat3& o) const {
  Mat3 r;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      double s = 0;
      for (int k = 0; k < 3; ++k) s += m[3 * i + k] * o.m[3 * k + j];
      r.m[3 * i + j] = s;
    }
  }
  return r;
}

Mat3 Mat3::transposed() const {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.m[3 * i + j] = m[3 * j + i];
  return r;
}

double Mat3::det() const {
  return m[0] * (m[4] * m[8] - m[5] * m[7]) - m[1] * (m[3] * m[8] - m[5] * m[6]) +
         m[2] * (m[3] * m[7] - m[4] * m[6]);
}

HPlane::HPlane(PlanarMirror p) : rep_(p) {
  if (std::abs(norm(p.normal) - 1.0) > tol::mirror_orth) {
    throw Error(ErrorCode::invalid_argument, "planar mirror normal must be unit");
  }
}

HPlane::HPlane(SphereMirror s) : rep_(s) {
  if (!(s.radius > 0.0)) {
    throw Error(ErrorCode::invalid_argument, "sphere mirror radius must be positive");
  }
  // Relative check: near-planar mirrors have huge centers, where the exact
  // cancellation |c|^2 - r^2 is dominated by representation error.
  double scale = std::max(1.0, norm2(s.center));
  if (std::abs(norm2(s.center) - s.radius * s.radius - 1.0) > tol::mirror_orth * scale) {
    throw Error(ErrorCode::invalid_argument,
                "sphere mirror not orthogonal to the unit sphere");
  }
}

Vec3 HPlane::reflect(Vec3 x) const {
  if (is_planar()) {
    const Vec3& n = planar().normal;
    return x - 2.0 * dot(x, n) * n;
  }
  const SphereMirror& s = sphere();
  Vec3 d = x - s.center;
  return s.center + (s.radius * s.radius / norm2(d)) * d;
}

double HPlane::residual(Vec3 x) const {
  if (is_planar()) return std::abs(dot(x, planar().normal));
  const SphereMirror& s = sphere();
  return std::abs(norm(x - s.center) - s.radius);
}

Rotation::Rotation(const Mat3& m) : m_(m) {
  Mat3 should_be_id = m * m.transposed();
  double worst = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      worst = std::max(worst,
                       std::abs(should_be_id.m[3 * i + j] - (i == j ? 1.0 : 0.0)));
  if (worst > tol::rotation_orth || std::abs(m.det() - 1.0) > tol::rotation_orth) {
    throw Error(ErrorCode::invalid_argument, "matrix is not a proper rotation");
  }
}

Rotation Rotation::inverse() const { return Rotation(m_.transposed()); }

Isometry& Isometry::then(Rotation r) {
  prims_.emplace_back(std::move(r));
  return *this;
}

Isometry& Isometry::then(HPlane h) {
  prims_.emplace_back(std::move(h));
  return *this;
}

Vec3 Isometry::apply_vec(Vec3 x) const {
  for (const Primitive& p : prims_) {
    if (const Rotation* r = std::get_if<Rotation>(&p)) {
      x = r->apply(x);
    } else {
      x = std::get<HPlane>(p).reflect(x);
    }
  }
  return x;
}

Point Isometry::apply(const Point& x) const { return Point(apply_vec(x.vec())); }

Isometry Isometry::inverse() const {
  Isometry inv;
  for (auto it = prims_.rbegin(); it != prims_.rend(); ++it) {
    if (const Rotation* r = std::get_if<Rotation>(&*it)) {
      inv.then(r->inverse());
    } else {
      inv.then(std::get<HPlane>(*it));  // reflections are involutions
    }
  }
  return inv;
}

Isometry compose(const Isometry& outer, const Isometry& inner) {
  Isometry r = inner;
  for (const Isometry::Primitive& p : outer.primitives()) {
    if (const Rotation* rot = std::get_if<Rotation>(&p)) {
      r.then(*rot);
    } else {
      r.then(std::get<HPlane>(p));
    }
  }
  return r;
}

double hyp_distance(const Point& u, const Point& v) {
  double du = 1.0 - norm2(u.vec());
  double dv = 1.0 - norm2(v.vec());
  return 2.0 * std::asinh(norm(u.vec() - v.vec()) / std::sqrt(du * dv));
}

HPlane bisector_with_origin(const Point& p) {
  double n2 = norm2(p.vec());
  if (n2 <= tol::ball_eps * tol::ball_eps) {
    throw Error(ErrorCode::degenerate_bisector,
                "no bisector between the origin and itself");
  }
  return HPlane(SphereMirror{p.vec() / n2, std::sqrt((1.0 - n2) / n2)});
}

Point reflect(const HPlane& m, const Point& x) { return Point(m.reflect(x.vec())); }

namespace {

// Orthonormal frame spanned by (b, g): normalize b, orthogonalize g against
// it, close with the cross product.
Mat3 frame_of_pair(Vec3 b, Vec3 g) {
  Vec3 e0 = normalized(b);
  Vec3 g_perp = g - dot(g, e0) * e0;
  Vec3 e1 = normalized(g_perp);
  return Mat3::from_columns(e0, e1, cross(e0, e1));
}

double pair_angle(Vec3 a, Vec3 b) { return std::atan2(norm(cross(a, b)), dot(a, b)); }

}  // namespace

Rotation rotation_from_frames(const Point& b_src, const Point& g_src,
                              const Point& b_dst, const Point& g_dst) {
  Vec3 bs = b_src.vec(), gs = g_src.vec(), bd = b_dst.vec(), gd = g_dst.vec();
  for (const Vec3* v : {&bs, &gs, &bd, &gd}) {
    if (norm(*v) <= tol::ball_eps) {
      throw Error(ErrorCode::frame_degenerate, "anchor vector at the origin");
    }
  }
  if (norm(cross(bs, gs)) <= tol::collinear * norm(bs) * norm(gs) ||
      norm(cross(bd, gd)) <= tol::collinear * norm(bd) * norm(gd)) {
    throw Error(ErrorCode::frame_degenerate, "anchor pair collinear with the origin");
  }
  if (std::abs(norm(bs) - norm(bd)) > tol::frame_congruence ||
      std::abs(norm(gs) - norm(gd)) > tol::frame_congruence ||
      std::abs(pair_angle(bs, gs) - pair_angle(bd, gd)) > tol::frame_congruence) {
    throw Error(ErrorCode::frame_mismatch,
                "source and destination pairs are not congruent about the origin");
  }
  Mat3 r = frame_of_pair(bd, gd) * frame_of_pair(bs, gs).transposed();
  Rotation rot(r);
  if (norm(rot.apply(bs) - bd) > 1e-8 || norm(rot.apply(gs) - gd) > 1e-8) {
    throw Error(ErrorCode::frame_mismatch, "rotation residual exceeds tolerance");
  }
  return rot;
}

namespace {

// 3x3 linear solve by Gaussian elimination with partial pivoting.
Vec3 solve3(std::array<double, 9> a, Vec3 rhs) {
  std::array<double, 3> b{rhs.x, rhs.y, rhs.z};
  std::array<int, 3> piv{0, 1, 2};
  for (int col = 0; col < 3; ++col) {
    int best = col;
    for (int row = col + 1; row < 3; ++row) {
      if (std::abs(a[3 * piv[row] + col]) > std::abs(a[3 * piv[best] + col])) best = row;
    }
    std::swap(piv[col], piv[best]);
    double d = a[3 * piv[col] + col];
    if (std::abs(d) < 1e-300) {
      throw Error(ErrorCode::collinear_points, "singular system in plane fit");
    }
    for (int row = col + 1; row < 3; ++row) {
      double f = a[3 * piv[row] + col] / d;
      for (int k = col; k < 3; ++k) a[3 * piv[row] + k] -= f * a[3 * piv[col] + k];
      b[piv[row]] -= f * b[piv[col]];
    }
  }
  std::array<double, 3> x{};
  for (int col = 2; col >= 0; --col) {
    double s = b[piv[col]];
    for (int k = col + 1; k < 3; ++k) s -= a[3 * piv[col] + k] * x[k];
    x[col] = s / a[3 * piv[col] + col];
  }
  return {x[0], x[1], x[2]};
}

// Deterministic sign for mirror normals: first nonzero component positive.
Vec3 canonical_sign(Vec3 n) {
  double lead = n.x != 0.0 ? n.x : (n.y != 0.0 ? n.y : n.z);
  return lead < 0.0 ? -n : n;
}

}  // namespace

HPlane plane_through(const Point& p, const Point& q, const Point& r) {
  Vec3 a = p.vec(), b = q.vec(), c = r.vec();
  Vec3 u = b - a, v = c - a;
  Vec3 n = cross(u, v);
  double scale = norm(u) * norm(v);
  if (norm(n) <= tol::collinear * scale || scale == 0.0) {
    throw Error(ErrorCode::collinear_points, "points are collinear");
  }
  Vec3 nu = normalized(n);
  if (std::abs(dot(nu, a)) < tol::coplanar_origin) {
    return HPlane(PlanarMirror{canonical_sign(nu)});
  }
  // 2 c.v = |v|^2 + 1 for each of the three points; radius from |c|^2 = r^2 + 1.
  std::array<double, 9> mat{2 * a.x, 2 * a.y, 2 * a.z,
                            2 * b.x, 2 * b.y, 2 * b.z,
                            2 * c.x, 2 * c.y, 2 * c.z};
  Vec3 center = solve3(mat, Vec3{norm2(a) + 1, norm2(b) + 1, norm2(c) + 1});
  double r2 = norm2(center) - 1.0;
  if (r2 <= 0.0) {
    throw Error(ErrorCode::collinear_points, "degenerate sphere through points");
  }
  return HPlane(SphereMirror{center, std::sqrt(r2)});
}

Point geodesic_point(const Point& u, const Point& v, double fraction) {
  if (norm(u.vec() - v.vec()) == 0.0) return u;
  if (norm(u.vec()) <= tol::ball_eps) {
    // u is (numerically) the origin: the geodesic is a straight ray.
    double d = 2.0 * std::atanh(norm(v.vec()));
    return Point(std::tanh(fraction * d / 2.0) * normalized(v.vec()));
  }
  HPlane n = bisector_with_origin(u);
  Vec3 w = n.reflect(v.vec());
  double wn = norm(w);
  if (wn <= tol::ball_eps) return u;  // v coincides with u under the mirror
  double d = 2.0 * std::atanh(wn);
  Vec3 moved = std::tanh(fraction * d / 2.0) * (w / wn);
  return Point(n.reflect(moved));
}

}  // namespace hsurf
