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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "solids.hpp"

using namespace hsurf;

namespace {

std::mt19937 rng(19370211);

double edge_spread_scaled(const CanonicalSolid& solid, double t) {
  double lo = 1e300, hi = -1e300;
  for (auto [a, b] : solid.edges) {
    double d = hyp_distance(Point(t * solid.vertices[a]), Point(t * solid.vertices[b]));
    lo = std::min(lo, d);
    hi = std::max(hi, d);
  }
  return hi - lo;
}

void check_canonical(const CanonicalSolid& s, size_t vertices, size_t triangles,
                     size_t squares, size_t edges) {
  CHECK(s.vertices.size() == vertices);
  CHECK(s.edges.size() == edges);
  size_t tris = 0, quads = 0;
  for (const auto& f : s.faces) {
    if (f.size() == 3) ++tris;
    if (f.size() == 4) ++quads;
  }
  CHECK(tris == triangles);
  CHECK(quads == squares);

  // Unit edges, common circumsphere, centroid at the origin.
  for (auto [a, b] : s.edges) {
    CHECK(norm(s.vertices[a] - s.vertices[b]) == doctest::Approx(1.0).epsilon(1e-13));
  }
  for (const Vec3& v : s.vertices) {
    CHECK(norm(v) == doctest::Approx(s.circumradius).epsilon(1e-13));
  }
  Vec3 centroid{};
  for (const Vec3& v : s.vertices) centroid = centroid + v;
  CHECK(norm(centroid / double(s.vertices.size())) < 1e-13);

  // Outward orientation: every face normal points away from the center.
  for (const auto& f : s.faces) {
    Vec3 n = f.size() == 3
                 ? cross(s.vertices[f[1]] - s.vertices[f[0]],
                         s.vertices[f[2]] - s.vertices[f[0]])
                 : cross(s.vertices[f[2]] - s.vertices[f[0]],
                         s.vertices[f[3]] - s.vertices[f[1]]);
    Vec3 center{};
    for (int idx : f) center = center + s.vertices[idx];
    CHECK(dot(n, center) > 0.0);
  }
}

}  // namespace

TEST_CASE("canonical prism") {
  CanonicalSolid p = canonical_prism();
  check_canonical(p, 6, 2, 3, 9);
  CHECK(p.circumradius == doctest::Approx(std::sqrt(7.0 / 12.0)).epsilon(1e-15));
  CHECK(p.circumradius == doctest::Approx(0.763762615825973).epsilon(1e-12));
}

TEST_CASE("canonical antiprism") {
  CanonicalSolid a = canonical_antiprism();
  check_canonical(a, 8, 8, 2, 16);
  // Height between the squares solves the unit lateral edge: h = 2^(-1/4).
  double h = a.vertices[4].z - a.vertices[0].z;
  CHECK(h == doctest::Approx(std::pow(2.0, -0.25)).epsilon(1e-15));
  CHECK(h == doctest::Approx(0.840896415253715).epsilon(1e-12));
}

TEST_CASE("scaled solids keep equal hyperbolic edges at any scale") {
  std::uniform_real_distribution<double> u01(0.01, 0.9);
  for (SolidKind kind : {SolidKind::triangular_prism, SolidKind::square_antiprism}) {
    const CanonicalSolid& solid = canonical_solid(kind);
    for (int i = 0; i < 200; ++i) {
      double t = u01(rng) / solid.circumradius;
      CHECK(edge_spread_scaled(solid, t) < 1e-10);
    }
  }
}

TEST_CASE("edge length grows monotonically with scale") {
  const CanonicalSolid& prism = canonical_solid(SolidKind::triangular_prism);
  auto [a, b] = prism.edges.front();
  double prev = -1.0;
  for (int i = 1; i <= 1000; ++i) {
    double t = (0.999 * i / 1000.0) / prism.circumradius;
    double d = hyp_distance(Point(t * prism.vertices[a]), Point(t * prism.vertices[b]));
    CHECK(d > prev);
    prev = d;
  }
}

TEST_CASE("scale_to_hyperbolic") {
  const CanonicalSolid& prism = canonical_solid(SolidKind::triangular_prism);

  SUBCASE("small sides behave like half the Euclidean scale") {
    ScaledSolid s = scale_to_hyperbolic(prism, 1e-6);
    CHECK(std::abs(s.scale - 5e-7) / s.scale < 1e-3);
  }

  SUBCASE("all nine prism edges hit 0.53 exactly") {
    ScaledSolid s = scale_to_hyperbolic(prism, 0.53);
    for (auto [a, b] : prism.edges) {
      double d = hyp_distance(s.vertices[a], s.vertices[b]);
      CHECK(std::abs(d - 0.53) < 1e-10);
    }
  }

  SUBCASE("rejects non-positive sides") {
    CHECK_THROWS_AS(scale_to_hyperbolic(prism, -1.0), Error);
    CHECK_THROWS_AS(scale_to_hyperbolic(prism, 0.0), Error);
  }

  SUBCASE("round trip over the reference sides") {
    for (SolidKind kind : {SolidKind::triangular_prism, SolidKind::square_antiprism}) {
      const CanonicalSolid& solid = canonical_solid(kind);
      for (double side : {0.1, 0.48, 0.53, 0.54, 0.75}) {
        ScaledSolid s = scale_to_hyperbolic(solid, side);
        for (auto [a, b] : solid.edges) {
          CHECK(std::abs(hyp_distance(s.vertices[a], s.vertices[b]) - side) < 1e-10);
        }
      }
    }
  }
}

TEST_CASE("face_frame") {
  ScaledSolid prism =
      scale_to_hyperbolic(canonical_solid(SolidKind::triangular_prism), 0.5);
  ScaledSolid anti =
      scale_to_hyperbolic(canonical_solid(SolidKind::square_antiprism), 0.5);

  SUBCASE("prism square face in stored orientation") {
    SquareFrame f = face_frame(prism, 2);  // square (0,1,4,3)
    CHECK(norm(f.anchor.vec() - prism.vertices[0].vec()) == 0.0);
    CHECK(norm(f.second.vec() - prism.vertices[1].vec()) == 0.0);
    CHECK(norm(f.third.vec() - prism.vertices[4].vec()) == 0.0);
    CHECK(norm(f.fourth.vec() - prism.vertices[3].vec()) == 0.0);
    CHECK(f.side() == doctest::Approx(0.5).epsilon(1e-10));
    // Outward points away from the axis for a lateral face.
    Vec3 face_center = 0.25 * (f.anchor.vec() + f.second.vec() + f.third.vec() +
                               f.fourth.vec());
    CHECK(dot(f.outward, face_center) > 0.0);
  }

  SUBCASE("antiprism bottom square starts at its first base vertices") {
    SquareFrame f = face_frame(anti, 0);  // square (0,3,2,1)
    CHECK(norm(f.anchor.vec() - anti.vertices[0].vec()) == 0.0);
    CHECK(norm(f.second.vec() - anti.vertices[3].vec()) == 0.0);
    CHECK(norm(f.third.vec() - anti.vertices[2].vec()) == 0.0);
    CHECK(f.outward.z < -0.9);
  }

  SUBCASE("attachment frame walks the face backwards") {
    SquareFrame fwd = face_frame(anti, 0);
    SquareFrame rev = attachment_frame(anti, 0);
    CHECK(norm(rev.anchor.vec() - fwd.anchor.vec()) == 0.0);
    CHECK(norm(rev.second.vec() - fwd.fourth.vec()) == 0.0);
    CHECK(norm(rev.third.vec() - fwd.third.vec()) == 0.0);
    CHECK(norm(rev.fourth.vec() - fwd.second.vec()) == 0.0);
  }

  SUBCASE("triangle faces are rejected") {
    CHECK_THROWS_AS(face_frame(prism, 0), Error);
    CHECK_THROWS_AS(face_frame(anti, 5), Error);
    CHECK_THROWS_AS(face_frame(prism, 99), Error);
  }
}
