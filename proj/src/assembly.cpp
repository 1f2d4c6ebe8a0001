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

#include "assembly.hpp"

#include <cmath>
#include <cstdio>
#include <unordered_map>

namespace hsurf {

SquareFrame shift_frame(const SquareFrame& f, int k) {
  std::array<Point, 4> c = f.corners();
  k = ((k % 4) + 4) % 4;
  SquareFrame out = f;
  out.anchor = c[k];
  out.second = c[(k + 1) % 4];
  out.third = c[(k + 2) % 4];
  out.fourth = c[(k + 3) % 4];
  return out;
}

SquareFrame twist_frame(const SquareFrame& f, Twist twist) {
  return twist == Twist::ccw ? f : shift_frame(f, 1);
}

namespace {

// Reflection over the bisector with the origin, or nothing when the anchor
// already sits at the origin.
std::optional<HPlane> bisector_or_identity(const Point& p) {
  if (norm(p.vec()) <= tol::ball_eps) return std::nullopt;
  return bisector_with_origin(p);
}

Point through(const std::optional<HPlane>& m, const Point& p) {
  return m ? reflect(*m, p) : p;
}

}  // namespace

PlacedSolid place_solid(const ScaledSolid& proto, int attach_face,
                        const SquareFrame& target) {
  SquareFrame af = attachment_frame(proto, attach_face);

  std::optional<HPlane> n = bisector_or_identity(af.anchor);
  std::optional<HPlane> m = bisector_or_identity(target.anchor);

  Rotation rot = rotation_from_frames(
      through(n, af.second), through(n, af.third),
      through(m, target.second), through(m, target.third));

  Isometry iso;
  if (n) iso.then(*n);
  iso.then(rot);
  if (m) iso.then(*m);

  PlacedSolid placed;
  placed.kind = proto.kind;
  placed.side = proto.side;
  placed.vertices.reserve(proto.vertices.size());
  for (const Point& v : proto.vertices) placed.vertices.push_back(iso.apply(v));
  placed.isometry = std::move(iso);

  double residual = 0.0;
  const CanonicalSolid& canon = canonical_solid(proto.kind);
  const std::vector<int>& face = canon.faces[attach_face];
  // Attachment walks the face backwards from the shared anchor.
  const std::array<Point, 4> want = target.corners();
  for (int i = 0; i < 4; ++i) {
    const Point& got = placed.vertices[face[(4 - i) % 4]];
    residual = std::max(residual, norm(got.vec() - want[i].vec()));
  }
  if (residual > tol::placement_residual) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "placement residual %.3e exceeds %.1e", residual,
                  tol::placement_residual);
    throw Error(ErrorCode::placement_residual, buf);
  }
  return placed;
}

PlacedSolid place_solid(SolidKind kind, double side, const SquareFrame& target,
                        int attach_face, Twist twist) {
  ScaledSolid proto = scale_to_hyperbolic(canonical_solid(kind), side);
  return place_solid(proto, attach_face, twist_frame(target, twist));
}

namespace {

// Face indices by convention of canonical_prism / canonical_antiprism.
constexpr int kPrismAttachFace = 2;
constexpr std::array<int, 2> kPrismFreeFaces{3, 4};
constexpr int kAntiprismBottom = 0;
constexpr int kAntiprismTop = 1;

}  // namespace

int SurfaceComplex::add_solid(PlacedSolid&& solid) {
  solid.id = static_cast<int>(solids_.size());
  (solid.kind == SolidKind::triangular_prism ? prisms_ : antiprisms_)++;
  solids_.push_back(std::move(solid));
  merged_cache_.reset();
  return solids_.back().id;
}

void SurfaceComplex::add_triangles_of(int solid_id) {
  const PlacedSolid& s = solids_[solid_id];
  const CanonicalSolid& canon = canonical_solid(s.kind);
  for (int f = 0; f < static_cast<int>(canon.faces.size()); ++f) {
    const std::vector<int>& face = canon.faces[f];
    if (face.size() != 3) continue;
    triangles_.push_back(SurfaceTriangle{
        {s.vertices[face[0]], s.vertices[face[1]], s.vertices[face[2]]},
        solid_id, f});
  }
}

SquareFrame SurfaceComplex::placed_face_frame(int solid_id, int face_id,
                                              bool reversed) const {
  const PlacedSolid& s = solids_[solid_id];
  Vec3 center{};
  for (const Point& v : s.vertices) center = center + v.vec();
  center = center / static_cast<double>(s.vertices.size());
  return frame_from_face(s.vertices, canonical_solid(s.kind).faces[face_id],
                         center, reversed);
}

SurfaceComplex SurfaceComplex::empty(double side) {
  if (!(side > 0.0)) throw Error(ErrorCode::invalid_side, "side must be positive");
  SurfaceComplex c;
  c.side_ = side;
  return c;
}

SurfaceComplex SurfaceComplex::seed(double side, Twist twist, int antiprism_align) {
  if (!(side > 0.0)) throw Error(ErrorCode::invalid_side, "side must be positive");
  if (antiprism_align < 0 || antiprism_align > 3) {
    throw Error(ErrorCode::invalid_argument, "antiprism alignment must be in 0..3");
  }
  SurfaceComplex c;
  c.side_ = side;
  c.twist_ = twist;
  c.align_ = antiprism_align;
  c.prism_proto_ = scale_to_hyperbolic(canonical_solid(SolidKind::triangular_prism), side);
  c.antiprism_proto_ =
      scale_to_hyperbolic(canonical_solid(SolidKind::square_antiprism), side);

  PlacedSolid root;
  root.kind = SolidKind::triangular_prism;
  root.side = side;
  root.vertices = c.prism_proto_.vertices;
  root.iteration = 0;
  int root_id = c.add_solid(std::move(root));
  c.add_triangles_of(root_id);
  c.attach_antiprisms(root_id, 0);
  return c;
}

// Glues an antiprism (by its bottom square) to each free square face of the
// given prism; their top squares join the open frontier.
void SurfaceComplex::attach_antiprisms(int prism_id, int iteration) {
  std::vector<int> faces;
  if (solids_[prism_id].parent_face) {
    faces.assign(kPrismFreeFaces.begin(), kPrismFreeFaces.end());
  } else {
    faces = {2, 3, 4};  // the seed prism has all three squares free
  }
  for (int f : faces) {
    SquareFrame target = shift_frame(placed_face_frame(prism_id, f, false), align_);
    PlacedSolid anti = place_solid(antiprism_proto_, kAntiprismBottom, target);
    anti.iteration = iteration;
    anti.parent_face = std::make_pair(prism_id, f);
    int id = add_solid(std::move(anti));
    glued_.push_back({prism_id, f, id, kAntiprismBottom});
    add_triangles_of(id);
    open_.push_back({placed_face_frame(id, kAntiprismTop, false), id, kAntiprismTop});
  }
}

void SurfaceComplex::iterate(Twist twist) {
  if (open_.empty()) return;
  std::vector<OpenFrame> frontier;
  frontier.swap(open_);
  int iteration = ++iterations_done_;
  for (const OpenFrame& of : frontier) {
    SquareFrame target = twist_frame(of.frame, twist);
    PlacedSolid prism = place_solid(prism_proto_, kPrismAttachFace, target);
    prism.iteration = iteration;
    prism.parent_face = std::make_pair(of.solid, of.face);
    int prism_id = add_solid(std::move(prism));
    glued_.push_back({of.solid, of.face, prism_id, kPrismAttachFace});
    add_triangles_of(prism_id);
    attach_antiprisms(prism_id, iteration);
  }
  merged_cache_.reset();
}

const MergedVertices& SurfaceComplex::merged() const {
  if (!merged_cache_) merged_cache_ = merge_vertices(*this);
  return *merged_cache_;
}

namespace {

struct CellKey {
  long long x, y, z;
  bool operator==(const CellKey&) const = default;
};

struct CellHash {
  size_t operator()(const CellKey& k) const {
    return static_cast<size_t>(k.x * 0x9E3779B97F4A7C15ull +
                               k.y * 0xC2B2AE3D27D4EB4Full +
                               k.z * 0x165667B19E3779F9ull);
  }
};

CellKey cell_of(Vec3 v, double cell) {
  return {static_cast<long long>(std::floor(v.x / cell)),
          static_cast<long long>(std::floor(v.y / cell)),
          static_cast<long long>(std::floor(v.z / cell))};
}

class PointGrid {
 public:
  explicit PointGrid(double cell) : cell_(cell) {}

  // Global id of a representative within `radius`, or -1.
  int find(Vec3 v, double radius, const std::vector<Vec3>& coords) const {
    CellKey base = cell_of(v, cell_);
    for (long long dx = -1; dx <= 1; ++dx)
      for (long long dy = -1; dy <= 1; ++dy)
        for (long long dz = -1; dz <= 1; ++dz) {
          auto it = cells_.find(CellKey{base.x + dx, base.y + dy, base.z + dz});
          if (it == cells_.end()) continue;
          for (int id : it->second) {
            if (norm(coords[id] - v) <= radius) return id;
          }
        }
    return -1;
  }

  void insert(Vec3 v, int id) { cells_[cell_of(v, cell_)].push_back(id); }

 private:
  double cell_;
  std::unordered_map<CellKey, std::vector<int>, CellHash> cells_;
};

}  // namespace

MergedVertices merge_vertices(const SurfaceComplex& complex) {
  const double radius = tol::merge_radius;
  MergedVertices out;
  PointGrid grid(radius);
  out.per_solid.reserve(complex.solids().size());
  for (const PlacedSolid& s : complex.solids()) {
    std::vector<int>& ids = out.per_solid.emplace_back();
    ids.reserve(s.vertices.size());
    for (const Point& p : s.vertices) {
      Vec3 v = p.vec();
      int id = grid.find(v, radius, out.coords);
      if (id < 0) {
        id = static_cast<int>(out.coords.size());
        out.coords.push_back(v);
        grid.insert(v, id);
      }
      ids.push_back(id);
    }
  }

  // Distinct representatives closer than 10x the radius mean the merge
  // tolerance no longer separates the lattice.
  {
    PointGrid check(10.0 * radius);
    for (int id = 0; id < static_cast<int>(out.coords.size()); ++id) {
      int other = check.find(out.coords[id], 10.0 * radius, out.coords);
      if (other >= 0) {
        char buf[96];
        std::snprintf(buf, sizeof buf,
                      "distinct vertices %d and %d within 10x merge radius", other, id);
        throw Error(ErrorCode::merge_ambiguity, buf);
      }
      check.insert(out.coords[id], id);
    }
  }

  out.triangle_ids.reserve(complex.triangles().size());
  for (const SurfaceTriangle& t : complex.triangles()) {
    const std::vector<int>& face = canonical_solid(complex.solids()[t.solid].kind)
                                       .faces[t.face];
    out.triangle_ids.push_back({out.per_solid[t.solid][face[0]],
                                out.per_solid[t.solid][face[1]],
                                out.per_solid[t.solid][face[2]]});
  }

  out.on_open_frame.assign(out.coords.size(), 0);
  for (const OpenFrame& of : complex.open_frames()) {
    const std::vector<int>& face = canonical_solid(complex.solids()[of.solid].kind)
                                       .faces[of.face];
    for (int local : face) out.on_open_frame[out.per_solid[of.solid][local]] = 1;
  }
  return out;
}

std::vector<int> triangle_valences(const SurfaceComplex& complex) {
  const MergedVertices& merged = complex.merged();
  std::vector<int> valence(merged.coords.size(), 0);
  for (const std::array<int, 3>& t : merged.triangle_ids) {
    for (int id : t) valence[id]++;
  }
  return valence;
}

}  // namespace hsurf
