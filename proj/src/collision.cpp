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

#include "collision.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <unordered_set>

namespace hsurf {

namespace {

void subdivide_rec(const Point& p, const Point& q, const Point& r, int depth,
                   int parent, int& piece, std::vector<FlatTri>& out) {
  if (depth == 0) {
    out.push_back(FlatTri{{p.vec(), q.vec(), r.vec()}, parent, piece++});
    return;
  }
  Point mpq = geodesic_point(p, q, 0.5);
  Point mqr = geodesic_point(q, r, 0.5);
  Point mrp = geodesic_point(r, p, 0.5);
  subdivide_rec(p, mpq, mrp, depth - 1, parent, piece, out);
  subdivide_rec(mpq, q, mqr, depth - 1, parent, piece, out);
  subdivide_rec(mrp, mqr, r, depth - 1, parent, piece, out);
  subdivide_rec(mpq, mqr, mrp, depth - 1, parent, piece, out);
}

}  // namespace

std::vector<FlatTri> subdivide(const SurfaceTriangle& tri, int depth) {
  if (depth < 0 || depth > 6) {
    throw Error(ErrorCode::depth_exceeded, "subdivision depth must be in 0..6");
  }
  std::vector<FlatTri> out;
  out.reserve(static_cast<size_t>(1) << (2 * depth));
  int piece = 0;
  subdivide_rec(tri.corners[0], tri.corners[1], tri.corners[2], depth, 0, piece, out);
  return out;
}

namespace {

// Interval of a triangle's projection onto a unit axis.
inline void project(const FlatTri& t, Vec3 axis, double& lo, double& hi) {
  double a = dot(t.v[0], axis), b = dot(t.v[1], axis), c = dot(t.v[2], axis);
  lo = std::min({a, b, c});
  hi = std::max({a, b, c});
}

// Separating-axis run over face normals, edge cross products, and in-plane
// edge normals (the latter close the coplanar gap the 11-axis set leaves).
bool sat_overlap(const FlatTri& a, const FlatTri& b, double eps) {
  Vec3 ea[3] = {a.v[1] - a.v[0], a.v[2] - a.v[1], a.v[0] - a.v[2]};
  Vec3 eb[3] = {b.v[1] - b.v[0], b.v[2] - b.v[1], b.v[0] - b.v[2]};
  Vec3 na = cross(ea[0], ea[1]);
  Vec3 nb = cross(eb[0], eb[1]);
  if (norm(na) <= 1e-16 || norm(nb) <= 1e-16) {
    throw Error(ErrorCode::degenerate_triangle, "degenerate triangle in narrow phase");
  }

  auto separated_by = [&](Vec3 axis) -> bool {
    double n = norm(axis);
    if (n < 1e-12) return false;  // ill-conditioned axis, skip
    axis = axis / n;
    double alo, ahi, blo, bhi;
    project(a, axis, alo, ahi);
    project(b, axis, blo, bhi);
    return std::min(ahi, bhi) - std::max(alo, blo) < -eps;
  };

  if (separated_by(na) || separated_by(nb)) return false;
  for (const Vec3& u : ea) {
    for (const Vec3& v : eb) {
      if (separated_by(cross(u, v))) return false;
    }
  }
  for (const Vec3& u : ea) {
    if (separated_by(cross(na, u))) return false;
  }
  for (const Vec3& v : eb) {
    if (separated_by(cross(nb, v))) return false;
  }
  return true;
}

// How far `probe` pokes through the plane of `base`: the smaller of its
// reaches on the two sides.  Zero for contacts confined to the plane
// (vertex or edge touches, coplanar overlap).
double straddle_depth(const FlatTri& probe, const FlatTri& base) {
  Vec3 n = normalized(cross(base.v[1] - base.v[0], base.v[2] - base.v[0]));
  double pos = 0.0, neg = 0.0;
  for (const Vec3& v : probe.v) {
    double d = dot(v - base.v[0], n);
    pos = std::max(pos, d);
    neg = std::max(neg, -d);
  }
  return std::min(pos, neg);
}

}  // namespace

bool tri_tri_intersect(const FlatTri& a, const FlatTri& b, double eps) {
  return sat_overlap(a, b, eps);
}

std::optional<double> tri_tri_overlap_depth(const FlatTri& a, const FlatTri& b,
                                            double eps) {
  if (!sat_overlap(a, b, eps)) return std::nullopt;
  return std::min(straddle_depth(a, b), straddle_depth(b, a));
}

namespace {

struct Aabb {
  Vec3 lo{1e300, 1e300, 1e300};
  Vec3 hi{-1e300, -1e300, -1e300};

  void grow(Vec3 p) {
    lo = {std::min(lo.x, p.x), std::min(lo.y, p.y), std::min(lo.z, p.z)};
    hi = {std::max(hi.x, p.x), std::max(hi.y, p.y), std::max(hi.z, p.z)};
  }
  void grow(const Aabb& o) {
    grow(o.lo);
    grow(o.hi);
  }
  bool overlaps(const Aabb& o) const {
    return lo.x <= o.hi.x && o.lo.x <= hi.x && lo.y <= o.hi.y && o.lo.y <= hi.y &&
           lo.z <= o.hi.z && o.lo.z <= hi.z;
  }
};

class Bvh {
 public:
  Bvh(const std::vector<FlatTri>& tris, double pad) {
    size_t n = tris.size();
    boxes_.resize(n);
    order_.resize(n);
    for (size_t i = 0; i < n; ++i) {
      for (const Vec3& v : tris[i].v) boxes_[i].grow(v);
      boxes_[i].lo = boxes_[i].lo - Vec3{pad, pad, pad};
      boxes_[i].hi = boxes_[i].hi + Vec3{pad, pad, pad};
      order_[i] = static_cast<int>(i);
    }
    if (n > 0) root_ = build(0, static_cast<int>(n));
  }

  template <typename Fn>
  void self_pairs(Fn&& emit) const {
    if (root_ >= 0) self_node(root_, emit);
  }

 private:
  struct Node {
    Aabb box;
    int left = -1, right = -1;  // children, or
    int start = 0, count = 0;   // leaf range in order_
  };
  static constexpr int kLeafSize = 4;

  int build(int start, int end) {
    Node node;
    for (int i = start; i < end; ++i) node.box.grow(boxes_[order_[i]]);
    if (end - start <= kLeafSize) {
      node.start = start;
      node.count = end - start;
      nodes_.push_back(node);
      return static_cast<int>(nodes_.size()) - 1;
    }
    Vec3 extent = node.box.hi - node.box.lo;
    int axis = extent.x >= extent.y ? (extent.x >= extent.z ? 0 : 2)
                                    : (extent.y >= extent.z ? 1 : 2);
    int mid = (start + end) / 2;
    std::nth_element(order_.begin() + start, order_.begin() + mid,
                     order_.begin() + end, [&](int i, int j) {
                       return center(boxes_[i], axis) < center(boxes_[j], axis);
                     });
    int left = build(start, mid);
    int right = build(mid, end);
    node.left = left;
    node.right = right;
    nodes_.push_back(node);
    return static_cast<int>(nodes_.size()) - 1;
  }

  static double center(const Aabb& b, int axis) {
    switch (axis) {
      case 0: return b.lo.x + b.hi.x;
      case 1: return b.lo.y + b.hi.y;
      default: return b.lo.z + b.hi.z;
    }
  }

  template <typename Fn>
  void self_node(int n, Fn&& emit) const {
    const Node& node = nodes_[n];
    if (node.left < 0) {
      for (int i = node.start; i < node.start + node.count; ++i) {
        for (int j = i + 1; j < node.start + node.count; ++j) {
          leaf_pair(order_[i], order_[j], emit);
        }
      }
      return;
    }
    self_node(node.left, emit);
    self_node(node.right, emit);
    cross_nodes(node.left, node.right, emit);
  }

  template <typename Fn>
  void cross_nodes(int na, int nb, Fn&& emit) const {
    const Node& a = nodes_[na];
    const Node& b = nodes_[nb];
    if (!a.box.overlaps(b.box)) return;
    if (a.left < 0 && b.left < 0) {
      for (int i = a.start; i < a.start + a.count; ++i) {
        for (int j = b.start; j < b.start + b.count; ++j) {
          leaf_pair(order_[i], order_[j], emit);
        }
      }
      return;
    }
    // Descend the larger box.
    auto size = [](const Aabb& box) {
      Vec3 e = box.hi - box.lo;
      return e.x + e.y + e.z;
    };
    if (b.left < 0 || (a.left >= 0 && size(a.box) >= size(b.box))) {
      cross_nodes(a.left, nb, emit);
      cross_nodes(a.right, nb, emit);
    } else {
      cross_nodes(na, b.left, emit);
      cross_nodes(na, b.right, emit);
    }
  }

  template <typename Fn>
  void leaf_pair(int i, int j, Fn&& emit) const {
    if (!boxes_[i].overlaps(boxes_[j])) return;
    if (i < j) {
      emit(i, j);
    } else {
      emit(j, i);
    }
  }

  std::vector<Aabb> boxes_;
  std::vector<int> order_;
  std::vector<Node> nodes_;
  int root_ = -1;
};

}  // namespace

std::vector<std::pair<int, int>> broad_phase(const std::vector<FlatTri>& tris,
                                             double pad) {
  std::vector<std::pair<int, int>> out;
  Bvh bvh(tris, pad);
  bvh.self_pairs([&](int i, int j) { out.emplace_back(i, j); });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

inline unsigned long long solid_pair_key(int a, int b) {
  if (a > b) std::swap(a, b);
  return (static_cast<unsigned long long>(static_cast<unsigned>(a)) << 32) |
         static_cast<unsigned>(b);
}

bool share_merged_vertex(const std::array<int, 3>& a, const std::array<int, 3>& b) {
  for (int x : a)
    for (int y : b)
      if (x == y) return true;
  return false;
}

}  // namespace

IntersectionReport detect_self_intersections(const SurfaceComplex& complex,
                                             int depth, double eps) {
  const MergedVertices& merged = complex.merged();
  const std::vector<SurfaceTriangle>& tris = complex.triangles();

  std::vector<FlatTri> flats;
  flats.reserve(tris.size() << (2 * std::max(depth, 0)));
  for (size_t i = 0; i < tris.size(); ++i) {
    std::vector<FlatTri> pieces = subdivide(tris[i], depth);
    for (FlatTri& f : pieces) {
      f.parent = static_cast<int>(i);
      flats.push_back(f);
    }
  }

  std::unordered_set<unsigned long long> glued;
  glued.reserve(complex.glued_pairs().size() * 2);
  for (const GluedPair& g : complex.glued_pairs()) {
    glued.insert(solid_pair_key(g.solid_a, g.solid_b));
  }

  const double grazing_floor = 10.0 * eps;
  std::vector<std::pair<int, int>> hit, graze;
  Bvh bvh(flats, tol::aabb_pad);
  bvh.self_pairs([&](int i, int j) {
    int pi = flats[i].parent, pj = flats[j].parent;
    if (pi == pj) return;
    const SurfaceTriangle& ti = tris[pi];
    const SurfaceTriangle& tj = tris[pj];
    if (ti.solid == tj.solid) return;
    if (glued.count(solid_pair_key(ti.solid, tj.solid))) return;
    if (share_merged_vertex(merged.triangle_ids[pi], merged.triangle_ids[pj])) return;
    std::optional<double> overlap = tri_tri_overlap_depth(flats[i], flats[j], eps);
    if (!overlap) return;
    std::pair<int, int> pair{std::min(pi, pj), std::max(pi, pj)};
    (*overlap > grazing_floor ? hit : graze).push_back(pair);
  });

  auto dedup = [](std::vector<std::pair<int, int>>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  };
  dedup(hit);
  dedup(graze);
  // A pair that crosses somewhere is not merely grazing.
  graze.erase(std::remove_if(graze.begin(), graze.end(),
                             [&](const std::pair<int, int>& p) {
                               return std::binary_search(hit.begin(), hit.end(), p);
                             }),
              graze.end());

  IntersectionReport report;
  report.intersecting = !hit.empty();
  report.pairs = std::move(hit);
  report.grazing = std::move(graze);
  return report;
}

}  // namespace hsurf
