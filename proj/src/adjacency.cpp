#include "dorling/adjacency.hpp"

#include <cmath>

namespace dorling {

namespace {

struct Segment {
  Point a;
  Point b;
};

std::vector<Segment> boundary_segments(const Region& reg, double snap_tol) {
  const auto snap = [snap_tol](Point p) -> Point {
    if (snap_tol <= 0.0) return p;
    return {std::round(p.x / snap_tol) * snap_tol, std::round(p.y / snap_tol) * snap_tol};
  };
  std::vector<Segment> segs;
  for (const Polygon& poly : reg.geometry.polygons) {
    for (const Ring& ring : poly.rings) {
      for (std::size_t i = 0; i + 1 < ring.size(); ++i) {
        Segment s{snap(ring[i]), snap(ring[i + 1])};
        if (s.a.x != s.b.x || s.a.y != s.b.y) segs.push_back(s);
      }
    }
  }
  return segs;
}

// Length of the collinear overlap between two segments; 0 when they are not
// collinear or meet in at most a point.
double collinear_overlap(const Segment& s, const Segment& t, double tol) {
  const Vec2 d = s.b - s.a;
  const double len = norm(d);
  if (len <= tol) return 0.0;
  const Vec2 u{d.x / len, d.y / len};

  // Both endpoints of t must lie on the carrier line of s.
  if (std::abs(cross(u, t.a - s.a)) > tol) return 0.0;
  if (std::abs(cross(u, t.b - s.a)) > tol) return 0.0;

  double p = dot(u, t.a - s.a);
  double q = dot(u, t.b - s.a);
  if (q < p) std::swap(p, q);
  const double lo = std::max(0.0, p);
  const double hi = std::min(len, q);
  return hi - lo;
}

}  // namespace

double default_snap_tol(const std::vector<Region>& regions) {
  return 1e-9 * regions_bbox(regions).diagonal();
}

AdjacencySet adjacency_pairs(const std::vector<Region>& regions, double snap_tol) {
  AdjacencySet pairs;
  const std::size_t n = regions.size();

  std::vector<std::vector<Segment>> segs(n);
  std::vector<BBox> boxes(n);
  for (std::size_t i = 0; i < n; ++i) {
    segs[i] = boundary_segments(regions[i], snap_tol);
    boxes[i] = multipolygon_bbox(regions[i].geometry);
  }

  const double tol = std::max(snap_tol, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!boxes[i].intersects(boxes[j], 2.0 * tol)) continue;
      bool shared = false;
      for (const Segment& s : segs[i]) {
        for (const Segment& t : segs[j]) {
          if (collinear_overlap(s, t, tol) > tol) {
            shared = true;
            break;
          }
        }
        if (shared) break;
      }
      if (shared) pairs.insert(make_id_pair(regions[i].id, regions[j].id));
    }
  }
  return pairs;
}

}  // namespace dorling
