#include "dorling/geometry.hpp"

namespace dorling {

double ring_signed_area(const Ring& ring) {
  double twice = 0.0;
  for (std::size_t i = 0; i + 1 < ring.size(); ++i) {
    twice += cross(ring[i], ring[i + 1]);
  }
  return 0.5 * twice;
}

RingMoment ring_moment(const Ring& ring) {
  RingMoment m;
  double cx = 0.0, cy = 0.0;
  for (std::size_t i = 0; i + 1 < ring.size(); ++i) {
    const double w = cross(ring[i], ring[i + 1]);
    m.area += w;
    cx += (ring[i].x + ring[i + 1].x) * w;
    cy += (ring[i].y + ring[i + 1].y) * w;
  }
  m.area *= 0.5;
  m.weighted_centroid = {cx / 6.0, cy / 6.0};
  return m;
}

BBox ring_bbox(const Ring& ring) {
  BBox b;
  for (const Point& p : ring) b.expand(p);
  return b;
}

BBox multipolygon_bbox(const MultiPolygon& mp) {
  BBox b;
  for (const Polygon& poly : mp.polygons) {
    for (const Ring& r : poly.rings) b.expand(ring_bbox(r));
  }
  return b;
}

bool point_in_ring(Point p, const Ring& ring) {
  bool inside = false;
  for (std::size_t i = 0; i + 1 < ring.size(); ++i) {
    const Point a = ring[i];
    const Point b = ring[i + 1];
    if ((a.y > p.y) != (b.y > p.y)) {
      const double t = (p.y - a.y) / (b.y - a.y);
      if (p.x < a.x + t * (b.x - a.x)) inside = !inside;
    }
  }
  return inside;
}

}  // namespace dorling
