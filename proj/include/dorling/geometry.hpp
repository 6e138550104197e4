#ifndef DORLING_GEOMETRY_HPP
#define DORLING_GEOMETRY_HPP

#include <cmath>
#include <limits>
#include <vector>

namespace dorling {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

using Vec2 = Point;

inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(Point a, double s) { return {a.x * s, a.y * s}; }
inline Point operator*(double s, Point a) { return a * s; }

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }
inline double distance(Point a, Point b) { return norm(b - a); }

// A ring is a closed sequence of points (first == last).
using Ring = std::vector<Point>;

// First ring is the outer boundary, the rest are holes.
struct Polygon {
  std::vector<Ring> rings;
};

struct MultiPolygon {
  std::vector<Polygon> polygons;
};

struct BBox {
  double min_x = std::numeric_limits<double>::infinity();
  double min_y = std::numeric_limits<double>::infinity();
  double max_x = -std::numeric_limits<double>::infinity();
  double max_y = -std::numeric_limits<double>::infinity();

  void expand(Point p) {
    min_x = std::min(min_x, p.x);
    min_y = std::min(min_y, p.y);
    max_x = std::max(max_x, p.x);
    max_y = std::max(max_y, p.y);
  }
  void expand(const BBox& o) {
    min_x = std::min(min_x, o.min_x);
    min_y = std::min(min_y, o.min_y);
    max_x = std::max(max_x, o.max_x);
    max_y = std::max(max_y, o.max_y);
  }
  bool empty() const { return min_x > max_x; }
  double width() const { return empty() ? 0.0 : max_x - min_x; }
  double height() const { return empty() ? 0.0 : max_y - min_y; }
  double diagonal() const { return empty() ? 0.0 : std::hypot(width(), height()); }
  bool intersects(const BBox& o, double pad = 0.0) const {
    return min_x - pad <= o.max_x && o.min_x - pad <= max_x &&
           min_y - pad <= o.max_y && o.min_y - pad <= max_y;
  }
};

// Shoelace signed area; positive for counterclockwise rings.
double ring_signed_area(const Ring& ring);

// Area-weighted ring centroid together with its signed area.
struct RingMoment {
  double area = 0.0;
  Point weighted_centroid{0.0, 0.0};  // centroid * area
};
RingMoment ring_moment(const Ring& ring);

BBox ring_bbox(const Ring& ring);
BBox multipolygon_bbox(const MultiPolygon& mp);

bool point_in_ring(Point p, const Ring& ring);

}  // namespace dorling

#endif
