#include "dorling/region.hpp"

#include <cmath>
#include <set>

#include "dorling/errors.hpp"

namespace dorling {

void validate_regions(const std::vector<Region>& regions) {
  std::set<std::string> seen;
  for (const Region& reg : regions) {
    if (!seen.insert(reg.id).second) {
      throw DatasetError("duplicate region id '" + reg.id + "'");
    }
    if (!std::isfinite(reg.value) || reg.value < 0.0) {
      throw DatasetError("region '" + reg.id + "' has a non-finite or negative value");
    }
    if (reg.geometry.polygons.empty()) {
      throw DatasetError("region '" + reg.id + "' has no geometry");
    }
    for (const Polygon& poly : reg.geometry.polygons) {
      if (poly.rings.empty()) {
        throw DatasetError("region '" + reg.id + "' has a polygon without rings");
      }
      for (const Ring& ring : poly.rings) {
        if (ring.size() < 4) {
          throw DatasetError("region '" + reg.id + "' has a ring with fewer than 4 points");
        }
        if (ring.front().x != ring.back().x || ring.front().y != ring.back().y) {
          throw DatasetError("region '" + reg.id + "' has an unclosed ring");
        }
      }
    }
  }
}

Point region_centroid(const Region& region, std::vector<std::string>* warnings) {
  double area = 0.0;
  Point weighted{0.0, 0.0};
  for (const Polygon& poly : region.geometry.polygons) {
    for (std::size_t k = 0; k < poly.rings.size(); ++k) {
      RingMoment m = ring_moment(poly.rings[k]);
      // Normalize winding: outer ring contributes positively, holes negatively.
      double sign = (k == 0) ? 1.0 : -1.0;
      if (m.area < 0.0) {
        m.area = -m.area;
        m.weighted_centroid = m.weighted_centroid * -1.0;
      }
      area += sign * m.area;
      weighted = weighted + sign * m.weighted_centroid;
    }
  }

  const BBox box = multipolygon_bbox(region.geometry);
  const double diag = box.diagonal();
  if (std::abs(area) > 1e-12 * diag * diag) {
    return {weighted.x / area, weighted.y / area};
  }

  // Zero-area geometry: average the distinct ring vertices instead.
  if (warnings) {
    warnings->push_back("region '" + region.id +
                        "' has degenerate zero-area geometry; centroid falls back to vertex mean");
  }
  Point sum{0.0, 0.0};
  std::size_t count = 0;
  for (const Polygon& poly : region.geometry.polygons) {
    for (const Ring& ring : poly.rings) {
      for (std::size_t i = 0; i + 1 < ring.size(); ++i) {  // skip the closing duplicate
        sum = sum + ring[i];
        ++count;
      }
    }
  }
  if (count == 0) throw DatasetError("region '" + region.id + "' has no vertices");
  return {sum.x / count, sum.y / count};
}

BBox regions_bbox(const std::vector<Region>& regions) {
  BBox b;
  for (const Region& reg : regions) b.expand(multipolygon_bbox(reg.geometry));
  return b;
}

MapScale derive_scale(const std::vector<Region>& regions, double page_width_mm) {
  if (regions.empty()) throw ConfigError("derive_scale: no regions");
  if (page_width_mm <= 0.0) throw ConfigError("derive_scale: page width must be positive");
  const BBox box = regions_bbox(regions);
  if (box.width() <= 0.0) throw ConfigError("derive_scale: zero-width bounding box");
  return MapScale{box.width() / page_width_mm};
}

}  // namespace dorling
