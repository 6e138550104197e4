#ifndef DORLING_REGION_HPP
#define DORLING_REGION_HPP

#include <string>
#include <vector>

#include "dorling/geometry.hpp"

namespace dorling {

// A statistical region: polygonal footprint plus the value it carries.
struct Region {
  std::string id;
  MultiPolygon geometry;
  double value = 0.0;
};

// Conversion between map units and graphic millimeters on the output page.
// All graphic thresholds (minimum radius, target gap, long-edge cutoff) are
// stated in millimeters and pass through this scale.
struct MapScale {
  double units_per_mm = 1.0;

  double to_units(double mm) const { return mm * units_per_mm; }
  double to_mm(double units) const { return units / units_per_mm; }
};

// Throws DatasetError when a region violates the basic invariants
// (rings with < 4 points or not closed, negative or non-finite values,
// duplicate ids).
void validate_regions(const std::vector<Region>& regions);

// Area-weighted centroid over all polygon parts. Degenerate zero-area
// geometry falls back to the mean of the ring vertices and appends a note
// to `warnings` when provided.
Point region_centroid(const Region& region, std::vector<std::string>* warnings = nullptr);

BBox regions_bbox(const std::vector<Region>& regions);

// units_per_mm = bounding-box width / page width. Throws ConfigError on a
// degenerate (zero-width) bounding box or non-positive page width.
MapScale derive_scale(const std::vector<Region>& regions, double page_width_mm);

}  // namespace dorling

#endif
