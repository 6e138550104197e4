#ifndef DORLING_SVG_HPP
#define DORLING_SVG_HPP

#include <string>
#include <vector>

#include "dorling/circles.hpp"
#include "dorling/region.hpp"

namespace dorling {

struct SvgStyle {
  double width_px = 800.0;
  bool ghost_regions = true;  // faint source outlines under the circles
  bool labels = true;
  std::string circle_fill = "#4d88c4";
  std::string circle_stroke = "#ffffff";
};

// Deterministic document: viewport fits every circle and outline with a 5%
// margin, elements ordered by region id.
std::string render_svg(const std::vector<Circle>& circles, const std::vector<Region>& regions,
                       const SvgStyle& style);

// One point feature per circle with region_id, value, radius and the applied
// displacement. Values come from the matching region; circles without a
// region get value 0.
std::string circles_to_geojson(const std::vector<Circle>& circles,
                               const std::vector<Region>& regions);

}  // namespace dorling

#endif
