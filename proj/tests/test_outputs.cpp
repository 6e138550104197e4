#include <sstream>

#include "doctest.h"

#include "json.hpp"

#include "dorling/svg.hpp"

using namespace dorling;

namespace {

Circle circle(const std::string& id, double x, double y, double r) {
  return Circle{id, {x, y}, r, {x, y}};
}

int count_occurrences(const std::string& hay, const std::string& needle) {
  int count = 0;
  for (std::size_t at = hay.find(needle); at != std::string::npos;
       at = hay.find(needle, at + needle.size())) {
    ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("svg contains one circle element per region") {
  std::vector<Circle> one{circle("a", 0, 0, 1)};
  SvgStyle style;
  const std::string doc = render_svg(one, {}, style);
  CHECK(count_occurrences(doc, "<circle") == 1);
  CHECK(doc.find("<svg") != std::string::npos);
  CHECK(doc.find("</svg>") != std::string::npos);

  // empty input still renders a valid document
  const std::string empty = render_svg({}, {}, style);
  CHECK(count_occurrences(empty, "<circle") == 0);
  CHECK(empty.find("<svg") != std::string::npos);

  std::vector<Circle> many;
  for (int k = 0; k < 49; ++k) many.push_back(circle("r" + std::to_string(k), k * 3.0, 0, 1));
  CHECK(count_occurrences(render_svg(many, {}, style), "<circle") == 49);
}

TEST_CASE("svg output is deterministic and ordered by id") {
  std::vector<Circle> circles{circle("b", 5, 0, 1), circle("a", 0, 0, 1)};
  SvgStyle style;
  const std::string first = render_svg(circles, {}, style);
  const std::string second = render_svg(circles, {}, style);
  CHECK(first == second);
  CHECK(first.find(">a<") < first.find(">b<"));  // labels in id order
}

TEST_CASE("feature export round-trips centers, radii and displacement") {
  std::vector<Circle> circles{circle("a", 1.5, -2.25, 3.125), circle("b", 10, 4, 1)};
  circles[0].center = {2.5, -1.25};  // moved by (1, 1)

  std::vector<Region> regions;
  Region reg;
  reg.id = "a";
  reg.value = 42.0;
  Ring ring{{0, 0}, {1, 0}, {1, 1}, {0, 1}, {0, 0}};
  reg.geometry.polygons.push_back(Polygon{{ring}});
  regions.push_back(reg);

  const std::string doc = circles_to_geojson(circles, regions);
  const auto parsed = nlohmann::json::parse(doc);
  REQUIRE(parsed["features"].size() == 2);

  const auto& fa = parsed["features"][0];  // sorted by id
  CHECK(fa["properties"]["region_id"] == "a");
  CHECK(fa["properties"]["value"].get<double>() == 42.0);
  CHECK(fa["properties"]["radius_map_units"].get<double>() == 3.125);
  CHECK(fa["properties"]["dx"].get<double>() == 1.0);
  CHECK(fa["properties"]["dy"].get<double>() == 1.0);
  CHECK(fa["geometry"]["coordinates"][0].get<double>() == 2.5);

  const auto& fb = parsed["features"][1];
  CHECK(fb["properties"]["value"].get<double>() == 0.0);  // no matching region
  CHECK(fb["properties"]["dx"].get<double>() == 0.0);
}
