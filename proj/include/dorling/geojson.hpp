#ifndef DORLING_GEOJSON_HPP
#define DORLING_GEOJSON_HPP

#include <string>
#include <vector>

#include "dorling/region.hpp"

namespace dorling {

// Reads a GeoJSON-style feature collection of Polygon/MultiPolygon features.
// The feature id is taken from the feature-level "id", then the "id" property,
// then the "name" property. The statistical value is read from the named
// numeric property. Throws DatasetError on malformed input, naming the
// offending feature.
std::vector<Region> load_regions(const std::string& path, const std::string& value_field);

// Serializes regions back to a feature collection (ids and values round-trip
// exactly).
std::string regions_to_geojson(const std::vector<Region>& regions, const std::string& value_field);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

}  // namespace dorling

#endif
