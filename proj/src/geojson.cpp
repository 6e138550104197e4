#include "dorling/geojson.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

#include "dorling/errors.hpp"
#include "dorling/format.hpp"

namespace dorling {

using nlohmann::json;

namespace {

Ring parse_ring(const json& jring, const std::string& feature_name) {
  Ring ring;
  for (const json& jpt : jring) {
    if (!jpt.is_array() || jpt.size() < 2 || !jpt[0].is_number() || !jpt[1].is_number()) {
      throw DatasetError("feature '" + feature_name + "' has a malformed coordinate");
    }
    ring.push_back({jpt[0].get<double>(), jpt[1].get<double>()});
  }
  return ring;
}

Polygon parse_polygon(const json& jpoly, const std::string& feature_name) {
  Polygon poly;
  for (const json& jring : jpoly) poly.rings.push_back(parse_ring(jring, feature_name));
  return poly;
}

std::string feature_id(const json& feature, std::size_t index) {
  if (feature.contains("id")) {
    const json& jid = feature["id"];
    if (jid.is_string()) return jid.get<std::string>();
    if (jid.is_number_integer()) return std::to_string(jid.get<long long>());
  }
  if (feature.contains("properties") && feature["properties"].is_object()) {
    const json& props = feature["properties"];
    for (const char* key : {"id", "name"}) {
      if (props.contains(key) && props[key].is_string()) return props[key].get<std::string>();
    }
  }
  return "feature#" + std::to_string(index);
}

}  // namespace

std::vector<Region> load_regions(const std::string& path, const std::string& value_field) {
  std::ifstream in(path);
  if (!in) throw DatasetError("cannot open input file '" + path + "'");

  json root;
  try {
    in >> root;
  } catch (const json::exception& e) {
    throw DatasetError("failed to parse '" + path + "': " + e.what());
  }

  if (!root.is_object() || root.value("type", "") != "FeatureCollection" ||
      !root.contains("features") || !root["features"].is_array()) {
    throw DatasetError("'" + path + "' is not a feature collection");
  }

  std::vector<Region> regions;
  std::size_t index = 0;
  for (const json& feature : root["features"]) {
    const std::string name = feature_id(feature, index++);

    if (!feature.contains("geometry") || !feature["geometry"].is_object()) {
      throw DatasetError("feature '" + name + "' has no geometry");
    }
    const json& geom = feature["geometry"];
    const std::string gtype = geom.value("type", "");

    Region reg;
    reg.id = name;
    if (gtype == "Polygon") {
      reg.geometry.polygons.push_back(parse_polygon(geom["coordinates"], name));
    } else if (gtype == "MultiPolygon") {
      for (const json& jpoly : geom["coordinates"]) {
        reg.geometry.polygons.push_back(parse_polygon(jpoly, name));
      }
    } else {
      throw DatasetError("feature '" + name + "' has non-polygonal geometry type '" + gtype + "'");
    }

    if (!feature.contains("properties") || !feature["properties"].is_object() ||
        !feature["properties"].contains(value_field)) {
      throw DatasetError("feature '" + name + "' is missing value field '" + value_field + "'");
    }
    const json& jval = feature["properties"][value_field];
    if (!jval.is_number()) {
      throw DatasetError("feature '" + name + "' has a non-numeric value field '" + value_field + "'");
    }
    reg.value = jval.get<double>();

    regions.push_back(std::move(reg));
  }

  validate_regions(regions);
  return regions;
}

std::string regions_to_geojson(const std::vector<Region>& regions, const std::string& value_field) {
  std::ostringstream out;
  out << "{\"type\":\"FeatureCollection\",\"features\":[";
  bool first_feature = true;
  for (const Region& reg : regions) {
    if (!first_feature) out << ",";
    first_feature = false;
    out << "{\"type\":\"Feature\",\"properties\":{\"id\":" << json(reg.id).dump()
        << ",\"" << value_field << "\":" << fmt_double(reg.value) << "},\"geometry\":";
    const bool multi = reg.geometry.polygons.size() > 1;
    out << "{\"type\":\"" << (multi ? "MultiPolygon" : "Polygon") << "\",\"coordinates\":";
    if (multi) out << "[";
    for (std::size_t p = 0; p < reg.geometry.polygons.size(); ++p) {
      if (p > 0) out << ",";
      out << "[";
      const Polygon& poly = reg.geometry.polygons[p];
      for (std::size_t r = 0; r < poly.rings.size(); ++r) {
        if (r > 0) out << ",";
        out << "[";
        const Ring& ring = poly.rings[r];
        for (std::size_t i = 0; i < ring.size(); ++i) {
          if (i > 0) out << ",";
          out << "[" << fmt_double(ring[i].x) << "," << fmt_double(ring[i].y) << "]";
        }
        out << "]";
      }
      out << "]";
    }
    if (multi) out << "]";
    out << "}}";
  }
  out << "]}";
  return out.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DatasetError("cannot open output file '" + path + "'");
  out << content;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DatasetError("cannot open file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace dorling
