#include "dorling/svg.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "dorling/format.hpp"

namespace dorling {

namespace {

std::vector<const Circle*> sorted_by_id(const std::vector<Circle>& circles) {
  std::vector<const Circle*> out;
  out.reserve(circles.size());
  for (const Circle& c : circles) out.push_back(&c);
  std::sort(out.begin(), out.end(),
            [](const Circle* a, const Circle* b) { return a->region_id < b->region_id; });
  return out;
}

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += ch;
    }
  }
  return out;
}

}  // namespace

std::string render_svg(const std::vector<Circle>& circles, const std::vector<Region>& regions,
                       const SvgStyle& style) {
  BBox box;
  for (const Circle& c : circles) {
    box.expand(Point{c.center.x - c.radius, c.center.y - c.radius});
    box.expand(Point{c.center.x + c.radius, c.center.y + c.radius});
  }
  if (style.ghost_regions) {
    for (const Region& reg : regions) box.expand(multipolygon_bbox(reg.geometry));
  }
  if (box.empty()) box = {0.0, 0.0, 1.0, 1.0};

  const double margin = 0.05 * std::max(box.width(), box.height());
  const double min_x = box.min_x - margin;
  const double max_y = box.max_y + margin;
  const double view_w = box.width() + 2.0 * margin;
  const double view_h = box.height() + 2.0 * margin;
  const double px_per_unit = style.width_px / view_w;
  const double height_px = view_h * px_per_unit;

  // Map units are y-up, SVG is y-down.
  const auto sx = [&](double x) { return (x - min_x) * px_per_unit; };
  const auto sy = [&](double y) { return (max_y - y) * px_per_unit; };

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt_double(style.width_px)
      << "\" height=\"" << fmt_double(height_px) << "\" viewBox=\"0 0 "
      << fmt_double(style.width_px) << " " << fmt_double(height_px) << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";

  if (style.ghost_regions && !regions.empty()) {
    std::vector<const Region*> regs;
    for (const Region& r : regions) regs.push_back(&r);
    std::sort(regs.begin(), regs.end(),
              [](const Region* a, const Region* b) { return a->id < b->id; });
    out << "<g fill=\"none\" stroke=\"#c8c8c8\" stroke-width=\"0.6\">\n";
    for (const Region* reg : regs) {
      out << "<path d=\"";
      for (const Polygon& poly : reg->geometry.polygons) {
        for (const Ring& ring : poly.rings) {
          for (std::size_t i = 0; i + 1 < ring.size(); ++i) {
            out << (i == 0 ? "M" : "L") << fmt_double(sx(ring[i].x)) << " "
                << fmt_double(sy(ring[i].y));
          }
          out << "Z";
        }
      }
      out << "\"/>\n";
    }
    out << "</g>\n";
  }

  out << "<g stroke=\"" << style.circle_stroke << "\" stroke-width=\"1\" fill=\""
      << style.circle_fill << "\" fill-opacity=\"0.85\">\n";
  const auto ordered = sorted_by_id(circles);
  for (const Circle* c : ordered) {
    out << "<circle cx=\"" << fmt_double(sx(c->center.x)) << "\" cy=\""
        << fmt_double(sy(c->center.y)) << "\" r=\"" << fmt_double(c->radius * px_per_unit)
        << "\"/>\n";
  }
  out << "</g>\n";

  if (style.labels) {
    out << "<g font-family=\"sans-serif\" text-anchor=\"middle\" fill=\"#1c1c1c\">\n";
    for (const Circle* c : ordered) {
      const double font = std::clamp(c->radius * px_per_unit * 0.7, 4.0, 18.0);
      out << "<text x=\"" << fmt_double(sx(c->center.x)) << "\" y=\""
          << fmt_double(sy(c->center.y) + font * 0.35) << "\" font-size=\"" << fmt_double(font)
          << "\">" << xml_escape(c->region_id) << "</text>\n";
    }
    out << "</g>\n";
  }

  out << "</svg>\n";
  return out.str();
}

std::string circles_to_geojson(const std::vector<Circle>& circles,
                               const std::vector<Region>& regions) {
  std::map<std::string, double> values;
  for (const Region& reg : regions) values[reg.id] = reg.value;

  std::ostringstream out;
  out << "{\"type\":\"FeatureCollection\",\"features\":[";
  const auto ordered = sorted_by_id(circles);
  for (std::size_t i = 0; i < ordered.size(); ++i) {
    const Circle& c = *ordered[i];
    const auto v = values.find(c.region_id);
    if (i > 0) out << ",";
    out << "{\"type\":\"Feature\",\"properties\":{"
        << "\"region_id\":\"" << c.region_id << "\""
        << ",\"value\":" << fmt_double(v == values.end() ? 0.0 : v->second)
        << ",\"radius_map_units\":" << fmt_double(c.radius)
        << ",\"dx\":" << fmt_double(c.center.x - c.original_center.x)
        << ",\"dy\":" << fmt_double(c.center.y - c.original_center.y)
        << "},\"geometry\":{\"type\":\"Point\",\"coordinates\":["
        << fmt_double(c.center.x) << "," << fmt_double(c.center.y) << "]}}";
  }
  out << "]}";
  return out.str();
}

}  // namespace dorling
