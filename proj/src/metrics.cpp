#include "dorling/metrics.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <sstream>

#include "dorling/errors.hpp"
#include "dorling/format.hpp"

namespace dorling {

namespace {

std::map<std::string, const Circle*> circles_by_id(const std::vector<Circle>& circles) {
  std::map<std::string, const Circle*> m;
  for (const Circle& c : circles) m[c.region_id] = &c;
  return m;
}

double wrap_degrees(double d) {
  d = std::fmod(d, 360.0);
  if (d <= -180.0) d += 360.0;
  if (d > 180.0) d -= 360.0;
  return d;
}

}  // namespace

int num_overlaps(const std::vector<Circle>& circles, double tol) {
  if (tol < 0.0) {
    double mean_radius = 0.0;
    for (const Circle& c : circles) mean_radius += c.radius;
    mean_radius = circles.empty() ? 0.0 : mean_radius / circles.size();
    tol = 1e-9 * mean_radius;
  }
  int count = 0;
  for (std::size_t i = 0; i < circles.size(); ++i) {
    for (std::size_t j = i + 1; j < circles.size(); ++j) {
      if (pairwise_gap(circles[i], circles[j]) < -tol) ++count;
    }
  }
  return count;
}

std::pair<int, int> rt(const std::vector<Circle>& circles, const AdjacencySet& adjacency,
                       double tol_adj_mm, const MapScale& scale) {
  const auto by_id = circles_by_id(circles);
  const double tol = scale.to_units(tol_adj_mm);
  int maintained = 0;
  int total = 0;
  for (const IdPair& pair : adjacency) {
    const auto a = by_id.find(pair.first);
    const auto b = by_id.find(pair.second);
    if (a == by_id.end() || b == by_id.end()) continue;
    ++total;
    if (pairwise_gap(*a->second, *b->second) <= tol) ++maintained;
  }
  return {maintained, total};
}

double rms_direction(const std::vector<Circle>& before, const std::vector<Circle>& after,
                     const ProximityGraph& graph_before, std::vector<std::string>* warnings) {
  const auto after_by_id = circles_by_id(after);
  double sum_sq = 0.0;
  int used = 0;
  for (const GraphEdge& e : graph_before.edges) {
    const Circle& a0 = before[e.a];
    const Circle& b0 = before[e.b];
    const auto a1 = after_by_id.find(a0.region_id);
    const auto b1 = after_by_id.find(b0.region_id);
    if (a1 == after_by_id.end() || b1 == after_by_id.end()) {
      throw ConfigError("rms_direction: configurations are not aligned by region id");
    }
    const Vec2 v0 = b0.center - a0.center;
    const Vec2 v1 = b1->second->center - a1->second->center;
    if (norm(v0) == 0.0 || norm(v1) == 0.0) {
      if (warnings) {
        warnings->push_back("rms_direction: skipping edge '" + a0.region_id + "'-'" +
                            b0.region_id + "' with coincident centers");
      }
      continue;
    }
    const double deg0 = std::atan2(v0.y, v0.x) * 180.0 / std::numbers::pi;
    const double deg1 = std::atan2(v1.y, v1.x) * 180.0 / std::numbers::pi;
    const double delta = wrap_degrees(deg1 - deg0);
    sum_sq += delta * delta;
    ++used;
  }
  return used == 0 ? 0.0 : std::sqrt(sum_sq / used);
}

double tdd(const std::vector<Circle>& before, const std::vector<Circle>& after) {
  const auto after_by_id = circles_by_id(after);
  double total = 0.0;
  for (const Circle& b : before) {
    const auto a = after_by_id.find(b.region_id);
    if (a == after_by_id.end()) {
      throw ConfigError("tdd: configurations are not aligned by region id");
    }
    total += distance(b.center, a->second->center);
  }
  return total;
}

std::string MetricsReport::to_key_value_text() const {
  std::ostringstream out;
  out << "num_overlaps " << num_overlaps << "\n";
  out << "rt_maintained " << rt_maintained << "\n";
  out << "rt_total " << rt_total << "\n";
  if (const auto ratio = rt_ratio()) {
    out << "rt_ratio " << fmt_double(*ratio) << "\n";
  } else {
    out << "rt_ratio undefined\n";
  }
  out << "rms_degrees " << fmt_double(rms_degrees) << "\n";
  out << "tdd " << fmt_double(tdd) << "\n";
  out << "circle_count " << circle_count << "\n";
  out << "edge_count " << edge_count << "\n";
  out << "iterations_attract " << iterations_attract << "\n";
  out << "iterations_total " << iterations_total << "\n";
  out << "wall_time_seconds " << fmt_double(wall_time_seconds) << "\n";
  return out.str();
}

std::string MetricsReport::to_json() const {
  std::ostringstream out;
  out << "{";
  out << "\"num_overlaps\":" << num_overlaps;
  out << ",\"rt_maintained\":" << rt_maintained;
  out << ",\"rt_total\":" << rt_total;
  if (const auto ratio = rt_ratio()) {
    out << ",\"rt_ratio\":" << fmt_double(*ratio);
  } else {
    out << ",\"rt_ratio\":null";
  }
  out << ",\"rms_degrees\":" << fmt_double(rms_degrees);
  out << ",\"tdd\":" << fmt_double(tdd);
  out << ",\"circle_count\":" << circle_count;
  out << ",\"edge_count\":" << edge_count;
  out << ",\"iterations_attract\":" << iterations_attract;
  out << ",\"iterations_total\":" << iterations_total;
  out << ",\"wall_time_seconds\":" << fmt_double(wall_time_seconds);
  out << "}";
  return out.str();
}

}  // namespace dorling
