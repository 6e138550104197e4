#include "dorling/forces.hpp"

#include <cmath>

#include "dorling/errors.hpp"

namespace dorling {

namespace {

// Unit vector from b's center to a's center; coincident centers resolve to +x.
Vec2 away_direction(const Circle& a, const Circle& b, std::vector<std::string>* warnings) {
  const Vec2 d = a.center - b.center;
  const double len = norm(d);
  if (len > 0.0) return {d.x / len, d.y / len};
  if (warnings) {
    warnings->push_back("circles '" + a.region_id + "' and '" + b.region_id +
                        "' have coincident centers; using +x as the separation direction");
  }
  return {1.0, 0.0};
}

}  // namespace

std::pair<Vec2, Vec2> repulsive_pair(const Circle& a, const Circle& b, double gap,
                                     std::vector<std::string>* warnings) {
  if (!(gap < 0.0)) throw ConfigError("repulsive_pair: requires an overlapping pair (gap < 0)");
  const double depth = -gap;
  const double share_a = b.radius / (a.radius + b.radius);
  const double share_b = a.radius / (a.radius + b.radius);
  const Vec2 dir = away_direction(a, b, warnings);
  return {dir * (depth * share_a), dir * (-depth * share_b)};
}

std::pair<Vec2, Vec2> attractive_pair(const Circle& a, const Circle& b, double gap) {
  if (gap < 0.0) throw ConfigError("attractive_pair: requires a separated pair (gap >= 0)");
  const double share_a = b.radius / (a.radius + b.radius);
  const double share_b = a.radius / (a.radius + b.radius);
  const Vec2 dir = away_direction(a, b, nullptr);  // gap > 0 implies distinct centers
  return {dir * (-gap * share_a), dir * (gap * share_b)};
}

std::vector<std::vector<Vec2>> node_forces(const ProximityGraph& graph, const ForceConfig& cfg,
                                           std::vector<std::string>* warnings) {
  std::vector<std::vector<Vec2>> forces(graph.nodes.size());
  std::vector<bool> repulsed(graph.nodes.size(), false);
  for (const GraphEdge& e : graph.edges) {
    const Circle& ca = graph.nodes[e.a];
    const Circle& cb = graph.nodes[e.b];
    const double gap = pairwise_gap(ca, cb);
    if (gap < -cfg.repulse_min_depth) {
      const auto [fa, fb] = repulsive_pair(ca, cb, gap, warnings);
      forces[e.a].push_back(fa);
      forces[e.b].push_back(fb);
      repulsed[e.a] = repulsed[e.b] = true;
    }
  }
  for (const GraphEdge& e : graph.edges) {
    const Circle& ca = graph.nodes[e.a];
    const Circle& cb = graph.nodes[e.b];
    const double gap = pairwise_gap(ca, cb);
    if (gap > cfg.attract_min_gap && e.type == EdgeType::type1 && cfg.attract_enabled &&
        gap <= cfg.t_l) {
      const double weight = gap <= cfg.full_weight_range ? 1.0 : cfg.attract_weight;
      if (weight <= 0.0) continue;
      const auto [fa, fb] = attractive_pair(ca, cb, gap);
      if (!cfg.overlap_priority || !repulsed[e.a]) forces[e.a].push_back(fa * weight);
      if (!cfg.overlap_priority || !repulsed[e.b]) forces[e.b].push_back(fb * weight);
    }
  }
  return forces;
}

Vec2 combine(std::span<const Vec2> forces) {
  if (forces.empty()) return {0.0, 0.0};
  if (forces.size() == 1) return forces[0];

  // Anchor the frame to the largest force; ties go to the smaller angle so
  // the result does not depend on input order.
  std::size_t anchor = 0;
  double anchor_mag = norm(forces[0]);
  double anchor_ang = std::atan2(forces[0].y, forces[0].x);
  for (std::size_t i = 1; i < forces.size(); ++i) {
    const double mag = norm(forces[i]);
    const double ang = std::atan2(forces[i].y, forces[i].x);
    if (mag > anchor_mag || (mag == anchor_mag && ang < anchor_ang)) {
      anchor = i;
      anchor_mag = mag;
      anchor_ang = ang;
    }
  }
  if (anchor_mag == 0.0) return {0.0, 0.0};

  const Vec2 ux{forces[anchor].x / anchor_mag, forces[anchor].y / anchor_mag};
  const Vec2 uy{-ux.y, ux.x};

  double max_px = 0.0, min_px = 0.0, max_py = 0.0, min_py = 0.0;
  for (const Vec2& f : forces) {
    const double px = dot(f, ux);
    const double py = dot(f, uy);
    max_px = std::max(max_px, px);
    min_px = std::min(min_px, px);
    max_py = std::max(max_py, py);
    min_py = std::min(min_py, py);
  }

  const double rx = max_px + min_px;
  const double ry = max_py + min_py;
  return ux * rx + uy * ry;
}

}  // namespace dorling
