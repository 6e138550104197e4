#include "dorling/engine.hpp"

#include <algorithm>
#include <cmath>

#include "dorling/errors.hpp"

namespace dorling {

std::pair<int, int> default_steps(int num_circles) {
  const int n = std::max(num_circles, 10);
  return {4 * n, 2 * n};
}

namespace {

std::vector<Circle> to_graphic_frame(const std::vector<Circle>& circles, const MapScale& scale) {
  std::vector<Circle> out = circles;
  for (Circle& c : out) {
    c.center = {scale.to_mm(c.center.x), scale.to_mm(c.center.y)};
    c.original_center = {scale.to_mm(c.original_center.x), scale.to_mm(c.original_center.y)};
    c.radius = scale.to_mm(c.radius);
  }
  return out;
}

// 1 for most of the attraction phase, fading linearly to 0 over its final
// stretch.
double attraction_weight(int step, int t_s_prime, double release_fraction) {
  const int release_steps = std::max(1, static_cast<int>(release_fraction * t_s_prime));
  const int release_start = t_s_prime - release_steps;
  if (step <= release_start) return 1.0;
  if (step > t_s_prime) return 0.0;
  return static_cast<double>(t_s_prime - step) / release_steps;
}

bool has_overlap(const std::vector<Circle>& circles, double tol) {
  for (std::size_t i = 0; i < circles.size(); ++i) {
    for (std::size_t j = i + 1; j < circles.size(); ++j) {
      if (pairwise_gap(circles[i], circles[j]) < -tol) return true;
    }
  }
  return false;
}

}  // namespace

RunResult run(const std::vector<Circle>& circles, const AdjacencySet& adjacency,
              const EngineConfig& cfg) {
  if (cfg.epsilon <= 0.0 || cfg.scale.units_per_mm <= 0.0 || cfg.response_gain <= 0.0 ||
      cfg.cleanup_gain <= 0.0) {
    throw ConfigError("engine: epsilon, scale and gains must be positive");
  }
  auto [t_s, t_s_prime] = cfg.t_s > 0 ? std::make_pair(cfg.t_s, cfg.t_s_prime)
                                      : default_steps(static_cast<int>(circles.size()));
  if (t_s_prime <= 0 || t_s_prime > t_s) {
    throw ConfigError("engine: need 0 < t_s' <= t_s");
  }

  RunResult result;
  if (circles.empty()) return result;

  // The force laws and the beam system are scale free except for the fixed
  // first-iteration elasticity e0, which is calibrated for page-sized
  // coordinates. The whole loop therefore runs in graphic millimeters.
  std::vector<Circle> work = to_graphic_frame(circles, cfg.scale);

  BeamParams params = cfg.beam;
  params.elasticity_e = params.e0;

  for (int step = 1; step <= t_s; ++step) {
    const ProximityGraph graph = build(cfg.strategy, work, adjacency);
    const bool attract = cfg.attract_enabled && step <= t_s_prime;

    ForceConfig fcfg;
    fcfg.attract_enabled = cfg.attract_enabled;
    if (attract) {
      fcfg.t_l = cfg.t_l_mm;
      fcfg.attract_weight = attraction_weight(step, t_s_prime, cfg.release_fraction);
      fcfg.full_weight_range = std::min(cfg.t_l_mm, cfg.hold_range_mm);
    } else {
      // Contact-packing cleanup: push overlaps out, keep near-contact pairs
      // pulled shut, and leave the dead band around tangency alone so the
      // packing can come to rest. The pull reach shrinks over the phase so
      // unsatisfiable pulls stop churning before the step budget runs out.
      double progress = t_s > t_s_prime
                            ? static_cast<double>(step - t_s_prime) / (t_s - t_s_prime)
                            : 1.0;
      progress = std::min(1.0, progress / 0.8);  // pulls are gone for the last fifth
      const double reach = progress >= 1.0
                               ? 0.0
                               : cfg.contact_settle_mm + (cfg.contact_range_mm -
                                                          cfg.contact_settle_mm) *
                                                             (1.0 - progress);
      fcfg.t_l = std::min(cfg.t_l_mm, reach);
      fcfg.attract_min_gap = cfg.contact_settle_mm;
      // Push until safely inside the overlap tolerance, not merely onto it.
      fcfg.repulse_min_depth = 0.5 * cfg.overlap_tol_mm;
      fcfg.overlap_priority = true;
    }
    result.final_attract_weight = attract ? fcfg.attract_weight : 0.0;
    const auto per_node = node_forces(graph, fcfg);

    std::vector<Vec2> combined(per_node.size());
    double max_force = 0.0;
    for (std::size_t i = 0; i < per_node.size(); ++i) {
      combined[i] = combine(per_node[i]);
      max_force = std::max(max_force, norm(combined[i]));
    }

    // The force threshold stands in for "all constraints satisfied"; overlap
    // avoidance is a hard constraint, so a state with any remaining overlap
    // does not qualify no matter how small the forces are.
    if (max_force <= cfg.epsilon && !has_overlap(work, cfg.overlap_tol_mm)) {
      result.trace.push_back({step, max_force, 0.0, attract});
      if (cfg.progress) cfg.progress(result.trace.back());
      result.stopped_by_epsilon = true;
      break;
    }

    const GlobalStiffness system = assemble_global(graph, params);
    std::vector<NodeLoad> loads(combined.size());
    for (std::size_t i = 0; i < combined.size(); ++i) {
      loads[i] = {combined[i].x, combined[i].y, 0.0};
    }
    // During assembly a small share of the anchor acts as springs to the
    // original positions rather than the current ones, so accumulated drift
    // bleeds back out and the total displacement stays tight. The cleanup
    // phase runs without the bias so overlaps can resolve exactly.
    if (attract) {
      // Fades together with the far attraction so the final contact assembly
      // is unbiased.
      const double pull = cfg.origin_pull * system.lambda * fcfg.attract_weight;
      for (std::size_t i = 0; i < work.size(); ++i) {
        loads[i].fx += pull * (work[i].original_center.x - work[i].center.x);
        loads[i].fy += pull * (work[i].original_center.y - work[i].center.y);
      }
    }

    std::vector<NodeDisplacement> disp;
    try {
      disp = solve_displacements(system, loads);
    } catch (const SolverError& e) {
      throw EngineFailure("solver failed at iteration " + std::to_string(step) + ": " + e.what(),
                          result.trace);
    }

    // The rigid translation mode carries no information about conflicts;
    // strip it so the layout does not creep across the page over the run.
    double mean_dx = 0.0, mean_dy = 0.0;
    for (const NodeDisplacement& d : disp) {
      mean_dx += d.dx;
      mean_dy += d.dy;
    }
    mean_dx /= static_cast<double>(disp.size());
    mean_dy /= static_cast<double>(disp.size());

    double max_disp = 0.0;
    for (std::size_t i = 0; i < work.size(); ++i) {
      const double dx = disp[i].dx - mean_dx;
      const double dy = disp[i].dy - mean_dy;
      work[i].center.x += dx;
      work[i].center.y += dy;
      max_disp = std::max(max_disp, std::hypot(dx, dy));
    }

    result.trace.push_back({step, max_force, max_disp, attract});
    if (cfg.progress) cfg.progress(result.trace.back());

    // Renormalize the elasticity from the measured response so the next
    // displacement magnitudes track the force magnitudes; the arbitrary
    // starting e0 cancels after the first iteration.
    const bool attract_next = cfg.attract_enabled && step + 1 <= t_s_prime;
    const double gain = attract_next ? cfg.response_gain : cfg.cleanup_gain;
    if (max_disp > 0.0) params.elasticity_e *= max_disp / (max_force * gain);
  }

  // Back to map units; radii and reference centers are taken verbatim from
  // the input so they round-trip exactly.
  result.circles = circles;
  for (std::size_t i = 0; i < work.size(); ++i) {
    result.circles[i].center = {cfg.scale.to_units(work[i].center.x),
                                cfg.scale.to_units(work[i].center.y)};
  }
  return result;
}

double max_combined_force(const std::vector<Circle>& circles, const AdjacencySet& adjacency,
                          const EngineConfig& cfg, double attract_weight) {
  if (circles.empty()) return 0.0;
  const std::vector<Circle> work = to_graphic_frame(circles, cfg.scale);
  const ProximityGraph graph = build(cfg.strategy, work, adjacency);
  ForceConfig fcfg;
  fcfg.attract_enabled = cfg.attract_enabled;
  if (attract_weight > 0.0) {
    fcfg.t_l = cfg.t_l_mm;
    fcfg.attract_weight = attract_weight;
    fcfg.full_weight_range = std::min(cfg.t_l_mm, cfg.hold_range_mm);
  } else {
    fcfg.t_l = std::min(cfg.t_l_mm, cfg.contact_settle_mm);
    fcfg.attract_min_gap = cfg.contact_settle_mm;
    fcfg.repulse_min_depth = 0.5 * cfg.overlap_tol_mm;
    fcfg.overlap_priority = true;
  }
  const auto per_node = node_forces(graph, fcfg);
  double max_force = 0.0;
  for (const auto& list : per_node) max_force = std::max(max_force, norm(combine(list)));
  return max_force;
}

}  // namespace dorling
