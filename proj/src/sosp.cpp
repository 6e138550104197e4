#include "dorling/sosp.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "dorling/errors.hpp"
#include "dorling/forces.hpp"

namespace dorling {

SospResult run_sosp(const std::vector<Circle>& circles, const AdjacencySet& adjacency,
                    const SospConfig& cfg) {
  if (cfg.damping <= 0.0 || cfg.epsilon <= 0.0 || cfg.scale.units_per_mm <= 0.0) {
    throw ConfigError("run_sosp: damping, epsilon and scale must be positive");
  }

  SospResult result;
  result.circles = circles;
  const std::size_t n = circles.size();
  if (n < 2) return result;

  const int max_sweeps =
      cfg.max_sweeps > 0 ? cfg.max_sweeps
                         : 4 * std::max(static_cast<int>(n), 10);
  const double move_eps = cfg.epsilon * cfg.scale.units_per_mm;

  // Adjacency looked up by node index pair.
  std::vector<std::vector<bool>> adjacent(n, std::vector<bool>(n, false));
  {
    std::map<std::string, int> idx;
    for (std::size_t i = 0; i < n; ++i) idx[circles[i].region_id] = static_cast<int>(i);
    for (const IdPair& pair : adjacency) {
      const auto a = idx.find(pair.first);
      const auto b = idx.find(pair.second);
      if (a == idx.end() || b == idx.end()) continue;
      adjacent[a->second][b->second] = adjacent[b->second][a->second] = true;
    }
  }

  std::vector<Circle>& cs = result.circles;
  for (int sweep = 1; sweep <= max_sweeps; ++sweep) {
    // Attraction runs at full strength for the early sweeps, then fades,
    // leaving the last third of the budget to pure overlap removal.
    const double fade_start = 0.55 * max_sweeps;
    const double fade_end = 0.75 * max_sweeps;
    double attract_scale = 1.0;
    if (sweep >= fade_end) attract_scale = 0.0;
    else if (sweep > fade_start) attract_scale = (fade_end - sweep) / (fade_end - fade_start);

    double max_move = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      // Overlap removal has priority: while the circle overlaps anything it
      // only repels, otherwise it is drawn toward its separated neighbors.
      Vec2 repulsion{0.0, 0.0};
      Vec2 attraction{0.0, 0.0};
      bool overlapped = false;
      // Sub-visible penetrations are left alone so the packing can rest.
      const double depth_floor = 0.005 * cfg.scale.units_per_mm;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        const double gap = pairwise_gap(cs[i], cs[j]);
        if (gap < -depth_floor) {
          repulsion = repulsion + repulsive_pair(cs[i], cs[j], gap).first;
          overlapped = true;
        } else if (gap > 0.0 && adjacent[i][j]) {
          attraction = attraction + attractive_pair(cs[i], cs[j], gap).first;
        }
      }
      // Once attraction has faded out, overlap removal takes strict priority
      // and runs undamped: the sequential updates undershoot pairwise anyway,
      // and full pushes let crowded clusters open up within the budget.
      Vec2 move;
      if (attract_scale > 0.0) {
        move = (repulsion + attraction * attract_scale) * cfg.damping;
      } else {
        move = overlapped ? repulsion : Vec2{0.0, 0.0};
      }
      const double len = norm(move);
      const double cap = cfg.max_step_mm * cfg.scale.units_per_mm;
      if (len > cap) move = move * (cap / len);
      cs[i].center = cs[i].center + move;  // local update, visible to later circles
      max_move = std::max(max_move, norm(move));
    }
    result.sweeps = sweep;
    if (max_move <= move_eps) break;
  }
  return result;
}

}  // namespace dorling
