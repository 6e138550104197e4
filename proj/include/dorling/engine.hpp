#ifndef DORLING_ENGINE_HPP
#define DORLING_ENGINE_HPP

#include <functional>
#include <utility>
#include <vector>

#include "dorling/beam.hpp"
#include "dorling/errors.hpp"
#include "dorling/forces.hpp"
#include "dorling/graph.hpp"

namespace dorling {

struct IterationTrace {
  int step = 0;                 // 1-based
  double max_force = 0.0;       // largest combined per-node force (graphic mm)
  double max_displacement = 0.0;
  bool attract_active = false;
};

struct EngineConfig {
  double epsilon = 1e-3;  // stop when the largest combined force falls below this
  int t_s = 0;            // max iterations; 0 = derive from the circle count
  int t_s_prime = 0;      // attraction cutoff step; 0 = derive
  GraphStrategy strategy = GraphStrategy::standard;
  double t_l_mm = std::numeric_limits<double>::infinity();  // long-edge cutoff
  bool attract_enabled = true;
  BeamParams beam;
  MapScale scale;  // map units per graphic mm; the solver runs in graphic mm
  // Target ratio of displacement to force magnitude kept by the elasticity
  // renormalization while attraction is active.
  double response_gain = 1.0;
  // Same ratio for the repulsion-only phase. Below 1 the remaining overlaps
  // shrink geometrically, so pairs settle at contact instead of being blown
  // past each other.
  double cleanup_gain = 0.9;
  // Fraction of the attraction phase over which attractive forces fade out
  // before the cutoff. Releasing the pulls gradually lets the standing
  // tug-of-war conflicts relax, so the repulsion-only phase starts from a
  // nearly contact-packed state instead of blasting deep overlaps apart.
  double release_fraction = 0.4;
  // Short-range attraction kept after the cutoff: pairs within this reach of
  // contact are still pulled shut, pairs inside the settle band are left
  // alone, and nodes that still overlap something are exempt from pulls.
  double contact_range_mm = 2.0;
  double contact_settle_mm = 0.07;
  // Pairs closer than this keep their full pull while the ramp fades the
  // far attraction.
  double hold_range_mm = 1.0;
  // Fraction of the anchor weight that springs back to the original centers
  // instead of the current ones; bleeds accumulated drift back out.
  double origin_pull = 0.07;
  // A pair counts as overlapping for the stop check when it penetrates
  // deeper than this (graphic mm).
  double overlap_tol_mm = 0.01;
  std::function<void(const IterationTrace&)> progress;
};

// t_s = 4n, t_s' = 2n with n clamped below at 10.
std::pair<int, int> default_steps(int num_circles);

struct RunResult {
  std::vector<Circle> circles;
  std::vector<IterationTrace> trace;
  bool stopped_by_epsilon = false;   // as opposed to hitting the step cap
  double final_attract_weight = 0.0; // attraction scale at the last step
};

// Carries the per-iteration trace recorded up to a solver failure.
struct EngineFailure : SolverError {
  EngineFailure(const std::string& msg, std::vector<IterationTrace> t)
      : SolverError(msg), trace(std::move(t)) {}
  std::vector<IterationTrace> trace;
};

// Iterative displacement: rebuild the proximity graph, convert conflicts to
// forces (attraction only until t_s'), combine them per node, solve the beam
// system, and move the circles, until the maximum combined force falls below
// epsilon or the step cap is reached. The first iteration runs at e0; later
// iterations rescale the elasticity from the first iteration's maximum
// displacement. Radii are never modified.
RunResult run(const std::vector<Circle>& circles, const AdjacencySet& adjacency,
              const EngineConfig& cfg);

// Largest combined per-node force for the given state, measured the same way
// the engine measures it (graphic mm). Used to audit the stop condition;
// attract_weight should be the terminating step's weight (RunResult carries
// it).
double max_combined_force(const std::vector<Circle>& circles, const AdjacencySet& adjacency,
                          const EngineConfig& cfg, double attract_weight);

}  // namespace dorling

#endif
