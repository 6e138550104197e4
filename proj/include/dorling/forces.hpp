#ifndef DORLING_FORCES_HPP
#define DORLING_FORCES_HPP

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dorling/graph.hpp"

namespace dorling {

// Force magnitudes are displacement demands measured in the same units as the
// circle coordinates.
struct ForceConfig {
  // Edges longer than this do not attract ("long edge" cutoff). Same units as
  // the circle coordinates; infinity disables the restriction.
  double t_l = std::numeric_limits<double>::infinity();
  bool attract_enabled = true;
  // Pairs closer than this are not attracted. Zero by default; the engine
  // widens it during cleanup so settled contacts stop exchanging forces.
  double attract_min_gap = 0.0;
  // Overlaps shallower than this are not repulsed. Zero by default; the
  // engine's cleanup phase sets it to the sub-visible overlap tolerance so
  // contacts do not flicker across the tangency line.
  double repulse_min_depth = 0.0;
  // Scale applied to attractive magnitudes; the engine fades this toward the
  // cutoff step so the standing tug-of-war conflicts relax before attraction
  // disappears entirely. Pairs within full_weight_range keep full pull.
  double attract_weight = 1.0;
  double full_weight_range = 0.0;
  // Overlap resolution takes precedence: a node that is being repulsed
  // receives no attractive contributions this round. Off by default, enabled
  // by the engine's cleanup phase.
  bool overlap_priority = false;
};

// Repulsion for an overlapping pair (gap < 0): each circle is pushed away
// along the center line, the split is R_other/(R_a + R_b) so the magnitudes
// sum to |gap| and the larger circle moves less. Coincident centers are
// perturbed along +x and reported through `warnings`.
std::pair<Vec2, Vec2> repulsive_pair(const Circle& a, const Circle& b, double gap,
                                     std::vector<std::string>* warnings = nullptr);

// Attraction for a separated pair (gap > 0): mirrored toward each other with
// the same radius split, magnitudes summing to gap.
std::pair<Vec2, Vec2> attractive_pair(const Circle& a, const Circle& b, double gap);

// Per-node force contributions from the graph edges: every overlapping edge
// repels; separated Type 1 edges attract while enabled and not longer than
// t_l. Separated Type 2 edges contribute nothing.
std::vector<std::vector<Vec2>> node_forces(const ProximityGraph& graph, const ForceConfig& cfg,
                                           std::vector<std::string>* warnings = nullptr);

// Resolves several forces on one node: a local frame is anchored to the
// largest force, every force is decomposed into it, and only the extreme
// positive and negative components on each local axis are kept. Duplicated
// directions therefore do not accumulate.
Vec2 combine(std::span<const Vec2> forces);

}  // namespace dorling

#endif
