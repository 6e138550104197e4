#ifndef DORLING_SOSP_HPP
#define DORLING_SOSP_HPP

#include <vector>

#include "dorling/adjacency.hpp"
#include "dorling/circles.hpp"

namespace dorling {

// Reconstruction of the classic one-by-one displacement scheme: circles are
// visited in a fixed order, each sums repulsion from its current overlaps and
// attraction toward separated region-adjacent circles, and moves immediately.
// The published description is qualitative, so damping and the sweep budget
// are reconstruction choices exposed here.
struct SospConfig {
  double damping = 0.5;
  double max_step_mm = 2.0;  // per-move displacement cap; keeps the sweep stable
  double epsilon = 1e-3;  // graphic mm; a sweep that moves nothing more stops the run
  int max_sweeps = 0;     // 0 = 4 * max(n, 10)
  MapScale scale;
};

struct SospResult {
  std::vector<Circle> circles;
  int sweeps = 0;
};

SospResult run_sosp(const std::vector<Circle>& circles, const AdjacencySet& adjacency,
                    const SospConfig& cfg);

}  // namespace dorling

#endif
