#ifndef DORLING_CIRCLES_HPP
#define DORLING_CIRCLES_HPP

#include <string>
#include <vector>

#include "dorling/region.hpp"

namespace dorling {

// Circular proxy for a region. original_center is fixed at creation and is
// the reference for displacement metrics; only center moves afterwards.
struct Circle {
  std::string region_id;
  Point center;
  double radius = 0.0;
  Point original_center;
};

// Which pair population the 20%-closest average is taken over.
enum class ClosestPairsMode {
  all_pairs,          // smallest 20% of all unordered pair gaps
  nearest_neighbors,  // smallest 20% of per-circle nearest-neighbor gaps
};

struct RadiusSearchConfig {
  double r_min_mm = 0.1;        // minimum radius (graphic mm)
  double r_max_init_mm = 50.0;  // initial upper bound for the radius search
  double t_r_mm = 2.0;          // target average gap for the closest pairs
  double stop_tol_mm = 0.01;
  int max_iters = 100;
  ClosestPairsMode pairs_mode = ClosestPairsMode::all_pairs;
};

// Surface gap: center distance minus radius sum. Negative iff the circles
// overlap, zero iff tangent.
double pairwise_gap(const Circle& a, const Circle& b);

// sqrt((v - v_min)/(v_max - v_min)) * (r_max - r_min) + r_min.
// Degenerate uniform data (v_max == v_min) yields (r_min + r_max)/2.
double radius_for_value(double v, double v_min, double v_max, double r_min, double r_max);

// Average gap over the ceil(20%) closest circle pairs.
double ave_min_d_20(const std::vector<Circle>& circles,
                    ClosestPairsMode mode = ClosestPairsMode::all_pairs);

struct InitResult {
  std::vector<Circle> circles;
  double r_max_mm = 0.0;   // value the search settled on
  bool converged = false;  // |ave_min_d_20 - t_r| <= stop_tol reached
  std::vector<std::string> warnings;
};

// Places one circle per region at its centroid and bisects the maximum radius
// until the average closest-pair gap meets the target within stop_tol.
InitResult generate_initial_circles(const std::vector<Region>& regions,
                                    const RadiusSearchConfig& cfg,
                                    const MapScale& scale);

}  // namespace dorling

#endif
