#ifndef DORLING_METRICS_HPP
#define DORLING_METRICS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dorling/adjacency.hpp"
#include "dorling/graph.hpp"

namespace dorling {

struct MetricsReport {
  int num_overlaps = 0;
  int rt_maintained = 0;
  int rt_total = 0;
  double rms_degrees = 0.0;
  double tdd = 0.0;  // map units
  int circle_count = 0;
  int edge_count = 0;
  int iterations_attract = 0;
  int iterations_total = 0;
  double wall_time_seconds = 0.0;

  // rt_total == 0 leaves the ratio undefined.
  std::optional<double> rt_ratio() const {
    if (rt_total == 0) return std::nullopt;
    return static_cast<double>(rt_maintained) / rt_total;
  }

  std::string to_key_value_text() const;
  std::string to_json() const;
};

// Count of overlapping pairs; tol < 0 selects the default numerical slack of
// 1e-9 * mean radius.
int num_overlaps(const std::vector<Circle>& circles, double tol = -1.0);

// (maintained, total): adjacent pairs whose final gap is at most tol_adj_mm
// (graphic) over all adjacent pairs.
std::pair<int, int> rt(const std::vector<Circle>& circles, const AdjacencySet& adjacency,
                       double tol_adj_mm, const MapScale& scale);

// Root mean square of the change in direction angle of every edge of the
// initial proximity graph, in degrees. Edges with coincident centers in either
// state are skipped with a warning.
double rms_direction(const std::vector<Circle>& before, const std::vector<Circle>& after,
                     const ProximityGraph& graph_before,
                     std::vector<std::string>* warnings = nullptr);

// Total displacement distance between aligned configurations, map units.
double tdd(const std::vector<Circle>& before, const std::vector<Circle>& after);

}  // namespace dorling

#endif
