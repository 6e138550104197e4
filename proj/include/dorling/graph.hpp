#ifndef DORLING_GRAPH_HPP
#define DORLING_GRAPH_HPP

#include <string>
#include <vector>

#include "dorling/adjacency.hpp"
#include "dorling/circles.hpp"

namespace dorling {

// Type 1 edges connect circles whose regions are adjacent; Type 2 edges cover
// overlaps and connectivity bridges between non-adjacent regions. Only Type 1
// edges may attract.
enum class EdgeType { type1, type2 };

struct GraphEdge {
  int a = 0;  // node indices, a < b
  int b = 0;
  EdgeType type = EdgeType::type2;
  double length = 0.0;  // surface gap at build time
};

enum class GraphStrategy {
  standard,  // adjacency edges + overlap edges + minimum bridges
  mst,       // gap-weighted minimum spanning tree + overlap edges
};

// Node m is the circle nodes[m]; edges are sorted by (a, b) and hold at most
// one entry per unordered pair. The graph is a snapshot: it copies the
// circles it was built from and is never mutated, refreshing produces a new
// graph.
struct ProximityGraph {
  GraphStrategy strategy = GraphStrategy::standard;
  std::vector<Circle> nodes;
  std::vector<GraphEdge> edges;
};

// One edge per region-adjacent pair (Type 1), one per overlapping pair not
// already covered (Type 2), then minimum-gap bridges between components until
// the graph is connected (Type 2). Bridge ties break on (gap, smaller id,
// smaller id).
ProximityGraph build_graph(const std::vector<Circle>& circles, const AdjacencySet& adjacency);

// Minimum spanning tree over the complete gap-weighted graph, plus an edge
// for every overlapping pair not in the tree. Edge types still reflect region
// adjacency.
ProximityGraph build_mst_graph(const std::vector<Circle>& circles, const AdjacencySet& adjacency);

ProximityGraph build(GraphStrategy strategy, const std::vector<Circle>& circles,
                     const AdjacencySet& adjacency);

// Rebuild from scratch on the current circle positions.
ProximityGraph refresh(const ProximityGraph& graph, const std::vector<Circle>& circles,
                       const AdjacencySet& adjacency);

bool is_connected(const ProximityGraph& graph);

// Debug dump: one LineString feature per edge.
std::string graph_to_geojson(const ProximityGraph& graph);

}  // namespace dorling

#endif
