#include "dorling/graph.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <sstream>

#include "dorling/errors.hpp"
#include "dorling/format.hpp"

namespace dorling {

namespace {

struct DisjointSet {
  std::vector<int> parent;
  explicit DisjointSet(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
};

std::map<std::string, int> index_by_id(const std::vector<Circle>& circles) {
  std::map<std::string, int> idx;
  for (std::size_t i = 0; i < circles.size(); ++i) {
    idx[circles[i].region_id] = static_cast<int>(i);
  }
  return idx;
}

void sort_edges(std::vector<GraphEdge>& edges) {
  std::sort(edges.begin(), edges.end(), [](const GraphEdge& x, const GraphEdge& y) {
    return x.a != y.a ? x.a < y.a : x.b < y.b;
  });
}

// Deterministic tie-break key for a candidate edge: gap first, then the
// lexicographically ordered id pair.
struct EdgeKey {
  double gap;
  const std::string* lo;
  const std::string* hi;
  bool operator<(const EdgeKey& o) const {
    if (gap != o.gap) return gap < o.gap;
    if (*lo != *o.lo) return *lo < *o.lo;
    return *hi < *o.hi;
  }
};

EdgeKey edge_key(const std::vector<Circle>& circles, int i, int j, double gap) {
  const std::string* a = &circles[i].region_id;
  const std::string* b = &circles[j].region_id;
  if (*b < *a) std::swap(a, b);
  return {gap, a, b};
}

}  // namespace

ProximityGraph build_graph(const std::vector<Circle>& circles, const AdjacencySet& adjacency) {
  const int n = static_cast<int>(circles.size());
  if (n < 1) throw ConfigError("build_graph: need at least 1 circle");

  ProximityGraph g;
  g.strategy = GraphStrategy::standard;
  g.nodes = circles;

  const auto idx = index_by_id(circles);
  std::vector<std::vector<bool>> present(n, std::vector<bool>(n, false));
  DisjointSet components(n);

  const auto add_edge = [&](int i, int j, EdgeType type) {
    if (j < i) std::swap(i, j);
    g.edges.push_back({i, j, type, pairwise_gap(circles[i], circles[j])});
    present[i][j] = true;
    components.unite(i, j);
  };

  // Region-adjacent pairs.
  for (const IdPair& pair : adjacency) {
    const auto ia = idx.find(pair.first);
    const auto ib = idx.find(pair.second);
    if (ia == idx.end() || ib == idx.end()) {
      throw ConfigError("build_graph: adjacency references unknown region '" +
                        (ia == idx.end() ? pair.first : pair.second) + "'");
    }
    add_edge(ia->second, ib->second, EdgeType::type1);
  }

  // Overlapping pairs not already covered. Tangency is not overlap.
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (!present[i][j] && pairwise_gap(circles[i], circles[j]) < 0.0) {
        add_edge(i, j, EdgeType::type2);
      }
    }
  }

  // Bridge components with the globally minimum-gap cross pair until the
  // graph is one group.
  while (true) {
    int best_i = -1, best_j = -1;
    EdgeKey best{std::numeric_limits<double>::infinity(), nullptr, nullptr};
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (components.find(i) == components.find(j)) continue;
        const EdgeKey key = edge_key(circles, i, j, pairwise_gap(circles[i], circles[j]));
        if (best_i < 0 || key < best) {
          best = key;
          best_i = i;
          best_j = j;
        }
      }
    }
    if (best_i < 0) break;
    add_edge(best_i, best_j, EdgeType::type2);
  }

  sort_edges(g.edges);
  return g;
}

ProximityGraph build_mst_graph(const std::vector<Circle>& circles, const AdjacencySet& adjacency) {
  const int n = static_cast<int>(circles.size());
  if (n < 2) throw ConfigError("build_mst_graph: need at least 2 circles");

  ProximityGraph g;
  g.strategy = GraphStrategy::mst;
  g.nodes = circles;

  std::vector<std::vector<bool>> present(n, std::vector<bool>(n, false));

  // Prim over the complete gap-weighted graph.
  std::vector<bool> in_tree(n, false);
  in_tree[0] = true;
  for (int added = 1; added < n; ++added) {
    int best_i = -1, best_j = -1;
    EdgeKey best{std::numeric_limits<double>::infinity(), nullptr, nullptr};
    for (int i = 0; i < n; ++i) {
      if (!in_tree[i]) continue;
      for (int j = 0; j < n; ++j) {
        if (in_tree[j]) continue;
        const EdgeKey key = edge_key(circles, i, j, pairwise_gap(circles[i], circles[j]));
        if (best_i < 0 || key < best) {
          best = key;
          best_i = i;
          best_j = j;
        }
      }
    }
    in_tree[best_j] = true;
    const int a = std::min(best_i, best_j);
    const int b = std::max(best_i, best_j);
    const bool adjacent =
        adjacency.count(make_id_pair(circles[a].region_id, circles[b].region_id)) > 0;
    g.edges.push_back({a, b, adjacent ? EdgeType::type1 : EdgeType::type2,
                       pairwise_gap(circles[a], circles[b])});
    present[a][b] = true;
  }

  // Overlaps must always be covered.
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double gap = pairwise_gap(circles[i], circles[j]);
      if (!present[i][j] && gap < 0.0) {
        const bool adjacent =
            adjacency.count(make_id_pair(circles[i].region_id, circles[j].region_id)) > 0;
        g.edges.push_back({i, j, adjacent ? EdgeType::type1 : EdgeType::type2, gap});
        present[i][j] = true;
      }
    }
  }

  sort_edges(g.edges);
  return g;
}

ProximityGraph build(GraphStrategy strategy, const std::vector<Circle>& circles,
                     const AdjacencySet& adjacency) {
  return strategy == GraphStrategy::mst ? build_mst_graph(circles, adjacency)
                                        : build_graph(circles, adjacency);
}

ProximityGraph refresh(const ProximityGraph& graph, const std::vector<Circle>& circles,
                       const AdjacencySet& adjacency) {
  return build(graph.strategy, circles, adjacency);
}

bool is_connected(const ProximityGraph& graph) {
  const int n = static_cast<int>(graph.nodes.size());
  if (n <= 1) return true;
  DisjointSet components(n);
  int merges = 0;
  for (const GraphEdge& e : graph.edges) {
    if (components.unite(e.a, e.b)) ++merges;
  }
  return merges == n - 1;
}

std::string graph_to_geojson(const ProximityGraph& graph) {
  std::ostringstream out;
  out << "{\"type\":\"FeatureCollection\",\"features\":[";
  for (std::size_t k = 0; k < graph.edges.size(); ++k) {
    const GraphEdge& e = graph.edges[k];
    const Circle& ca = graph.nodes[e.a];
    const Circle& cb = graph.nodes[e.b];
    if (k > 0) out << ",";
    out << "{\"type\":\"Feature\",\"properties\":{\"a\":\"" << ca.region_id << "\",\"b\":\""
        << cb.region_id << "\",\"edge_type\":" << (e.type == EdgeType::type1 ? 1 : 2)
        << ",\"length\":" << fmt_double(e.length) << "},\"geometry\":{\"type\":\"LineString\","
        << "\"coordinates\":[[" << fmt_double(ca.center.x) << "," << fmt_double(ca.center.y)
        << "],[" << fmt_double(cb.center.x) << "," << fmt_double(cb.center.y) << "]]}}";
  }
  out << "]}";
  return out.str();
}

}  // namespace dorling
