#ifndef DORLING_ADJACENCY_HPP
#define DORLING_ADJACENCY_HPP

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "dorling/region.hpp"

namespace dorling {

// Unordered region-id pair, stored with the lexicographically smaller id first.
using IdPair = std::pair<std::string, std::string>;
using AdjacencySet = std::set<IdPair>;

inline IdPair make_id_pair(std::string a, std::string b) {
  if (b < a) std::swap(a, b);
  return {std::move(a), std::move(b)};
}

// Rook adjacency: two regions are adjacent iff they share a boundary segment
// of positive length after snapping coordinates within snap_tol. Touching in
// a single point does not count.
AdjacencySet adjacency_pairs(const std::vector<Region>& regions, double snap_tol);

// 1e-9 of the dataset bounding-box diagonal.
double default_snap_tol(const std::vector<Region>& regions);

}  // namespace dorling

#endif
