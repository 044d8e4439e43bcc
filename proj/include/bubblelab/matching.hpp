#pragma once

#include <utility>
#include <vector>

namespace bubblelab {

struct Matching {
  std::vector<std::pair<int, int>> pairs;  // disjoint matched vertex pairs
  std::vector<int> unmatched;
};

/// Maximum-cardinality matching on a general undirected graph (blossom
/// contraction handled). Vertices are 0..num_vertices-1.
Matching maximum_matching(int num_vertices, const std::vector<std::pair<int, int>>& edges);

}  // namespace bubblelab
