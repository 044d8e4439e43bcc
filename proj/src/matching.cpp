#include "bubblelab/matching.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/max_cardinality_matching.hpp>

#include "bubblelab/errors.hpp"

namespace bubblelab {

Matching maximum_matching(int num_vertices, const std::vector<std::pair<int, int>>& edges) {
  if (num_vertices < 0) throw BadSpec("maximum_matching: negative vertex count");
  using Graph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  Graph g(num_vertices);
  for (const auto& [a, b] : edges) {
    if (a < 0 || b < 0 || a >= num_vertices || b >= num_vertices)
      throw BadSpec("maximum_matching: edge endpoint out of range");
    if (a != b) boost::add_edge(a, b, g);
  }
  std::vector<boost::graph_traits<Graph>::vertex_descriptor> mate(num_vertices);
  const bool ok = boost::checked_edmonds_maximum_cardinality_matching(g, &mate[0]);
  if (!ok) throw NoConvergence("maximum_matching: matching verification failed");

  Matching m;
  const auto null_v = boost::graph_traits<Graph>::null_vertex();
  for (int i = 0; i < num_vertices; ++i) {
    if (mate[i] == null_v) {
      m.unmatched.push_back(i);
    } else if (int(mate[i]) > i) {
      m.pairs.emplace_back(i, int(mate[i]));
    }
  }
  return m;
}

}  // namespace bubblelab
