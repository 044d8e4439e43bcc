#pragma once

#include <array>
#include <utility>
#include <vector>

#include "bubblelab/geometry.hpp"

namespace bubblelab {

/// Triangulation with the empty-circumcircle property. For all-collinear
/// input there is no triangulation; the result is the chain of consecutive
/// points along the line, flagged degenerate.
struct Triangulation {
  std::vector<std::array<int, 3>> triangles;        // ccw vertex index triples
  std::vector<std::pair<int, int>> edges;           // unique, first < second
  bool degenerate_collinear = false;
};

/// Incremental insertion (Bowyer-Watson) with a strict in-circumcircle test;
/// exact co-circular ties count as outside, so degenerate rings triangulate
/// to some valid Delaunay triangulation.
Triangulation delaunay(const PointSet& ps, const Tolerance& tol = {});

/// Positive when p lies strictly inside the circumcircle of the ccw triangle
/// (a, b, c); near-zero determinants (relative to the term magnitudes) are
/// treated as co-circular and return 0.
double incircle_sign(Point a, Point b, Point c, Point p);

}  // namespace bubblelab
