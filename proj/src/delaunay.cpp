#include "bubblelab/delaunay.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

namespace bubblelab {

namespace {

double orient(Point a, Point b, Point c) { return cross(b - a, c - a); }

struct Tri {
  std::array<int, 3> v;
  bool alive = true;
};

}  // namespace

double incircle_sign(Point a, Point b, Point c, Point p) {
  const double adx = a.x - p.x, ady = a.y - p.y;
  const double bdx = b.x - p.x, bdy = b.y - p.y;
  const double cdx = c.x - p.x, cdy = c.y - p.y;
  const double ad = adx * adx + ady * ady;
  const double bd = bdx * bdx + bdy * bdy;
  const double cd = cdx * cdx + cdy * cdy;
  const double det = adx * (bdy * cd - bd * cdy) - ady * (bdx * cd - bd * cdx) +
                     ad * (bdx * cdy - bdy * cdx);
  const double perm = std::abs(adx) * (std::abs(bdy) * cd + bd * std::abs(cdy)) +
                      std::abs(ady) * (std::abs(bdx) * cd + bd * std::abs(cdx)) +
                      ad * (std::abs(bdx) * std::abs(cdy) + std::abs(bdy) * std::abs(cdx));
  if (std::abs(det) <= 1e-12 * perm) return 0.0;
  return det;
}

Triangulation delaunay(const PointSet& ps, const Tolerance&) {
  Triangulation out;
  const int n = int(ps.size());
  if (n <= 1) {
    out.degenerate_collinear = (n <= 1);
    return out;
  }

  // Collinearity check against the segment between the two lexicographic
  // extremes; chains are returned sorted along that segment.
  int lo = 0, hi = 0;
  auto lex_less = [&](int a, int b) {
    return ps[a].x < ps[b].x || (ps[a].x == ps[b].x && ps[a].y < ps[b].y);
  };
  for (int i = 1; i < n; ++i) {
    if (lex_less(i, lo)) lo = i;
    if (lex_less(hi, i)) hi = i;
  }
  const Point axis = ps[hi] - ps[lo];
  const double axis_len = norm(axis);
  bool all_collinear = true;
  for (int i = 0; i < n && all_collinear; ++i)
    if (std::abs(cross(axis, ps[i] - ps[lo])) > 1e-12 * axis_len * std::max(axis_len, 1.0))
      all_collinear = false;

  if (all_collinear || n == 2) {
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      return dot(axis, ps[a] - ps[lo]) < dot(axis, ps[b] - ps[lo]);
    });
    for (int i = 0; i + 1 < n; ++i)
      out.edges.emplace_back(std::min(order[i], order[i + 1]),
                             std::max(order[i], order[i + 1]));
    out.degenerate_collinear = true;
    return out;
  }

  // Bowyer-Watson over the input points plus three far-away anchors.
  double xlo = ps[0].x, xhi = ps[0].x, ylo = ps[0].y, yhi = ps[0].y;
  for (const Point& p : ps.points()) {
    xlo = std::min(xlo, p.x);
    xhi = std::max(xhi, p.x);
    ylo = std::min(ylo, p.y);
    yhi = std::max(yhi, p.y);
  }
  const double span = std::max({xhi - xlo, yhi - ylo, 1e-9});
  const Point mid{0.5 * (xlo + xhi), 0.5 * (ylo + yhi)};
  const double big = 256.0 * span;
  std::vector<Point> v(ps.points().begin(), ps.points().end());
  v.push_back({mid.x - 2.0 * big, mid.y - big});
  v.push_back({mid.x + 2.0 * big, mid.y - big});
  v.push_back({mid.x, mid.y + 2.0 * big});

  std::vector<Tri> tris;
  {
    std::array<int, 3> super = {n, n + 1, n + 2};
    if (orient(v[super[0]], v[super[1]], v[super[2]]) < 0.0) std::swap(super[1], super[2]);
    tris.push_back({super, true});
  }

  auto contains = [&](const Tri& t, Point p) {
    const double eps = 1e-12 * big * big;
    return orient(v[t.v[0]], v[t.v[1]], p) >= -eps &&
           orient(v[t.v[1]], v[t.v[2]], p) >= -eps &&
           orient(v[t.v[2]], v[t.v[0]], p) >= -eps;
  };

  for (int pi = 0; pi < n; ++pi) {
    const Point p = v[pi];
    std::vector<int> bad;
    for (int ti = 0; ti < int(tris.size()); ++ti)
      if (tris[ti].alive &&
          incircle_sign(v[tris[ti].v[0]], v[tris[ti].v[1]], v[tris[ti].v[2]], p) > 0.0)
        bad.push_back(ti);

    auto cavity_boundary = [&](const std::vector<int>& cavity) {
      // Directed edges of cavity triangles whose reverse is not in the cavity.
      std::set<std::pair<int, int>> directed;
      for (int ti : cavity)
        for (int e = 0; e < 3; ++e)
          directed.insert({tris[ti].v[e], tris[ti].v[(e + 1) % 3]});
      std::vector<std::pair<int, int>> boundary;
      for (const auto& de : directed)
        if (!directed.count({de.second, de.first})) boundary.push_back(de);
      return boundary;
    };

    auto fan_is_valid = [&](const std::vector<std::pair<int, int>>& boundary) {
      for (const auto& [a, b] : boundary)
        if (orient(p, v[a], v[b]) <= 0.0) return false;
      return true;
    };

    std::vector<std::pair<int, int>> boundary;
    bool use_fallback = bad.empty();
    if (!use_fallback) {
      boundary = cavity_boundary(bad);
      use_fallback = !fan_is_valid(boundary);
    }
    if (use_fallback) {
      // Co-circular tie (or a cavity the strict test could not shape): insert
      // into the containing triangle(s) instead; two when p is on an edge.
      bad.clear();
      for (int ti = 0; ti < int(tris.size()); ++ti)
        if (tris[ti].alive && contains(tris[ti], p)) {
          bad.push_back(ti);
          if (bad.size() == 2) break;
        }
      boundary = cavity_boundary(bad);
      // Drop boundary edges collinear with p (p lies on them).
      std::erase_if(boundary, [&](const std::pair<int, int>& e) {
        return orient(p, v[e.first], v[e.second]) <= 0.0;
      });
    }

    for (int ti : bad) tris[ti].alive = false;
    for (const auto& [a, b] : boundary) tris.push_back({{pi, a, b}, true});
  }

  std::set<std::pair<int, int>> edge_set;
  for (const Tri& t : tris) {
    if (!t.alive) continue;
    if (t.v[0] >= n || t.v[1] >= n || t.v[2] >= n) continue;
    out.triangles.push_back(t.v);
    for (int e = 0; e < 3; ++e) {
      const int a = t.v[e], b = t.v[(e + 1) % 3];
      edge_set.insert({std::min(a, b), std::max(a, b)});
    }
  }
  out.edges.assign(edge_set.begin(), edge_set.end());
  return out;
}

}  // namespace bubblelab
