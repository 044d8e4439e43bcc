#include "bubblelab/geometry.hpp"

#include <algorithm>
#include <numeric>

namespace bubblelab {

std::string to_string(PointClass c) {
  switch (c) {
    case PointClass::Inside: return "inside";
    case PointClass::OnBoundary: return "on_boundary";
    case PointClass::Outside: return "outside";
  }
  return "?";
}

std::string to_string(DiskRelation r) {
  switch (r) {
    case DiskRelation::Disjoint: return "disjoint";
    case DiskRelation::Tangent: return "tangent";
    case DiskRelation::Overlapping: return "overlapping";
  }
  return "?";
}

std::string to_string(StructureKind k) {
  switch (k) {
    case StructureKind::None: return "none";
    case StructureKind::Collinear: return "collinear";
    case StructureKind::Gadget: return "gadget";
    case StructureKind::Chain: return "chain";
    case StructureKind::Grid: return "grid";
  }
  return "?";
}

StructureKind structure_kind_from_string(const std::string& s) {
  if (s == "none") return StructureKind::None;
  if (s == "collinear") return StructureKind::Collinear;
  if (s == "gadget") return StructureKind::Gadget;
  if (s == "chain") return StructureKind::Chain;
  if (s == "grid") return StructureKind::Grid;
  throw BadSpec("unknown structure kind: " + s);
}

PointSet::PointSet(std::vector<Point> pts, std::vector<PointLabel> labels,
                   StructureInfo structure)
    : pts_(std::move(pts)), labels_(std::move(labels)), structure_(std::move(structure)) {
  for (std::size_t i = 0; i < pts_.size(); ++i)
    if (!is_finite(pts_[i]))
      throw BadSpec("PointSet: non-finite coordinate at index " + std::to_string(i));
  if (!labels_.empty() && labels_.size() != pts_.size())
    throw BadSpec("PointSet: label count does not match point count");

  // Duplicate scan via an x-sorted sweep: any two points within 1e-12 of each
  // other are also within 1e-12 in x, so only a narrow window needs checking.
  constexpr double kMinSep = 1e-12;
  std::vector<std::size_t> order(pts_.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return pts_[a].x < pts_[b].x; });
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t j = i + 1; j < order.size(); ++j) {
      if (pts_[order[j]].x - pts_[order[i]].x > kMinSep) break;
      if (dist(pts_[order[i]], pts_[order[j]]) < kMinSep)
        throw DuplicatePoints("PointSet: points " + std::to_string(order[i]) + " and " +
                              std::to_string(order[j]) + " are closer than 1e-12");
    }
  }
}

double PointSet::extent() const {
  if (pts_.empty()) return 0.0;
  double xlo = pts_[0].x, xhi = pts_[0].x, ylo = pts_[0].y, yhi = pts_[0].y;
  for (const Point& p : pts_) {
    xlo = std::min(xlo, p.x);
    xhi = std::max(xhi, p.x);
    ylo = std::min(ylo, p.y);
    yhi = std::max(yhi, p.y);
  }
  return std::hypot(xhi - xlo, yhi - ylo);
}

Disk circumcircle(Point a, Point b, Point c) {
  const Point ab = b - a;
  const Point ac = c - a;
  const double two_s = cross(ab, ac);  // twice the signed area
  const double lmax = std::max({norm(ab), norm(ac), dist(b, c)});
  if (std::abs(two_s) <= 2e-12 * lmax * lmax)
    throw CollinearInput("circumcircle: triple is collinear or nearly so");
  const double h1 = 0.5 * dot(ab, ab);
  const double h2 = 0.5 * dot(ac, ac);
  const Point center{a.x + (h1 * ac.y - h2 * ab.y) / two_s,
                     a.y + (h2 * ab.x - h1 * ac.x) / two_s};
  const double r = (dist(center, a) + dist(center, b) + dist(center, c)) / 3.0;
  return Disk(center, r);
}

PointClass classify_point(const Disk& d, Point p, const Tolerance& tol) {
  const double dr = dist(d.center, p) - d.radius;
  if (std::abs(dr) <= tol.eps_incidence) return PointClass::OnBoundary;
  return dr < 0.0 ? PointClass::Inside : PointClass::Outside;
}

bool is_empty(const Disk& d, const PointSet& ps, const Tolerance& tol) {
  for (const Point& p : ps.points()) {
    const double dr = dist(d.center, p) - d.radius;
    if (dr < -tol.eps_empty) return false;
  }
  return true;
}

DiskRelation disks_disjoint(const Disk& a, const Disk& b, const Tolerance& tol) {
  const double gap = dist(a.center, b.center) - (a.radius + b.radius);
  if (std::abs(gap) <= tol.eps_disjoint) return DiskRelation::Tangent;
  return gap < 0.0 ? DiskRelation::Overlapping : DiskRelation::Disjoint;
}

double xi(const Disk& d, double line_y) {
  if (std::abs(line_y - d.center.y) > d.radius)
    throw NoIntersection("xi: horizontal line misses the disk");
  return d.center.x;
}

}  // namespace bubblelab
