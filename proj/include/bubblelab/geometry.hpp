#pragma once

#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "bubblelab/errors.hpp"

namespace bubblelab {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(double s, Point p) { return {s * p.x, s * p.y}; }
inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point p) { return std::hypot(p.x, p.y); }
inline double dist(Point a, Point b) { return std::hypot(a.x - b.x, a.y - b.y); }
inline double dist2(Point a, Point b) {
  const double dx = a.x - b.x, dy = a.y - b.y;
  return dx * dx + dy * dy;
}
inline bool is_finite(Point p) { return std::isfinite(p.x) && std::isfinite(p.y); }

/// Closed disk: center plus a finite, strictly positive radius.
struct Disk {
  Point center;
  double radius = 1.0;

  Disk() = default;
  Disk(Point c, double r) : center(c), radius(r) {
    if (!is_finite(c) || !std::isfinite(r) || r <= 0.0)
      throw BadSpec("Disk: center must be finite and radius > 0");
  }
};

/// Tolerances for the three predicate families. The incidence epsilon decides
/// when a point counts as lying on a circle, the emptiness epsilon when it
/// counts as strictly interior, and the disjointness epsilon when two disks
/// count as tangent. All must lie in (0, 1e-3).
struct Tolerance {
  double eps_incidence = 1e-9;
  double eps_empty = 1e-9;
  double eps_disjoint = 1e-9;

  void validate() const {
    for (double e : {eps_incidence, eps_empty, eps_disjoint})
      if (!(e > 0.0) || !(e < 1e-3))
        throw BadSpec("Tolerance: all epsilons must lie in (0, 1e-3)");
  }
};

enum class PointClass { Inside, OnBoundary, Outside };
enum class DiskRelation { Disjoint, Tangent, Overlapping };

std::string to_string(PointClass c);
std::string to_string(DiskRelation r);

/// Per-point label attached by the generators. The meaning of `group`
/// depends on the structure kind: line index for grids, gadget index for
/// chains, 0 for single constructions, -1 for padding points.
struct PointLabel {
  int group = -1;
  int index = -1;
};

enum class StructureKind { None, Collinear, Gadget, Chain, Grid };

std::string to_string(StructureKind k);
StructureKind structure_kind_from_string(const std::string& s);

/// Generator metadata carried alongside the points so that structured
/// certificates can verify they are applied to the construction they
/// were proved for.
struct StructureInfo {
  StructureKind kind = StructureKind::None;
  std::map<std::string, double> params;
};

/// An ordered planar point set. Construction rejects non-finite coordinates
/// and pairs of points closer than 1e-12.
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(std::vector<Point> pts, std::vector<PointLabel> labels = {},
                    StructureInfo structure = {});

  std::size_t size() const { return pts_.size(); }
  bool empty() const { return pts_.empty(); }
  const Point& operator[](std::size_t i) const { return pts_[i]; }
  const std::vector<Point>& points() const { return pts_; }
  const std::vector<PointLabel>& labels() const { return labels_; }
  bool has_labels() const { return !labels_.empty(); }
  const StructureInfo& structure() const { return structure_; }

  /// Diagonal of the bounding box; used as the scale reference for clamps.
  double extent() const;

 private:
  std::vector<Point> pts_;
  std::vector<PointLabel> labels_;
  StructureInfo structure_;
};

/// Circumcircle of a non-degenerate triple, computed from the perpendicular
/// bisector linear system. Throws CollinearInput when the triangle area is
/// below 1e-12 relative to the squared longest side.
Disk circumcircle(Point a, Point b, Point c);

PointClass classify_point(const Disk& d, Point p, const Tolerance& tol = {});

/// True iff no point of `ps` lies strictly inside `d` (within eps_empty).
bool is_empty(const Disk& d, const PointSet& ps, const Tolerance& tol = {});

DiskRelation disks_disjoint(const Disk& a, const Disk& b, const Tolerance& tol = {});

/// x-coordinate of the intersection of the horizontal line y = line_y with
/// the vertical diameter of `d`. Throws NoIntersection when the line misses
/// the disk.
double xi(const Disk& d, double line_y);

// Point-set file formats. Text: one `x y` pair per line, `#` comments.
// JSON: {"points":[[x,y],...]} with optional "labels" and "structure".
PointSet points_from_text(const std::string& text);
std::string points_to_text(const PointSet& ps);
PointSet points_from_json(const std::string& text);
std::string points_to_json(const PointSet& ps);
PointSet read_points(const std::string& path);
void write_points(const PointSet& ps, const std::string& path);

}  // namespace bubblelab
