#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bubblelab/geometry.hpp"

namespace bubblelab {

/// A set of empty disks together with one supported disk per point.
struct BubbleSet {
  std::vector<Disk> disks;
  std::map<int, int> supports;  // point index -> index into disks
};

/// The one-parameter family of circles through a point pair, as the maximal
/// parameter interval on which the circle is empty. The parameter t is the
/// signed offset of the center along the perpendicular bisector of pq
/// (t = 0 is the diameter disk). Ends cut by a co-circular third point are
/// open; ends cut by the |t| <= t_max clamp are closed and flagged clamped.
struct PencilInterval {
  int p = 0, q = 0;
  double t_lo = 0.0, t_hi = 0.0;
  bool lo_open = false, hi_open = false;
  bool lo_clamped = false, hi_clamped = false;

  double width() const { return t_hi - t_lo; }
};

/// Maximal empty interval of the pencil through points p_idx, q_idx, or
/// nullopt when no empty circle through the pair exists. t_max = 0 requests
/// the default clamp of 1e6 times the point-set extent.
std::optional<PencilInterval> pencil_interval(int p_idx, int q_idx, const PointSet& ps,
                                              const Tolerance& tol = {}, double t_max = 0.0);

/// Disk of the pencil through p and q at parameter t.
Disk pencil_disk(Point p, Point q, double t);

/// Small empty disks for a matched point pair are chosen inside the pencil
/// interval; this picks a well-conditioned representative (the midpoint for
/// narrow intervals, otherwise the interior point nearest t = 0).
double pencil_pick(const PencilInterval& interval, double pair_dist);

/// One empty disk per matched Delaunay edge plus one singleton disk per
/// unmatched point. Disks may overlap; every point supports its disk.
BubbleSet bubble_from_matching(const PointSet& ps, const Tolerance& tol = {});

enum class Effort { Fast, Thorough };

struct SolveResult {
  BubbleSet bubble;
  int upper = 0;  // |bubble.disks|
  int lower = 0;  // certified lower bound when a structure certificate applies
  std::string method_log;
};

/// Pairwise-disjoint bubble set: Delaunay matching seed, per-pair disks
/// adjusted within their pencil intervals by local search, pairs demoted to
/// two singletons when no disjoint position is found. Deterministic for a
/// fixed (ps, seed, effort).
SolveResult disjoint_bubbles(const PointSet& ps, std::uint64_t seed, Effort effort,
                             const Tolerance& tol = {});

struct Violation {
  std::string kind;  // "support" | "empty" | "overlap"
  int i = -1, j = -1;
  double margin = 0.0;
  std::string detail;
};

struct ValidationReport {
  bool pass = false;
  std::vector<Violation> violations;
  int checked_points = 0;
  int checked_disks = 0;
};

/// Checks that every point supports its disk, every disk is empty, and
/// (optionally) that all disk pairs are disjoint or tangent. Violations are
/// report content, not errors.
ValidationReport validate(const PointSet& ps, const BubbleSet& bubble, bool require_disjoint,
                          const Tolerance& tol = {});

/// Certified lower bound on the number of pairwise-disjoint empty disks for
/// a recognized construction, 0 when no certificate applies. For gadgets and
/// chains the tangency margins of the corresponding case reports are
/// re-verified before the bound is claimed. The grid value carries an
/// unresolved O(k) slack and is returned unnormalized; callers must flag it.
int certified_lower(const PointSet& ps, StructureKind structure);

enum class BoundScheme { PrelimLinear, RefinedGrid, Alternating };

/// Denominator of the n/denominator improvement term of each scheme:
/// 16/delta + 6 = 966 (preliminary, delta = 1/60), 8/delta + 4 = 236
/// (refined grid, delta = 1/29), (174 + 340)/2 = 257 (alternating chain).
long long bound_constant(BoundScheme scheme);

}  // namespace bubblelab
