#pragma once

#include <array>
#include <string>
#include <vector>

#include "bubblelab/geometry.hpp"

namespace bubblelab {

/// Solution of the three-tangent-circles system: a unit disk centered at
/// (0,1) over four evenly spaced points at spacing x on the x axis, with a
/// disk over each of the two point pairs, all three disks pairwise tangent.
/// Unknowns are x and the radii/depths of the two small disks.
struct TripleTangencySolution {
  double x = 0.0;       // point spacing; x = 2 sqrt(lambda)
  double z = 0.0;       // x / 2
  double lambda = 0.0;  // z^2, root of 893025 l^2 - 52920 l + 16 = 0
  double r1 = 0.0, r2 = 0.0;
  double y1 = 0.0, y2 = 0.0;  // center depths below the x axis, 0 < y2 < y1
  std::array<double, 5> residuals{};  // of the five original equations
  double quadratic_residual = 0.0;    // relative residual of the lambda quadratic
  double lambda_rejected = 0.0;       // the larger quadratic root (infeasible)
  double z_rejected = 0.0;
  double s = 0.0, t = 0.0;  // half-angle substitution values, both in (0,1)
  int newton_iterations = 0;          // 0 for the closed form
};

/// Closed-form solution via the half-angle substitution chain, with the
/// infeasible branches rejected explicitly and all five original equations
/// re-checked.
TripleTangencySolution triple_tangency_closed_form();

/// Same system solved directly by damped Newton on the five original
/// equations. Throws NoConvergence if every configured start fails.
TripleTangencySolution triple_tangency_newton();

/// Depth a chord of half-width a*delta cuts into a unit disk:
/// g(a, delta) = a^2 delta^2 / (1 + sqrt(1 - a^2 delta^2)).
/// Throws DomainError when a*delta >= 1.
double chord_depth_g(int a, double delta);

struct SandwichCase {
  int a1 = 0, a2 = 0;
  double delta = 0.0;
  double lhs = 0.0;    // g(a1, delta) + g(a2, delta)
  double bound = 0.0;  // 0.9 delta
  bool pass = false;
  bool in_claimed_range = true;  // delta <= 1/29
};

/// Evaluates every chord-depth pair used by the sandwich case analysis:
/// (5,3),(6,3),(2,2),(2,3),(2,4),(3,3),(2,5),(3,4), each against 0.9 delta.
std::vector<SandwichCase> sandwich_table(double delta);

/// The pair of congruent disks through consecutive spacing-delta points,
/// tangent from below to the horizontal line at height (1 - sqrt(3)/2) delta.
/// Both radii equal delta exactly and the disks are mutually tangent.
struct TangentPairCheck {
  double delta = 0.0;
  Disk w12, w34;
  double radius_err_12 = 0.0;  // |radius - delta|
  double radius_err_34 = 0.0;
  double center_dist = 0.0;
  double tangency_gap = 0.0;  // |center_dist - (r12 + r34)|
  DiskRelation relation = DiskRelation::Disjoint;
  double circumradius_crosscheck = 0.0;  // abc/(4S) on the support triple
};

TangentPairCheck tangent_pair_check(double delta, const Tolerance& tol = {});

/// Vertical clearance under a disk of radius r at horizontal offset
/// halfwidth_steps * delta: r - sqrt(r^2 - w^2), evaluated in the
/// cancellation-free form w^2 / (r + sqrt(r^2 - w^2)).
double clearance_depth(double r, double delta, int halfwidth_steps);

}  // namespace bubblelab
