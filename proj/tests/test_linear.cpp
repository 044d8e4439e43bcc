#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "bubblelab/linear.hpp"

using namespace bubblelab;

TEST_CASE("triple tangency closed form") {
  const TripleTangencySolution sol = triple_tangency_closed_form();
  // Published leading digits of the spacing.
  CHECK(sol.x >= 0.03486);
  CHECK(sol.x < 0.03487);
  CHECK(sol.lambda == doctest::Approx((4.0 / 945.0) * (7.0 - 4.0 * std::sqrt(3.0)))
                          .epsilon(1e-15));
  CHECK(sol.quadratic_residual < 1e-12);
  // The larger quadratic root is infeasible: its z exceeds 2/63.
  CHECK(sol.z_rejected > 2.0 / 63.0);
  CHECK(sol.z < 2.0 / 63.0);
  // Half-angle values stay strictly inside the feasible branch.
  CHECK(sol.s > 0.0);
  CHECK(sol.s < 1.0);
  CHECK(sol.t > 0.0);
  CHECK(sol.t < 1.0);
  for (double r : sol.residuals) CHECK(std::abs(r) < 1e-9);
  CHECK(sol.y1 > sol.y2);
  CHECK(sol.y2 > 0.0);
}

TEST_CASE("quartic-in-z form has a tiny relative residual at the solution") {
  const TripleTangencySolution sol = triple_tangency_closed_form();
  const double z2 = sol.z * sol.z;
  const double lhs = 16.0 * 1260.0 * 1260.0 * z2 + (64.0 + 15120.0 * z2) * (64.0 + 15120.0 * z2);
  const double rhs = (104.0 + 24570.0 * z2) * (104.0 + 24570.0 * z2);
  CHECK(std::abs(lhs - rhs) / (std::abs(lhs) + std::abs(rhs)) < 1e-12);
}

TEST_CASE("triple tangency Newton agrees with the closed form") {
  const TripleTangencySolution cf = triple_tangency_closed_form();
  const TripleTangencySolution nt = triple_tangency_newton();
  CHECK(std::abs(cf.x - nt.x) < 1e-10);
  CHECK(std::abs(cf.r1 - nt.r1) < 1e-10);
  CHECK(std::abs(cf.r2 - nt.r2) < 1e-10);
  CHECK(std::abs(cf.y1 - nt.y1) < 1e-10);
  CHECK(std::abs(cf.y2 - nt.y2) < 1e-10);
  for (double r : nt.residuals) CHECK(std::abs(r) < 1e-9);
  CHECK(nt.y1 > nt.y2);
  CHECK(nt.y2 > 0.0);
  // One of the five equations, checked as geometry: the big disk centered
  // at (0,1) is externally tangent to the first small disk.
  const Point big_center{0.0, 1.0};
  const Point c1{2.0 * nt.x, -nt.y1};
  CHECK(dist(big_center, c1) == doctest::Approx(1.0 + nt.r1).epsilon(1e-10));
}

TEST_CASE("chord depth function values and domain") {
  CHECK(chord_depth_g(0, 0.1) == 0.0);
  // Closed form matches the defining expression r - sqrt(r^2 - w^2) at r = 1.
  for (int a = 1; a <= 6; ++a) {
    const double delta = 1.0 / 29.0;
    const double w = a * delta;
    CHECK(chord_depth_g(a, delta) ==
          doctest::Approx(1.0 - std::sqrt(1.0 - w * w)).epsilon(1e-14));
  }
  CHECK_THROWS_AS(chord_depth_g(6, 0.2), DomainError);
  CHECK_THROWS_AS(chord_depth_g(-1, 0.1), DomainError);

  // Key inequality at delta = 1/29.
  const double d29 = 1.0 / 29.0;
  CHECK(chord_depth_g(3, d29) + chord_depth_g(6, d29) <= 0.9 * d29);

  // Depth-to-spacing ratio at delta = 1/60, half-width 4 steps.
  const double d60 = 1.0 / 60.0;
  const double ratio = chord_depth_g(4, d60) / d60;
  CHECK(ratio >= 0.1334);
  CHECK(ratio < 0.1335);
  CHECK(ratio <= 0.1337);
  CHECK(chord_depth_g(4, d60) <= 8.02 * d60 * d60);
  // That clearance stays below the tangency-line height.
  CHECK(ratio < 1.0 - std::sqrt(3.0) / 2.0);
}

TEST_CASE("chord depth grows with a and the pair bound holds on (0, 1/29]") {
  for (int s = 1; s <= 100; ++s) {
    const double delta = (1.0 / 29.0) * s / 100.0;
    CHECK(chord_depth_g(3, delta) + chord_depth_g(6, delta) <= 0.9 * delta);
    for (int a = 2; a <= 6; ++a)
      CHECK(chord_depth_g(a, delta) > chord_depth_g(a - 1, delta));
  }
}

TEST_CASE("sandwich table") {
  const auto rows = sandwich_table(1.0 / 29.0);
  REQUIRE(rows.size() == 8);
  for (const SandwichCase& row : rows) {
    CHECK(row.pass);
    CHECK(row.in_claimed_range);
    CHECK(row.bound == doctest::Approx(0.9 / 29.0));
  }
  // First row is the direct (5,3) pair, second its relaxation (6,3).
  CHECK(rows[0].a1 == 5);
  CHECK(rows[1].a1 == 6);
  CHECK(rows[0].lhs < rows[1].lhs);

  // Out of the claimed range the table still evaluates; (6,3) fails there.
  const auto wide = sandwich_table(0.05);
  REQUIRE(wide.size() == 8);
  CHECK_FALSE(wide[1].in_claimed_range);
  CHECK_FALSE(wide[1].pass);
  bool some_pass = false;
  for (const SandwichCase& row : wide) some_pass = some_pass || row.pass;
  CHECK(some_pass);
}

TEST_CASE("tangent pair over four spaced points") {
  for (double delta : {1.0 / 60.0, 1.0 / 29.0, 1.0}) {
    const TangentPairCheck chk = tangent_pair_check(delta);
    CHECK(chk.radius_err_12 <= 1e-12 * std::max(1.0, delta));
    CHECK(chk.radius_err_34 <= 1e-12 * std::max(1.0, delta));
    CHECK(chk.center_dist == doctest::Approx(2.0 * delta).epsilon(1e-12));
    CHECK(chk.relation == DiskRelation::Tangent);
    CHECK(chk.tangency_gap < 1e-12 * std::max(1.0, delta));
    // Circumradius route through the support triple gives delta as well.
    CHECK(chk.circumradius_crosscheck == doctest::Approx(delta).epsilon(1e-12));
  }
}

TEST_CASE("clearance depth") {
  const double d60 = 1.0 / 60.0;
  CHECK(clearance_depth(1.0, d60, 4) <= 8.02 * d60 * d60);
  CHECK(clearance_depth(1.0, d60, 4) == doctest::Approx(chord_depth_g(4, d60)).epsilon(1e-14));

  // Flat-line limit: at r = 1e6 the depth is w^2 / (2 r) up to rounding.
  const double far = clearance_depth(1e6, d60, 4);
  const double w = 4.0 * d60;
  CHECK(far == doctest::Approx(w * w / (2e6)).epsilon(1e-9));
  CHECK(far < 1e-8);

  // Scale covariance.
  for (double s : {0.5, 2.0, 10.0}) {
    CHECK(clearance_depth(s * 1.0, s * d60, 4) ==
          doctest::Approx(s * clearance_depth(1.0, d60, 4)).epsilon(1e-12));
  }

  CHECK_THROWS_AS(clearance_depth(1.0, 0.3, 4), DomainError);
  CHECK_THROWS_AS(clearance_depth(0.0, 0.1, 1), DomainError);
}
