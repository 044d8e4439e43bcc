#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "bubblelab/circular.hpp"
#include "bubblelab/constructions.hpp"

using namespace bubblelab;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("tangent pair solutions against the reference table") {
  const double th174 = kPi / 173.0;
  const PairDiskSolution d1 =
      solve_tangent_pair({th174, TangentMode::Disk, 4.0 * th174, 1.0, 0.0});
  CHECK(d1.d == doctest::Approx(1.0762).epsilon(1e-4));
  CHECK(d1.r_i == doctest::Approx(0.0785).epsilon(2e-3));
  CHECK(d1.residual < 1e-10);

  const PairDiskSolution d2 =
      solve_tangent_pair({th174, TangentMode::Disk, 8.0 * th174, 1.0, 0.0});
  CHECK(d2.d == doctest::Approx(1.0113).epsilon(1e-4));
  CHECK(d2.r_i == doctest::Approx(0.0215).epsilon(5e-3));
  CHECK(d2.residual < 1e-10);

  const double th340 = kPi / 339.0;
  const PairDiskSolution l1 =
      solve_tangent_pair({th340, TangentMode::Line, 4.0 * th340, 1.0, 0.0});
  CHECK(l1.d == doctest::Approx(0.9333).epsilon(1e-4));
  CHECK(l1.r_i == doctest::Approx(0.0672).epsilon(2e-3));
  CHECK(l1.residual < 1e-10);
}

TEST_CASE("solved pairs satisfy both defining equations when substituted back") {
  for (double phi_mult : {4.0, 8.0, 10.0}) {
    const double theta = kPi / 339.0;
    for (TangentMode mode : {TangentMode::Disk, TangentMode::Line}) {
      const TangencyProblem prob{theta, mode, phi_mult * theta, 1.0, 0.0};
      const PairDiskSolution sol = solve_tangent_pair(prob);
      // First equation: r_i follows from d by the cosine rule.
      const double lhs = sol.r_i * sol.r_i;
      const double rhs = sol.d * sol.d - 2.0 * sol.d * std::cos(theta) + 1.0;
      CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
      CHECK(sol.residual < 1e-10);
    }
  }
}

TEST_CASE("bracket function has exactly one sign change") {
  auto sign_changes = [](const TangencyBracket& br) {
    int changes = 0;
    double prev = br.f(br.lo);
    for (int i = 1; i <= 1000; ++i) {
      const double d = br.lo + (br.hi - br.lo) * i / 1000.0;
      const double v = br.f(d);
      if ((prev > 0.0) != (v > 0.0)) ++changes;
      prev = v;
    }
    return changes;
  };
  const double th174 = kPi / 173.0;
  const double th340 = kPi / 339.0;
  CHECK(sign_changes(tangency_bracket({th174, TangentMode::Disk, 4.0 * th174, 1.0, 0.0})) == 1);
  CHECK(sign_changes(tangency_bracket({th174, TangentMode::Disk, 8.0 * th174, 1.0, 0.0})) == 1);
  CHECK(sign_changes(tangency_bracket({th340, TangentMode::Line, 4.0 * th340, 1.0, 0.0})) == 1);
  CHECK(sign_changes(tangency_bracket({th340, TangentMode::Line, 10.0 * th340, 1.0, 0.0})) ==
        1);
}

TEST_CASE("disk case 2 report at n = 174 reproduces the reference values") {
  const CaseReport rep = case_report_disk(174, "case2");
  CHECK(rep.theta * 180.0 / kPi == doctest::Approx(1.0405).epsilon(1e-4));
  CHECK(rep.r == doctest::Approx(0.5001).epsilon(1e-3));
  CHECK(rep.d1 == doctest::Approx(1.0762).epsilon(1e-4));
  CHECK(rep.d2 == doctest::Approx(1.0113).epsilon(1e-4));
  CHECK(rep.r1 == doctest::Approx(0.0785).epsilon(2e-3));
  CHECK(rep.r2 == doctest::Approx(0.0215).epsilon(5e-3));
  CHECK(rep.o1o2 == doctest::Approx(0.0997).epsilon(1e-3));
  CHECK(rep.r1_plus_r2 == doctest::Approx(0.1000).epsilon(1e-3));
  CHECK(rep.margin > 0.0);
  CHECK_FALSE(rep.reconstructed);
}

TEST_CASE("disk case 1 at n = 174 is flagged as reconstructed") {
  const CaseReport rep = case_report_disk(174, "case1");
  CHECK(rep.reconstructed);
  CHECK(rep.r == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(rep.phi1 == doctest::Approx(3.5 * rep.theta));
  CHECK(rep.phi2 == doctest::Approx(7.5 * rep.theta));
  // The central contact presses harder here than in case 2.
  CHECK(rep.margin > case_report_disk(174, "case2").margin);
}

TEST_CASE("disk case 2 at n = 100: record the margin, whatever its sign") {
  const CaseReport rep = case_report_disk(100, "case2");
  CHECK(std::isfinite(rep.margin));
  const CaseReport again = case_report_disk(100, "case2");
  CHECK(rep.margin == again.margin);
  MESSAGE("case2 margin at n=100: ", rep.margin);
}

TEST_CASE("line case reports at k = 340 reproduce the reference values") {
  const CaseReport i = case_report_line(340, "i");
  CHECK(i.d1 == doctest::Approx(0.9333).epsilon(1e-4));
  CHECK(i.d2 == doctest::Approx(0.9854).epsilon(1e-4));
  CHECK(i.r1 == doctest::Approx(0.0672).epsilon(2e-3));
  CHECK(i.r2 == doctest::Approx(0.0172).epsilon(6e-3));
  CHECK(i.o1o2 == doctest::Approx(0.0631).epsilon(2e-3));
  CHECK(i.r1_plus_r2 == doctest::Approx(0.0845).epsilon(2e-3));
  CHECK(i.margin > 0.0);

  const CaseReport ii = case_report_line(340, "ii");
  CHECK(ii.d2 == doctest::Approx(0.9919).epsilon(1e-4));
  CHECK(ii.r2 == doctest::Approx(0.0122).epsilon(8e-3));
  CHECK(ii.o1o2 == doctest::Approx(0.0794).epsilon(2e-3));
  CHECK(ii.r1_plus_r2 == doctest::Approx(0.0795).epsilon(2e-3));
  CHECK(ii.margin > 0.0);
  CHECK(ii.margin == doctest::Approx(1e-4).epsilon(0.1));  // the tightest subcase

  const CaseReport iii = case_report_line(340, "iii");
  CHECK(iii.d1 == doctest::Approx(0.9721).epsilon(1e-4));
  CHECK(iii.o1o2 == doctest::Approx(0.0414).epsilon(3e-3));
  CHECK(iii.r1_plus_r2 == doctest::Approx(0.0415).epsilon(3e-3));
  CHECK(iii.margin > 0.0);
}

TEST_CASE("line case margins keep their sign under uniform scaling") {
  for (const char* sub : {"i", "ii", "iii"}) {
    const CaseReport base = case_report_line(340, sub, 1.0);
    for (double scale : {0.5, 2.0}) {
      const CaseReport scaled = case_report_line(340, sub, scale);
      CHECK((scaled.margin > 0.0) == (base.margin > 0.0));
      // All lengths scale linearly.
      CHECK(scaled.d1 == doctest::Approx(scale * base.d1).epsilon(1e-9));
      CHECK(scaled.o1o2 == doctest::Approx(scale * base.o1o2).epsilon(1e-9));
    }
  }
}

TEST_CASE("margin scan over the certified range") {
  const MarginScan scan = margin_scan(CaseKind::Disk, "case2", 174, 400);
  CHECK(scan.all_positive);
  REQUIRE(scan.first_positive_n.has_value());
  CHECK(*scan.first_positive_n == 174);
  for (const MarginEntry& e : scan.entries) {
    REQUIRE(e.margin.has_value());
    CHECK(*e.margin > 0.0);
  }
}

TEST_CASE("margin scan finds the positivity threshold below 174") {
  const MarginScan scan = margin_scan(CaseKind::Disk, "case2", 10, 174);
  REQUIRE(scan.first_positive_n.has_value());
  CHECK(*scan.first_positive_n <= 174);
  MESSAGE("first even n with positive case2 margin: ", *scan.first_positive_n);
  // Not all margins below the threshold are positive.
  CHECK_FALSE(scan.all_positive);
}

TEST_CASE("line subcase ii margin at k = 340 is about 1e-4") {
  const MarginScan scan = margin_scan(CaseKind::Line, "ii", 340, 340);
  REQUIRE(scan.entries.size() == 1);
  REQUIRE(scan.entries[0].margin.has_value());
  CHECK(*scan.entries[0].margin == doctest::Approx(1e-4).epsilon(0.1));
}

TEST_CASE("margin scan rejects out-of-range requests") {
  CHECK_THROWS_AS(margin_scan(CaseKind::Disk, "case2", 4, 100), BadSpec);
  CHECK_THROWS_AS(margin_scan(CaseKind::Disk, "case2", 100, 200000), BadSpec);
}

TEST_CASE("realized case 2 configuration passes the geometric predicates") {
  const CaseRealization real = realize_case(174, "case2");
  const Tolerance tol;

  CHECK(is_empty(real.Q, real.points, tol));
  CHECK(is_empty(real.Q1, real.points, tol));
  CHECK(is_empty(real.Q2, real.points, tol));

  for (int i : real.q_support)
    CHECK(classify_point(real.Q, real.points[i], tol) == PointClass::OnBoundary);
  for (int i : real.q1_support)
    CHECK(classify_point(real.Q1, real.points[i], tol) == PointClass::OnBoundary);
  for (int i : real.q2_support)
    CHECK(classify_point(real.Q2, real.points[i], tol) == PointClass::OnBoundary);

  CHECK(disks_disjoint(real.Q1, real.Q2, tol) == DiskRelation::Overlapping);
  CHECK(dist(real.Q1.center, real.Q2.center) ==
        doctest::Approx(real.report.o1o2).epsilon(1e-9));
}

TEST_CASE("realized case 1 configuration is empty and consistent") {
  const CaseRealization real = realize_case(174, "case1");
  const Tolerance tol;
  CHECK(is_empty(real.Q, real.points, tol));
  CHECK(is_empty(real.Q1, real.points, tol));
  CHECK(is_empty(real.Q2, real.points, tol));
  CHECK(classify_point(real.Q, real.points[0], tol) == PointClass::OnBoundary);
  for (int i : real.q1_support)
    CHECK(classify_point(real.Q1, real.points[i], tol) == PointClass::OnBoundary);
  CHECK(dist(real.Q1.center, real.Q2.center) ==
        doctest::Approx(real.report.o1o2).epsilon(1e-9));
  CHECK((disks_disjoint(real.Q1, real.Q2, tol) == DiskRelation::Overlapping) ==
        (real.report.margin > tol.eps_disjoint));
}

TEST_CASE("full gadget circumcircle and three-consecutive-point disks are not empty") {
  const PointSet g = gadget({174});
  const Tolerance tol;
  // The ring circle itself contains the center point.
  CHECK_FALSE(is_empty(Disk({0, 0}, 1.0), g, tol));
  // A disk through three consecutive boundary points is the ring circle.
  const Disk through3 = circumcircle(g[1], g[2], g[3]);
  CHECK(through3.radius == doctest::Approx(1.0).epsilon(1e-9));
  CHECK_FALSE(is_empty(through3, g, tol));
}

TEST_CASE("case report input validation") {
  CHECK_THROWS_AS(case_report_disk(173, "case2"), BadSpec);
  CHECK_THROWS_AS(case_report_disk(8, "case2"), BadSpec);
  CHECK_THROWS_AS(case_report_disk(174, "case3"), BadSpec);
  CHECK_THROWS_AS(case_report_line(12, "i"), BadSpec);
  CHECK_THROWS_AS(case_report_line(340, "iv"), BadSpec);
}
