#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "bubblelab/geometry.hpp"

namespace bubblelab {

enum class TangentMode { Disk, Line };

/// One pressing-disk subproblem: a disk supported by two consecutive
/// boundary points of a gadget (half-step angle `theta`), pressed against
/// either a central disk of radius `disk_r` or the chord line of the two
/// support points of that central contact. `phi` is the angle at the
/// gadget center between the pressing direction and the contact direction.
/// All lengths scale with `gadget_radius`.
struct TangencyProblem {
  double theta = 0.0;
  TangentMode mode = TangentMode::Disk;
  double phi = 0.0;
  double gadget_radius = 1.0;
  double disk_r = 0.0;  // Disk mode only; 0 requests gadget_radius/(2 cos theta)

  void validate() const;
};

struct PairDiskSolution {
  double d = 0.0;    // distance from the gadget center to the pressing disk center
  double r_i = 0.0;  // radius of the pressing disk
  double residual = 0.0;
};

/// Bracketing function whose unique root in [lo, hi] is the tangent
/// distance d. Exposed so the sign-change structure can be audited.
struct TangencyBracket {
  double lo = 0.0;
  double hi = 0.0;
  std::function<double(double)> f;
};

TangencyBracket tangency_bracket(const TangencyProblem& prob);

/// Solves the two-equation tangency system for (d, r_i) by bracketed
/// bisection refined with safeguarded secant steps. Throws NoRoot when the
/// bracket has no sign change.
PairDiskSolution solve_tangent_pair(const TangencyProblem& prob);

/// Solved two-disk configuration for one proof case: the two pressing
/// disks next to a central contact, and the margin r1 + r2 - |o1o2| whose
/// positive sign certifies that they overlap.
struct CaseReport {
  int n_or_k = 0;
  std::string case_id;
  double theta = 0.0;  // radians
  double r = 0.0;      // disk cases: radius of Q; line cases: center-to-chord distance
  double d1 = 0.0, d2 = 0.0;
  double r1 = 0.0, r2 = 0.0;
  double o1o2 = 0.0;
  double r1_plus_r2 = 0.0;
  double margin = 0.0;
  double residual1 = 0.0, residual2 = 0.0;
  double phi1 = 0.0, phi2 = 0.0, phi12 = 0.0;
  double scale = 1.0;
  // case1's angle set is not published; it is a reconstruction and reports
  // carry this flag so the certificate is explicit about it.
  bool reconstructed = false;
};

/// Disk-contact cases of an n-gadget. case_id is "case1" (center contact
/// through the center point and one boundary point) or "case2" (center
/// contact through the center point and two consecutive boundary points).
CaseReport case_report_disk(int n, const std::string& case_id, double scale = 1.0);

/// Line-contact cases of a k-gadget, subcase "i", "ii" or "iii" selecting
/// the support pattern of the two pressing disks.
CaseReport case_report_line(int k, const std::string& subcase, double scale = 1.0);

enum class CaseKind { Disk, Line };

struct MarginEntry {
  int n = 0;
  std::optional<double> margin;
  std::string error;
};

struct MarginScan {
  std::vector<MarginEntry> entries;
  std::optional<int> first_positive_n;
  bool all_positive = false;
};

/// Margin per even n in [lo, hi]. Failed solves are recorded per entry and
/// the scan continues.
MarginScan margin_scan(CaseKind kind, const std::string& case_id, int lo, int hi);

/// Concrete geometry of a disk case: the gadget points and the three disks,
/// for cross-validation of the analytic report against the predicates.
struct CaseRealization {
  PointSet points;
  Disk Q, Q1, Q2;
  std::vector<int> q_support;   // point indices claimed on the boundary of Q
  std::vector<int> q1_support;  // likewise for Q1
  std::vector<int> q2_support;
  CaseReport report;
};

CaseRealization realize_case(int n, const std::string& case_id);

}  // namespace bubblelab
