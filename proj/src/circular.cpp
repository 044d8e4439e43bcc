#include "bubblelab/circular.hpp"

#include <algorithm>
#include <cmath>

#include "bubblelab/constructions.hpp"

namespace bubblelab {

namespace {

constexpr double kPi = 3.14159265358979323846;

double theta_of(int n) { return kPi / (n - 1); }

// Radius of a disk whose center is at distance d from the gadget center and
// whose boundary passes through a boundary point at angular offset theta
// (cosine rule in the triangle center / boundary point / disk center).
double pressing_radius(double d, double cos_theta, double s) {
  return std::sqrt(std::max(0.0, d * d - 2.0 * s * cos_theta * d + s * s));
}

double refine_root(const std::function<double(double)>& f, double a, double b, double fa,
                   double fb) {
  // fa > 0 > fb. Secant steps accelerate, but every other iteration bisects
  // so the bracket provably shrinks (plain false position stalls one-sided).
  for (int iter = 0; iter < 200 && (b - a) > 1e-15 * std::max(1.0, std::abs(b)); ++iter) {
    double m = 0.5 * (a + b);
    if (iter % 2 == 0) {
      const double secant = (a * fb - b * fa) / (fb - fa);
      const double guard = 1e-3 * (b - a);
      if (secant > a + guard && secant < b - guard) m = secant;
    }
    const double fm = f(m);
    if (fm == 0.0) return m;
    if (fm > 0.0) {
      a = m;
      fa = fm;
    } else {
      b = m;
      fb = fm;
    }
  }
  return 0.5 * (a + b);
}

}  // namespace

void TangencyProblem::validate() const {
  if (!(theta > 0.0) || !(theta < kPi / 8.0))
    throw BadSpec("tangency problem: theta must lie in (0, pi/8)");
  const double mult = phi / (theta / 2.0);
  if (!(phi > 0.0) || std::abs(mult - std::round(mult)) > 1e-9)
    throw BadSpec("tangency problem: phi must be a positive multiple of theta/2");
  if (!(phi < kPi)) throw BadSpec("tangency problem: phi must be below pi");
  if (!(gadget_radius > 0.0)) throw BadSpec("tangency problem: gadget_radius must be > 0");
  if (disk_r < 0.0) throw BadSpec("tangency problem: disk_r must be >= 0");
}

TangencyBracket tangency_bracket(const TangencyProblem& prob) {
  prob.validate();
  const double s = prob.gadget_radius;
  const double ct = std::cos(prob.theta);
  const double cp = std::cos(prob.phi);

  if (prob.mode == TangentMode::Disk) {
    const double r = prob.disk_r > 0.0 ? prob.disk_r : s / (2.0 * ct);
    auto f = [=](double d) {
      return r + pressing_radius(d, ct, s) - std::sqrt(r * r + d * d - 2.0 * r * cp * d);
    };
    return {s * ct, 2.0 * s, f};
  }

  // Line contact: d cos(phi) + r_i = s cos(theta). Two positions of the
  // pressing disk satisfy this; the wanted one keeps the disk near the
  // gadget boundary and corresponds to the larger root, which sits right of
  // the maximum of f. Anchor the bracket at a grid argmax of f.
  auto f = [=](double d) { return s * ct - d * cp - pressing_radius(d, ct, s); };
  const double hi_limit = 2.0 * s;
  const int grid = 8192;
  int best = 1;
  double best_val = -1e300;
  for (int i = 1; i <= grid; ++i) {
    const double d = hi_limit * i / grid;
    const double v = f(d);
    if (v > best_val) {
      best_val = v;
      best = i;
    }
  }
  double lo = hi_limit * best / grid;
  double hi = hi_limit;
  for (int i = best + 1; i <= grid; ++i) {
    const double d = hi_limit * i / grid;
    if (f(d) <= 0.0) {
      hi = d;
      break;
    }
  }
  return {lo, hi, f};
}

PairDiskSolution solve_tangent_pair(const TangencyProblem& prob) {
  const TangencyBracket br = tangency_bracket(prob);
  const double fa = br.f(br.lo);
  const double fb = br.f(br.hi);
  if (!(fa > 0.0) || !(fb < 0.0))
    throw NoRoot("solve_tangent_pair: no sign change in bracket (theta=" +
                 std::to_string(prob.theta) + ", phi=" + std::to_string(prob.phi) + ")");
  const double d = refine_root(br.f, br.lo, br.hi, fa, fb);

  const double s = prob.gadget_radius;
  const double ct = std::cos(prob.theta);
  const double cp = std::cos(prob.phi);
  PairDiskSolution sol;
  sol.d = d;
  sol.r_i = pressing_radius(d, ct, s);
  if (prob.mode == TangentMode::Disk) {
    const double r = prob.disk_r > 0.0 ? prob.disk_r : s / (2.0 * ct);
    sol.residual =
        std::abs((r + sol.r_i) * (r + sol.r_i) - (r * r + d * d - 2.0 * r * cp * d));
  } else {
    sol.residual = std::abs(d * cp + sol.r_i - s * ct);
  }
  if (!(sol.d > 0.0) || !(sol.r_i > 0.0) || !(sol.residual < 1e-10))
    throw NoRoot("solve_tangent_pair: solution failed the residual check");
  return sol;
}

namespace {

CaseReport assemble_report(int n_or_k, const std::string& case_id, double theta, double r,
                           double phi1, double phi2, double phi12, TangentMode mode,
                           double scale, bool reconstructed) {
  TangencyProblem p1{theta, mode, phi1, scale, mode == TangentMode::Disk ? r : 0.0};
  TangencyProblem p2{theta, mode, phi2, scale, mode == TangentMode::Disk ? r : 0.0};
  const PairDiskSolution s1 = solve_tangent_pair(p1);
  const PairDiskSolution s2 = solve_tangent_pair(p2);

  CaseReport rep;
  rep.n_or_k = n_or_k;
  rep.case_id = case_id;
  rep.theta = theta;
  rep.r = r;
  rep.d1 = s1.d;
  rep.d2 = s2.d;
  rep.r1 = s1.r_i;
  rep.r2 = s2.r_i;
  rep.o1o2 = std::sqrt(s1.d * s1.d + s2.d * s2.d - 2.0 * s1.d * s2.d * std::cos(phi12));
  rep.r1_plus_r2 = s1.r_i + s2.r_i;
  rep.margin = rep.r1_plus_r2 - rep.o1o2;
  rep.residual1 = s1.residual;
  rep.residual2 = s2.residual;
  rep.phi1 = phi1;
  rep.phi2 = phi2;
  rep.phi12 = phi12;
  rep.scale = scale;
  rep.reconstructed = reconstructed;
  return rep;
}

}  // namespace

CaseReport case_report_disk(int n, const std::string& case_id, double scale) {
  if (n < 10 || n % 2 != 0) throw BadSpec("case_report_disk: n must be even and >= 10");
  if (!(scale > 0.0)) throw BadSpec("case_report_disk: scale must be > 0");
  const double theta = theta_of(n);
  if (case_id == "case2") {
    // Central contact through the center point and two consecutive boundary
    // points; its radius follows from the isoceles support triangle.
    const double r = scale / (2.0 * std::cos(theta));
    return assemble_report(n, case_id, theta, r, 4.0 * theta, 8.0 * theta, 4.0 * theta,
                           TangentMode::Disk, scale, false);
  }
  if (case_id == "case1") {
    // Central contact through the center point and one boundary point: the
    // diameter disk of that pair, radius scale/2, tilted half a step so the
    // pressing pairs sit at 3.5 and 7.5 steps. Reconstructed angle set.
    const double r = 0.5 * scale;
    return assemble_report(n, case_id, theta, r, 3.5 * theta, 7.5 * theta, 4.0 * theta,
                           TangentMode::Disk, scale, true);
  }
  throw BadSpec("case_report_disk: case_id must be case1 or case2");
}

CaseReport case_report_line(int k, const std::string& subcase, double scale) {
  if (k < 14 || k % 2 != 0) throw BadSpec("case_report_line: k must be even and >= 14");
  if (!(scale > 0.0)) throw BadSpec("case_report_line: scale must be > 0");
  const double theta = theta_of(k);
  const double chord_dist = scale * std::cos(theta);
  double phi1, phi2, phi12;
  if (subcase == "i") {
    phi1 = 4.0 * theta;
    phi2 = 8.0 * theta;
    phi12 = 4.0 * theta;
  } else if (subcase == "ii") {
    phi1 = 4.0 * theta;
    phi2 = 10.0 * theta;
    phi12 = 6.0 * theta;
  } else if (subcase == "iii") {
    phi1 = 6.0 * theta;
    phi2 = 10.0 * theta;
    phi12 = 4.0 * theta;
  } else {
    throw BadSpec("case_report_line: subcase must be i, ii or iii");
  }
  return assemble_report(k, subcase, theta, chord_dist, phi1, phi2, phi12, TangentMode::Line,
                         scale, false);
}

MarginScan margin_scan(CaseKind kind, const std::string& case_id, int lo, int hi) {
  if (lo < 10 || hi > 100000 || lo > hi)
    throw BadSpec("margin_scan: range must lie within [10, 100000]");
  MarginScan scan;
  scan.all_positive = true;
  for (int n = lo + (lo % 2); n <= hi; n += 2) {
    MarginEntry entry;
    entry.n = n;
    try {
      const CaseReport rep = (kind == CaseKind::Disk) ? case_report_disk(n, case_id)
                                                      : case_report_line(n, case_id);
      entry.margin = rep.margin;
      if (rep.margin > 0.0) {
        if (!scan.first_positive_n) scan.first_positive_n = n;
      } else {
        scan.all_positive = false;
      }
    } catch (const std::exception& e) {
      entry.error = e.what();
      scan.all_positive = false;
    }
    scan.entries.push_back(std::move(entry));
  }
  if (scan.entries.empty()) scan.all_positive = false;
  return scan;
}

CaseRealization realize_case(int n, const std::string& case_id) {
  CaseRealization out;
  out.report = case_report_disk(n, case_id);
  out.points = gadget({n, 1.0, {0.0, 0.0}, 0.0});
  const double theta = out.report.theta;
  auto on_ray = [&](double angle, double distance) {
    return Point{distance * std::cos(angle), distance * std::sin(angle)};
  };

  // Boundary point q_i sits at angle 2 theta (i-1); the pressing disk over
  // the pair (q_a, q_{a+1}) is centered on the bisector ray of that pair.
  double q_angle, ray1, ray2;
  if (case_id == "case2") {
    q_angle = theta;  // contact tilted toward the midpoint of q1, q2
    out.q_support = {0, 1, 2};
    out.q1_support = {3, 4};
    out.q2_support = {5, 6};
    ray1 = 5.0 * theta;
    ray2 = 9.0 * theta;
  } else {
    q_angle = -0.5 * theta;  // reconstructed tilt; only the center is claimed
    out.q_support = {0};
    out.q1_support = {2, 3};
    out.q2_support = {4, 5};
    ray1 = 3.0 * theta;
    ray2 = 7.0 * theta;
  }
  out.Q = Disk(on_ray(q_angle, out.report.r), out.report.r);
  out.Q1 = Disk(on_ray(ray1, out.report.d1), out.report.r1);
  out.Q2 = Disk(on_ray(ray2, out.report.d2), out.report.r2);
  return out;
}

}  // namespace bubblelab
