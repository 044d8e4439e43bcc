#include "bubblelab/linear.hpp"

#include <algorithm>
#include <cmath>

namespace bubblelab {

namespace {

// The five equations of the system in the unknowns (x, r1, r2, y1, y2),
// with z = x/2: two incidences, two tangencies to the unit disk at (0,1)
// and the mutual tangency of the two small disks.
std::array<double, 5> system_residuals(double x, double r1, double r2, double y1, double y2) {
  const double z = 0.5 * x;
  return {
      z * z + y1 * y1 - r1 * r1,
      z * z + y2 * y2 - r2 * r2,
      16.0 * z * z + (1.0 + y1) * (1.0 + y1) - (1.0 + r1) * (1.0 + r1),
      64.0 * z * z + (1.0 + y2) * (1.0 + y2) - (1.0 + r2) * (1.0 + r2),
      16.0 * z * z + (y1 - y2) * (y1 - y2) - (r1 + r2) * (r1 + r2),
  };
}

double max_abs(const std::array<double, 5>& v) {
  double m = 0.0;
  for (double e : v) m = std::max(m, std::abs(e));
  return m;
}

// Solve the 5x5 linear system J dx = -f by Gaussian elimination with
// partial pivoting. Returns false on a (numerically) singular Jacobian.
bool solve5(std::array<std::array<double, 5>, 5> J, std::array<double, 5> f,
            std::array<double, 5>& dx) {
  std::array<double, 5> rhs;
  for (int i = 0; i < 5; ++i) rhs[i] = -f[i];
  for (int col = 0; col < 5; ++col) {
    int piv = col;
    for (int r = col + 1; r < 5; ++r)
      if (std::abs(J[r][col]) > std::abs(J[piv][col])) piv = r;
    if (std::abs(J[piv][col]) < 1e-14) return false;
    std::swap(J[piv], J[col]);
    std::swap(rhs[piv], rhs[col]);
    for (int r = col + 1; r < 5; ++r) {
      const double m = J[r][col] / J[col][col];
      for (int c = col; c < 5; ++c) J[r][c] -= m * J[col][c];
      rhs[r] -= m * rhs[col];
    }
  }
  for (int r = 4; r >= 0; --r) {
    double acc = rhs[r];
    for (int c = r + 1; c < 5; ++c) acc -= J[r][c] * dx[c];
    dx[r] = acc / J[r][r];
  }
  return true;
}

}  // namespace

TripleTangencySolution triple_tangency_closed_form() {
  TripleTangencySolution sol;
  const double root3 = std::sqrt(3.0);
  sol.lambda = (4.0 / 945.0) * (7.0 - 4.0 * root3);
  sol.lambda_rejected = (4.0 / 945.0) * (7.0 + 4.0 * root3);
  sol.z = std::sqrt(sol.lambda);
  sol.z_rejected = std::sqrt(sol.lambda_rejected);
  sol.x = 2.0 * sol.z;

  // z must stay below 2/63 for the half-angle values s, t to be positive;
  // that is what rules out the larger quadratic root.
  if (!(sol.z < 2.0 / 63.0))
    throw DomainError("triple tangency: retained root violates z < 2/63");
  const double z = sol.z;
  sol.s = (2.0 - 15.0 * z) / (2.0 + 15.0 * z);
  sol.t = (2.0 - 63.0 * z) / (2.0 + 63.0 * z);
  if (!(sol.s > 0.0 && sol.s < 1.0) || !(sol.t > 0.0 && sol.t < 1.0))
    throw DomainError("triple tangency: half-angle substitution left the feasible branch");

  const double cos_a = 60.0 * z / (4.0 + 225.0 * z * z);
  const double tan_a = (4.0 - 225.0 * z * z) / (60.0 * z);
  const double cos_b = 252.0 * z / (4.0 + 3969.0 * z * z);
  const double tan_b = (4.0 - 3969.0 * z * z) / (252.0 * z);
  sol.r1 = z / cos_a;
  sol.r2 = z / cos_b;
  sol.y1 = z * tan_a;
  sol.y2 = z * tan_b;

  sol.residuals = system_residuals(sol.x, sol.r1, sol.r2, sol.y1, sol.y2);
  const double q = 893025.0 * sol.lambda * sol.lambda - 52920.0 * sol.lambda + 16.0;
  const double q_scale = 893025.0 * sol.lambda * sol.lambda + 52920.0 * sol.lambda + 16.0;
  sol.quadratic_residual = std::abs(q) / q_scale;
  return sol;
}

TripleTangencySolution triple_tangency_newton() {
  const std::array<std::array<double, 5>, 5> starts = {{
      {0.03, 0.03, 0.01, 0.02, 0.005},
      {0.035, 0.07, 0.02, 0.065, 0.011},
      {0.02, 0.05, 0.02, 0.05, 0.01},
      {0.05, 0.08, 0.03, 0.07, 0.02},
      {0.04, 0.06, 0.025, 0.055, 0.015},
  }};

  for (const auto& start : starts) {
    double x = start[0], r1 = start[1], r2 = start[2], y1 = start[3], y2 = start[4];
    std::array<double, 5> f = system_residuals(x, r1, r2, y1, y2);
    int iter = 0;
    bool ok = false;
    for (; iter < 500; ++iter) {
      if (max_abs(f) < 1e-14) {
        ok = true;
        break;
      }
      std::array<std::array<double, 5>, 5> J{};
      // rows: the five equations; columns: x, r1, r2, y1, y2
      J[0] = {0.5 * x, -2.0 * r1, 0.0, 2.0 * y1, 0.0};
      J[1] = {0.5 * x, 0.0, -2.0 * r2, 0.0, 2.0 * y2};
      J[2] = {8.0 * x, -2.0 * (1.0 + r1), 0.0, 2.0 * (1.0 + y1), 0.0};
      J[3] = {32.0 * x, 0.0, -2.0 * (1.0 + r2), 0.0, 2.0 * (1.0 + y2)};
      J[4] = {8.0 * x, -2.0 * (r1 + r2), -2.0 * (r1 + r2), 2.0 * (y1 - y2),
              -2.0 * (y1 - y2)};
      std::array<double, 5> dx{};
      if (!solve5(J, f, dx)) break;
      double step = 1.0;
      const double f0 = max_abs(f);
      for (int halving = 0; halving < 50; ++halving) {
        const std::array<double, 5> trial =
            system_residuals(x + step * dx[0], r1 + step * dx[1], r2 + step * dx[2],
                             y1 + step * dx[3], y2 + step * dx[4]);
        if (max_abs(trial) < f0) {
          x += step * dx[0];
          r1 += step * dx[1];
          r2 += step * dx[2];
          y1 += step * dx[3];
          y2 += step * dx[4];
          f = trial;
          break;
        }
        step *= 0.5;
        if (halving == 49) iter = 500;  // stalled
      }
    }
    if (ok && x > 0.0 && r1 > 0.0 && r2 > 0.0 && y1 > y2 && y2 > 0.0) {
      TripleTangencySolution sol;
      sol.x = x;
      sol.z = 0.5 * x;
      sol.lambda = sol.z * sol.z;
      sol.r1 = r1;
      sol.r2 = r2;
      sol.y1 = y1;
      sol.y2 = y2;
      sol.residuals = system_residuals(x, r1, r2, y1, y2);
      const double q = 893025.0 * sol.lambda * sol.lambda - 52920.0 * sol.lambda + 16.0;
      const double qs = 893025.0 * sol.lambda * sol.lambda + 52920.0 * sol.lambda + 16.0;
      sol.quadratic_residual = std::abs(q) / qs;
      sol.newton_iterations = iter;
      return sol;
    }
  }
  throw NoConvergence("triple tangency: Newton failed from every configured start");
}

double chord_depth_g(int a, double delta) {
  if (a < 0) throw DomainError("chord depth: a must be >= 0");
  if (!(delta > 0.0)) throw DomainError("chord depth: delta must be > 0");
  const double w = a * delta;
  if (w >= 1.0) throw DomainError("chord depth: a*delta must be below 1");
  return w * w / (1.0 + std::sqrt(1.0 - w * w));
}

std::vector<SandwichCase> sandwich_table(double delta) {
  if (!(delta > 0.0) || !(6.0 * delta < 1.0))
    throw DomainError("sandwich table: need 0 < delta < 1/6");
  static constexpr std::array<std::pair<int, int>, 8> kPairs = {{
      {5, 3}, {6, 3}, {2, 2}, {2, 3}, {2, 4}, {3, 3}, {2, 5}, {3, 4},
  }};
  const bool in_range = delta <= 1.0 / 29.0 + 1e-15;
  std::vector<SandwichCase> rows;
  for (const auto& [a1, a2] : kPairs) {
    SandwichCase row;
    row.a1 = a1;
    row.a2 = a2;
    row.delta = delta;
    row.lhs = chord_depth_g(a1, delta) + chord_depth_g(a2, delta);
    row.bound = 0.9 * delta;
    row.pass = row.lhs <= row.bound;
    row.in_claimed_range = in_range;
    rows.push_back(row);
  }
  return rows;
}

TangentPairCheck tangent_pair_check(double delta, const Tolerance& tol) {
  if (!(delta > 0.0) || !std::isfinite(delta))
    throw DomainError("tangent pair check: delta must be > 0");
  TangentPairCheck out;
  out.delta = delta;
  const double h = (1.0 - std::sqrt(3.0) / 2.0) * delta;  // tangency line height

  // Disk through (x0, 0) and (x0 + delta, 0) tangent from below to y = h:
  // center on the bisector at (x0 + delta/2, yc) with yc + r = h.
  auto build = [&](double x0) {
    const double yc = (h * h - delta * delta / 4.0) / (2.0 * h);
    const double r = h - yc;
    return Disk({x0 + 0.5 * delta, yc}, r);
  };
  out.w12 = build(0.0);
  out.w34 = build(2.0 * delta);
  out.radius_err_12 = std::abs(out.w12.radius - delta);
  out.radius_err_34 = std::abs(out.w34.radius - delta);
  out.center_dist = dist(out.w12.center, out.w34.center);
  out.tangency_gap = std::abs(out.center_dist - (out.w12.radius + out.w34.radius));
  out.relation = disks_disjoint(out.w12, out.w34, tol);
  out.circumradius_crosscheck =
      circumcircle({0.0, 0.0}, {delta, 0.0}, {0.5 * delta, h}).radius;
  return out;
}

double clearance_depth(double r, double delta, int halfwidth_steps) {
  if (!(r > 0.0)) throw DomainError("clearance depth: r must be > 0");
  if (halfwidth_steps < 0) throw DomainError("clearance depth: steps must be >= 0");
  const double w = halfwidth_steps * delta;
  if (!(std::abs(w) < r)) throw DomainError("clearance depth: half-width must be below r");
  return w * w / (r + std::sqrt(r * r - w * w));
}

}  // namespace bubblelab
