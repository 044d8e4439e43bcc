#include "bubblelab/counts.hpp"

#include <cmath>

namespace bubblelab {

CountingReport counting_bounds(int j, int k, BoundScheme scheme) {
  if (j < 1 || k < 1) throw BadSpec("counting_bounds: j and k must be >= 1");
  if (scheme == BoundScheme::Alternating)
    throw BadSpec("counting_bounds: the alternating scheme has no (j, k) grid");

  CountingReport rep;
  rep.j = j;
  rep.k = scheme == BoundScheme::PrelimLinear ? 1 : k;
  rep.delta = scheme == BoundScheme::PrelimLinear ? 1.0 / 60.0 : 1.0 / 29.0;

  // Point count of the (k+1)-dense/k-sparse line construction; integer
  // arithmetic on q = 4/delta.
  const long long q = std::llround(4.0 / rep.delta);
  rep.n = ((rep.k + 1) * (q + 1) + rep.k) * (long long)j + (2 * rep.k + 1);

  if (scheme == BoundScheme::PrelimLinear) {
    rep.bound_numerator = rep.n + j;
    rep.slack = "-O(1)";
  } else {
    rep.bound_numerator = rep.n + (long long)(j - 1) * rep.k;
    rep.slack = "-O(k)";
  }
  rep.bound_floor = rep.bound_numerator / 2;

  // Single-disk cases (m incident points vs forced family size q1).
  static constexpr std::pair<int, int> kSingle[] = {{1, 1}, {4, 3}, {5, 3}, {7, 5}, {8, 5}};
  rep.all_single_disk_hold = true;
  for (const auto& [m, q1] : kSingle) {
    SingleDiskCase c;
    c.m = m;
    c.q1 = q1;
    c.holds = 2 * q1 >= m + 1;
    c.equality = 2 * q1 == m + 1;
    rep.all_single_disk_hold = rep.all_single_disk_hold && c.holds;
    rep.single_disk_cases.push_back(c);
  }

  rep.component_cases_hold_in_scope = true;
  for (int i = 1; i <= 100; ++i) {
    ComponentCase c;
    c.i = i;
    c.q1 = 5LL * i - 4;
    c.bound = 4LL * i - 2;
    c.identity_ok = 2 * c.bound == (7LL * i - 4) + i;
    c.holds = c.q1 >= c.bound;
    c.equality = c.q1 == c.bound;
    c.in_scope = i >= 2;  // a one-vertex component has no edges to count
    if (c.in_scope && !c.holds) rep.component_cases_hold_in_scope = false;
    if (c.equality) rep.component_equality_at.push_back(i);
    rep.component_cases.push_back(c);
  }
  return rep;
}

}  // namespace bubblelab
