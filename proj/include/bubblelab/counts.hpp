#pragma once

#include <string>
#include <vector>

#include "bubblelab/bubbles.hpp"

namespace bubblelab {

/// One single-disk counting case: a disk incident to m points forces a
/// sub-family of q1 disks, and q1 >= (m + 1) / 2 must hold.
struct SingleDiskCase {
  int m = 0;
  int q1 = 0;
  bool holds = false;
  bool equality = false;
};

/// One path-component counting case: a component of i large disks has
/// 5i - 4 member disks against the bound (7i - 4 + i)/2 = 4i - 2. The
/// counting applies to components with at least one edge (i >= 2); i = 1
/// is covered by the single-disk table and flagged out of scope here.
struct ComponentCase {
  int i = 0;
  long long q1 = 0;        // 5i - 4
  long long bound = 0;     // 4i - 2
  bool identity_ok = false;  // 2 * bound == (7i - 4) + i
  bool holds = false;
  bool equality = false;
  bool in_scope = false;  // i >= 2
};

struct CountingReport {
  int j = 0, k = 0;
  double delta = 0.0;
  long long n = 0;              // construction size from the count formula
  long long bound_numerator = 0;  // n + j (prelim) or n + (j-1)k (refined)
  long long bound_floor = 0;      // floor(bound_numerator / 2)
  std::string slack;              // the unresolved slack term, spelled out
  std::vector<SingleDiskCase> single_disk_cases;
  std::vector<ComponentCase> component_cases;  // i = 1..100
  bool all_single_disk_hold = false;
  bool component_cases_hold_in_scope = false;
  std::vector<int> component_equality_at;  // i values with equality
};

/// Counting arithmetic behind the lower bounds: construction size, the
/// unnormalized disk-count bound with its slack spelled out, the
/// single-disk case table and the path-component inequality for
/// i = 1..100.
CountingReport counting_bounds(int j, int k, BoundScheme scheme);

}  // namespace bubblelab
