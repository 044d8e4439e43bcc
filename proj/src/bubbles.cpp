#include "bubblelab/bubbles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "bubblelab/circular.hpp"
#include "bubblelab/delaunay.hpp"
#include "bubblelab/matching.hpp"

namespace bubblelab {

Disk pencil_disk(Point p, Point q, double t) {
  const double len = dist(p, q);
  if (!(len > 0.0)) throw BadSpec("pencil_disk: coincident points");
  const Point u{(q.x - p.x) / len, (q.y - p.y) / len};
  const Point nhat{-u.y, u.x};
  const Point mid{0.5 * (p.x + q.x), 0.5 * (p.y + q.y)};
  return Disk(mid + t * nhat, std::sqrt(0.25 * len * len + t * t));
}

std::optional<PencilInterval> pencil_interval(int p_idx, int q_idx, const PointSet& ps,
                                              const Tolerance&, double t_max) {
  const int n = int(ps.size());
  if (p_idx == q_idx || p_idx < 0 || q_idx < 0 || p_idx >= n || q_idx >= n)
    throw BadSpec("pencil_interval: invalid point indices");
  const Point p = ps[p_idx], q = ps[q_idx];
  const double len = dist(p, q);
  const Point u{(q.x - p.x) / len, (q.y - p.y) / len};
  const Point nhat{-u.y, u.x};
  const Point mid{0.5 * (p.x + q.x), 0.5 * (p.y + q.y)};
  const double clamp = t_max > 0.0 ? t_max : 1e6 * std::max(ps.extent(), len);

  PencilInterval I;
  I.p = p_idx;
  I.q = q_idx;
  I.t_lo = -clamp;
  I.t_hi = clamp;
  I.lo_clamped = I.hi_clamped = true;

  // A third point w is strictly inside the circle at parameter t exactly
  // when a t + c < 0, with a and c as below; each w therefore contributes
  // one half-line constraint (or kills the pencil when it always holds).
  for (int wi = 0; wi < n; ++wi) {
    if (wi == p_idx || wi == q_idx) continue;
    const Point v = mid - ps[wi];
    const double a = 2.0 * dot(v, nhat);
    const double c = dot(v, v) - 0.25 * len * len;
    if (std::abs(a) <= 1e-14 * (2.0 * norm(v) + len)) {
      if (c < 0.0) return std::nullopt;  // inside every circle of the pencil
      continue;
    }
    const double t_crit = -c / a;
    if (a > 0.0) {
      if (t_crit > I.t_lo) {
        I.t_lo = t_crit;
        I.lo_open = true;
        I.lo_clamped = false;
      }
    } else {
      if (t_crit < I.t_hi) {
        I.t_hi = t_crit;
        I.hi_open = true;
        I.hi_clamped = false;
      }
    }
  }
  if (I.t_lo > I.t_hi) return std::nullopt;
  return I;
}

double pencil_pick(const PencilInterval& interval, double pair_dist) {
  const double lo = interval.t_lo, hi = interval.t_hi;
  if (hi - lo <= 8.0 * pair_dist) return 0.5 * (lo + hi);
  const double a = lo + pair_dist, b = hi - pair_dist;
  return std::min(std::max(0.0, a), b);
}

namespace {

// Deterministic singleton placement: a small disk supported by the point,
// kept empty and (when required) disjoint from every disk already placed.
Disk place_singleton(int pi, const PointSet& ps, const std::vector<Disk>& others,
                     const std::vector<Point>& directions, bool require_disjoint,
                     const Tolerance& tol) {
  const Point p = ps[pi];
  double dmin = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < ps.size(); ++i)
    if (int(i) != pi) dmin = std::min(dmin, dist(p, ps[i]));
  if (!std::isfinite(dmin)) dmin = 1.0;  // lone point

  double rho = 0.2 * dmin;
  for (int shrink = 0; shrink < 80; ++shrink, rho *= 0.5) {
    for (const Point& dir : directions) {
      Disk cand(p + rho * dir, rho);
      // Emptiness holds as long as the disk stays within dmin of p.
      bool ok = 2.0 * rho < dmin || is_empty(cand, ps, tol);
      if (ok && require_disjoint)
        for (const Disk& other : others)
          if (disks_disjoint(cand, other, tol) == DiskRelation::Overlapping) {
            ok = false;
            break;
          }
      if (ok) return cand;
    }
  }
  return Disk(p + (1e-12 * dmin) * directions[0], 1e-12 * dmin);
}

struct PairBubble {
  int a = 0, b = 0;
  PencilInterval interval;
  double t = 0.0;
  double pair_dist = 0.0;
  double window_lo = 0.0, window_hi = 0.0;
  Disk disk{{0, 0}, 1};
  bool alive = true;
};

double overlap_amount(const Disk& a, const Disk& b, double eps) {
  const double gap = dist(a.center, b.center) - (a.radius + b.radius);
  return std::max(0.0, -gap - eps);  // positive only when truly overlapping
}

}  // namespace

BubbleSet bubble_from_matching(const PointSet& ps, const Tolerance& tol) {
  BubbleSet out;
  const int n = int(ps.size());
  if (n == 0) return out;

  const Triangulation tri = delaunay(ps, tol);
  const Matching mat = maximum_matching(n, tri.edges);
  const double extent = ps.extent();
  std::vector<int> singles = mat.unmatched;
  for (const auto& [a, b] : mat.pairs) {
    const auto I = pencil_interval(a, b, ps, tol);
    if (!I) {
      singles.push_back(a);
      singles.push_back(b);
      continue;
    }
    // Keep the representative inside a conditioned window so the disk can
    // be verified against the incidence tolerance.
    const double len = dist(ps[a], ps[b]);
    const double cap = std::max(16.0 * len, 2.0 * extent);
    double t = pencil_pick(*I, len);
    if (I->t_lo <= cap && I->t_hi >= -cap)
      t = std::min(std::max(t, std::max(I->t_lo, -cap)), std::min(I->t_hi, cap));
    out.disks.push_back(pencil_disk(ps[a], ps[b], t));
    out.supports[a] = int(out.disks.size()) - 1;
    out.supports[b] = int(out.disks.size()) - 1;
  }
  std::sort(singles.begin(), singles.end());
  const std::vector<Point> dirs = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  for (int s : singles) {
    out.disks.push_back(place_singleton(s, ps, out.disks, dirs, false, tol));
    out.supports[s] = int(out.disks.size()) - 1;
  }
  return out;
}

SolveResult disjoint_bubbles(const PointSet& ps, std::uint64_t seed, Effort effort,
                             const Tolerance& tol) {
  tol.validate();
  SolveResult result;
  std::ostringstream log;
  const int n = int(ps.size());
  if (n == 0) {
    result.method_log = "empty input";
    return result;
  }

  const int grid_pts = effort == Effort::Fast ? 17 : 49;
  const int max_sweeps = effort == Effort::Fast ? 24 : 96;

  // The seed only permutes the singleton direction probe order; all other
  // steps are index-ordered and deterministic.
  std::mt19937_64 rng(seed);
  std::vector<Point> dirs;
  for (int i = 0; i < 16; ++i) {
    const double a = 2.0 * 3.14159265358979323846 * i / 16.0;
    dirs.push_back({std::cos(a), std::sin(a)});
  }
  std::shuffle(dirs.begin(), dirs.end(), rng);

  const Triangulation tri = delaunay(ps, tol);
  const Matching mat = maximum_matching(n, tri.edges);
  log << "matching: " << mat.pairs.size() << " pairs, " << mat.unmatched.size()
      << " unmatched\n";

  std::vector<PairBubble> pairs;
  std::vector<int> singles = mat.unmatched;
  const double extent = ps.extent();
  for (const auto& [a, b] : mat.pairs) {
    const auto I = pencil_interval(a, b, ps, tol);
    if (!I) {
      singles.push_back(a);
      singles.push_back(b);
      continue;
    }
    PairBubble pb;
    pb.a = a;
    pb.b = b;
    pb.interval = *I;
    pb.pair_dist = dist(ps[a], ps[b]);
    // Candidate window kept small enough that incidence checks on the
    // resulting disks stay far above double-precision noise. Pairs whose
    // pencil lives only at enormous offsets cannot be certified at the
    // working tolerance and are split into singletons instead.
    const double cap = std::max(16.0 * pb.pair_dist, 2.0 * extent);
    pb.window_lo = std::max(I->t_lo, -cap);
    pb.window_hi = std::min(I->t_hi, cap);
    if (pb.window_lo > pb.window_hi) {
      singles.push_back(a);
      singles.push_back(b);
      log << "pair (" << a << "," << b << ") only has far-out empty circles; split\n";
      continue;
    }
    pb.t = std::min(std::max(pencil_pick(*I, pb.pair_dist), pb.window_lo), pb.window_hi);
    pb.disk = pencil_disk(ps[a], ps[b], pb.t);
    pairs.push_back(pb);
  }

  std::vector<Disk> singleton_disks;
  std::vector<int> singleton_points;
  auto replace_singletons = [&]() {
    singleton_disks.clear();
    std::sort(singleton_points.begin(), singleton_points.end());
    for (int s : singleton_points) {
      std::vector<Disk> fixed;
      for (const PairBubble& pb : pairs)
        if (pb.alive) fixed.push_back(pb.disk);
      for (const Disk& d : singleton_disks) fixed.push_back(d);
      singleton_disks.push_back(place_singleton(s, ps, fixed, dirs, true, tol));
    }
  };
  singleton_points = singles;
  replace_singletons();

  auto total_overlap_of = [&](const Disk& d, int skip_pair) {
    double sum = 0.0;
    for (int j = 0; j < int(pairs.size()); ++j)
      if (pairs[j].alive && j != skip_pair)
        sum += overlap_amount(d, pairs[j].disk, tol.eps_disjoint);
    for (const Disk& sd : singleton_disks) sum += overlap_amount(d, sd, tol.eps_disjoint);
    return sum;
  };

  int demotions = 0;
  while (true) {
    // Local search: move each overlapping pair disk to the best parameter on
    // a grid over its window, repeating until stable.
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
      bool changed = false;
      for (int i = 0; i < int(pairs.size()); ++i) {
        PairBubble& pb = pairs[i];
        if (!pb.alive) continue;
        const double current = total_overlap_of(pb.disk, i);
        if (current <= 0.0) continue;
        double best_t = pb.t;
        double best_val = current;
        for (int gidx = 0; gidx <= grid_pts; ++gidx) {
          const double t =
              pb.window_lo + (pb.window_hi - pb.window_lo) * gidx / double(grid_pts);
          const Disk cand = pencil_disk(ps[pb.a], ps[pb.b], t);
          const double val = total_overlap_of(cand, i);
          if (val < best_val - 1e-15) {
            best_val = val;
            best_t = t;
          }
        }
        if (best_t != pb.t) {
          pb.t = best_t;
          pb.disk = pencil_disk(ps[pb.a], ps[pb.b], pb.t);
          changed = true;
        }
      }
      replace_singletons();
      if (!changed) break;
    }

    // Find the worst remaining overlap among pair disks.
    int worst_i = -1, worst_j = -1;
    double worst_gap = 0.0;
    for (int i = 0; i < int(pairs.size()); ++i) {
      if (!pairs[i].alive) continue;
      for (int j = i + 1; j < int(pairs.size()); ++j) {
        if (!pairs[j].alive) continue;
        const double gap = dist(pairs[i].disk.center, pairs[j].disk.center) -
                           (pairs[i].disk.radius + pairs[j].disk.radius);
        if (gap < -tol.eps_disjoint && (worst_i < 0 || gap < worst_gap)) {
          worst_gap = gap;
          worst_i = i;
          worst_j = j;
        }
      }
      for (const Disk& sd : singleton_disks) {
        const double gap =
            dist(pairs[i].disk.center, sd.center) - (pairs[i].disk.radius + sd.radius);
        if (gap < -tol.eps_disjoint && (worst_i < 0 || gap < worst_gap)) {
          worst_gap = gap;
          worst_i = i;
          worst_j = -1;
        }
      }
    }
    if (worst_i < 0) break;

    // Demote the lower-indexed pair disk of the worst overlap into two
    // singletons and try again.
    const int victim = worst_i;
    pairs[victim].alive = false;
    singleton_points.push_back(pairs[victim].a);
    singleton_points.push_back(pairs[victim].b);
    replace_singletons();
    ++demotions;
    log << "demoted pair (" << pairs[victim].a << "," << pairs[victim].b
        << "), gap " << worst_gap << (worst_j >= 0 ? "" : " (vs singleton)") << "\n";
  }

  BubbleSet bubble;
  for (const PairBubble& pb : pairs) {
    if (!pb.alive) continue;
    bubble.disks.push_back(pb.disk);
    bubble.supports[pb.a] = int(bubble.disks.size()) - 1;
    bubble.supports[pb.b] = int(bubble.disks.size()) - 1;
  }
  for (std::size_t i = 0; i < singleton_disks.size(); ++i) {
    bubble.disks.push_back(singleton_disks[i]);
    bubble.supports[singleton_points[i]] = int(bubble.disks.size()) - 1;
  }

  result.bubble = std::move(bubble);
  result.upper = int(result.bubble.disks.size());
  const StructureKind kind = ps.structure().kind;
  if (kind == StructureKind::Collinear || kind == StructureKind::Gadget ||
      kind == StructureKind::Chain) {
    try {
      result.lower = certified_lower(ps, kind);
      log << "certified lower bound (" << to_string(kind) << "): " << result.lower << "\n";
    } catch (const std::exception& e) {
      log << "no certificate: " << e.what() << "\n";
    }
  } else if (kind == StructureKind::Grid) {
    log << "grid bound carries an unresolved O(k) slack; lower left at 0\n";
  }
  log << "demotions: " << demotions << "\nfinal disks: " << result.upper << "\n";
  result.method_log = log.str();
  return result;
}

ValidationReport validate(const PointSet& ps, const BubbleSet& bubble, bool require_disjoint,
                          const Tolerance& tol) {
  ValidationReport rep;
  rep.checked_points = int(ps.size());
  rep.checked_disks = int(bubble.disks.size());

  for (int i = 0; i < int(ps.size()); ++i) {
    const auto it = bubble.supports.find(i);
    if (it == bubble.supports.end()) {
      rep.violations.push_back({"support", i, -1, 0.0, "point has no supported disk"});
      continue;
    }
    if (it->second < 0 || it->second >= int(bubble.disks.size())) {
      rep.violations.push_back({"support", i, it->second, 0.0, "disk index out of range"});
      continue;
    }
    const Disk& d = bubble.disks[it->second];
    const double err = std::abs(dist(d.center, ps[i]) - d.radius);
    if (err > tol.eps_incidence)
      rep.violations.push_back(
          {"support", i, it->second, err, "point is not on its disk boundary"});
  }

  for (int di = 0; di < int(bubble.disks.size()); ++di) {
    const Disk& d = bubble.disks[di];
    for (int pi = 0; pi < int(ps.size()); ++pi) {
      const double depth = d.radius - dist(d.center, ps[pi]);
      if (depth > tol.eps_empty)
        rep.violations.push_back({"empty", di, pi, depth, "point strictly inside disk"});
    }
  }

  if (require_disjoint) {
    for (int i = 0; i < int(bubble.disks.size()); ++i)
      for (int j = i + 1; j < int(bubble.disks.size()); ++j) {
        const double gap = dist(bubble.disks[i].center, bubble.disks[j].center) -
                           (bubble.disks[i].radius + bubble.disks[j].radius);
        if (gap < -tol.eps_disjoint)
          rep.violations.push_back({"overlap", i, j, gap, "disks overlap"});
      }
  }

  rep.pass = rep.violations.empty();
  return rep;
}

namespace {

double struct_param(const PointSet& ps, const std::string& key) {
  const auto it = ps.structure().params.find(key);
  if (it == ps.structure().params.end())
    throw StructureMismatch("certified_lower: structure parameter missing: " + key);
  return it->second;
}

bool is_padded(const PointSet& ps) {
  const auto it = ps.structure().params.find("padded_extra");
  return it != ps.structure().params.end() && it->second > 0.0;
}

}  // namespace

int certified_lower(const PointSet& ps, StructureKind structure) {
  if (structure == StructureKind::None) return 0;
  if (!ps.has_labels() || ps.structure().kind == StructureKind::None)
    throw StructureMismatch("certified_lower: point set carries no construction labels");
  if (ps.structure().kind != structure)
    throw StructureMismatch("certified_lower: point set was generated as " +
                            to_string(ps.structure().kind) + ", not " + to_string(structure));
  const int n = int(ps.size());

  switch (structure) {
    case StructureKind::Collinear: {
      // Verify actual collinearity so padded or edited sets cannot claim it.
      for (std::size_t i = 2; i < ps.size(); ++i) {
        const Point a = ps[0], b = ps[1], c = ps[i];
        if (std::abs(cross(b - a, c - a)) > 1e-9 * std::max(1.0, dist(a, b) * dist(a, c)))
          throw StructureMismatch("certified_lower: points are not collinear");
      }
      return (n + 1) / 2;
    }
    case StructureKind::Gadget: {
      if (is_padded(ps)) return 0;
      const int gn = int(struct_param(ps, "n"));
      if (gn != n) throw StructureMismatch("certified_lower: gadget size mismatch");
      if (gn % 2 != 0 || gn < 4) return (gn - 1 + 1) / 2;
      if (gn >= 174) {
        const CaseReport rep = case_report_disk(gn, "case2");
        if (rep.margin > 0.0) return gn / 2 + 1;
      }
      return gn / 2;  // the two-consecutive-supports counting bound
    }
    case StructureKind::Chain: {
      if (is_padded(ps)) return 0;
      const int m = int(struct_param(ps, "m"));
      if (514 * m != n) throw StructureMismatch("certified_lower: chain size mismatch");
      // The chain bound needs the disk case at n = 174 and all three line
      // cases at k = 340 to have positive margins.
      if (case_report_disk(174, "case2").margin <= 0.0) return 0;
      for (const char* sub : {"i", "ii", "iii"})
        if (case_report_line(340, sub).margin <= 0.0) return 0;
      return 257 * m + 2 * m;
    }
    case StructureKind::Grid: {
      const int j = int(struct_param(ps, "j"));
      const int k = int(struct_param(ps, "k"));
      return (n + (j - 1) * k) / 2;  // unnormalized; carries -O(k) slack
    }
    case StructureKind::None:
      break;
  }
  return 0;
}

long long bound_constant(BoundScheme scheme) {
  switch (scheme) {
    case BoundScheme::PrelimLinear: {
      const double delta = 1.0 / 60.0;
      return std::llround(16.0 / delta + 6.0);
    }
    case BoundScheme::RefinedGrid: {
      const double delta = 1.0 / 29.0;
      return std::llround(8.0 / delta + 4.0);
    }
    case BoundScheme::Alternating:
      return (174 + 340) / 2;
  }
  throw BadSpec("bound_constant: unknown scheme");
}

}  // namespace bubblelab
