#include "bubblelab/constructions.hpp"

#include <algorithm>
#include <cmath>

namespace bubblelab {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

void GadgetSpec::validate() const {
  if (n < 4) throw BadSpec("gadget: n must be >= 4");
  if (!(radius > 0.0) || !std::isfinite(radius)) throw BadSpec("gadget: radius must be > 0");
  if (!is_finite(center) || !std::isfinite(rotation)) throw BadSpec("gadget: non-finite spec");
}

void ChainSpec::validate() const {
  if (m < 1) throw BadSpec("chain: m must be >= 1");
  if (!(d > 8.0)) throw BadSpec("chain: spacing d must exceed 8 so gadgets cannot overlap");
  if (scale174 != 0.0 && (!(scale174 > 0.0) || !std::isfinite(scale174)))
    throw BadSpec("chain: scale174 must be positive (0 = automatic contact scale)");
}

double ChainSpec::effective_scale() const {
  return scale174 > 0.0 ? scale174 : chain_contact_scale();
}

void LinearSpec::validate() const {
  if (j < 1 || k < 1) throw BadSpec("linear grid: j and k must be >= 1");
  if (!(delta > 0.0)) throw BadSpec("linear grid: delta must be > 0");
  const double steps = 4.0 / delta;
  if (std::abs(steps - std::round(steps)) > 1e-9 * steps)
    throw BadSpec("linear grid: 4/delta must be an integer");
  const double cap = (k == 1) ? 1.0 / 50.0 : 1.0 / 29.0;
  if (delta > cap * (1.0 + 1e-12))
    throw BadSpec("linear grid: delta too large for this k (max 1/50 for k=1, 1/29 otherwise)");
  const double eps = effective_epsilon();
  if (!(eps > 0.0) || eps >= delta / 100.0)
    throw BadSpec("linear grid: epsilon must lie in (0, delta/100)");
}

long long LinearSpec::quarter_steps() const {
  return static_cast<long long>(std::llround(4.0 / delta));
}

PointSet gadget(const GadgetSpec& spec) {
  spec.validate();
  const int nb = spec.n - 1;
  const double step = 2.0 * kPi / nb;
  std::vector<Point> pts;
  std::vector<PointLabel> labels;
  pts.reserve(spec.n);
  pts.push_back(spec.center);
  labels.push_back({0, 0});
  for (int i = 1; i <= nb; ++i) {
    const double a = spec.rotation + step * (i - 1);
    pts.push_back({spec.center.x + spec.radius * std::cos(a),
                   spec.center.y + spec.radius * std::sin(a)});
    labels.push_back({0, i});
  }
  StructureInfo s{StructureKind::Gadget,
                  {{"n", double(spec.n)},
                   {"radius", spec.radius},
                   {"cx", spec.center.x},
                   {"cy", spec.center.y},
                   {"rotation", spec.rotation}}};
  return PointSet(std::move(pts), std::move(labels), std::move(s));
}

PointSet baseline_collinear(int n, double spacing) {
  if (n < 1) throw BadSpec("collinear: n must be >= 1");
  if (!(spacing > 0.0)) throw BadSpec("collinear: spacing must be > 0");
  std::vector<Point> pts;
  std::vector<PointLabel> labels;
  for (int i = 0; i < n; ++i) {
    pts.push_back({spacing * i, 0.0});
    labels.push_back({0, i});
  }
  StructureInfo s{StructureKind::Collinear, {{"n", double(n)}, {"spacing", spacing}}};
  return PointSet(std::move(pts), std::move(labels), std::move(s));
}

double gadget_sandwich_height(int n) {
  const int nb = n - 1;
  double best = 0.0;
  for (int i = 0; i < nb; ++i) best = std::max(best, std::sin(2.0 * kPi * i / nb));
  return best;
}

double chain_contact_scale() {
  return gadget_sandwich_height(340) / gadget_sandwich_height(174);
}

PointSet alternating_chain(const ChainSpec& spec) {
  spec.validate();
  const double scale = spec.effective_scale();
  std::vector<Point> pts;
  std::vector<PointLabel> labels;
  pts.reserve(std::size_t(514) * spec.m);
  for (int g = 0; g < 2 * spec.m; ++g) {
    const bool small = (g % 2 == 0);  // 174-gadget on even slots
    const int n = small ? 174 : 340;
    const double radius = small ? scale : 1.0;
    const Point center{spec.d * g, 0.0};
    const int nb = n - 1;
    const double step = 2.0 * kPi / nb;
    pts.push_back(center);
    labels.push_back({g, 0});
    for (int i = 1; i <= nb; ++i) {
      const double a = step * (i - 1);
      pts.push_back({center.x + radius * std::cos(a), center.y + radius * std::sin(a)});
      labels.push_back({g, i});
    }
  }
  StructureInfo s{StructureKind::Chain,
                  {{"m", double(spec.m)},
                   {"d", spec.d},
                   {"scale174", scale},
                   {"n", double(514) * spec.m}}};
  return PointSet(std::move(pts), std::move(labels), std::move(s));
}

PointSet linear_grid(const LinearSpec& spec) {
  spec.validate();
  const long long q = spec.quarter_steps();  // 4/delta
  const double eps = spec.effective_epsilon();
  std::vector<Point> pts;
  std::vector<PointLabel> labels;
  const int lines = 2 * spec.k + 1;
  for (int line = 1; line <= lines; ++line) {
    const double y = 2.0 * (line - 1);
    if (line % 2 == 1) {
      // Dense line; the 3rd, 7th, 11th, ... are shifted right by epsilon.
      const double shift = (line % 4 == 3) ? eps : 0.0;
      const long long count = (q + 1) * spec.j + 1;
      for (long long i = 0; i < count; ++i) {
        pts.push_back({shift + spec.delta * i, y});
        labels.push_back({line, int(i)});
      }
    } else {
      for (long long i = 0; i <= spec.j; ++i) {
        pts.push_back({(4.0 + spec.delta) * i, y});
        labels.push_back({line, int(i)});
      }
    }
  }
  StructureInfo s{StructureKind::Grid,
                  {{"j", double(spec.j)},
                   {"k", double(spec.k)},
                   {"delta", spec.delta},
                   {"epsilon", eps},
                   {"n", double(pts.size())}}};
  return PointSet(std::move(pts), std::move(labels), std::move(s));
}

long long linear_grid_count(const LinearSpec& spec) {
  spec.validate();
  const long long q = spec.quarter_steps();
  return ((spec.k + 1) * (q + 1) + spec.k) * spec.j + (2 * spec.k + 1);
}

PointSet padded_to(int n_target, const PointSet& base, double line_y, double spacing,
                   double offset_x) {
  if (n_target < int(base.size()))
    throw TargetTooSmall("padded_to: target below current point count");
  if (!(spacing > 0.0)) throw BadSpec("padded_to: spacing must be > 0");
  std::vector<Point> pts = base.points();
  std::vector<PointLabel> labels =
      base.has_labels() ? base.labels() : std::vector<PointLabel>(base.size(), PointLabel{0, 0});
  const int extra = n_target - int(base.size());
  for (int i = 0; i < extra; ++i) {
    pts.push_back({offset_x + spacing * i, line_y});
    labels.push_back({-1, i});
  }
  StructureInfo s = base.structure();
  s.params["padded_extra"] = double(extra);
  s.params["n"] = double(n_target);
  return PointSet(std::move(pts), std::move(labels), std::move(s));
}

}  // namespace bubblelab
