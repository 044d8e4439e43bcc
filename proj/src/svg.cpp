#include "bubblelab/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "bubblelab/circular.hpp"
#include "bubblelab/constructions.hpp"

namespace bubblelab {

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

// World-to-screen mapper with a y flip and 5% margin.
class Canvas {
 public:
  Canvas(int w, int h) : w_(w), h_(h) {}

  void include(Point p, double radius = 0.0) {
    xlo_ = std::min(xlo_, p.x - radius);
    xhi_ = std::max(xhi_, p.x + radius);
    ylo_ = std::min(ylo_, p.y - radius);
    yhi_ = std::max(yhi_, p.y + radius);
  }

  void freeze() {
    const double spanx = std::max(xhi_ - xlo_, 1e-9);
    const double spany = std::max(yhi_ - ylo_, 1e-9);
    scale_ = 0.9 * std::min(w_ / spanx, h_ / spany);
    cx_ = 0.5 * (xlo_ + xhi_);
    cy_ = 0.5 * (ylo_ + yhi_);
  }

  double sx(double x) const { return w_ / 2.0 + (x - cx_) * scale_; }
  double sy(double y) const { return h_ / 2.0 - (y - cy_) * scale_; }
  double sr(double r) const { return r * scale_; }

  void circle(Point c, double r, const std::string& stroke, const std::string& fill,
              double width = 1.0, double opacity = 1.0) {
    body_ << "<circle cx=\"" << fmt(sx(c.x)) << "\" cy=\"" << fmt(sy(c.y)) << "\" r=\""
          << fmt(sr(r)) << "\" stroke=\"" << stroke << "\" fill=\"" << fill
          << "\" stroke-width=\"" << fmt(width) << "\" fill-opacity=\"" << fmt(opacity)
          << "\"/>\n";
  }

  void dot(Point p, double px_radius, const std::string& fill) {
    body_ << "<circle cx=\"" << fmt(sx(p.x)) << "\" cy=\"" << fmt(sy(p.y)) << "\" r=\""
          << fmt(px_radius) << "\" fill=\"" << fill << "\"/>\n";
  }

  void hline(double y, const std::string& stroke, const std::string& dash = "") {
    body_ << "<line x1=\"0\" y1=\"" << fmt(sy(y)) << "\" x2=\"" << w_ << "\" y2=\""
          << fmt(sy(y)) << "\" stroke=\"" << stroke << "\" stroke-width=\"0.8\"";
    if (!dash.empty()) body_ << " stroke-dasharray=\"" << dash << "\"";
    body_ << "/>\n";
  }

  void text(Point p, const std::string& s) {
    body_ << "<text x=\"" << fmt(sx(p.x)) << "\" y=\"" << fmt(sy(p.y))
          << "\" font-size=\"12\" font-family=\"sans-serif\">" << s << "</text>\n";
  }

  std::string finish() const {
    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w_ << "\" height=\"" << h_
        << "\" viewBox=\"0 0 " << w_ << " " << h_ << "\">\n"
        << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
        << body_.str() << "</svg>\n";
    return out.str();
  }

 private:
  int w_, h_;
  double xlo_ = 1e300, xhi_ = -1e300, ylo_ = 1e300, yhi_ = -1e300;
  double scale_ = 1.0, cx_ = 0.0, cy_ = 0.0;
  std::ostringstream body_;
};

double param(const FigureSpec& spec, const std::string& key, double fallback) {
  const auto it = spec.params.find(key);
  return it == spec.params.end() ? fallback : it->second;
}

void draw_points(Canvas& c, const PointSet& ps, const std::string& fill) {
  for (const Point& p : ps.points()) c.dot(p, 2.2, fill);
}

std::string figure_gadget(const FigureSpec& spec) {
  const int n = int(param(spec, "n", 12));
  const PointSet ps = gadget({n, 1.0, {0.0, 0.0}, 0.0});
  Canvas c(spec.width, spec.height);
  c.include({-1.1, -1.1});
  c.include({1.1, 1.1});
  c.freeze();
  c.circle({0, 0}, 1.0, "#888", "none");
  draw_points(c, ps, "#222");
  c.dot(ps[0], 3.0, "#c22");
  if (spec.annotations) c.text({0.04, 0.04}, "center");
  return c.finish();
}

std::string figure_case(const FigureSpec& spec) {
  const int n = int(param(spec, "n", 174));
  const int case_no = int(param(spec, "case", 2));
  const CaseRealization real = realize_case(n, case_no == 1 ? "case1" : "case2");
  Canvas c(spec.width, spec.height);
  // Zoom on the contact region rather than the whole gadget.
  c.include(real.Q.center, real.Q.radius);
  c.include(real.Q1.center, 2.0 * real.Q1.radius);
  c.include(real.Q2.center, 2.0 * real.Q2.radius);
  c.freeze();
  c.circle({0, 0}, 1.0, "#bbb", "none");
  c.circle(real.Q.center, real.Q.radius, "#06c", "#06c", 1.2, 0.08);
  c.circle(real.Q1.center, real.Q1.radius, "#c60", "#c60", 1.2, 0.25);
  c.circle(real.Q2.center, real.Q2.radius, "#083", "#083", 1.2, 0.25);
  draw_points(c, real.points, "#222");
  if (spec.annotations) {
    c.text(real.Q1.center, "Q1");
    c.text(real.Q2.center, "Q2");
    c.text(real.Q.center, "Q");
  }
  return c.finish();
}

std::string figure_chain(const FigureSpec& spec) {
  ChainSpec cs;
  cs.m = int(param(spec, "m", 1));
  cs.d = param(spec, "d", 12.0);  // compressed for visibility; generator default is 1e4
  const PointSet ps = alternating_chain(cs);
  Canvas c(spec.width, std::max(spec.height / 3, 160));
  for (const Point& p : ps.points()) c.include(p, 0.1);
  c.freeze();
  const double h = gadget_sandwich_height(340);
  c.hline(h, "#c22", "4 3");
  c.hline(-h, "#c22", "4 3");
  c.hline(0.0, "#ccc");
  for (int g = 0; g < 2 * cs.m; ++g)
    c.circle({cs.d * g, 0.0}, g % 2 == 0 ? cs.effective_scale() : 1.0, "#888", "none");
  draw_points(c, ps, "#222");
  return c.finish();
}

std::string figure_linear(const FigureSpec& spec, bool with_path) {
  LinearSpec ls;
  ls.j = int(param(spec, "j", 2));
  ls.k = int(param(spec, "k", 1));
  ls.delta = param(spec, "delta", ls.k == 1 ? 1.0 / 60.0 : 1.0 / 29.0);
  const PointSet ps = linear_grid(ls);
  Canvas c(spec.width, spec.height);
  for (const Point& p : ps.points()) c.include(p, 0.2);
  c.freeze();
  for (int line = 1; line <= 2 * ls.k + 1; ++line)
    c.hline(2.0 * (line - 1), line % 2 == 1 ? "#ddd" : "#eee");
  draw_points(c, ps, "#222");
  if (with_path) {
    // A path of three large disks pressing on the middle dense line from
    // alternating sides, centers a couple of spacings apart horizontally.
    const double y_mid = 2.0 * ls.k;
    const double x0 = 0.5 * (4.0 + ls.delta) * ls.j;
    for (int i = 0; i < 3; ++i) {
      const double side = (i % 2 == 0) ? 1.0 : -1.0;
      const Point center{x0 + 2.0 * ls.delta * i, y_mid + side * 1.0};
      c.circle(center, 1.0, i % 2 == 0 ? "#06c" : "#c60", "none", 1.4);
      c.dot({center.x, y_mid}, 2.6, "#c22");
    }
    if (spec.annotations) c.text({x0, y_mid + 1.2}, "path of pressing disks");
  }
  return c.finish();
}

}  // namespace

std::string render_figure(const FigureSpec& spec) {
  if (spec.width <= 0 || spec.height <= 0) throw BadSpec("figure: dimensions must be positive");
  if (spec.kind == "gadget") return figure_gadget(spec);
  if (spec.kind == "case_realization") return figure_case(spec);
  if (spec.kind == "chain") return figure_chain(spec);
  if (spec.kind == "linear") return figure_linear(spec, false);
  if (spec.kind == "path_in_G") return figure_linear(spec, true);
  throw BadSpec("figure: unknown kind " + spec.kind);
}

}  // namespace bubblelab
