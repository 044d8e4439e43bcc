#include "bubblelab/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "bubblelab/bubbles.hpp"
#include "bubblelab/circular.hpp"
#include "bubblelab/constructions.hpp"
#include "bubblelab/counts.hpp"
#include "bubblelab/jsonval.hpp"
#include "bubblelab/linear.hpp"
#include "bubblelab/svg.hpp"

namespace bubblelab::cli {

namespace {

// Accepts plain decimals and fractions like "1/29".
double parse_real(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return std::stod(text);
    const double num = std::stod(text.substr(0, slash));
    const double den = std::stod(text.substr(slash + 1));
    if (den == 0.0) throw BadSpec("division by zero in fraction: " + text);
    return num / den;
  } catch (const std::invalid_argument&) {
    throw BadSpec("cannot parse number: " + text);
  }
}

struct EpsFlags {
  std::string incidence, empty, disjoint;

  Tolerance resolve() const {
    Tolerance tol;
    if (const char* env = std::getenv("BUBBLELAB_EPS")) {
      const double e = parse_real(env);
      tol.eps_incidence = tol.eps_empty = tol.eps_disjoint = e;
    }
    if (!incidence.empty()) tol.eps_incidence = parse_real(incidence);
    if (!empty.empty()) tol.eps_empty = parse_real(empty);
    if (!disjoint.empty()) tol.eps_disjoint = parse_real(disjoint);
    tol.validate();
    return tol;
  }
};

void emit(const JsonValue& doc, const std::string& out_path, std::ostream& out) {
  const std::string text = doc.dump(1) + "\n";
  if (out_path.empty()) {
    out << text;
  } else {
    std::ofstream f(out_path);
    if (!f) throw IoError("cannot write output file: " + out_path);
    f << text;
  }
}

void emit_text(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << text;
  } else {
    std::ofstream f(out_path);
    if (!f) throw IoError("cannot write output file: " + out_path);
    f << text;
  }
}

JsonValue tolerances_json(const Tolerance& tol) {
  JsonValue t = JsonValue::object();
  t.set("eps_incidence", JsonValue::num(tol.eps_incidence));
  t.set("eps_empty", JsonValue::num(tol.eps_empty));
  t.set("eps_disjoint", JsonValue::num(tol.eps_disjoint));
  return t;
}

JsonValue check_row(const std::string& name, double value, bool pass) {
  JsonValue row = JsonValue::object();
  row.set("name", JsonValue::str(name));
  row.set("value", JsonValue::num(value));
  row.set("pass", JsonValue::boolean(pass));
  return row;
}

std::string round4(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

JsonValue case_json(const CaseReport& rep, bool line_mode) {
  JsonValue c = JsonValue::object();
  c.set(line_mode ? "k" : "n", JsonValue::integer(rep.n_or_k));
  c.set("case_id", JsonValue::str(rep.case_id));
  c.set("theta_rad", JsonValue::num(rep.theta));
  c.set("theta_deg", JsonValue::num(rep.theta * 180.0 / 3.14159265358979323846));
  c.set(line_mode ? "chord_distance" : "r", JsonValue::num(rep.r));
  c.set("d1", JsonValue::num(rep.d1));
  c.set("d2", JsonValue::num(rep.d2));
  c.set("r1", JsonValue::num(rep.r1));
  c.set("r2", JsonValue::num(rep.r2));
  c.set("o1o2", JsonValue::num(rep.o1o2));
  c.set("r1_plus_r2", JsonValue::num(rep.r1_plus_r2));
  c.set("margin", JsonValue::num(rep.margin));
  JsonValue angles = JsonValue::array();
  angles.push(JsonValue::num(rep.phi1 / rep.theta));
  angles.push(JsonValue::num(rep.phi2 / rep.theta));
  angles.push(JsonValue::num(rep.phi12 / rep.theta));
  c.set("angles_over_theta", std::move(angles));
  c.set("scale", JsonValue::num(rep.scale));
  c.set("reconstructed_angles", JsonValue::boolean(rep.reconstructed));
  JsonValue disp = JsonValue::object();
  disp.set("d1", JsonValue::str(round4(rep.d1)));
  disp.set("d2", JsonValue::str(round4(rep.d2)));
  disp.set("r1", JsonValue::str(round4(rep.r1)));
  disp.set("r2", JsonValue::str(round4(rep.r2)));
  disp.set("o1o2", JsonValue::str(round4(rep.o1o2)));
  disp.set("r1_plus_r2", JsonValue::str(round4(rep.r1_plus_r2)));
  c.set("rounded", std::move(disp));
  return c;
}

JsonValue scan_json(const MarginScan& scan) {
  JsonValue s = JsonValue::object();
  JsonValue entries = JsonValue::array();
  for (const MarginEntry& e : scan.entries) {
    JsonValue row = JsonValue::object();
    row.set("n", JsonValue::integer(e.n));
    if (e.margin)
      row.set("margin", JsonValue::num(*e.margin));
    else
      row.set("error", JsonValue::str(e.error));
    entries.push(std::move(row));
  }
  s.set("entries", std::move(entries));
  if (scan.first_positive_n)
    s.set("first_positive_n", JsonValue::integer(*scan.first_positive_n));
  else
    s.set("first_positive_n", JsonValue::null());
  s.set("all_positive", JsonValue::boolean(scan.all_positive));
  return s;
}

JsonValue bubble_json(const BubbleSet& bubble) {
  JsonValue b = JsonValue::object();
  JsonValue disks = JsonValue::array();
  for (const Disk& d : bubble.disks) {
    JsonValue row = JsonValue::object();
    row.set("cx", JsonValue::num(d.center.x));
    row.set("cy", JsonValue::num(d.center.y));
    row.set("r", JsonValue::num(d.radius));
    disks.push(std::move(row));
  }
  b.set("disks", std::move(disks));
  JsonValue supports = JsonValue::object();
  for (const auto& [pt, di] : bubble.supports)
    supports.set(std::to_string(pt), JsonValue::integer(di));
  b.set("supports", std::move(supports));
  return b;
}

JsonValue validation_json(const ValidationReport& rep) {
  JsonValue v = JsonValue::object();
  v.set("pass", JsonValue::boolean(rep.pass));
  v.set("checked_points", JsonValue::integer(rep.checked_points));
  v.set("checked_disks", JsonValue::integer(rep.checked_disks));
  JsonValue viols = JsonValue::array();
  for (const Violation& vi : rep.violations) {
    JsonValue row = JsonValue::object();
    row.set("kind", JsonValue::str(vi.kind));
    row.set("i", JsonValue::integer(vi.i));
    row.set("j", JsonValue::integer(vi.j));
    row.set("margin", JsonValue::num(vi.margin));
    row.set("detail", JsonValue::str(vi.detail));
    viols.push(std::move(row));
  }
  v.set("violations", std::move(viols));
  return v;
}

int verify_circular(int n, int case_no, const std::string& scan_range, double scale,
                    const Tolerance& tol, const std::string& out_path, std::ostream& out) {
  const std::string case_id = "case" + std::to_string(case_no);
  JsonValue doc = JsonValue::object();
  doc.set("command", JsonValue::str("verify circular"));
  JsonValue inputs = JsonValue::object();
  inputs.set("case", JsonValue::str(case_id));

  if (!scan_range.empty()) {
    const auto colon = scan_range.find(':');
    if (colon == std::string::npos) throw BadSpec("--scan expects lo:hi");
    const int lo = std::stoi(scan_range.substr(0, colon));
    const int hi = std::stoi(scan_range.substr(colon + 1));
    inputs.set("scan", JsonValue::str(scan_range));
    doc.set("inputs", std::move(inputs));
    const MarginScan scan = margin_scan(CaseKind::Disk, case_id, lo, hi);
    doc.set("scan", scan_json(scan));
    doc.set("overall", JsonValue::boolean(scan.all_positive));
    emit(doc, out_path, out);
    return scan.all_positive ? 0 : 1;
  }

  inputs.set("n", JsonValue::integer(n));
  inputs.set("scale", JsonValue::num(scale));
  doc.set("inputs", std::move(inputs));
  doc.set("tolerances", tolerances_json(tol));
  bool overall = false;
  try {
    const CaseReport rep = case_report_disk(n, case_id, scale);
    doc.set("case", case_json(rep, false));
    JsonValue checks = JsonValue::array();
    checks.push(check_row("residual_pair_1", rep.residual1, rep.residual1 < 1e-10));
    checks.push(check_row("residual_pair_2", rep.residual2, rep.residual2 < 1e-10));
    checks.push(check_row("margin_positive", rep.margin, rep.margin > 0.0));
    overall = rep.residual1 < 1e-10 && rep.residual2 < 1e-10 && rep.margin > 0.0;

    if (scale == 1.0) {
      // Cross-validate the analytic report against realized geometry.
      const CaseRealization real = realize_case(n, case_id);
      const bool q_empty = is_empty(real.Q, real.points, tol);
      const bool q1_empty = is_empty(real.Q1, real.points, tol);
      const bool q2_empty = is_empty(real.Q2, real.points, tol);
      bool supported = true;
      for (int i : real.q_support)
        supported &= classify_point(real.Q, real.points[i], tol) == PointClass::OnBoundary;
      for (int i : real.q1_support)
        supported &= classify_point(real.Q1, real.points[i], tol) == PointClass::OnBoundary;
      for (int i : real.q2_support)
        supported &= classify_point(real.Q2, real.points[i], tol) == PointClass::OnBoundary;
      const double center_dist = dist(real.Q1.center, real.Q2.center);
      const bool agree = std::abs(center_dist - rep.o1o2) < 1e-9;
      const bool overlap_matches =
          (disks_disjoint(real.Q1, real.Q2, tol) == DiskRelation::Overlapping) ==
          (rep.margin > tol.eps_disjoint);
      JsonValue real_doc = JsonValue::object();
      real_doc.set("disks_empty", JsonValue::boolean(q_empty && q1_empty && q2_empty));
      real_doc.set("supports_on_boundary", JsonValue::boolean(supported));
      real_doc.set("analytic_geometric_agreement", JsonValue::num(center_dist - rep.o1o2));
      real_doc.set("overlap_matches_margin", JsonValue::boolean(overlap_matches));
      doc.set("realization", std::move(real_doc));
      checks.push(check_row("realization_consistent", center_dist - rep.o1o2,
                            q_empty && q1_empty && q2_empty && supported && agree &&
                                overlap_matches));
      overall = overall && q_empty && q1_empty && q2_empty && supported && agree &&
                overlap_matches;
    }
    doc.set("checks", std::move(checks));
  } catch (const std::exception& e) {
    doc.set("error", JsonValue::str(e.what()));
    overall = false;
  }
  doc.set("overall", JsonValue::boolean(overall));
  emit(doc, out_path, out);
  return overall ? 0 : 1;
}

int verify_line(int k, const std::string& subcase, const std::string& scan_range,
                double scale, const Tolerance& tol, const std::string& out_path,
                std::ostream& out) {
  JsonValue doc = JsonValue::object();
  doc.set("command", JsonValue::str("verify line"));
  JsonValue inputs = JsonValue::object();

  if (!scan_range.empty()) {
    const auto colon = scan_range.find(':');
    if (colon == std::string::npos) throw BadSpec("--scan expects lo:hi");
    const int lo = std::stoi(scan_range.substr(0, colon));
    const int hi = std::stoi(scan_range.substr(colon + 1));
    inputs.set("subcase", JsonValue::str(subcase));
    inputs.set("scan", JsonValue::str(scan_range));
    doc.set("inputs", std::move(inputs));
    const MarginScan scan =
        margin_scan(CaseKind::Line, subcase == "all" ? "ii" : subcase, lo, hi);
    doc.set("scan", scan_json(scan));
    doc.set("overall", JsonValue::boolean(scan.all_positive));
    emit(doc, out_path, out);
    return scan.all_positive ? 0 : 1;
  }

  inputs.set("k", JsonValue::integer(k));
  inputs.set("subcase", JsonValue::str(subcase));
  inputs.set("scale", JsonValue::num(scale));
  doc.set("inputs", std::move(inputs));
  doc.set("tolerances", tolerances_json(tol));

  std::vector<std::string> subcases;
  if (subcase == "all")
    subcases = {"i", "ii", "iii"};
  else
    subcases = {subcase};

  bool overall = true;
  JsonValue cases = JsonValue::array();
  JsonValue checks = JsonValue::array();
  try {
    for (const std::string& sc : subcases) {
      const CaseReport rep = case_report_line(k, sc, scale);
      cases.push(case_json(rep, true));
      checks.push(check_row("residual_" + sc + "_1", rep.residual1, rep.residual1 < 1e-10));
      checks.push(check_row("residual_" + sc + "_2", rep.residual2, rep.residual2 < 1e-10));
      checks.push(check_row("margin_" + sc + "_positive", rep.margin, rep.margin > 0.0));
      overall = overall && rep.residual1 < 1e-10 && rep.residual2 < 1e-10 && rep.margin > 0.0;
    }
  } catch (const std::exception& e) {
    doc.set("error", JsonValue::str(e.what()));
    overall = false;
  }
  doc.set("cases", std::move(cases));
  doc.set("checks", std::move(checks));
  doc.set("overall", JsonValue::boolean(overall));
  emit(doc, out_path, out);
  return overall ? 0 : 1;
}

int verify_lemma4(const std::string& out_path, std::ostream& out) {
  JsonValue doc = JsonValue::object();
  doc.set("command", JsonValue::str("verify lemma4"));
  const TripleTangencySolution cf = triple_tangency_closed_form();
  const TripleTangencySolution nt = triple_tangency_newton();

  auto sol_json = [](const TripleTangencySolution& s) {
    JsonValue v = JsonValue::object();
    v.set("x", JsonValue::num(s.x));
    v.set("lambda", JsonValue::num(s.lambda));
    v.set("r1", JsonValue::num(s.r1));
    v.set("r2", JsonValue::num(s.r2));
    v.set("y1", JsonValue::num(s.y1));
    v.set("y2", JsonValue::num(s.y2));
    JsonValue res = JsonValue::array();
    for (double r : s.residuals) res.push(JsonValue::num(r));
    v.set("residuals", std::move(res));
    v.set("quadratic_residual", JsonValue::num(s.quadratic_residual));
    return v;
  };
  doc.set("closed_form", sol_json(cf));
  JsonValue ntj = sol_json(nt);
  ntj.set("iterations", JsonValue::integer(nt.newton_iterations));
  doc.set("newton", std::move(ntj));
  doc.set("rejected_branch_z", JsonValue::num(cf.z_rejected));

  const double agreement =
      std::max({std::abs(cf.x - nt.x), std::abs(cf.r1 - nt.r1), std::abs(cf.r2 - nt.r2),
                std::abs(cf.y1 - nt.y1), std::abs(cf.y2 - nt.y2)});
  double res_max = 0.0;
  for (double r : cf.residuals) res_max = std::max(res_max, std::abs(r));
  for (double r : nt.residuals) res_max = std::max(res_max, std::abs(r));

  JsonValue checks = JsonValue::array();
  const bool digits_ok = cf.x >= 0.03486 && cf.x < 0.03487;
  checks.push(check_row("x_digits_03486", cf.x, digits_ok));
  checks.push(
      check_row("quadratic_residual", cf.quadratic_residual, cf.quadratic_residual < 1e-12));
  checks.push(check_row("rejected_root_infeasible", cf.z_rejected,
                        cf.z_rejected > 2.0 / 63.0));
  checks.push(check_row("newton_agreement", agreement, agreement < 1e-10));
  checks.push(check_row("system_residuals", res_max, res_max < 1e-9));
  checks.push(check_row("depth_order", cf.y1 - cf.y2, cf.y1 > cf.y2 && cf.y2 > 0.0));
  const bool overall = digits_ok && cf.quadratic_residual < 1e-12 &&
                       cf.z_rejected > 2.0 / 63.0 && agreement < 1e-10 && res_max < 1e-9 &&
                       cf.y1 > cf.y2 && cf.y2 > 0.0;
  doc.set("checks", std::move(checks));
  doc.set("overall", JsonValue::boolean(overall));
  emit(doc, out_path, out);
  return overall ? 0 : 1;
}

int verify_sandwich(double delta, const std::string& out_path, std::ostream& out) {
  JsonValue doc = JsonValue::object();
  doc.set("command", JsonValue::str("verify sandwich"));
  JsonValue inputs = JsonValue::object();
  inputs.set("delta", JsonValue::num(delta));
  doc.set("inputs", std::move(inputs));

  const std::vector<SandwichCase> rows = sandwich_table(delta);
  bool overall = true;
  JsonValue table = JsonValue::array();
  for (const SandwichCase& row : rows) {
    JsonValue r = JsonValue::object();
    r.set("a1", JsonValue::integer(row.a1));
    r.set("a2", JsonValue::integer(row.a2));
    r.set("lhs", JsonValue::num(row.lhs));
    r.set("bound", JsonValue::num(row.bound));
    r.set("pass", JsonValue::boolean(row.pass));
    r.set("in_claimed_range", JsonValue::boolean(row.in_claimed_range));
    table.push(std::move(r));
    overall = overall && row.pass;
  }
  doc.set("pairs", std::move(table));

  bool monotone = true;
  JsonValue gvals = JsonValue::array();
  double prev = 0.0;
  for (int a = 1; a <= 6; ++a) {
    const double g = chord_depth_g(a, delta);
    gvals.push(JsonValue::num(g));
    if (a > 1 && g <= prev) monotone = false;
    prev = g;
  }
  doc.set("g_values", std::move(gvals));
  doc.set("g_increasing", JsonValue::boolean(monotone));
  overall = overall && monotone;
  doc.set("overall", JsonValue::boolean(overall));
  emit(doc, out_path, out);
  return overall ? 0 : 1;
}

int verify_lemma1(double delta, const Tolerance& tol, const std::string& out_path,
                  std::ostream& out) {
  JsonValue doc = JsonValue::object();
  doc.set("command", JsonValue::str("verify lemma1"));
  JsonValue inputs = JsonValue::object();
  inputs.set("delta", JsonValue::num(delta));
  doc.set("inputs", std::move(inputs));

  const TangentPairCheck chk = tangent_pair_check(delta, tol);
  JsonValue checks = JsonValue::array();
  const bool radii_ok = chk.radius_err_12 <= 1e-12 * std::max(1.0, delta) &&
                        chk.radius_err_34 <= 1e-12 * std::max(1.0, delta);
  const bool tangent = chk.relation == DiskRelation::Tangent;
  const bool cross_ok = std::abs(chk.circumradius_crosscheck - delta) <= 1e-12 * delta;
  checks.push(check_row("radius_error_first", chk.radius_err_12, radii_ok));
  checks.push(check_row("radius_error_second", chk.radius_err_34, radii_ok));
  checks.push(check_row("tangency_gap", chk.tangency_gap, tangent));
  checks.push(check_row("circumradius_crosscheck", chk.circumradius_crosscheck, cross_ok));
  doc.set("relation", JsonValue::str(to_string(chk.relation)));
  doc.set("checks", std::move(checks));
  const bool overall = radii_ok && tangent && cross_ok;
  doc.set("overall", JsonValue::boolean(overall));
  emit(doc, out_path, out);
  return overall ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"empty-disk (bubble) construction, certification and solving toolkit"};
  app.require_subcommand(1);
  EpsFlags eps;
  app.add_option("--eps-incidence", eps.incidence, "incidence epsilon");
  app.add_option("--eps-empty", eps.empty, "emptiness epsilon");
  app.add_option("--eps-disjoint", eps.disjoint, "disjointness epsilon");

  // construct
  auto* construct = app.add_subcommand("construct", "generate a point-set family");
  std::string c_kind = "gadget", c_out, c_format, c_delta = "1/60", c_epsilon, c_spec;
  int c_n = 12, c_m = 1, c_j = 1, c_k = 1, c_pad = 0;
  double c_spacing = 1.0, c_radius = 1.0, c_rotation = 0.0, c_d = 1e4, c_scale174 = 0.0;
  double c_pad_y = 0.0, c_pad_spacing = 1.0, c_pad_offset = 0.0;
  bool c_pad_offset_set = false;
  construct->add_option("--kind", c_kind, "gadget | collinear | chain | grid");
  construct->add_option("--spec", c_spec, "JSON spec (overrides other flags)");
  construct->add_option("--n", c_n, "point count (gadget/collinear)");
  construct->add_option("--spacing", c_spacing, "collinear spacing");
  construct->add_option("--radius", c_radius, "gadget radius");
  construct->add_option("--rotation", c_rotation, "gadget rotation (radians)");
  construct->add_option("--m", c_m, "chain gadget pair count");
  construct->add_option("--d", c_d, "chain center spacing");
  construct->add_option("--scale-174", c_scale174, "chain scale override for 174-gadgets");
  construct->add_option("--j", c_j, "grid columns parameter");
  construct->add_option("--k", c_k, "grid sparse line count");
  construct->add_option("--delta", c_delta, "grid dense spacing (fractions allowed)");
  construct->add_option("--epsilon", c_epsilon, "grid shift (default delta/1000)");
  construct->add_option("--pad", c_pad, "pad with a far collinear cluster to this size");
  construct->add_option("--pad-y", c_pad_y, "padding line y");
  construct->add_option("--pad-spacing", c_pad_spacing, "padding spacing");
  construct->add_option("--pad-offset", c_pad_offset, "padding start x")
      ->each([&](const std::string&) { c_pad_offset_set = true; });
  construct->add_option("--format", c_format, "txt | json (default by extension)");
  construct->add_option("--out", c_out, "output file (stdout when omitted)");

  // verify with sub-subcommands
  auto* verify = app.add_subcommand("verify", "run a certificate check");
  verify->require_subcommand(1);
  auto* v_circ = verify->add_subcommand("circular", "disk-contact cases of a gadget");
  int vc_n = 174, vc_case = 2;
  std::string vc_scan, vc_out;
  double vc_scale = 1.0;
  v_circ->add_option("--n", vc_n, "gadget size");
  v_circ->add_option("--case", vc_case, "1 or 2")->check(CLI::Range(1, 2));
  v_circ->add_option("--scan", vc_scan, "margin scan range lo:hi");
  v_circ->add_option("--scale", vc_scale, "uniform scale");
  v_circ->add_option("--out", vc_out, "report file");

  auto* v_line = verify->add_subcommand("line", "line-contact cases of a gadget");
  int vl_k = 340;
  std::string vl_subcase = "all", vl_scan, vl_out;
  double vl_scale = 1.0;
  v_line->add_option("--k", vl_k, "gadget size");
  v_line->add_option("--subcase", vl_subcase, "i | ii | iii | all");
  v_line->add_option("--scan", vl_scan, "margin scan range lo:hi");
  v_line->add_option("--scale", vl_scale, "uniform scale");
  v_line->add_option("--out", vl_out, "report file");

  auto* v_l4 = verify->add_subcommand("lemma4", "three-tangent-circles system");
  std::string v4_out;
  v_l4->add_option("--out", v4_out, "report file");

  auto* v_sand = verify->add_subcommand("sandwich", "chord-depth pair table");
  std::string vs_delta = "1/29", vs_out;
  v_sand->add_option("--delta", vs_delta, "spacing (fractions allowed)");
  v_sand->add_option("--out", vs_out, "report file");

  auto* v_l1 = verify->add_subcommand("lemma1", "tangent pair over four spaced points");
  std::string v1_delta = "1/60", v1_out;
  v_l1->add_option("--delta", v1_delta, "spacing (fractions allowed)");
  v_l1->add_option("--out", v1_out, "report file");

  // bubbles
  auto* bubbles = app.add_subcommand("bubbles", "matching-based bubble set");
  std::string b_mode = "matching", b_in, b_out;
  bubbles->add_option("--mode", b_mode, "matching");
  bubbles->add_option("--in", b_in, "point file")->required();
  bubbles->add_option("--out", b_out, "bubble set JSON file");

  // solve
  auto* solve = app.add_subcommand("solve", "pairwise-disjoint bubble set");
  std::string s_in, s_out, s_effort = "fast";
  std::uint64_t s_seed = 0;
  solve->add_option("--in", s_in, "point file")->required();
  solve->add_option("--seed", s_seed, "solver seed");
  solve->add_option("--effort", s_effort, "fast | thorough");
  solve->add_option("--out", s_out, "result JSON file");

  // counts
  auto* counts = app.add_subcommand("counts", "counting bounds and constants");
  std::string n_scheme, n_out;
  int n_j = 0, n_k = 1;
  bool n_json = false;
  counts->add_option("--scheme", n_scheme, "prelim_linear | refined_grid | alternating");
  counts->add_option("--j", n_j, "grid parameter j");
  counts->add_option("--k", n_k, "grid parameter k");
  counts->add_flag("--json", n_json, "emit the full report");
  counts->add_option("--out", n_out, "report file");

  // figure
  auto* figure = app.add_subcommand("figure", "emit an SVG figure");
  FigureSpec fig;
  std::string f_out;
  int f_n = 12, f_m = 1, f_j = 2, f_k = 1, f_case = 2;
  double f_d = -1.0, f_delta = -1.0;
  figure->add_option("--kind", fig.kind, "gadget | chain | linear | case_realization | path_in_G");
  figure->add_option("--n", f_n, "gadget size");
  figure->add_option("--m", f_m, "chain pairs");
  figure->add_option("--j", f_j, "grid j");
  figure->add_option("--k", f_k, "grid k");
  figure->add_option("--case", f_case, "disk case number");
  figure->add_option("--d", f_d, "chain spacing for drawing");
  figure->add_option("--delta", f_delta, "grid spacing");
  figure->add_option("--width", fig.width, "pixels");
  figure->add_option("--height", fig.height, "pixels");
  figure->add_flag("--annotations", fig.annotations, "draw labels");
  figure->add_option("--out", f_out, "SVG file");

  std::vector<const char*> argv;
  argv.push_back("bubblelab");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    try {
      app.parse(int(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
      if (e.get_exit_code() == 0) {  // --help
        out << app.help();
        return 0;
      }
      err << "{\"error\": \"" << e.what() << "\"}" << std::endl;
      return 2;
    }

    const Tolerance tol = eps.resolve();

    if (construct->parsed()) {
      if (!c_spec.empty()) {
        const nlohmann::json j = nlohmann::json::parse(c_spec);
        c_kind = j.value("kind", c_kind);
        c_n = j.value("n", c_n);
        c_m = j.value("m", c_m);
        c_j = j.value("j", c_j);
        c_k = j.value("k", c_k);
        c_spacing = j.value("spacing", c_spacing);
        c_radius = j.value("radius", c_radius);
        c_d = j.value("d", c_d);
        if (j.contains("delta")) {
          if (j["delta"].is_string())
            c_delta = j["delta"].get<std::string>();
          else
            c_delta = std::to_string(j["delta"].get<double>());
        }
      }
      PointSet ps;
      if (c_kind == "gadget") {
        ps = gadget({c_n, c_radius, {0.0, 0.0}, c_rotation});
      } else if (c_kind == "collinear") {
        ps = baseline_collinear(c_n, c_spacing);
      } else if (c_kind == "chain") {
        ps = alternating_chain({c_m, c_d, c_scale174});
      } else if (c_kind == "grid") {
        LinearSpec spec;
        spec.j = c_j;
        spec.k = c_k;
        spec.delta = parse_real(c_delta);
        spec.epsilon = c_epsilon.empty() ? 0.0 : parse_real(c_epsilon);
        ps = linear_grid(spec);
      } else {
        throw BadSpec("construct: unknown kind " + c_kind);
      }
      if (c_pad > 0) {
        double offset = c_pad_offset;
        if (!c_pad_offset_set) {
          double xmax = 0.0;
          for (const Point& p : ps.points()) xmax = std::max(xmax, p.x);
          offset = xmax + 1e3;
        }
        ps = padded_to(c_pad, ps, c_pad_y, c_pad_spacing, offset);
      }
      const bool as_json =
          c_format.empty() ? (c_out.empty() || c_out.ends_with(".json")) : c_format == "json";
      emit_text(as_json ? points_to_json(ps) : points_to_text(ps), c_out, out);
      return 0;
    }

    if (verify->parsed()) {
      if (v_circ->parsed())
        return verify_circular(vc_n, vc_case, vc_scan, vc_scale, tol, vc_out, out);
      if (v_line->parsed())
        return verify_line(vl_k, vl_subcase, vl_scan, vl_scale, tol, vl_out, out);
      if (v_l4->parsed()) return verify_lemma4(v4_out, out);
      if (v_sand->parsed()) return verify_sandwich(parse_real(vs_delta), vs_out, out);
      if (v_l1->parsed()) return verify_lemma1(parse_real(v1_delta), tol, v1_out, out);
    }

    if (bubbles->parsed()) {
      if (b_mode != "matching") throw BadSpec("bubbles: unknown mode " + b_mode);
      const PointSet ps = read_points(b_in);
      const BubbleSet bubble = bubble_from_matching(ps, tol);
      const ValidationReport val = validate(ps, bubble, false, tol);
      JsonValue doc = bubble_json(bubble);
      doc.set("validation", validation_json(val));
      emit(doc, b_out, out);
      return val.pass ? 0 : 1;
    }

    if (solve->parsed()) {
      Effort effort;
      if (s_effort == "fast")
        effort = Effort::Fast;
      else if (s_effort == "thorough")
        effort = Effort::Thorough;
      else
        throw BadSpec("solve: effort must be fast or thorough");
      const PointSet ps = read_points(s_in);
      const SolveResult res = disjoint_bubbles(ps, s_seed, effort, tol);
      const ValidationReport val = validate(ps, res.bubble, true, tol);
      JsonValue doc = JsonValue::object();
      doc.set("command", JsonValue::str("solve"));
      JsonValue inputs = JsonValue::object();
      inputs.set("in", JsonValue::str(s_in));
      inputs.set("seed", JsonValue::integer((long long)s_seed));
      inputs.set("effort", JsonValue::str(s_effort));
      doc.set("inputs", std::move(inputs));
      doc.set("tolerances", tolerances_json(tol));
      doc.set("upper", JsonValue::integer(res.upper));
      doc.set("lower", JsonValue::integer(res.lower));
      doc.set("method_log", JsonValue::str(res.method_log));
      doc.set("bubble", bubble_json(res.bubble));
      doc.set("validation", validation_json(val));
      emit(doc, s_out, out);
      return val.pass ? 0 : 1;
    }

    if (counts->parsed()) {
      if (n_j > 0) {
        const BoundScheme scheme = n_scheme == "prelim_linear" ? BoundScheme::PrelimLinear
                                                               : BoundScheme::RefinedGrid;
        const CountingReport rep = counting_bounds(n_j, n_k, scheme);
        JsonValue doc = JsonValue::object();
        doc.set("command", JsonValue::str("counts"));
        doc.set("j", JsonValue::integer(rep.j));
        doc.set("k", JsonValue::integer(rep.k));
        doc.set("delta", JsonValue::num(rep.delta));
        doc.set("n", JsonValue::integer(rep.n));
        doc.set("bound_numerator", JsonValue::integer(rep.bound_numerator));
        doc.set("bound_floor", JsonValue::integer(rep.bound_floor));
        doc.set("unresolved_slack", JsonValue::str(rep.slack));
        JsonValue singles = JsonValue::array();
        for (const SingleDiskCase& c : rep.single_disk_cases) {
          JsonValue row = JsonValue::object();
          row.set("m", JsonValue::integer(c.m));
          row.set("q1", JsonValue::integer(c.q1));
          row.set("holds", JsonValue::boolean(c.holds));
          row.set("equality", JsonValue::boolean(c.equality));
          singles.push(std::move(row));
        }
        doc.set("single_disk_cases", std::move(singles));
        doc.set("component_cases_hold_in_scope",
                JsonValue::boolean(rep.component_cases_hold_in_scope));
        JsonValue eq = JsonValue::array();
        for (int i : rep.component_equality_at) eq.push(JsonValue::integer(i));
        doc.set("component_equality_at", std::move(eq));
        emit(doc, n_out, out);
        return rep.all_single_disk_hold && rep.component_cases_hold_in_scope ? 0 : 1;
      }
      BoundScheme scheme;
      if (n_scheme == "prelim_linear")
        scheme = BoundScheme::PrelimLinear;
      else if (n_scheme == "refined_grid")
        scheme = BoundScheme::RefinedGrid;
      else if (n_scheme == "alternating")
        scheme = BoundScheme::Alternating;
      else
        throw BadSpec("counts: unknown scheme " + n_scheme);
      const long long value = bound_constant(scheme);
      if (n_json) {
        JsonValue doc = JsonValue::object();
        doc.set("command", JsonValue::str("counts"));
        doc.set("scheme", JsonValue::str(n_scheme));
        doc.set("denominator", JsonValue::integer(value));
        emit(doc, n_out, out);
      } else {
        emit_text(std::to_string(value) + "\n", n_out, out);
      }
      return 0;
    }

    if (figure->parsed()) {
      fig.params["n"] = f_n;
      fig.params["m"] = f_m;
      fig.params["j"] = f_j;
      fig.params["k"] = f_k;
      fig.params["case"] = f_case;
      if (f_d > 0.0) fig.params["d"] = f_d;
      if (f_delta > 0.0) fig.params["delta"] = f_delta;
      emit_text(render_figure(fig), f_out, out);
      return 0;
    }

    err << "{\"error\": \"no subcommand\"}" << std::endl;
    return 2;
  } catch (const std::exception& e) {
    std::string msg = e.what();
    for (char& ch : msg)
      if (ch == '"') ch = '\'';
    err << "{\"error\": \"" << msg << "\"}" << std::endl;
    return 2;
  }
}

}  // namespace bubblelab::cli
