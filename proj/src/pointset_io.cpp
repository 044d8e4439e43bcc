#include <fstream>
#include <sstream>

#include "bubblelab/geometry.hpp"
#include "bubblelab/jsonval.hpp"

#include <json.hpp>

namespace bubblelab {

PointSet points_from_text(const std::string& text) {
  std::vector<Point> pts;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    double x, y;
    if (ls >> x >> y) {
      pts.push_back({x, y});
    } else if (!line.empty() && line.find_first_not_of(" \t\r") != std::string::npos) {
      throw IoError("point file: cannot parse line " + std::to_string(lineno));
    }
  }
  return PointSet(std::move(pts));
}

std::string points_to_text(const PointSet& ps) {
  std::string out = "# " + std::to_string(ps.size()) + " points\n";
  for (const Point& p : ps.points())
    out += JsonValue::format_double(p.x) + " " + JsonValue::format_double(p.y) + "\n";
  return out;
}

PointSet points_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw IoError(std::string("point file: invalid JSON: ") + e.what());
  }
  if (!j.contains("points") || !j["points"].is_array())
    throw IoError("point file: missing \"points\" array");
  std::vector<Point> pts;
  for (const auto& row : j["points"]) {
    if (!row.is_array() || row.size() != 2)
      throw IoError("point file: each point must be a [x, y] pair");
    pts.push_back({row[0].get<double>(), row[1].get<double>()});
  }
  std::vector<PointLabel> labels;
  if (j.contains("labels")) {
    for (const auto& row : j["labels"]) {
      if (!row.is_array() || row.size() != 2)
        throw IoError("point file: each label must be a [group, index] pair");
      labels.push_back({row[0].get<int>(), row[1].get<int>()});
    }
  }
  StructureInfo structure;
  if (j.contains("structure")) {
    const auto& s = j["structure"];
    structure.kind = structure_kind_from_string(s.value("kind", std::string("none")));
    if (s.contains("params"))
      for (auto it = s["params"].begin(); it != s["params"].end(); ++it)
        structure.params[it.key()] = it.value().get<double>();
  }
  return PointSet(std::move(pts), std::move(labels), std::move(structure));
}

std::string points_to_json(const PointSet& ps) {
  JsonValue root = JsonValue::object();
  JsonValue pts = JsonValue::array();
  for (const Point& p : ps.points()) {
    JsonValue pair = JsonValue::array();
    pair.push(JsonValue::num(p.x)).push(JsonValue::num(p.y));
    pts.push(std::move(pair));
  }
  root.set("points", std::move(pts));
  if (ps.has_labels()) {
    JsonValue labels = JsonValue::array();
    for (const PointLabel& l : ps.labels()) {
      JsonValue pair = JsonValue::array();
      pair.push(JsonValue::integer(l.group)).push(JsonValue::integer(l.index));
      labels.push(std::move(pair));
    }
    root.set("labels", std::move(labels));
  }
  if (ps.structure().kind != StructureKind::None) {
    JsonValue s = JsonValue::object();
    s.set("kind", JsonValue::str(to_string(ps.structure().kind)));
    JsonValue params = JsonValue::object();
    for (const auto& [k, v] : ps.structure().params) params.set(k, JsonValue::num(v));
    s.set("params", std::move(params));
    root.set("structure", std::move(s));
  }
  return root.dump(1) + "\n";
}

namespace {

bool looks_like_json(const std::string& text) {
  for (char c : text) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
    return c == '{';
  }
  return false;
}

}  // namespace

PointSet read_points(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open point file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  return looks_like_json(text) ? points_from_json(text) : points_from_text(text);
}

void write_points(const PointSet& ps, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write point file: " + path);
  const bool json = path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0;
  out << (json ? points_to_json(ps) : points_to_text(ps));
}

}  // namespace bubblelab
