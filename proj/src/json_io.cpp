// SPDX-License-Identifier: Apache-2.0

#include "origami/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numbers>
#include <string>

namespace origami::io {

double round_json(double v) {
  if (!std::isfinite(v)) return v;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12e", v);
  const double r = std::strtod(buf, nullptr);
  return r == 0.0 ? 0.0 : r;
}

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::InvalidInput, what); }

double number(const Json& j, const char* what) {
  if (!j.is_number()) bad(std::string(what) + " must be a number");
  return j.get<double>();
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

Json points_json(const std::vector<Point>& pts) {
  Json arr = Json::array();
  for (const Point& p : pts) arr.push_back(to_json(p));
  return arr;
}

}  // namespace

Json to_json(Point p) { return Json::array({round_json(p.x), round_json(p.y)}); }

Json to_json(const Line& l) {
  return Json{{"a", round_json(l.a())}, {"b", round_json(l.b())}, {"c", round_json(l.c())}};
}

Json to_json(AxiomId id, const FoldSet& folds) {
  Json arr = Json::array();
  for (const Line& f : folds) arr.push_back(to_json(f));
  return Json{{"axiom", std::string(to_string(id))}, {"count", folds.size()}, {"folds", arr}};
}

Json to_json(const CubicSolution& sol) {
  Json roots = Json::array();
  for (double r : sol.roots) roots.push_back(round_json(r));
  Json folds = Json::array();
  for (const Line& f : sol.folds) folds.push_back(to_json(f));
  Json construction{{"p1", to_json(sol.construction.p1)},
                    {"p2", to_json(sol.construction.p2)},
                    {"l1", to_json(sol.construction.l1)}};
  if (sol.construction.l2) construction["l2"] = to_json(*sol.construction.l2);
  return Json{{"roots", roots}, {"folds", folds}, {"construction", construction}};
}

Json to_json(const ConstructionTrace& trace) {
  Json steps = Json::array();
  for (const auto& s : trace.steps) {
    Json lines = Json::array();
    for (const Line& l : s.input.lines) lines.push_back(to_json(l));
    steps.push_back(Json{{"axiom", std::string(to_string(s.axiom))},
                         {"points", points_json(s.input.points)},
                         {"lines", lines},
                         {"fold", to_json(s.fold)},
                         {"choice", s.choice}});
  }
  Json points = Json::array();
  for (const auto& dp : trace.derived_points) points.push_back(Json{{"name", dp.name}, {"point", to_json(dp.point)}});
  Json checks = Json::array();
  for (const auto& a : trace.assertions) {
    checks.push_back(Json{{"name", a.name},
                          {"residual", round_json(a.residual)},
                          {"tolerance", round_json(a.tolerance)},
                          {"passed", a.passed()}});
  }
  return Json{{"passed", trace.passed()}, {"steps", steps}, {"derived_points", points}, {"assertions", checks}};
}

Json to_json(const FlatFoldVerdict& v) {
  Json out{{"pass", v.pass},
           {"kawasaki",
            Json{{"pass", v.kawasaki.pass},
                 {"residual_rad", round_json(v.kawasaki.residual)},
                 {"residual_deg", round_json(v.kawasaki.residual * 180.0 / std::numbers::pi)}}}};
  if (v.maekawa) {
    out["maekawa"] =
        Json{{"pass", v.maekawa->pass}, {"mountains", v.maekawa->mountains}, {"valleys", v.maekawa->valleys}};
  } else {
    out["maekawa"] = nullptr;
  }
  out["note"] = "necessary conditions only";
  return out;
}

Json to_json(const Layout& layout, const ActivePathSet& paths, const std::vector<Polygon>& polygons) {
  Json positions = Json::object();
  for (const auto& [id, p] : layout.positions) positions[id] = to_json(p);
  Json active = Json::array();
  for (const auto& p : paths) {
    active.push_back(Json{{"u", p.u},
                          {"v", p.v},
                          {"from", to_json(p.from)},
                          {"to", to_json(p.to)},
                          {"tree_distance", round_json(p.tree_distance)}});
  }
  Json faces = Json::array();
  for (const auto& poly : polygons) {
    Json holes = Json::array();
    for (const auto& h : poly.holes) holes.push_back(points_json(h));
    Json dangling = Json::array();
    for (const auto& [a, b] : poly.dangling) dangling.push_back(Json::array({to_json(a), to_json(b)}));
    faces.push_back(Json{{"vertices", points_json(poly.boundary)},
                         {"holes", holes},
                         {"dangling", dangling},
                         {"area", round_json(poly.area)}});
  }
  return Json{{"m", round_json(layout.scale)}, {"positions", positions}, {"active_paths", active}, {"polygons", faces}};
}

Point point_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) bad("a point is an array [x, y]");
  return Point{number(j[0], "x"), number(j[1], "y")};
}

Line line_from_json(const Json& j) {
  return Line::from_coefficients(number(field(j, "a"), "a"), number(field(j, "b"), "b"),
                                 number(field(j, "c"), "c"));
}

AxiomInput axiom_input_from_json(AxiomId id, const Json& j) {
  if (!j.is_object()) bad("axiom input must be a JSON object");
  const auto P = [&](const char* k) { return point_from_json(field(j, k)); };
  const auto L = [&](const char* k) { return line_from_json(field(j, k)); };
  switch (id) {
    case AxiomId::O1:
    case AxiomId::O2: return {{P("p1"), P("p2")}, {}};
    case AxiomId::O3: return {{}, {L("l1"), L("l2")}};
    case AxiomId::O4: return {{P("p")}, {L("l")}};
    case AxiomId::O5: return {{P("p1"), P("p2")}, {L("l1")}};
    case AxiomId::O6: return {{P("p1"), P("p2")}, {L("l1"), L("l2")}};
    case AxiomId::O7: return {{P("p")}, {L("l1"), L("l2")}};
  }
  bad("unknown axiom");
}

CubicSolution cubic_solution_from_json(const Json& j) {
  CubicSolution sol;
  for (const auto& r : field(j, "roots")) sol.roots.push_back(number(r, "root"));
  for (const auto& f : field(j, "folds")) sol.folds.push_back(line_from_json(f));
  const Json& k = field(j, "construction");
  sol.construction.p1 = point_from_json(field(k, "p1"));
  sol.construction.p2 = point_from_json(field(k, "p2"));
  sol.construction.l1 = line_from_json(field(k, "l1"));
  if (k.contains("l2")) sol.construction.l2 = line_from_json(k.at("l2"));
  return sol;
}

CreaseVertex vertex_from_json(const Json& j) {
  const Json& angles = field(j, "angles_deg");
  if (!angles.is_array()) bad("angles_deg must be an array");
  std::vector<double> deg;
  for (const auto& a : angles) deg.push_back(number(a, "angle"));
  std::optional<std::vector<FoldKind>> labels;
  if (j.contains("assignment") && !j.at("assignment").is_null()) {
    if (!j.at("assignment").is_string()) bad("assignment must be a string such as \"MMMV\"");
    labels = parse_assignment(j.at("assignment").get<std::string>());
  }
  return CreaseVertex::from_degrees(deg, std::move(labels));
}

WeightedTree tree_from_json(const Json& j) {
  std::vector<TreeNode> nodes;
  for (const auto& n : field(j, "nodes")) {
    const Json& id = field(n, "id");
    const Json& kind = field(n, "kind");
    if (!id.is_string() || !kind.is_string()) bad("node id and kind must be strings");
    const auto k = kind.get<std::string>();
    if (k != "terminal" && k != "internal") bad("node kind must be 'terminal' or 'internal'");
    nodes.push_back({id.get<std::string>(), k == "terminal" ? NodeKind::Terminal : NodeKind::Internal});
  }
  std::vector<TreeEdge> edges;
  for (const auto& e : field(j, "edges")) {
    if (!e.is_array() || e.size() != 3 || !e[0].is_string() || !e[1].is_string()) {
      bad("an edge is [from, to, length]");
    }
    edges.push_back({e[0].get<std::string>(), e[1].get<std::string>(), number(e[2], "edge length")});
  }
  return WeightedTree(std::move(nodes), std::move(edges));
}

Layout layout_from_json(const Json& j) {
  Layout layout;
  layout.scale = number(field(j, "m"), "m");
  const Json& pos = field(j, "positions");
  if (!pos.is_object()) bad("positions must be an object");
  for (const auto& [id, p] : pos.items()) layout.positions[id] = point_from_json(p);
  return layout;
}

ActivePathSet active_paths_from_json(const Json& j) {
  ActivePathSet out;
  for (const auto& p : field(j, "active_paths")) {
    out.push_back({field(p, "u").get<std::string>(), field(p, "v").get<std::string>(), point_from_json(field(p, "from")),
                   point_from_json(field(p, "to")), number(field(p, "tree_distance"), "tree_distance")});
  }
  return out;
}

}  // namespace origami::io
