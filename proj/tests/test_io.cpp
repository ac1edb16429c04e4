// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <random>

#include "origami/json_io.hpp"
#include "origami/svg.hpp"

using namespace origami;
using io::Json;

namespace {

std::size_t count(const std::string& hay, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = hay.find(needle); pos != std::string::npos; pos = hay.find(needle, pos + 1)) ++n;
  return n;
}

bool close12(double a, double b) { return std::abs(a - b) <= 1e-12 * std::max(1.0, std::abs(b)); }

}  // namespace

TEST_CASE("json number rounding") {
  CHECK(io::round_json(0.1 + 0.2) == 0.3);
  CHECK_FALSE(std::signbit(io::round_json(-0.0)));
  CHECK(io::round_json(2.0) == 2.0);
  CHECK(close12(io::round_json(std::sqrt(2.0)), std::sqrt(2.0)));
}

TEST_CASE("cubic solution round trip") {
  std::mt19937_64 rng(59);
  std::uniform_real_distribution<double> u(-5, 5);
  for (int i = 0; i < 200; ++i) {
    const CubicSolution s = solve_cubic(u(rng), u(rng), u(rng));
    const Json j = Json::parse(io::to_json(s).dump(2));
    const CubicSolution r = io::cubic_solution_from_json(j);
    REQUIRE(r.roots.size() == s.roots.size());
    for (std::size_t k = 0; k < s.roots.size(); ++k) {
      CHECK(close12(r.roots[k], s.roots[k]));
      CHECK(r.folds[k].approx_equal(s.folds[k], 1e-11));
    }
    CHECK(close12(r.construction.p2.x, s.construction.p2.x));
    CHECK(close12(r.construction.p2.y, s.construction.p2.y));
  }
}

TEST_CASE("layout round trip") {
  const WeightedTree t({{"a", NodeKind::Terminal}, {"b", NodeKind::Terminal}, {"c", NodeKind::Terminal},
                        {"h", NodeKind::Internal}},
                       {{"h", "a", 1}, {"h", "b", 1}, {"h", "c", 2}});
  const Layout l = optimize_scale(t, {4, 1, Execution::Serial});
  const auto paths = mark_active_paths(t, l);
  const Json j = Json::parse(io::to_json(l, paths, identify_polygons(l, paths)).dump());
  const Layout r = io::layout_from_json(j);
  CHECK(close12(r.scale, l.scale));
  for (const auto& [id, p] : l.positions) {
    CHECK(close12(r.positions.at(id).x, p.x));
    CHECK(close12(r.positions.at(id).y, p.y));
  }
  CHECK(io::active_paths_from_json(j).size() == paths.size());
}

TEST_CASE("input readers reject malformed documents") {
  CHECK_THROWS_AS(io::point_from_json(Json::parse("[1]")), Error);
  CHECK_THROWS_AS(io::line_from_json(Json::parse(R"({"a": 0, "b": 0, "c": 1})")), Error);
  CHECK_THROWS_AS(io::axiom_input_from_json(AxiomId::O4, Json::parse(R"({"p": [0, 0]})")), Error);
  CHECK_THROWS_AS(io::vertex_from_json(Json::parse(R"({"angles_deg": [90, 90, 90, 90], "assignment": 4})")), Error);
  CHECK_THROWS_AS(io::tree_from_json(Json::parse(R"({"nodes": [{"id": "a", "kind": "leaf"}], "edges": []})")), Error);
}

TEST_CASE("svg: empty scene is deterministic") {
  svg::Scene s;
  const std::string a = svg::render(s), b = svg::render(s);
  CHECK(a == b);
  CHECK(a.find("<svg") != std::string::npos);
  CHECK(a.find("</svg>") != std::string::npos);
}

TEST_CASE("svg: single diagonal layout") {
  const WeightedTree t({{"a", NodeKind::Terminal}, {"b", NodeKind::Terminal}}, {{"a", "b", 1}});
  const Layout l{std::sqrt(2.0), {{"a", {0, 0}}, {"b", {1, 1}}}};
  const auto paths = mark_active_paths(t, l);
  const std::string text = svg::render(svg::layout_scene(l, paths, identify_polygons(l, paths)));
  CHECK(count(text, "class=\"active-path\"") == 1);
}

TEST_CASE("svg: equation scene samples stay on both parabolas") {
  const CubicSolution s = solve_cubic(0, -3, -2);
  const svg::Scene scene = svg::equation_scene(s);
  const Parabola p1(s.construction.p1, s.construction.l1);
  const Parabola p2(s.construction.p2, *s.construction.l2);
  int polylines = 0;
  for (const auto& e : scene.elements) {
    if (const auto* pl = std::get_if<svg::Polyline>(&e)) {
      ++polylines;
      for (const Point& q : pl->points) {
        CHECK(std::min(parabola_point_check(p1, q), parabola_point_check(p2, q)) <= 1e-9 * std::max(1.0, norm(q)));
      }
    }
  }
  CHECK(polylines == 2);
  CHECK(svg::render(scene) == svg::render(svg::equation_scene(s)));
}

TEST_CASE("svg: out-of-view elements are rejected") {
  svg::Scene s;
  s.elements.push_back(svg::Marker{{5, 5}});
  CHECK_FALSE(s.fits());
  CHECK_THROWS_AS(svg::render(s), Error);
}

TEST_CASE("svg: clipping") {
  const svg::ViewBox box{0, 0, 1, 1};
  const auto seg = svg::clip(Line::from_coefficients(1, -1, 0), box, svg::Style::Fold);
  REQUIRE(seg);
  CHECK(distance(seg->from, seg->to) == doctest::Approx(std::sqrt(2.0)));
  CHECK_FALSE(svg::clip(Line::from_coefficients(0, 1, 3), box, svg::Style::Fold));
}
