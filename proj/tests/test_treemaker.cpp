// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <random>

#include "origami/treemaker.hpp"

using namespace origami;

namespace {

WeightedTree single_edge() {
  return WeightedTree({{"a", NodeKind::Terminal}, {"b", NodeKind::Terminal}}, {{"a", "b", 1.0}});
}

WeightedTree star(int leaves) {
  std::vector<TreeNode> nodes{{"hub", NodeKind::Internal}};
  std::vector<TreeEdge> edges;
  for (int i = 0; i < leaves; ++i) {
    nodes.push_back({"leaf" + std::to_string(i), NodeKind::Terminal});
    edges.push_back({"hub", "leaf" + std::to_string(i), 1.0});
  }
  return WeightedTree(nodes, edges);
}

WeightedTree lizard() {
  return WeightedTree({{"head", NodeKind::Terminal},
                       {"n1", NodeKind::Internal},
                       {"n2", NodeKind::Internal},
                       {"tail", NodeKind::Terminal},
                       {"fl", NodeKind::Terminal},
                       {"fr", NodeKind::Terminal},
                       {"hl", NodeKind::Terminal},
                       {"hr", NodeKind::Terminal}},
                      {{"head", "n1", 1},
                       {"n1", "n2", 2},
                       {"n2", "tail", 3},
                       {"n1", "fl", 1},
                       {"n1", "fr", 1},
                       {"n2", "hl", 1},
                       {"n2", "hr", 1}});
}

Layout corners(double m) {
  return {m, {{"leaf0", {0, 0}}, {"leaf1", {1, 0}}, {"leaf2", {1, 1}}, {"leaf3", {0, 1}}}};
}

}  // namespace

TEST_CASE("tree validation") {
  CHECK_THROWS_AS(WeightedTree({{"a", NodeKind::Terminal}, {"a", NodeKind::Terminal}}, {{"a", "a", 1}}), Error);
  CHECK_THROWS_AS(WeightedTree({{"a", NodeKind::Terminal}, {"b", NodeKind::Terminal}}, {{"a", "c", 1}}), Error);
  CHECK_THROWS_AS(WeightedTree({{"a", NodeKind::Terminal}, {"b", NodeKind::Terminal}}, {{"a", "b", 0}}), Error);
  CHECK_THROWS_AS(WeightedTree({{"a", NodeKind::Terminal}, {"b", NodeKind::Terminal}, {"c", NodeKind::Terminal}},
                               {{"a", "b", 1}}),
                  Error);
  // Three nodes, two edges, but a cycle on a-b plus an isolated c.
  CHECK_THROWS_AS(WeightedTree({{"a", NodeKind::Terminal}, {"b", NodeKind::Terminal}, {"c", NodeKind::Terminal}},
                               {{"a", "b", 1}, {"b", "a", 1}}),
                  Error);
}

TEST_CASE("tree distances on the lizard") {
  const WeightedTree t = lizard();
  CHECK(tree_distance(t, "head", "tail") == 6.0);
  CHECK(tree_distance(t, "fl", "fr") == 2.0);
  CHECK(tree_distance(t, "fl", "hr") == 4.0);
  CHECK(tree_distance(t, "head", "head") == 0.0);
  CHECK_THROWS_AS(tree_distance(t, "head", "wing"), Error);
  CHECK(t.terminals().size() == 6);
}

TEST_CASE("tree metric axioms") {
  const WeightedTree t = lizard();
  std::vector<std::string> ids;
  for (const auto& n : t.nodes()) ids.push_back(n.id);
  for (const auto& u : ids) {
    for (const auto& v : ids) {
      CHECK(tree_distance(t, u, v) == tree_distance(t, v, u));
      CHECK((tree_distance(t, u, v) == 0.0) == (u == v));
      for (const auto& w : ids) CHECK(tree_distance(t, u, w) <= tree_distance(t, u, v) + tree_distance(t, v, w) + 1e-12);
    }
  }
}

TEST_CASE("validate_layout") {
  const WeightedTree t = single_edge();
  const auto ok = validate_layout(t, {std::sqrt(2.0), {{"a", {0, 0}}, {"b", {1, 1}}}});
  CHECK(ok.pass);
  const auto bad = validate_layout(t, {1.5, {{"a", {0, 0}}, {"b", {1, 1}}}});
  CHECK_FALSE(bad.pass);
  CHECK(std::abs(bad.worst_violation - (1.5 - std::sqrt(2.0))) < 1e-12);
  CHECK(validate_layout(t, {1e-9, {{"a", {0.5, 0.5}}, {"b", {0.5, 0.5 + 1e-6}}}}).pass);
  CHECK_FALSE(validate_layout(t, {0.1, {{"a", {0, 0}}, {"b", {1.1, 1}}}}).pass);
  CHECK_THROWS_AS(validate_layout(t, {0.1, {{"a", {0, 0}}}}), Error);
}

TEST_CASE("optimizer on small trees") {
  const Layout one = optimize_scale(single_edge());
  CHECK(std::abs(one.scale - std::sqrt(2.0)) < 1e-6);

  const Layout four = optimize_scale(star(4));
  CHECK(std::abs(four.scale - 0.5) < 1e-3);
  CHECK(validate_layout(star(4), four).pass);
}

TEST_CASE("optimizer is deterministic and execution-independent") {
  const WeightedTree t = lizard();
  OptimizerOptions serial{8, 99, Execution::Serial};
  OptimizerOptions parallel{8, 99, Execution::Parallel};
  const Layout a = optimize_scale(t, serial);
  const Layout b = optimize_scale(t, parallel);
  const Layout c = optimize_scale(t, parallel);
  CHECK(a.scale == b.scale);
  CHECK(a.positions == b.positions);
  CHECK(b.positions == c.positions);
  CHECK(validate_layout(t, a).pass);
}

TEST_CASE("optimum is tight and cannot be scaled up") {
  const WeightedTree t = lizard();
  const Layout l = optimize_scale(t, {16, 5, Execution::Parallel});
  CHECK(validate_layout(t, l).pass);
  CHECK_FALSE(mark_active_paths(t, l).empty());
  Layout bigger = l;
  bigger.scale *= 1.0 + 1e-6;
  CHECK_FALSE(validate_layout(t, bigger).pass);
  // Monotone: any smaller scale is still valid.
  for (double f : {0.9, 0.5, 0.1}) {
    Layout s = l;
    s.scale *= f;
    CHECK(validate_layout(t, s).pass);
  }
}

TEST_CASE("active paths") {
  const WeightedTree t = single_edge();
  const auto diag = mark_active_paths(t, {std::sqrt(2.0), {{"a", {0, 0}}, {"b", {1, 1}}}});
  CHECK(diag.size() == 1);

  const auto sides = mark_active_paths(star(4), corners(0.5));
  CHECK(sides.size() == 4);
  for (const auto& p : sides) CHECK(std::abs(distance(p.from, p.to) - 1.0) < 1e-12);

  CHECK(mark_active_paths(star(4), corners(0.45)).empty());
  CHECK_THROWS_AS(mark_active_paths(star(4), corners(0.6)), Error);
}
