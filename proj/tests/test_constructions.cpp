// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "origami/constructions.hpp"

using namespace origami;

namespace {

double assertion(const ConstructionTrace& t, const std::string& name) {
  for (const auto& a : t.assertions) {
    if (a.name == name) return a.residual;
  }
  FAIL("missing assertion " << name);
  return INFINITY;
}

}  // namespace

TEST_CASE("segment trisection") {
  const ConstructionTrace t = trisect_segment(1.0);
  CHECK(t.passed());
  CHECK(std::abs(t.point("one_third").point.x - 1.0 / 3.0) <= 1e-12);
  CHECK(std::abs(t.point("two_thirds").point.x - 2.0 / 3.0) <= 1e-12);
  const Point crossing = t.point("crossing").point;
  CHECK(std::abs(crossing.x - 2.0 / 3.0) < 1e-12);
  CHECK(std::abs(crossing.y - 1.0 / 3.0) < 1e-12);

  const ConstructionTrace three = trisect_segment(3.0);
  CHECK(std::abs(three.point("one_third").point.x - 1.0) <= 3e-12);
  CHECK(std::abs(three.point("two_thirds").point.x - 2.0) <= 3e-12);

  CHECK_THROWS_AS(trisect_segment(0.0), Error);
  CHECK_THROWS_AS(trisect_segment(-1.0), Error);
}

TEST_CASE("angle trisection") {
  const ConstructionTrace right = trisect_angle(std::numbers::pi / 2);
  CHECK(right.passed());
  CHECK(std::abs(right.point("trisector").point.x - std::sqrt(3.0) / 2) < 1e-12);

  const ConstructionTrace sixty = trisect_angle(std::numbers::pi / 3);
  const double ref = oracle::newton([](double t) { return 4 * t * t * t - 3 * t - 0.5; },
                                    [](double t) { return 12 * t * t - 3; }, 1.0);
  CHECK(std::abs(sixty.point("trisector").point.x - ref) < 1e-9);
  CHECK(std::abs(ref - 0.9396926) < 1e-7);

  const ConstructionTrace edge = trisect_angle(std::numbers::pi - 1e-6);
  CHECK(edge.passed());
  CHECK(std::abs(edge.point("trisector").point.x - std::cos((std::numbers::pi - 1e-6) / 3)) < 1e-9);

  CHECK_THROWS_AS(trisect_angle(0.0), Error);
  CHECK_THROWS_AS(trisect_angle(std::numbers::pi), Error);
}

TEST_CASE("angle sum demo") {
  const ConstructionTrace t = angle_sum_demo(Triangle({0, 0}, {4, 0}, {1, 2}));
  CHECK(t.passed());
  CHECK(distance(t.point("foot").point, {1, 0}) < 1e-12);

  const ConstructionTrace iso = angle_sum_demo(Triangle({0, 0}, {2, 0}, {1, 1}));
  CHECK(iso.passed());
  CHECK(distance(iso.point("foot").point, {1, 0}) < 1e-12);

  CHECK_THROWS_AS(Triangle({0, 0}, {1, 0}, {2, 0}), Error);
}

TEST_CASE("angle sum demo on random triangles") {
  std::mt19937_64 rng(43);
  std::uniform_real_distribution<double> u(-10, 10);
  for (int i = 0; i < 300; ++i) {
    const Point a{u(rng), u(rng)}, b{u(rng), u(rng)}, c{u(rng), u(rng)};
    if (std::abs(cross(b - a, c - a)) < 1e-2) continue;
    const ConstructionTrace t = angle_sum_demo(Triangle(a, b, c));
    CHECK(t.passed());
    CHECK(assertion(t, "angle_sum") <= 1e-12);
  }
}

TEST_CASE("pythagoras demo") {
  const ConstructionTrace t = pythagoras_demo(3, 4);
  CHECK(t.passed());
  CHECK(std::abs(distance(t.point("inner0").point, t.point("inner1").point) - 5.0) < 1e-12);

  const ConstructionTrace sym = pythagoras_demo(1, 1);
  CHECK(sym.passed());
  CHECK(std::abs(distance(sym.point("inner0").point, sym.point("inner1").point) - std::sqrt(2.0)) < 1e-12);
  for (int i = 0; i < 4; ++i) CHECK(distance(sym.point("corner_image" + std::to_string(i)).point, {1, 1}) < 1e-12);

  CHECK(pythagoras_demo(0.001, 10).passed());
  CHECK_THROWS_AS(pythagoras_demo(0, 1), Error);
}

TEST_CASE("replay reproduces every trace exactly") {
  const std::vector<ConstructionTrace> traces{trisect_segment(2.5), trisect_angle(1.0), trisect_angle(std::numbers::pi / 2),
                                              angle_sum_demo(Triangle({0, 0}, {4, 0}, {1, 2})),
                                              pythagoras_demo(2, 7)};
  for (const auto& t : traces) CHECK(replay_deviation(t) == 0.0);

  ConstructionTrace tampered = trisect_segment(1.0);
  tampered.derived_points.back().point.x += 1e-3;
  CHECK(replay_deviation(tampered) >= 1e-3 * 0.999);
}
