// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "origami/axioms.hpp"
#include "origami/fold_algebra.hpp"

using namespace origami;

namespace {

Line H(double y) { return Line::from_coefficients(0, 1, y); }
Line S(double k, double d) { return Line::from_coefficients(k, -1, -d); }

const Parabola& unit_parabola() {
  static const Parabola p({0, 1}, H(-1));
  return p;
}

}  // namespace

TEST_CASE("tangency_residual") {
  CHECK(tangency_residual(unit_parabola(), H(0)) < 1e-12);
  CHECK(tangency_residual(unit_parabola(), S(2, -4)) < 1e-12);
  CHECK(std::abs(tangency_residual(unit_parabola(), H(5)) - 10.0) < 1e-12);
}

TEST_CASE("parabola_point_check") {
  CHECK(parabola_point_check(unit_parabola(), {0, 0}) < 1e-12);
  CHECK(parabola_point_check(unit_parabola(), {2, 1}) < 1e-12);
  CHECK(std::abs(parabola_point_check(unit_parabola(), {0, 5}) - 2.0) < 1e-12);
  CHECK_THROWS_AS(Parabola({0, -1}, H(-1)), Error);
}

TEST_CASE("point_over lands on the curve") {
  const Parabola tilted({0.3, -2}, Line::from_coefficients(1, 2, 3));
  for (double s = -5; s <= 5; s += 0.25) CHECK(parabola_point_check(tilted, tilted.point_over(s)) < 1e-12);
}

TEST_CASE("solve_quadratic") {
  const CubicSolution a = solve_quadratic(0, -1);
  REQUIRE(a.roots.size() == 2);
  CHECK(std::abs(a.roots[0] + 1) < 1e-12);
  CHECK(std::abs(a.roots[1] - 1) < 1e-12);
  CHECK(a.folds[0].approx_equal(S(-1, -1), 1e-12));
  CHECK(a.folds[1].approx_equal(S(1, -1), 1e-12));

  const CubicSolution b = solve_quadratic(-2, 1);
  REQUIRE(b.roots.size() == 1);
  CHECK(std::abs(b.roots[0] - 1) < 1e-9);

  CHECK(solve_quadratic(0, 1).roots.empty());
}

TEST_CASE("solve_cubic on the doubling-the-cube construction") {
  const CubicSolution s = solve_cubic(0, -3, -2);
  REQUIRE(s.roots.size() == 2);
  CHECK(std::abs(s.roots[0] + 1) < 1e-9);
  CHECK(std::abs(s.roots[1] - 2) < 1e-9);
  CHECK(s.folds[1].approx_equal(S(2, -4), 1e-9));
  CHECK(s.folds[0].approx_equal(S(-1, -1), 1e-9));

  const CubicSolution r = solve_cubic(0, 0, -2);
  REQUIRE(r.roots.size() == 1);
  CHECK(std::abs(r.roots[0] - 1.2599210499) < 1e-9);
}

TEST_CASE("solve_cubic with c = 0 deflates") {
  const CubicSolution s = solve_cubic(0, -1, 0);
  REQUIRE(s.roots.size() == 3);
  CHECK(std::abs(s.roots[0] + 1) < 1e-12);
  CHECK(std::abs(s.roots[1]) < 1e-12);
  CHECK(std::abs(s.roots[2] - 1) < 1e-12);
  const Parabola p(s.construction.p1, s.construction.l1);
  for (const Line& f : s.folds) CHECK(tangency_residual(p, f) < 1e-9);
}

TEST_CASE("intercept_of_fold") {
  CHECK(intercept_of_fold(2, 0) == -4);
  CHECK(intercept_of_fold(0, 5) == 0);
  CHECK(intercept_of_fold(-1, 0) == -1);
}

TEST_CASE("intercept and contact identities on random cubics") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> u(-5, 5);
  for (int i = 0; i < 1000; ++i) {
    const double a = u(rng), b = u(rng), c = u(rng);
    const CubicSolution s = solve_cubic(a, b, c);
    const Parabola p1(s.construction.p1, s.construction.l1);
    for (std::size_t k = 0; k < s.roots.size(); ++k) {
      const double t = s.roots[k];
      const Line& f = s.folds[k];
      CHECK(std::abs(*f.y_intercept() - intercept_of_fold(t, a)) < 1e-7 * std::max(1.0, t * t));
      // Contact point with y = (x - a)^2 / 4 is at x = 2t + a.
      const double x = 2 * t + a;
      const Point touch{x, (x - a) * (x - a) / 4};
      CHECK(std::abs(f.eval(touch)) < 1e-7 * std::max(1.0, t * t));
      CHECK(tangency_residual(p1, f) < 1e-7 * std::max(1.0, std::abs(t)));
    }
  }
}

TEST_CASE("O5 folds are parabola tangents") {
  std::mt19937_64 rng(37);
  std::uniform_real_distribution<double> u(-5, 5);
  int checked = 0;
  for (int i = 0; i < 5000; ++i) {
    const Point p1{u(rng), u(rng)}, p2{u(rng), u(rng)};
    const Line l1 = Line::from_coefficients(u(rng), u(rng), u(rng));
    if (distance_point_line(p1, l1) < 1e-3) continue;
    const Parabola par(p1, l1);
    for (const Line& f : o5(p1, p2, l1)) {
      CHECK(tangency_residual(par, f) <= 1e-8);
      ++checked;
    }
  }
  CHECK(checked > 1000);
}

TEST_CASE("serial and parallel batch kernels agree") {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> u(-5, 5);
  std::vector<MonicCubic> batch(500);
  for (auto& m : batch) m = {u(rng), u(rng), u(rng)};
  const auto s = solve_cubics_serial(batch);
  const auto p = solve_cubics_parallel(batch);
  REQUIRE(s.size() == p.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    CHECK(s[i].roots == p[i].roots);
    CHECK(s[i].folds == p[i].folds);
  }
}
