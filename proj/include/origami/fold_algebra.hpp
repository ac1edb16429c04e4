// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <span>
#include <vector>

#include "origami/geom.hpp"

namespace origami {

// Locus of points equidistant from a focus and a directrix.
class Parabola {
 public:
  // Throws DegenerateFocus when the focus lies on the directrix.
  Parabola(Point focus, const Line& directrix, const Tolerance& tol = default_tolerance());

  Point focus() const { return focus_; }
  const Line& directrix() const { return directrix_; }

  // The parabola point above the directrix point anchor + s * direction.
  Point point_over(double s) const;

 private:
  Point focus_;
  Line directrix_;
};

// Distance from the fold-reflected focus to the directrix. Zero exactly when
// `fold` is tangent to the parabola.
double tangency_residual(const Parabola& parabola, const Line& fold);

// |distance(q, focus) - distance(q, directrix)|; zero exactly on the curve.
double parabola_point_check(const Parabola& parabola, Point q);

// Points and lines fed to the axiom solver to realize an equation.
struct FoldConstruction {
  Point p1;
  Point p2;
  Line l1;
  std::optional<Line> l2;  // absent for the quadratic (O5) construction
};

// Real roots of an equation together with the fold realizing each root as
// its slope. roots and folds are parallel arrays, roots ascending.
struct CubicSolution {
  std::vector<double> roots;
  std::vector<Line> folds;
  FoldConstruction construction;
};

// t^2 + p t + q = 0 through O5 with p1 = (0, 1), l1: y = -1, p2 = (-p, q).
CubicSolution solve_quadratic(double p, double q, const Tolerance& tol = default_tolerance());

// t^3 + a t^2 + b t + c = 0 through O6 with p1 = (a, 1), p2 = (c, b),
// l1: y = -1, l2: x = -c. When p2 falls on l2 (c ~ 0) the cubic is deflated
// to t (t^2 + a t + b) and the quadratic part goes through solve_quadratic;
// folds are still reported as tangents of the (a, 1) parabola.
CubicSolution solve_cubic(double a, double b, double c, const Tolerance& tol = default_tolerance());

// y-intercept -t^2 - t a of the fold with slope t tangent to y = (x - a)^2 / 4.
double intercept_of_fold(double t, double a);

struct MonicCubic {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
};

// Batch kernels: solve every cubic independently. The parallel version splits
// the batch across OpenMP threads (when built with OpenMP) and returns the
// same values as the serial reference. A failing instance yields an empty
// solution rather than aborting the batch.
std::vector<CubicSolution> solve_cubics_serial(std::span<const MonicCubic> batch,
                                               const Tolerance& tol = default_tolerance());
std::vector<CubicSolution> solve_cubics_parallel(std::span<const MonicCubic> batch,
                                                 const Tolerance& tol = default_tolerance());

}  // namespace origami
