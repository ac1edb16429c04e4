// SPDX-License-Identifier: Apache-2.0

#include "origami/fold_algebra.hpp"

#include <algorithm>
#include <cmath>

#include "origami/axioms.hpp"
#include "origami/polynomial.hpp"

namespace origami {

Parabola::Parabola(Point focus, const Line& directrix, const Tolerance& tol)
    : focus_(focus), directrix_(directrix) {
  if (distance_point_line(focus, directrix) <= tol.abs) {
    throw Error(ErrorCode::DegenerateFocus, "parabola focus lies on its directrix");
  }
}

Point Parabola::point_over(double s) const {
  const Point base = directrix_.anchor() + s * directrix_.direction();
  const Point n = directrix_.eval(focus_) > 0.0 ? directrix_.normal() : -1.0 * directrix_.normal();
  const Point to_focus = focus_ - base;
  // Walk k along n from the directrix until the distance to the focus is k.
  const double k = dot(to_focus, to_focus) / (2.0 * dot(n, to_focus));
  return base + k * n;
}

double tangency_residual(const Parabola& parabola, const Line& fold) {
  return distance_point_line(reflect_point(fold, parabola.focus()), parabola.directrix());
}

double parabola_point_check(const Parabola& parabola, Point q) {
  return std::abs(distance(q, parabola.focus()) - distance_point_line(q, parabola.directrix()));
}

double intercept_of_fold(double t, double a) { return -t * t - t * a; }

namespace {

Line slope_line(double t, double u) { return Line::from_coefficients(-t, 1.0, u); }

void sort_by_slope(CubicSolution& sol) {
  std::vector<std::size_t> order(sol.roots.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return sol.roots[i] < sol.roots[j]; });
  CubicSolution sorted{{}, {}, sol.construction};
  for (std::size_t i : order) {
    sorted.roots.push_back(sol.roots[i]);
    sorted.folds.push_back(sol.folds[i]);
  }
  sol = std::move(sorted);
}

}  // namespace

CubicSolution solve_quadratic(double p, double q, const Tolerance& tol) {
  if (!std::isfinite(p) || !std::isfinite(q)) {
    throw Error(ErrorCode::InvalidInput, "quadratic coefficients must be finite");
  }
  const Point p1{0.0, 1.0};
  const Point p2{-p, q};
  const Line l1 = Line::from_coefficients(0.0, 1.0, -1.0);
  CubicSolution sol{{}, {}, {p1, p2, l1, std::nullopt}};
  for (const Line& fold : o5(p1, p2, l1, tol)) {
    // Tangents of y = x^2 / 4 are never vertical.
    sol.roots.push_back(*fold.slope());
    sol.folds.push_back(fold);
  }
  sort_by_slope(sol);
  return sol;
}

CubicSolution solve_cubic(double a, double b, double c, const Tolerance& tol) {
  if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c)) {
    throw Error(ErrorCode::InvalidInput, "cubic coefficients must be finite");
  }
  const Point p1{a, 1.0};
  const Point p2{c, b};
  const Line l1 = Line::from_coefficients(0.0, 1.0, -1.0);
  const Line l2 = Line::from_coefficients(1.0, 0.0, -c);
  CubicSolution sol{{}, {}, {p1, p2, l1, l2}};
  const poly::Cubic cubic{c, b, a, 1.0};

  if (distance_point_line(p2, l2) <= tol.abs) {
    // p2 sits on l2: factor out t and solve t^2 + a t + b by O5.
    std::vector<double> roots = solve_quadratic(a, b, tol).roots;
    roots.push_back(0.0);
    std::sort(roots.begin(), roots.end());
    for (double t : roots) {
      if (!sol.roots.empty() && std::abs(t - sol.roots.back()) <= poly::kMergeTol * std::max(1.0, std::abs(t))) {
        continue;
      }
      sol.roots.push_back(t);
      sol.folds.push_back(slope_line(t, intercept_of_fold(t, a)));
    }
  } else {
    for (const Line& fold : o6(p1, l1, p2, l2, tol)) {
      // Vertical folds cannot encode a finite slope.
      if (const auto t = fold.slope()) {
        sol.roots.push_back(*t);
        sol.folds.push_back(fold);
      }
    }
    sort_by_slope(sol);
  }

  for (double t : sol.roots) {
    if (std::abs(poly::evaluate(cubic, t)) > 1e-8 * poly::residual_scale(cubic, t)) {
      throw Error(ErrorCode::NumericalFailure, "fold slope does not satisfy the cubic");
    }
  }
  return sol;
}

namespace {

CubicSolution solve_or_empty(const MonicCubic& m, const Tolerance& tol) {
  try {
    return solve_cubic(m.a, m.b, m.c, tol);
  } catch (const Error&) {
    return {};
  }
}

}  // namespace

std::vector<CubicSolution> solve_cubics_serial(std::span<const MonicCubic> batch, const Tolerance& tol) {
  std::vector<CubicSolution> out(batch.size());
  for (std::size_t i = 0; i < batch.size(); ++i) out[i] = solve_or_empty(batch[i], tol);
  return out;
}

std::vector<CubicSolution> solve_cubics_parallel(std::span<const MonicCubic> batch, const Tolerance& tol) {
  std::vector<CubicSolution> out(batch.size());
  const auto n = static_cast<long>(batch.size());
#pragma omp parallel for schedule(static)
  for (long i = 0; i < n; ++i) out[i] = solve_or_empty(batch[i], tol);
  return out;
}

}  // namespace origami
