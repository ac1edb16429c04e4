// SPDX-License-Identifier: Apache-2.0

#include "origami/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "origami/fold_algebra.hpp"

namespace origami {

bool ConstructionTrace::passed() const {
  return std::all_of(assertions.begin(), assertions.end(), [](const Assertion& a) { return a.passed(); });
}

const DerivedPoint& ConstructionTrace::point(const std::string& name) const {
  for (const auto& p : derived_points) {
    if (p.name == name) return p;
  }
  throw Error(ErrorCode::InvalidInput, "no derived point named '" + name + "'");
}

namespace {

double line_deviation(const Line& l, const Line& m) {
  const double direct = std::max({std::abs(l.a() - m.a()), std::abs(l.b() - m.b()), std::abs(l.c() - m.c())});
  const double flipped = std::max({std::abs(l.a() + m.a()), std::abs(l.b() + m.b()), std::abs(l.c() + m.c())});
  return std::min(direct, flipped);
}

Point unit_circle_at(double t) { return {t, std::sqrt(std::max(0.0, (1.0 - t) * (1.0 + t)))}; }

Point derive(const Derivation& how, const std::vector<Line>& folds, Point recorded, const Tolerance& tol) {
  struct Visitor {
    const std::vector<Line>& folds;
    Point recorded;
    const Tolerance& tol;
    Point operator()(const GivenPoint&) const { return recorded; }
    Point operator()(const CreaseIntersection& x) const {
      const auto p = intersect(folds.at(x.first), folds.at(x.second), tol);
      if (!p) throw Error(ErrorCode::NumericalFailure, "construction creases are parallel");
      return *p;
    }
    Point operator()(const ReflectionAcross& r) const { return reflect_point(folds.at(r.step), r.source); }
    Point operator()(const UnitCirclePointAtSlope& u) const {
      const auto t = folds.at(u.step).slope();
      if (!t) throw Error(ErrorCode::NumericalFailure, "trisection fold is vertical");
      return unit_circle_at(*t);
    }
  };
  return std::visit(Visitor{folds, recorded, tol}, how);
}

// Accumulates steps, derived points and checks while a construction runs.
class TraceBuilder {
 public:
  explicit TraceBuilder(const Tolerance& tol) : tol_(tol) {}

  std::size_t fold(AxiomId axiom, AxiomInput input, std::size_t choice = 0) {
    const FoldSet set = apply_axiom(axiom, input, tol_);
    if (choice >= set.size()) throw Error(ErrorCode::NumericalFailure, "construction step has no fold");
    trace_.steps.push_back({axiom, std::move(input), set[choice], choice});
    folds_.push_back(set[choice]);
    return trace_.steps.size() - 1;
  }

  const Line& line(std::size_t step) const { return folds_[step]; }

  Point add(std::string name, Derivation how, Point recorded = {}) {
    const Point p = derive(how, folds_, recorded, tol_);
    trace_.derived_points.push_back({std::move(name), p, how});
    return p;
  }

  Point given(std::string name, Point p) { return add(std::move(name), GivenPoint{}, p); }
  Point meet(std::string name, std::size_t s1, std::size_t s2) {
    return add(std::move(name), CreaseIntersection{s1, s2});
  }
  Point reflect(std::string name, std::size_t step, Point source) {
    return add(std::move(name), ReflectionAcross{step, source});
  }

  void check(std::string name, double residual, double tolerance) {
    trace_.assertions.push_back({std::move(name), residual, tolerance});
  }

  ConstructionTrace finish() { return std::move(trace_); }

 private:
  const Tolerance& tol_;
  ConstructionTrace trace_;
  std::vector<Line> folds_;
};

// Interior angle between two rays from a common apex.
double angle_between(Point u, Point v) { return std::atan2(std::abs(cross(u, v)), dot(u, v)); }

}  // namespace

double replay_deviation(const ConstructionTrace& trace, const Tolerance& tol) {
  double worst = 0.0;
  std::vector<Line> folds;
  for (const auto& step : trace.steps) {
    const FoldSet set = apply_axiom(step.axiom, step.input, tol);
    if (step.choice >= set.size()) return std::numeric_limits<double>::infinity();
    worst = std::max(worst, line_deviation(set[step.choice], step.fold));
    folds.push_back(set[step.choice]);
  }
  for (const auto& dp : trace.derived_points) {
    worst = std::max(worst, distance(derive(dp.how, folds, dp.point, tol), dp.point));
  }
  return worst;
}

Triangle::Triangle(Point a, Point b, Point c, const Tolerance& tol) : v_{a, b, c} {
  if (!(area() > tol.abs)) throw Error(ErrorCode::InvalidTriangle, "triangle is degenerate");
}

double Triangle::area() const { return 0.5 * std::abs(cross(v_[1] - v_[0], v_[2] - v_[0])); }

ConstructionTrace trisect_segment(double length, const Tolerance& tol) {
  if (!std::isfinite(length) || length <= tol.abs) {
    throw Error(ErrorCode::InvalidLength, "segment length must be positive");
  }
  const double L = length;
  const Point origin{0.0, 0.0};
  const Point right_bottom{L, 0.0};
  const Point right_top{L, L};
  const Point left_top{0.0, L};

  TraceBuilder tb(tol);
  const auto right_edge = tb.fold(AxiomId::O1, {{right_bottom, right_top}, {}});
  const auto half = tb.fold(AxiomId::O2, {{right_bottom, right_top}, {}});
  const Point mid_right = tb.meet("right_midpoint", right_edge, half);
  const auto diagonal = tb.fold(AxiomId::O1, {{left_top, right_bottom}, {}});
  const auto slant = tb.fold(AxiomId::O1, {{origin, mid_right}, {}});
  // y = L - x meets y = x / 2 at (2L/3, L/3).
  const Point cross_point = tb.meet("crossing", diagonal, slant);
  const auto bottom_edge = tb.fold(AxiomId::O1, {{origin, right_bottom}, {}});
  const auto drop = tb.fold(AxiomId::O4, {{cross_point}, {tb.line(bottom_edge)}});
  const Point two_thirds = tb.meet("two_thirds", bottom_edge, drop);
  const auto centre = tb.fold(AxiomId::O2, {{origin, right_bottom}, {}});
  const Point one_third = tb.reflect("one_third", centre, two_thirds);

  const double eps = 1e-12 * L;
  tb.check("one_third", std::abs(one_third.x - L / 3.0) + std::abs(one_third.y), eps);
  tb.check("two_thirds", std::abs(two_thirds.x - 2.0 * L / 3.0) + std::abs(two_thirds.y), eps);
  return tb.finish();
}

ConstructionTrace trisect_angle(double theta, const Tolerance& tol) {
  if (!std::isfinite(theta) || theta <= 0.0 || theta >= std::numbers::pi) {
    throw Error(ErrorCode::OutOfRange, "angle must lie strictly between 0 and pi");
  }
  // cos(theta / 3) is the largest real root of t^3 - (3/4) t - cos(theta) / 4.
  const double c = -0.25 * std::cos(theta);
  const CubicSolution sol = solve_cubic(0.0, -0.75, c, tol);
  const double t = sol.roots.back();
  const FoldConstruction& k = sol.construction;

  TraceBuilder tb(tol);
  std::size_t beloch = 0;
  const bool deflated = distance_point_line(k.p2, *k.l2) <= tol.abs;
  if (deflated) {
    // theta = pi / 2: the cubic factors as t (t^2 - 3/4) and O5 carries the
    // quadratic part on the parabola y = x^2 / 4.
    const CubicSolution q = solve_quadratic(0.0, -0.75, tol);
    const AxiomInput in{{q.construction.p1, q.construction.p2}, {q.construction.l1}};
    const FoldSet set = apply_axiom(AxiomId::O5, in, tol);
    std::size_t choice = 0;
    for (std::size_t i = 0; i < set.size(); ++i) {
      if (set[i].approx_equal(q.folds.back(), 1e-12)) choice = i;
    }
    beloch = tb.fold(AxiomId::O5, in, choice);
  } else {
    const AxiomInput in{{k.p1, k.p2}, {k.l1, *k.l2}};
    const FoldSet set = apply_axiom(AxiomId::O6, in, tol);
    std::size_t choice = 0;
    for (std::size_t i = 0; i < set.size(); ++i) {
      if (set[i].approx_equal(sol.folds.back(), 1e-12)) choice = i;
    }
    beloch = tb.fold(AxiomId::O6, in, choice);
  }
  const Point ray = tb.add("trisector", UnitCirclePointAtSlope{beloch});
  tb.fold(AxiomId::O1, {{Point{0.0, 0.0}, ray}, {}});

  tb.check("cubic_residual", std::abs(4.0 * t * t * t - 3.0 * t - std::cos(theta)), 1e-12);
  tb.check("trisection_error", std::abs(std::atan2(ray.y, ray.x) - theta / 3.0), 1e-9);
  return tb.finish();
}

ConstructionTrace angle_sum_demo(const Triangle& tri, const Tolerance& tol) {
  std::size_t apex_index = 0;
  double longest = -1.0;
  for (std::size_t i = 0; i < 3; ++i) {
    const double side = distance(tri.vertex((i + 1) % 3), tri.vertex((i + 2) % 3));
    if (side > longest) {
      longest = side;
      apex_index = i;
    }
  }
  const Point apex = tri.vertex(apex_index);
  const Point left = tri.vertex((apex_index + 1) % 3);
  const Point right = tri.vertex((apex_index + 2) % 3);

  TraceBuilder tb(tol);
  tb.given("apex", apex);
  tb.given("left", left);
  tb.given("right", right);
  const auto base = tb.fold(AxiomId::O1, {{left, right}, {}});
  const auto altitude = tb.fold(AxiomId::O4, {{apex}, {tb.line(base)}});
  const Point foot = tb.meet("foot", base, altitude);

  const double along = dot(foot - left, right - left) / dot(right - left, right - left);
  if (!(along > 0.0 && along < 1.0) || distance(foot, left) <= tol.abs || distance(foot, right) <= tol.abs) {
    throw Error(ErrorCode::NoInteriorFoot, "altitude foot is not inside the base");
  }

  const auto midline = tb.fold(AxiomId::O2, {{apex, foot}, {}});
  const auto left_side = tb.fold(AxiomId::O1, {{left, apex}, {}});
  const auto right_side = tb.fold(AxiomId::O1, {{right, apex}, {}});
  const Point mid_left = tb.meet("mid_left", midline, left_side);
  const Point mid_right = tb.meet("mid_right", midline, right_side);
  const auto left_corner = tb.fold(AxiomId::O2, {{left, foot}, {}});
  const auto right_corner = tb.fold(AxiomId::O2, {{right, foot}, {}});

  const Point apex_image = tb.reflect("apex_image", midline, apex);
  const Point left_image = tb.reflect("left_image", left_corner, left);
  const Point right_image = tb.reflect("right_image", right_corner, right);

  tb.check("vertices_meet",
           std::max({distance(apex_image, foot), distance(left_image, foot), distance(right_image, foot)}), 1e-9);

  // The folded corners sit side by side at the foot.
  const double alpha = angle_between(left - foot, mid_left - foot);
  const double beta = angle_between(mid_left - foot, mid_right - foot);
  const double gamma = angle_between(mid_right - foot, right - foot);
  tb.check("angle_sum", std::abs(alpha + beta + gamma - std::numbers::pi), 1e-12);

  const double alpha0 = angle_between(right - left, apex - left);
  const double beta0 = angle_between(left - apex, right - apex);
  const double gamma0 = angle_between(left - right, apex - right);
  tb.check("folded_angles_match",
           std::max({std::abs(alpha - alpha0), std::abs(beta - beta0), std::abs(gamma - gamma0)}), 1e-9);

  const double b = distance(left, right);
  const double h = distance(apex, foot);
  const double area = tri.area();
  tb.check("area_identity", std::abs(area - 2.0 * (b / 2.0) * (h / 2.0)) / std::max(1.0, area), 1e-12);
  return tb.finish();
}

ConstructionTrace pythagoras_demo(double a, double b, const Tolerance& tol) {
  if (!std::isfinite(a) || !std::isfinite(b) || a <= tol.abs || b <= tol.abs) {
    throw Error(ErrorCode::InvalidLength, "leg lengths must be positive");
  }
  const double s = a + b;
  const Point corners[4] = {{0.0, 0.0}, {s, 0.0}, {s, s}, {0.0, s}};
  const Point marks[4] = {{b, 0.0}, {s, b}, {a, s}, {0.0, a}};

  TraceBuilder tb(tol);
  for (int i = 0; i < 4; ++i) tb.given("mark" + std::to_string(i), marks[i]);
  // Hypotenuse i cuts off corner i; it joins marks i - 1 and i.
  std::size_t hyp[4];
  for (int i = 0; i < 4; ++i) hyp[i] = tb.fold(AxiomId::O1, {{marks[(i + 3) % 4], marks[i]}, {}});
  Point inner[4];
  for (int i = 0; i < 4; ++i) inner[i] = tb.meet("inner" + std::to_string(i), hyp[i], hyp[(i + 1) % 4]);
  Point images[4];
  for (int i = 0; i < 4; ++i) images[i] = tb.reflect("corner_image" + std::to_string(i), hyp[i], corners[i]);

  double side[4];
  for (int i = 0; i < 4; ++i) side[i] = distance(inner[i], inner[(i + 1) % 4]);
  double side_spread = 0.0;
  double worst_cos = 0.0;
  for (int i = 0; i < 4; ++i) {
    side_spread = std::max(side_spread, std::abs(side[i] - side[0]));
    const Point u = inner[(i + 1) % 4] - inner[i];
    const Point v = inner[(i + 3) % 4] - inner[i];
    worst_cos = std::max(worst_cos, std::abs(dot(u, v)) / (norm(u) * norm(v)));
  }
  tb.check("inner_square_sides", side_spread / std::max(1.0, side[0]), 1e-9);
  tb.check("inner_square_right_angles", worst_cos, 1e-9);

  const double c2 = dot(inner[1] - inner[0], inner[1] - inner[0]);
  const double scale = std::max(1.0, s * s);
  tb.check("square_minus_triangles", std::abs(c2 - (s * s - 4.0 * (0.5 * a * b))) / scale, 1e-12);
  tb.check("sum_of_squares", std::abs(c2 - (a * a + b * b)) / scale, 1e-12);

  // Signed distance of each folded corner from the inner square's sides,
  // positive inside.
  double margin = std::numeric_limits<double>::infinity();
  for (const Point& img : images) {
    for (int i = 0; i < 4; ++i) {
      const Point e = inner[(i + 1) % 4] - inner[i];
      margin = std::min(margin, cross(e, img - inner[i]) / norm(e));
    }
  }
  tb.check("corners_inside", std::max(0.0, tol.abs - margin), 0.0);
  return tb.finish();
}

}  // namespace origami
