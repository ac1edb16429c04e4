// SPDX-License-Identifier: Apache-2.0

#include "origami/geom.hpp"

#include <cmath>
#include <string>
#include <tuple>

namespace origami {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::CoincidentPoints: return "CoincidentPoints";
    case ErrorCode::CoincidentLines: return "CoincidentLines";
    case ErrorCode::DegenerateFocus: return "DegenerateFocus";
    case ErrorCode::DegenerateInput: return "DegenerateInput";
    case ErrorCode::DegenerateConfiguration: return "DegenerateConfiguration";
    case ErrorCode::NumericalFailure: return "NumericalFailure";
    case ErrorCode::InvalidLength: return "InvalidLength";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::InvalidTriangle: return "InvalidTriangle";
    case ErrorCode::NoInteriorFoot: return "NoInteriorFoot";
    case ErrorCode::MissingAssignment: return "MissingAssignment";
    case ErrorCode::UnknownNode: return "UnknownNode";
    case ErrorCode::MissingPosition: return "MissingPosition";
    case ErrorCode::InvalidLayout: return "InvalidLayout";
    case ErrorCode::CrossingPaths: return "CrossingPaths";
    case ErrorCode::OptimizationFailed: return "OptimizationFailed";
  }
  return "Unknown";
}

namespace {
Tolerance g_default_tolerance{};
}

Tolerance Tolerance::checked(double abs, double rel) {
  if (!(abs > 0.0 && abs <= 1e-3) || !(rel > 0.0) || !std::isfinite(rel)) {
    throw Error(ErrorCode::InvalidInput,
                "tolerance must satisfy 0 < abs <= 1e-3 and rel > 0");
  }
  return Tolerance{abs, rel};
}

const Tolerance& default_tolerance() { return g_default_tolerance; }

void set_default_tolerance(const Tolerance& tol) {
  g_default_tolerance = Tolerance::checked(tol.abs, tol.rel);
}

Point::Point(double x_, double y_) : x(x_), y(y_) {
  if (!std::isfinite(x_) || !std::isfinite(y_)) {
    throw Error(ErrorCode::InvalidInput, "point coordinates must be finite");
  }
}

double dot(Point p, Point q) { return p.x * q.x + p.y * q.y; }
double cross(Point p, Point q) { return p.x * q.y - p.y * q.x; }
double norm(Point p) { return std::hypot(p.x, p.y); }
double distance(Point p, Point q) { return norm(p - q); }
Point midpoint(Point p, Point q) { return {0.5 * (p.x + q.x), 0.5 * (p.y + q.y)}; }

bool near(Point p, Point q, const Tolerance& tol) { return distance(p, q) <= tol.abs; }

Line Line::from_coefficients(double a, double b, double c) {
  if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c)) {
    throw Error(ErrorCode::InvalidInput, "line coefficients must be finite");
  }
  const double len = std::hypot(a, b);
  if (!(len > 0.0)) {
    throw Error(ErrorCode::InvalidInput, "line normal (a, b) must be non-zero");
  }
  a /= len;
  b /= len;
  c /= len;
  if (a < -kSignEps || (std::abs(a) <= kSignEps && b < 0.0)) {
    a = -a;
    b = -b;
    c = -c;
  }
  // Avoid -0.0 so that printed output and componentwise equality are stable.
  if (a == 0.0) a = 0.0;
  if (b == 0.0) b = 0.0;
  if (c == 0.0) c = 0.0;
  return Line(a, b, c);
}

Line Line::through(Point p, Point normal) {
  return from_coefficients(normal.x, normal.y, dot(normal, p));
}

bool Line::contains(Point p, const Tolerance& tol) const { return std::abs(eval(p)) <= tol.abs; }

std::optional<double> Line::slope() const {
  if (std::abs(b_) <= kSignEps) return std::nullopt;
  return -a_ / b_;
}

std::optional<double> Line::y_intercept() const {
  if (std::abs(b_) <= kSignEps) return std::nullopt;
  return c_ / b_;
}

bool Line::approx_equal(const Line& other, double eps) const {
  if (std::abs(a_ - other.a_) <= eps && std::abs(b_ - other.b_) <= eps &&
      std::abs(c_ - other.c_) <= eps) {
    return true;
  }
  // Near-vertical lines can straddle the sign convention.
  return std::abs(a_) <= eps && std::abs(a_ + other.a_) <= eps &&
         std::abs(b_ + other.b_) <= eps && std::abs(c_ + other.c_) <= eps;
}

bool operator<(const Line& l, const Line& m) {
  return std::tie(l.a_, l.b_, l.c_) < std::tie(m.a_, m.b_, m.c_);
}

Line line_from_points(Point p, Point q, const Tolerance& tol) {
  const Point d = q - p;
  if (norm(d) <= tol.abs) {
    throw Error(ErrorCode::CoincidentPoints, "a line needs two distinct points");
  }
  return Line::through(p, Point{-d.y, d.x});
}

Point reflect_point(const Line& l, Point p) {
  const double k = 2.0 * (l.c() - l.a() * p.x - l.b() * p.y);
  return {p.x + k * l.a(), p.y + k * l.b()};
}

Line reflect_line(const Line& l, const Line& m) {
  const Point p = m.anchor();
  const Point q = p + m.direction();
  const Point rp = reflect_point(l, p);
  const Point rq = reflect_point(l, q);
  const Point d = rq - rp;
  return Line::through(rp, Point{-d.y, d.x});
}

std::optional<Point> intersect(const Line& l, const Line& m, const Tolerance& tol) {
  const double det = l.a() * m.b() - l.b() * m.a();
  if (std::abs(det) <= tol.abs) {
    const double s = dot(l.normal(), m.normal()) >= 0.0 ? 1.0 : -1.0;
    if (std::abs(l.c() - s * m.c()) <= tol.abs) {
      throw Error(ErrorCode::CoincidentLines, "lines coincide");
    }
    return std::nullopt;
  }
  return Point{(l.c() * m.b() - l.b() * m.c()) / det, (l.a() * m.c() - l.c() * m.a()) / det};
}

double distance_point_line(Point p, const Line& l) { return std::abs(l.eval(p)); }

Point perpendicular_foot(Point p, const Line& l) {
  const double k = l.eval(p);
  return {p.x - k * l.a(), p.y - k * l.b()};
}

}  // namespace origami
