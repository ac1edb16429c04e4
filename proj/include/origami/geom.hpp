// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>

#include "origami/error.hpp"

namespace origami {

// Absolute and relative tolerances used by every geometric predicate.
struct Tolerance {
  double abs = 1e-9;
  double rel = 1e-9;

  // Throws InvalidInput unless 0 < abs <= 1e-3 and rel > 0.
  static Tolerance checked(double abs, double rel = 1e-9);
};

// Process-wide default. Intended to be set once at startup (the CLI does this
// from --tol / ORIGAMI_TOL); not synchronized.
const Tolerance& default_tolerance();
void set_default_tolerance(const Tolerance& tol);

struct Point {
  double x = 0.0;
  double y = 0.0;

  Point() = default;
  // Rejects NaN and infinities.
  Point(double x, double y);

  friend Point operator+(Point p, Point q) { return {p.x + q.x, p.y + q.y}; }
  friend Point operator-(Point p, Point q) { return {p.x - q.x, p.y - q.y}; }
  friend Point operator*(double k, Point p) { return {k * p.x, k * p.y}; }
  friend bool operator==(const Point&, const Point&) = default;
};

double dot(Point p, Point q);
double cross(Point p, Point q);
double norm(Point p);
double distance(Point p, Point q);
Point midpoint(Point p, Point q);
bool near(Point p, Point q, const Tolerance& tol = default_tolerance());

// The line {(x, y) : a x + b y = c} with (a, b) a unit normal. Canonical sign:
// a > kSignEps, or |a| <= kSignEps and b > 0, so equal lines compare equal
// componentwise.
class Line {
 public:
  static constexpr double kSignEps = 1e-12;

  // The x-axis, y = 0.
  Line() = default;

  // Normalizes and canonicalizes; throws InvalidInput when (a, b) vanishes or
  // any coefficient is non-finite.
  static Line from_coefficients(double a, double b, double c);
  // Line through p with the given (not necessarily unit) normal.
  static Line through(Point p, Point normal);

  double a() const { return a_; }
  double b() const { return b_; }
  double c() const { return c_; }
  Point normal() const { return {a_, b_}; }
  // Unit direction, the normal rotated by +90 degrees.
  Point direction() const { return {-b_, a_}; }

  // Signed value a x + b y - c.
  double eval(Point p) const { return a_ * p.x + b_ * p.y - c_; }
  bool contains(Point p, const Tolerance& tol = default_tolerance()) const;
  // Any point on the line (the foot of the origin).
  Point anchor() const { return {a_ * c_, b_ * c_}; }

  // Slope dy/dx; nullopt for vertical lines.
  std::optional<double> slope() const;
  std::optional<double> y_intercept() const;

  bool approx_equal(const Line& other, double eps) const;
  friend bool operator==(const Line&, const Line&) = default;
  // Lexicographic on (a, b, c).
  friend bool operator<(const Line& l, const Line& m);

 private:
  Line(double a, double b, double c) : a_(a), b_(b), c_(c) {}
  double a_ = 0.0;
  double b_ = 1.0;
  double c_ = 0.0;
};

Line line_from_points(Point p, Point q, const Tolerance& tol = default_tolerance());
Point reflect_point(const Line& l, Point p);
Line reflect_line(const Line& l, const Line& m);

// nullopt when the lines are parallel; throws CoincidentLines when they are
// the same line.
std::optional<Point> intersect(const Line& l, const Line& m,
                               const Tolerance& tol = default_tolerance());

double distance_point_line(Point p, const Line& l);
Point perpendicular_foot(Point p, const Line& l);

}  // namespace origami
