// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "origami/axioms.hpp"

namespace origami {

// One fold of a construction: the axiom applied, its inputs, and the fold
// kept from the resulting FoldSet.
struct ConstructionStep {
  AxiomId axiom;
  AxiomInput input;
  Line fold;
  std::size_t choice = 0;  // index into the axiom's FoldSet
};

// How a derived point was obtained, so replay can recompute it.
struct GivenPoint {};
struct CreaseIntersection {
  std::size_t first;   // step indices
  std::size_t second;
};
struct ReflectionAcross {
  std::size_t step;
  Point source;
};
// (t, sqrt(1 - t^2)) for the slope t of a step's fold, |t| <= 1.
struct UnitCirclePointAtSlope {
  std::size_t step;
};
using Derivation = std::variant<GivenPoint, CreaseIntersection, ReflectionAcross, UnitCirclePointAtSlope>;

struct DerivedPoint {
  std::string name;
  Point point;
  Derivation how;
};

// A named numerical check; passes when residual <= tolerance.
struct Assertion {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;

  bool passed() const { return residual <= tolerance; }
};

struct ConstructionTrace {
  std::vector<ConstructionStep> steps;
  std::vector<DerivedPoint> derived_points;
  std::vector<Assertion> assertions;

  bool passed() const;
  const DerivedPoint& point(const std::string& name) const;
};

// Re-executes every step and derivation. Returns the largest deviation from
// the recorded folds and points (zero for a faithful trace).
double replay_deviation(const ConstructionTrace& trace, const Tolerance& tol = default_tolerance());

class Triangle {
 public:
  // Throws InvalidTriangle unless the area exceeds tol.abs.
  Triangle(Point a, Point b, Point c, const Tolerance& tol = default_tolerance());

  Point a() const { return v_[0]; }
  Point b() const { return v_[1]; }
  Point c() const { return v_[2]; }
  Point vertex(std::size_t i) const { return v_[i]; }
  double area() const;

 private:
  Point v_[3];
};

// Marks 1/3 and 2/3 of a segment of the given length by crossing creases on
// the bounding square. Throws InvalidLength for length <= tol.abs.
ConstructionTrace trisect_segment(double length, const Tolerance& tol = default_tolerance());

// Trisects theta in (0, pi) through the Beloch fold on 4t^3 - 3t = cos(theta).
// Throws OutOfRange otherwise. The derived point "trisector" lies on the unit
// circle at angle theta / 3.
ConstructionTrace trisect_angle(double theta, const Tolerance& tol = default_tolerance());

// Folds the apex onto the foot of its altitude and both base corners onto the
// same foot, then checks that the three angles tile a straight angle and that
// the area is twice the (b/2) x (h/2) rectangle. The apex is the vertex
// opposite the longest side.
ConstructionTrace angle_sum_demo(const Triangle& t, const Tolerance& tol = default_tolerance());

// Folds the four corner triangles of an (a + b) square over their hypotenuses
// and checks the inner square of side c with c^2 = (a + b)^2 - 2ab.
ConstructionTrace pythagoras_demo(double a, double b, const Tolerance& tol = default_tolerance());

}  // namespace origami
