// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <vector>

namespace origami::poly {

// Roots closer than this are reported once.
inline constexpr double kMergeTol = 1e-7;

// Coefficients ordered from the constant term upward: c[0] + c[1] t + ...
using Cubic = std::array<double, 4>;

double evaluate(const Cubic& c, double t);
double derivative(const Cubic& c, double t);

// Residual scale used for acceptance tests: max(1, |c_i|) * max(1, |t|)^deg.
double residual_scale(const Cubic& c, double t);

// Distinct real roots of c[0] + c[1] t + c[2] t^2 + c[3] t^3, ascending.
// Leading coefficients below 1e-12 of the largest one are treated as zero so
// that a root at infinity is not reported. Roots come from the closed form
// (stable quadratic formula, Cardano or the trigonometric form), are polished
// by Newton's method, and roots within kMergeTol are merged. Double roots that
// the closed form misses by round-off are recovered from the critical points.
// Throws NumericalFailure if a polished root still has a residual above
// 1e-8 * residual_scale, and DegenerateInput for the zero polynomial.
std::vector<double> real_roots(const Cubic& c);

// Monic convenience: t^3 + a t^2 + b t + c.
std::vector<double> monic_cubic_roots(double a, double b, double c);

}  // namespace origami::poly
