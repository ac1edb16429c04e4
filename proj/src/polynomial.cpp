// SPDX-License-Identifier: Apache-2.0

#include "origami/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "origami/error.hpp"

namespace origami::poly {

namespace {

constexpr double kDegreeDropRatio = 1e-12;
constexpr double kDoubleRootRatio = 1e-12;

int effective_degree(const Cubic& c) {
  const double big = std::max({std::abs(c[0]), std::abs(c[1]), std::abs(c[2]), std::abs(c[3])});
  for (int d = 3; d >= 1; --d) {
    if (std::abs(c[d]) > kDegreeDropRatio * big) return d;
  }
  return 0;
}

void polish(const Cubic& c, double& t) {
  double f = evaluate(c, t);
  for (int it = 0; it < 60 && f != 0.0; ++it) {
    const double d = derivative(c, t);
    if (d == 0.0) break;
    const double step = f / d;
    const double next = t - step;
    const double fn = evaluate(c, next);
    if (std::abs(fn) > std::abs(f)) break;
    t = next;
    f = fn;
    if (std::abs(step) <= 1e-16 * std::max(1.0, std::abs(t))) break;
  }
}

// a t^2 + b t + c with a != 0.
void quadratic_candidates(double a, double b, double c, std::vector<double>& out) {
  const double disc = b * b - 4.0 * a * c;
  const double slack = 1e-14 * (b * b + std::abs(4.0 * a * c));
  if (disc < -slack) return;
  if (disc <= slack) {
    out.push_back(-b / (2.0 * a));
    return;
  }
  const double sq = std::sqrt(disc);
  const double q = -0.5 * (b + std::copysign(sq, b));
  out.push_back(q / a);
  if (q != 0.0) out.push_back(c / q);
}

// t^3 + a t^2 + b t + c.
void monic_cubic_candidates(double a, double b, double c, std::vector<double>& out) {
  const double shift = a / 3.0;
  const double p = b - a * shift;
  const double q = 2.0 * shift * shift * shift - shift * b + c;
  const double half_q = 0.5 * q;
  const double third_p = p / 3.0;
  const double delta = half_q * half_q + third_p * third_p * third_p;
  if (delta > 0.0) {
    const double u = std::cbrt(-half_q - std::copysign(std::sqrt(delta), half_q));
    const double s = (u == 0.0) ? 0.0 : u - third_p / u;
    out.push_back(s - shift);
    return;
  }
  if (p == 0.0) {
    out.push_back(-shift);
    return;
  }
  const double r = std::sqrt(-third_p);
  const double arg = std::clamp(-half_q / (r * r * r), -1.0, 1.0);
  const double phi = std::acos(arg);
  for (int k = 0; k < 3; ++k) {
    out.push_back(2.0 * r * std::cos((phi - 2.0 * std::numbers::pi * k) / 3.0) - shift);
  }
}

}  // namespace

double evaluate(const Cubic& c, double t) { return ((c[3] * t + c[2]) * t + c[1]) * t + c[0]; }

double derivative(const Cubic& c, double t) { return (3.0 * c[3] * t + 2.0 * c[2]) * t + c[1]; }

double residual_scale(const Cubic& c, double t) {
  const double big = std::max({1.0, std::abs(c[0]), std::abs(c[1]), std::abs(c[2]), std::abs(c[3])});
  const double m = std::max(1.0, std::abs(t));
  return big * m * m * m;
}

std::vector<double> real_roots(const Cubic& c) {
  for (double v : c) {
    if (!std::isfinite(v)) throw Error(ErrorCode::InvalidInput, "polynomial coefficients must be finite");
  }
  const int degree = effective_degree(c);
  Cubic p{};
  for (int i = 0; i <= degree; ++i) p[i] = c[i];

  std::vector<double> cand;
  switch (degree) {
    case 0:
      if (p[0] == 0.0) throw Error(ErrorCode::DegenerateInput, "zero polynomial has every root");
      return {};
    case 1:
      cand.push_back(-p[0] / p[1]);
      break;
    case 2:
      quadratic_candidates(p[2], p[1], p[0], cand);
      break;
    default: {
      monic_cubic_candidates(p[2] / p[3], p[1] / p[3], p[0] / p[3], cand);
      // Critical points with (near) vanishing value are double roots that the
      // closed form can lose to round-off in the discriminant sign.
      std::vector<double> crit;
      quadratic_candidates(3.0 * p[3], 2.0 * p[2], p[1], crit);
      for (double tc : crit) {
        if (std::abs(evaluate(p, tc)) <= kDoubleRootRatio * residual_scale(p, tc)) cand.push_back(tc);
      }
      break;
    }
  }

  for (double& t : cand) polish(p, t);
  std::sort(cand.begin(), cand.end());

  std::vector<double> roots;
  for (double t : cand) {
    if (!roots.empty() && std::abs(t - roots.back()) <= kMergeTol * std::max(1.0, std::abs(t))) {
      if (std::abs(evaluate(p, t)) < std::abs(evaluate(p, roots.back()))) roots.back() = t;
      continue;
    }
    roots.push_back(t);
  }
  for (double t : roots) {
    if (!std::isfinite(t) || std::abs(evaluate(p, t)) > 1e-8 * residual_scale(p, t)) {
      throw Error(ErrorCode::NumericalFailure, "root polishing did not converge");
    }
  }
  return roots;
}

std::vector<double> monic_cubic_roots(double a, double b, double c) { return real_roots({c, b, a, 1.0}); }

}  // namespace origami::poly
