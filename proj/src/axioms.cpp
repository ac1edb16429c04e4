// SPDX-License-Identifier: Apache-2.0

#include "origami/axioms.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>

#include "origami/polynomial.hpp"

namespace origami {

std::string_view to_string(AxiomId id) {
  switch (id) {
    case AxiomId::O1: return "O1";
    case AxiomId::O2: return "O2";
    case AxiomId::O3: return "O3";
    case AxiomId::O4: return "O4";
    case AxiomId::O5: return "O5";
    case AxiomId::O6: return "O6";
    case AxiomId::O7: return "O7";
  }
  return "O?";
}

AxiomId parse_axiom_id(std::string_view text) {
  if (text.size() == 2 && std::toupper(static_cast<unsigned char>(text[0])) == 'O' && text[1] >= '1' &&
      text[1] <= '7') {
    return static_cast<AxiomId>(text[1] - '0');
  }
  throw Error(ErrorCode::InvalidInput, "unknown axiom '" + std::string(text) + "', expected O1..O7");
}

FoldSet::FoldSet(std::vector<Line> folds) {
  std::sort(folds.begin(), folds.end());
  for (const Line& f : folds) {
    const bool dup = std::any_of(folds_.begin(), folds_.end(),
                                 [&](const Line& g) { return g.approx_equal(f, kMergeTol); });
    if (!dup) folds_.push_back(f);
  }
}

bool FoldSet::contains(const Line& l, double eps) const {
  return std::any_of(folds_.begin(), folds_.end(), [&](const Line& f) { return f.approx_equal(l, eps); });
}

namespace {

Line bisector(Point p, Point q) { return Line::through(midpoint(p, q), q - p); }

void require_off_line(Point p, const Line& l, const Tolerance& tol, const char* what) {
  if (distance_point_line(p, l) <= tol.abs) {
    throw Error(ErrorCode::DegenerateFocus, std::string(what) + " lies on its target line");
  }
}

}  // namespace

FoldSet o1(Point p1, Point p2, const Tolerance& tol) { return FoldSet({line_from_points(p1, p2, tol)}); }

FoldSet o2(Point p1, Point p2, const Tolerance& tol) {
  if (distance(p1, p2) <= tol.abs) {
    throw Error(ErrorCode::CoincidentPoints, "O2 needs two distinct points");
  }
  return FoldSet({bisector(p1, p2)});
}

FoldSet o3(const Line& l1, const Line& l2, const Tolerance& tol) {
  const Point n1 = l1.normal();
  const Point n2 = l2.normal();
  if (std::abs(cross(n1, n2)) <= tol.abs) {
    const double s = dot(n1, n2) >= 0.0 ? 1.0 : -1.0;
    if (std::abs(l1.c() - s * l2.c()) <= tol.abs) {
      throw Error(ErrorCode::CoincidentLines, "O3 needs two distinct lines");
    }
    return FoldSet({Line::from_coefficients(n1.x, n1.y, 0.5 * (l1.c() + s * l2.c()))});
  }
  // Points equidistant from both lines: n1.x - c1 = +-(n2.x - c2). Only the
  // larger of n1 +- n2 is well conditioned; the other bisector is taken
  // perpendicular to it through the crossing point.
  const double s = dot(n1, n2) >= 0.0 ? 1.0 : -1.0;
  const Line first = Line::from_coefficients(n1.x + s * n2.x, n1.y + s * n2.y, l1.c() + s * l2.c());
  const Point x = *intersect(l1, l2, tol);
  return FoldSet({first, Line::through(x, first.direction())});
}

FoldSet o4(Point p, const Line& l, const Tolerance&) { return FoldSet({Line::through(p, l.direction())}); }

FoldSet o5(Point p1, Point p2, const Line& l1, const Tolerance& tol) {
  require_off_line(p1, l1, tol, "p1");
  // The image of p1 stays on the circle about p2 through p1; it must also lie
  // on l1.
  const double r = distance(p1, p2);
  const double d = distance_point_line(p2, l1);
  if (d > r + tol.abs) return {};
  const Point foot = perpendicular_foot(p2, l1);
  if (std::abs(r - d) <= tol.abs) return FoldSet({bisector(p1, foot)});
  const double h = std::sqrt(std::max(0.0, (r - d) * (r + d)));
  const Point dir = l1.direction();
  return FoldSet({bisector(p1, foot + h * dir), bisector(p1, foot - h * dir)});
}

FoldSet o6(Point p1, const Line& l1, Point p2, const Line& l2, const Tolerance& tol) {
  require_off_line(p1, l1, tol, "p1");
  require_off_line(p2, l2, tol, "p2");

  // Rotate so that l1 reads Y = y0; X runs along l1. In this frame a fold
  // perpendicular to l1 (vertical) keeps the Y coordinate of p1 and can never
  // place it on l1, so every fold has a finite slope t: Y = t X + u.
  const Point n1 = l1.normal();
  const Point along{n1.y, -n1.x};
  const auto to_frame = [&](Point p) { return Point{dot(along, p), dot(n1, p)}; };

  const double y0 = l1.c();
  const Point f1 = to_frame(p1);
  const Point f2 = to_frame(p2);
  const Point m{dot(along, l2.normal()), dot(n1, l2.normal())};

  // Tangents to the parabola with focus f1 and directrix Y = y0 have
  // u = vy - t px - f t^2, with focal parameter f and vertex height vy.
  const double focal = 0.5 * (f1.y - y0);
  const double vertex_y = 0.5 * (f1.y + y0);

  // Reflecting f2 across Y = t X + u and requiring it on l2 gives
  //   D (1 + t^2) = 2 (A t^2 + B t + C) (m_x t - m_y).
  const double D = dot(m, f2) - l2.c();
  const double A = -focal;
  const double B = f2.x - f1.x;
  const double C = vertex_y - f2.y;
  const poly::Cubic coeffs{-2.0 * C * m.y - D, 2.0 * (C * m.x - B * m.y), 2.0 * (B * m.x - A * m.y) - D,
                           2.0 * A * m.x};

  std::vector<double> slopes;
  try {
    slopes = poly::real_roots(coeffs);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::DegenerateInput) {
      throw Error(ErrorCode::DegenerateInput, "O6 instance admits infinitely many folds");
    }
    throw;
  }

  std::vector<Line> folds;
  folds.reserve(slopes.size());
  for (double t : slopes) {
    const double u = vertex_y - t * f1.x - focal * t * t;
    // -t X + Y = u, mapped back to world coordinates.
    const Point normal = (-t) * along + n1;
    folds.push_back(Line::from_coefficients(normal.x, normal.y, u));
  }
  return FoldSet(std::move(folds));
}

FoldSet o7(Point p, const Line& l1, const Line& l2, const Tolerance& tol) {
  // p travels parallel to l2 until it meets l1.
  const Point travel = l2.direction();
  const double denom = dot(l1.normal(), travel);
  if (std::abs(denom) <= tol.abs) {
    if (l1.contains(p, tol)) {
      throw Error(ErrorCode::DegenerateInput, "p slides along l1; every perpendicular to l2 works");
    }
    return {};
  }
  const double s = -l1.eval(p) / denom;
  if (std::abs(s) <= tol.abs) return FoldSet({Line::through(p, travel)});
  return FoldSet({bisector(p, p + s * travel)});
}

FoldSet apply_axiom(AxiomId id, const AxiomInput& in, const Tolerance& tol) {
  const auto need = [&](std::size_t points, std::size_t lines) {
    if (in.points.size() != points || in.lines.size() != lines) {
      throw Error(ErrorCode::InvalidInput, std::string(to_string(id)) + " expects " + std::to_string(points) +
                                               " point(s) and " + std::to_string(lines) + " line(s)");
    }
  };
  switch (id) {
    case AxiomId::O1: need(2, 0); return o1(in.points[0], in.points[1], tol);
    case AxiomId::O2: need(2, 0); return o2(in.points[0], in.points[1], tol);
    case AxiomId::O3: need(0, 2); return o3(in.lines[0], in.lines[1], tol);
    case AxiomId::O4: need(1, 1); return o4(in.points[0], in.lines[0], tol);
    case AxiomId::O5: need(2, 1); return o5(in.points[0], in.points[1], in.lines[0], tol);
    case AxiomId::O6: need(2, 2); return o6(in.points[0], in.lines[0], in.points[1], in.lines[1], tol);
    case AxiomId::O7: need(1, 2); return o7(in.points[0], in.lines[0], in.lines[1], tol);
  }
  throw Error(ErrorCode::InvalidInput, "unknown axiom");
}

double placement_residual(AxiomId id, const AxiomInput& in, const Line& f) {
  const auto on = [](Point p, const Line& l) { return distance_point_line(p, l); };
  const auto& P = in.points;
  const auto& L = in.lines;
  switch (id) {
    case AxiomId::O1: return std::max(on(P[0], f), on(P[1], f));
    case AxiomId::O2: return distance(reflect_point(f, P[0]), P[1]);
    case AxiomId::O3: {
      const Point a = L[0].anchor();
      return std::max(on(reflect_point(f, a), L[1]), on(reflect_point(f, a + L[0].direction()), L[1]));
    }
    case AxiomId::O4: return std::max(on(P[0], f), std::abs(dot(f.normal(), L[0].normal())));
    case AxiomId::O5: return std::max(on(P[1], f), on(reflect_point(f, P[0]), L[0]));
    case AxiomId::O6: return std::max(on(reflect_point(f, P[0]), L[0]), on(reflect_point(f, P[1]), L[1]));
    case AxiomId::O7: return std::max(std::abs(dot(f.normal(), L[1].normal())), on(reflect_point(f, P[0]), L[0]));
  }
  return 0.0;
}

}  // namespace origami
