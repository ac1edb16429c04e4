// SPDX-License-Identifier: Apache-2.0

#include "origami/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace origami::svg {

std::string_view class_name(Style s) {
  switch (s) {
    case Style::Crease: return "crease";
    case Style::Fold: return "fold";
    case Style::ActivePath: return "active-path";
    case Style::Outline: return "outline";
    case Style::Face: return "face";
  }
  return "outline";
}

bool ViewBox::contains(Point p, double eps) const {
  return p.x >= x - eps && p.x <= x + width + eps && p.y >= y - eps && p.y <= y + height + eps;
}

namespace {

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  std::string s(buf);
  if (s == "-0.000000") s = "0.000000";
  return s;
}

std::string escape(std::string_view text) {
  std::string out;
  for (char ch : text) {
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += ch;
    }
  }
  return out;
}

std::string points_attr(const std::vector<Point>& pts) {
  std::string s;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) s += ' ';
    s += num(pts[i].x) + "," + num(-pts[i].y);
  }
  return s;
}

template <class F>
void for_each_point(const Element& e, F&& f) {
  std::visit(
      [&](const auto& el) {
        using T = std::decay_t<decltype(el)>;
        if constexpr (std::is_same_v<T, Segment>) {
          f(el.from);
          f(el.to);
        } else if constexpr (std::is_same_v<T, Marker> || std::is_same_v<T, Label>) {
          f(el.at);
        } else {
          for (const Point& p : el.points) f(p);
        }
      },
      e);
}

struct Bounds {
  double xmin = std::numeric_limits<double>::infinity();
  double ymin = std::numeric_limits<double>::infinity();
  double xmax = -std::numeric_limits<double>::infinity();
  double ymax = -std::numeric_limits<double>::infinity();

  void add(Point p) {
    xmin = std::min(xmin, p.x);
    ymin = std::min(ymin, p.y);
    xmax = std::max(xmax, p.x);
    ymax = std::max(ymax, p.y);
  }

  ViewBox padded(double fraction, double minimum) const {
    if (!(xmin <= xmax)) return {-1.0, -1.0, 2.0, 2.0};
    const double span = std::max({xmax - xmin, ymax - ymin, minimum});
    const double pad = fraction * span;
    const double cx = 0.5 * (xmin + xmax);
    const double cy = 0.5 * (ymin + ymax);
    const double half = 0.5 * span + pad;
    return {cx - half, cy - half, 2.0 * half, 2.0 * half};
  }
};

}  // namespace

bool Scene::fits() const {
  bool ok = true;
  for (const auto& e : elements) for_each_point(e, [&](Point p) { ok = ok && view.contains(p); });
  return ok;
}

std::string render(const Scene& scene) {
  if (!scene.fits()) throw Error(ErrorCode::InvalidInput, "scene element outside the view box");
  const ViewBox& v = scene.view;
  const double stroke = std::max(v.width, v.height) / 400.0;
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" << num(v.x) << ' '
     << num(-(v.y + v.height)) << ' ' << num(v.width) << ' ' << num(v.height) << "\">\n"
     << "<style>\n"
     << "line, polyline, polygon { fill: none; stroke-width: " << num(stroke) << "; }\n"
     << ".crease { stroke: #555555; stroke-dasharray: " << num(4 * stroke) << ' ' << num(3 * stroke) << "; }\n"
     << ".fold { stroke: #c0392b; }\n"
     << ".active-path { stroke: #1f4e9c; }\n"
     << ".outline { stroke: #000000; }\n"
     << "polygon.face { fill: #9ec5e8; fill-opacity: 0.35; stroke: none; }\n"
     << "circle { fill: #000000; }\n"
     << "text { font-family: sans-serif; font-size: " << num(12 * stroke) << "px; }\n"
     << "</style>\n";
  for (const auto& e : scene.elements) {
    std::visit(
        [&](const auto& el) {
          using T = std::decay_t<decltype(el)>;
          if constexpr (std::is_same_v<T, Segment>) {
            os << "<line class=\"" << class_name(el.style) << "\" x1=\"" << num(el.from.x) << "\" y1=\""
               << num(-el.from.y) << "\" x2=\"" << num(el.to.x) << "\" y2=\"" << num(-el.to.y) << "\"/>\n";
          } else if constexpr (std::is_same_v<T, Marker>) {
            os << "<circle cx=\"" << num(el.at.x) << "\" cy=\"" << num(-el.at.y) << "\" r=\"" << num(2.5 * stroke)
               << "\"/>\n";
          } else if constexpr (std::is_same_v<T, Polyline>) {
            os << "<polyline class=\"" << class_name(el.style) << "\" points=\"" << points_attr(el.points)
               << "\"/>\n";
          } else if constexpr (std::is_same_v<T, PolygonShape>) {
            os << "<polygon class=\"" << class_name(el.style) << "\" points=\"" << points_attr(el.points)
               << "\"/>\n";
          } else {
            os << "<text x=\"" << num(el.at.x) << "\" y=\"" << num(-el.at.y) << "\">" << escape(el.text)
               << "</text>\n";
          }
        },
        e);
  }
  os << "</svg>\n";
  return os.str();
}

std::optional<Segment> clip(const Line& line, const ViewBox& box, Style style) {
  const Point p = line.anchor();
  const Point d = line.direction();
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();
  const auto slab = [&](double origin, double dir, double min, double max) {
    if (std::abs(dir) < 1e-15) return origin >= min && origin <= max;
    double t0 = (min - origin) / dir;
    double t1 = (max - origin) / dir;
    if (t0 > t1) std::swap(t0, t1);
    lo = std::max(lo, t0);
    hi = std::min(hi, t1);
    return lo <= hi;
  };
  if (!slab(p.x, d.x, box.x, box.x + box.width) || !slab(p.y, d.y, box.y, box.y + box.height)) return std::nullopt;
  const auto inside = [&](Point q) {
    return Point{std::clamp(q.x, box.x, box.x + box.width), std::clamp(q.y, box.y, box.y + box.height)};
  };
  return Segment{inside(p + lo * d), inside(p + hi * d), style};
}

Scene layout_scene(const Layout& layout, const ActivePathSet& paths, const std::vector<Polygon>& faces) {
  Scene scene;
  scene.view = {-0.1, -0.1, 1.2, 1.2};
  for (const auto& f : faces) scene.elements.push_back(PolygonShape{f.boundary, Style::Face});
  const Point sq[4] = {{0.0, 0.0}, {1.0, 0.0}, {1.0, 1.0}, {0.0, 1.0}};
  for (int i = 0; i < 4; ++i) scene.elements.push_back(Segment{sq[i], sq[(i + 1) % 4], Style::Outline});
  for (const auto& p : paths) scene.elements.push_back(Segment{p.from, p.to, Style::ActivePath});
  for (const auto& [id, pos] : layout.positions) {
    scene.elements.push_back(Marker{pos, Style::Outline});
    scene.elements.push_back(Label{pos, id});
  }
  return scene;
}

Scene trace_scene(const ConstructionTrace& trace) {
  Bounds b;
  for (const auto& dp : trace.derived_points) b.add(dp.point);
  for (const auto& st : trace.steps) {
    for (const Point& p : st.input.points) b.add(p);
  }
  Scene scene;
  scene.view = b.padded(0.15, 1.0);
  for (const auto& st : trace.steps) {
    if (auto seg = clip(st.fold, scene.view, Style::Crease)) scene.elements.push_back(*seg);
  }
  for (const auto& dp : trace.derived_points) {
    scene.elements.push_back(Marker{dp.point, Style::Outline});
    scene.elements.push_back(Label{dp.point, dp.name});
  }
  return scene;
}

namespace {

// Sample the parabola over its directrix and keep the runs inside the box.
void add_parabola(Scene& scene, const Parabola& par) {
  const ViewBox& v = scene.view;
  const double reach = 2.0 * std::max(v.width, v.height) + norm(par.focus() - par.directrix().anchor());
  const Point centre{v.x + 0.5 * v.width, v.y + 0.5 * v.height};
  const double s0 = dot(centre - par.directrix().anchor(), par.directrix().direction());
  constexpr int kSamples = 400;
  Polyline run{{}, Style::Outline};
  for (int i = 0; i <= kSamples; ++i) {
    const double s = s0 - reach + 2.0 * reach * i / kSamples;
    const Point q = par.point_over(s);
    if (parabola_point_check(par, q) > 1e-9 * std::max(1.0, norm(q))) {
      throw Error(ErrorCode::NumericalFailure, "parabola sample is off the curve");
    }
    if (v.contains(q, 0.0)) {
      run.points.push_back(q);
    } else if (!run.points.empty()) {
      if (run.points.size() > 1) scene.elements.push_back(run);
      run.points.clear();
    }
  }
  if (run.points.size() > 1) scene.elements.push_back(run);
}

}  // namespace

Scene equation_scene(const CubicSolution& sol) {
  const FoldConstruction& k = sol.construction;
  Bounds b;
  b.add(k.p1);
  b.add(k.p2);
  b.add(perpendicular_foot(k.p1, k.l1));
  if (k.l2) b.add(perpendicular_foot(k.p2, *k.l2));
  for (const Line& f : sol.folds) {
    b.add(perpendicular_foot(k.p1, f));
    b.add(perpendicular_foot(k.p2, f));
  }
  Scene scene;
  scene.view = b.padded(0.25, 4.0);

  std::vector<std::pair<Point, Line>> parabolas{{k.p1, k.l1}};
  if (k.l2) parabolas.emplace_back(k.p2, *k.l2);
  for (const auto& [focus, directrix] : parabolas) {
    if (auto seg = clip(directrix, scene.view, Style::Outline)) scene.elements.push_back(*seg);
    if (distance_point_line(focus, directrix) > default_tolerance().abs) add_parabola(scene, Parabola(focus, directrix));
    scene.elements.push_back(Marker{focus, Style::Outline});
  }
  for (const Line& f : sol.folds) {
    if (auto seg = clip(f, scene.view, Style::Fold)) scene.elements.push_back(*seg);
  }
  return scene;
}

Scene axiom_scene(const AxiomInput& input, const FoldSet& folds) {
  Bounds b;
  for (const Point& p : input.points) b.add(p);
  for (const Line& l : input.lines) b.add(l.anchor());
  Scene scene;
  scene.view = b.padded(0.5, 4.0);
  for (const Line& l : input.lines) {
    if (auto seg = clip(l, scene.view, Style::Outline)) scene.elements.push_back(*seg);
  }
  for (const Line& f : folds) {
    if (auto seg = clip(f, scene.view, Style::Fold)) scene.elements.push_back(*seg);
  }
  for (const Point& p : input.points) scene.elements.push_back(Marker{p, Style::Outline});
  return scene;
}

}  // namespace origami::svg
