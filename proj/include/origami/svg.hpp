// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "origami/constructions.hpp"
#include "origami/fold_algebra.hpp"
#include "origami/treemaker.hpp"

namespace origami::svg {

enum class Style { Crease, Fold, ActivePath, Outline, Face };

std::string_view class_name(Style s);

struct ViewBox {
  double x = 0.0;
  double y = 0.0;
  double width = 1.0;
  double height = 1.0;

  bool contains(Point p, double eps = 1e-9) const;
};

struct Segment {
  Point from;
  Point to;
  Style style = Style::Crease;
};
struct Marker {
  Point at;
  Style style = Style::Outline;
};
struct Polyline {
  std::vector<Point> points;
  Style style = Style::Outline;
};
struct PolygonShape {
  std::vector<Point> points;
  Style style = Style::Face;
};
struct Label {
  Point at;
  std::string text;
};

using Element = std::variant<Segment, Marker, Polyline, PolygonShape, Label>;

// Scene in mathematical coordinates (y up); rendering flips y.
struct Scene {
  ViewBox view;
  std::vector<Element> elements;

  bool fits() const;
};

// Deterministic SVG 1.1 text; every coordinate printed with 6 decimals.
// Throws InvalidInput when an element falls outside the view box.
std::string render(const Scene& scene);

// Part of `line` inside the view box, if any.
std::optional<Segment> clip(const Line& line, const ViewBox& box, Style style);

// Scene builders for the CLI outputs.
Scene layout_scene(const Layout& layout, const ActivePathSet& paths, const std::vector<Polygon>& faces);
Scene trace_scene(const ConstructionTrace& trace);
// Both parabolas (sampled, each sample checked on the curve) and the folds.
Scene equation_scene(const CubicSolution& solution);
Scene axiom_scene(const AxiomInput& input, const FoldSet& folds);

}  // namespace origami::svg
