// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "origami/geom.hpp"

namespace origami {

enum class AxiomId { O1 = 1, O2, O3, O4, O5, O6, O7 };

std::string_view to_string(AxiomId id);
// Accepts "O1".."O7" (case-insensitive); throws InvalidInput otherwise.
AxiomId parse_axiom_id(std::string_view text);

// The complete set of folds solving one axiom instance, ordered by canonical
// (a, b, c) with near-duplicates merged.
class FoldSet {
 public:
  // Folds whose canonical coefficients agree within this are the same fold.
  static constexpr double kMergeTol = 1e-7;

  FoldSet() = default;
  explicit FoldSet(std::vector<Line> folds);

  const std::vector<Line>& folds() const { return folds_; }
  std::size_t size() const { return folds_.size(); }
  bool empty() const { return folds_.empty(); }
  const Line& operator[](std::size_t i) const { return folds_[i]; }
  auto begin() const { return folds_.begin(); }
  auto end() const { return folds_.end(); }

  bool contains(const Line& l, double eps = 1e-9) const;

 private:
  std::vector<Line> folds_;
};

// O1: the fold through p1 and p2.
FoldSet o1(Point p1, Point p2, const Tolerance& tol = default_tolerance());
// O2: the fold placing p1 onto p2 (perpendicular bisector).
FoldSet o2(Point p1, Point p2, const Tolerance& tol = default_tolerance());
// O3: folds placing l1 onto l2; two angle bisectors, or the midline of
// parallel lines.
FoldSet o3(const Line& l1, const Line& l2, const Tolerance& tol = default_tolerance());
// O4: the fold through p perpendicular to l.
FoldSet o4(Point p, const Line& l, const Tolerance& tol = default_tolerance());
// O5: folds through p2 placing p1 onto l1 (0, 1 or 2).
FoldSet o5(Point p1, Point p2, const Line& l1, const Tolerance& tol = default_tolerance());
// O6: folds placing p1 onto l1 and p2 onto l2 simultaneously (0 to 3).
FoldSet o6(Point p1, const Line& l1, Point p2, const Line& l2,
           const Tolerance& tol = default_tolerance());
// O7: the fold perpendicular to l2 placing p onto l1 (0 or 1).
FoldSet o7(Point p, const Line& l1, const Line& l2, const Tolerance& tol = default_tolerance());

// Inputs for any axiom, for generic dispatch (CLI, construction replay).
struct AxiomInput {
  std::vector<Point> points;
  std::vector<Line> lines;
};

// Argument order follows the individual solvers: O1/O2 take two points, O3
// two lines, O4 (p, l), O5 (p1, p2, l1), O6 (p1, p2, l1, l2), O7 (p, l1, l2).
FoldSet apply_axiom(AxiomId id, const AxiomInput& in, const Tolerance& tol = default_tolerance());

// Largest violation of the axiom's placement conditions by `fold`; zero for
// an exact solution.
double placement_residual(AxiomId id, const AxiomInput& in, const Line& fold);

}  // namespace origami
