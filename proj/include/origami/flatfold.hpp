// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace origami {

enum class FoldKind { Mountain, Valley };

// Creases around one interior vertex, described by the sector angles
// between consecutive creases in rotational order. Sector i lies between
// crease i and crease i + 1; assignment[i] labels crease i.
class CreaseVertex {
 public:
  static constexpr double kSumTol = 1e-9;

  // Angles in radians. Throws InvalidInput unless every angle exceeds
  // 1e-12, the angles sum to 2 pi within kSumTol, and the assignment (when
  // given) has one label per crease.
  explicit CreaseVertex(std::vector<double> angles, std::optional<std::vector<FoldKind>> assignment = std::nullopt);

  static CreaseVertex from_degrees(std::span<const double> degrees,
                                   std::optional<std::vector<FoldKind>> assignment = std::nullopt);

  // Crease directions (radians, any order, any winding) are sorted and
  // differenced into sector angles. Labels follow the sorted order.
  static CreaseVertex from_crease_directions(std::span<const double> directions);

  const std::vector<double>& angles() const { return angles_; }
  const std::optional<std::vector<FoldKind>>& assignment() const { return assignment_; }
  std::size_t crease_count() const { return angles_.size(); }

 private:
  std::vector<double> angles_;
  std::optional<std::vector<FoldKind>> assignment_;
};

// Parses labels such as "MMMV" (case-insensitive M/V); throws InvalidInput.
std::vector<FoldKind> parse_assignment(std::string_view labels);

struct KawasakiResult {
  bool pass = false;
  double residual = 0.0;  // |alternating sector sum|, radians
};

struct MaekawaResult {
  bool pass = false;
  int mountains = 0;
  int valleys = 0;
};

// Necessary conditions only: passing means the vertex satisfies the
// Kawasaki and (when labelled) Maekawa conditions, not that a valid layer
// ordering exists.
struct FlatFoldVerdict {
  KawasakiResult kawasaki;
  std::optional<MaekawaResult> maekawa;
  bool pass = false;
};

// Even crease count and |sum (-1)^i angle_i| <= 1e-9.
KawasakiResult kawasaki_check(const CreaseVertex& v);

// |M - V| == 2. Throws MissingAssignment for unlabelled vertices.
MaekawaResult maekawa_check(const CreaseVertex& v);

FlatFoldVerdict single_vertex_flat_foldable(const CreaseVertex& v);

}  // namespace origami
