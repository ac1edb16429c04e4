// SPDX-License-Identifier: Apache-2.0

#include "origami/flatfold.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "origami/error.hpp"

namespace origami {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kKawasakiTol = 1e-9;
}  // namespace

CreaseVertex::CreaseVertex(std::vector<double> angles, std::optional<std::vector<FoldKind>> assignment)
    : angles_(std::move(angles)), assignment_(std::move(assignment)) {
  if (angles_.empty()) throw Error(ErrorCode::InvalidInput, "a vertex needs at least one sector");
  for (double a : angles_) {
    if (!std::isfinite(a) || a <= 1e-12) {
      throw Error(ErrorCode::InvalidInput, "sector angles must be positive and finite");
    }
  }
  const double sum = std::accumulate(angles_.begin(), angles_.end(), 0.0);
  if (std::abs(sum - kTwoPi) > kSumTol) {
    throw Error(ErrorCode::InvalidInput, "sector angles must sum to 360 degrees");
  }
  if (assignment_ && assignment_->size() != angles_.size()) {
    throw Error(ErrorCode::InvalidInput, "assignment needs one label per crease");
  }
}

CreaseVertex CreaseVertex::from_degrees(std::span<const double> degrees,
                                        std::optional<std::vector<FoldKind>> assignment) {
  std::vector<double> radians;
  radians.reserve(degrees.size());
  for (double d : degrees) radians.push_back(d * std::numbers::pi / 180.0);
  return CreaseVertex(std::move(radians), std::move(assignment));
}

CreaseVertex CreaseVertex::from_crease_directions(std::span<const double> directions) {
  if (directions.empty()) throw Error(ErrorCode::InvalidInput, "a vertex needs at least one crease");
  std::vector<double> dirs;
  for (double d : directions) {
    if (!std::isfinite(d)) throw Error(ErrorCode::InvalidInput, "crease directions must be finite");
    double w = std::fmod(d, kTwoPi);
    if (w < 0.0) w += kTwoPi;
    dirs.push_back(w);
  }
  std::sort(dirs.begin(), dirs.end());
  std::vector<double> sectors;
  for (std::size_t i = 0; i + 1 < dirs.size(); ++i) sectors.push_back(dirs[i + 1] - dirs[i]);
  sectors.push_back(kTwoPi - dirs.back() + dirs.front());
  return CreaseVertex(std::move(sectors));
}

std::vector<FoldKind> parse_assignment(std::string_view labels) {
  std::vector<FoldKind> out;
  for (char ch : labels) {
    switch (std::toupper(static_cast<unsigned char>(ch))) {
      case 'M': out.push_back(FoldKind::Mountain); break;
      case 'V': out.push_back(FoldKind::Valley); break;
      default: throw Error(ErrorCode::InvalidInput, std::string("unknown crease label '") + ch + "'");
    }
  }
  return out;
}

KawasakiResult kawasaki_check(const CreaseVertex& v) {
  double alt = 0.0;
  double sign = 1.0;
  for (double a : v.angles()) {
    alt += sign * a;
    sign = -sign;
  }
  const double residual = std::abs(alt);
  return {v.crease_count() % 2 == 0 && residual <= kKawasakiTol, residual};
}

MaekawaResult maekawa_check(const CreaseVertex& v) {
  if (!v.assignment()) throw Error(ErrorCode::MissingAssignment, "Maekawa needs mountain/valley labels");
  const auto& labels = *v.assignment();
  const int m = static_cast<int>(std::count(labels.begin(), labels.end(), FoldKind::Mountain));
  const int val = static_cast<int>(labels.size()) - m;
  return {std::abs(m - val) == 2, m, val};
}

FlatFoldVerdict single_vertex_flat_foldable(const CreaseVertex& v) {
  FlatFoldVerdict verdict;
  verdict.kawasaki = kawasaki_check(v);
  verdict.pass = verdict.kawasaki.pass;
  if (v.assignment()) {
    verdict.maekawa = maekawa_check(v);
    verdict.pass = verdict.pass && verdict.maekawa->pass;
  }
  return verdict;
}

}  // namespace origami
