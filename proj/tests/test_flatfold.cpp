// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "origami/error.hpp"
#include "origami/flatfold.hpp"

using namespace origami;

namespace {

constexpr double kPi = std::numbers::pi;

CreaseVertex deg(std::vector<double> d, const char* labels = nullptr) {
  std::optional<std::vector<FoldKind>> a;
  if (labels) a = parse_assignment(labels);
  return CreaseVertex::from_degrees(d, a);
}

// Independent alternating sum.
double alternating(const std::vector<double>& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (i % 2 ? -1.0 : 1.0) * a[i];
  return std::abs(s);
}

}  // namespace

TEST_CASE("kawasaki") {
  const auto square = kawasaki_check(CreaseVertex({kPi / 2, kPi / 2, kPi / 2, kPi / 2}));
  CHECK(square.pass);
  CHECK(square.residual == 0.0);

  const auto bad = kawasaki_check(deg({60, 70, 50, 180}));
  CHECK_FALSE(bad.pass);
  CHECK(std::abs(bad.residual * 180 / kPi - 140.0) <= 1e-9);

  CHECK(kawasaki_check(deg({100, 80, 80, 100})).pass);
  CHECK_FALSE(kawasaki_check(deg({100, 80, 100, 80})).pass);
  CHECK_FALSE(kawasaki_check(deg({120, 120, 120})).pass);
}

TEST_CASE("maekawa") {
  const auto a = maekawa_check(deg({90, 90, 90, 90}, "MMMV"));
  CHECK(a.pass);
  CHECK(a.mountains == 3);
  CHECK(a.valleys == 1);
  CHECK_FALSE(maekawa_check(deg({90, 90, 90, 90}, "MMVV")).pass);
  CHECK(maekawa_check(deg({180, 180}, "MM")).pass);
  CHECK_THROWS_AS(maekawa_check(deg({90, 90, 90, 90})), Error);
}

TEST_CASE("combined verdict") {
  CHECK(single_vertex_flat_foldable(deg({90, 90, 90, 90}, "MMMV")).pass);
  const auto mixed = single_vertex_flat_foldable(deg({90, 90, 90, 90}, "MMVV"));
  CHECK(mixed.kawasaki.pass);
  REQUIRE(mixed.maekawa);
  CHECK_FALSE(mixed.maekawa->pass);
  CHECK_FALSE(mixed.pass);
  const auto line = single_vertex_flat_foldable(CreaseVertex({kPi, kPi}));
  CHECK(line.pass);
  CHECK_FALSE(line.maekawa);
}

TEST_CASE("vertex validation") {
  CHECK_THROWS_AS(deg({90, 90, 90}), Error);
  CHECK_THROWS_AS(deg({0, 180, 180}), Error);
  CHECK_THROWS_AS(deg({90, 90, 90, 90}, "MMV"), Error);
  CHECK_THROWS_AS(parse_assignment("MX"), Error);
}

TEST_CASE("crease directions") {
  const std::vector<double> dirs{kPi, 0.0, 3 * kPi / 2, kPi / 2};
  const CreaseVertex v = CreaseVertex::from_crease_directions(dirs);
  REQUIRE(v.crease_count() == 4);
  for (double a : v.angles()) CHECK(std::abs(a - kPi / 2) < 1e-12);
}

TEST_CASE("rotation and reflection invariance") {
  std::mt19937_64 rng(47);
  std::uniform_real_distribution<double> u(0.05, 1.0);
  std::uniform_int_distribution<int> half(1, 4);
  for (int i = 0; i < 1000; ++i) {
    const int n = 2 * half(rng);
    std::vector<double> w(n);
    for (auto& x : w) x = u(rng);
    // Half the samples are made flat-foldable by balancing odd and even sums.
    if (i % 2 == 0) {
      double even = 0, odd = 0;
      for (int k = 0; k < n; ++k) (k % 2 ? odd : even) += w[k];
      for (int k = 0; k < n; ++k) w[k] *= (k % 2 ? kPi / odd : kPi / even);
    } else {
      double sum = 0;
      for (double x : w) sum += x;
      for (auto& x : w) x *= 2 * kPi / sum;
    }
    const CreaseVertex v(w);
    const auto base = kawasaki_check(v);
    CHECK(std::abs(base.residual - alternating(w)) < 1e-12);
    for (int r = 1; r < n; ++r) {
      std::vector<double> rot(w);
      std::rotate(rot.begin(), rot.begin() + r, rot.end());
      const auto k = kawasaki_check(CreaseVertex(rot));
      CHECK(k.pass == base.pass);
      CHECK(std::abs(k.residual - base.residual) < 1e-12);
    }
    std::vector<double> mirror(w.rbegin(), w.rend());
    const auto m = kawasaki_check(CreaseVertex(mirror));
    CHECK(m.pass == base.pass);
    CHECK(std::abs(m.residual - base.residual) < 1e-12);
  }
}
