// SPDX-License-Identifier: Apache-2.0

// Face extraction for the square subdivided by straight segments: vertices are
// merged, segments split at every vertex they pass through, and faces traced
// by the next-clockwise-edge rule so that bounded faces come out CCW.

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

#include "origami/treemaker.hpp"

namespace origami {

namespace {

constexpr double kEps = 1e-9;

struct Subdivision {
  std::vector<Point> verts;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // undirected, deduplicated

  std::size_t vertex(Point p) {
    for (std::size_t i = 0; i < verts.size(); ++i) {
      if (distance(verts[i], p) <= kEps) return i;
    }
    verts.push_back(p);
    return verts.size() - 1;
  }
};

double orient(Point a, Point b, Point c) { return cross(b - a, c - a); }

// Proper crossing: the segments meet at a single point interior to both.
bool properly_cross(Point a, Point b, Point c, Point d) {
  const double lab = std::max(distance(a, b), kEps);
  const double lcd = std::max(distance(c, d), kEps);
  const double o1 = orient(a, b, c) / lab;
  const double o2 = orient(a, b, d) / lab;
  const double o3 = orient(c, d, a) / lcd;
  const double o4 = orient(c, d, b) / lcd;
  return ((o1 > kEps && o2 < -kEps) || (o1 < -kEps && o2 > kEps)) &&
         ((o3 > kEps && o4 < -kEps) || (o3 < -kEps && o4 > kEps));
}

std::string describe(Point a, Point b) {
  std::ostringstream os;
  os << "(" << a.x << "," << a.y << ")-(" << b.x << "," << b.y << ")";
  return os.str();
}

double signed_area(const std::vector<Point>& cycle) {
  double s = 0.0;
  for (std::size_t i = 0; i < cycle.size(); ++i) s += cross(cycle[i], cycle[(i + 1) % cycle.size()]);
  return 0.5 * s;
}

bool inside_polygon(Point p, const std::vector<Point>& poly) {
  bool in = false;
  for (std::size_t i = 0, j = poly.size() - 1; i < poly.size(); j = i++) {
    const Point a = poly[i];
    const Point b = poly[j];
    if ((a.y > p.y) != (b.y > p.y) && p.x < (b.x - a.x) * (p.y - a.y) / (b.y - a.y) + a.x) in = !in;
  }
  return in;
}

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t i) {
  while (parent[i] != i) i = parent[i] = parent[parent[i]];
  return i;
}

}  // namespace

std::vector<Polygon> partition_square(const std::vector<std::pair<Point, Point>>& segments) {
  for (std::size_t i = 0; i < segments.size(); ++i) {
    for (std::size_t j = i + 1; j < segments.size(); ++j) {
      const auto& [a, b] = segments[i];
      const auto& [c, d] = segments[j];
      if (properly_cross(a, b, c, d)) {
        throw Error(ErrorCode::CrossingPaths, "active paths " + describe(a, b) + " and " + describe(c, d) + " cross");
      }
    }
  }

  Subdivision sub;
  std::vector<std::pair<std::size_t, std::size_t>> raw;
  const Point corners[4] = {{0.0, 0.0}, {1.0, 0.0}, {1.0, 1.0}, {0.0, 1.0}};
  for (int i = 0; i < 4; ++i) raw.emplace_back(sub.vertex(corners[i]), 0);
  for (int i = 0; i < 4; ++i) raw[i].second = raw[(i + 1) % 4].first;
  for (const auto& [a, b] : segments) {
    const std::size_t u = sub.vertex(a);
    const std::size_t v = sub.vertex(b);
    if (u != v) raw.emplace_back(u, v);
  }

  // Split every segment at the vertices lying on it.
  std::set<std::pair<std::size_t, std::size_t>> unique;
  for (const auto& [u, v] : raw) {
    const Point a = sub.verts[u];
    const Point d = sub.verts[v] - a;
    const double len2 = dot(d, d);
    std::vector<std::pair<double, std::size_t>> on{{0.0, u}, {1.0, v}};
    for (std::size_t w = 0; w < sub.verts.size(); ++w) {
      if (w == u || w == v) continue;
      const double t = dot(sub.verts[w] - a, d) / len2;
      if (t <= 0.0 || t >= 1.0) continue;
      if (distance(a + t * d, sub.verts[w]) <= kEps) on.emplace_back(t, w);
    }
    std::sort(on.begin(), on.end());
    for (std::size_t k = 0; k + 1 < on.size(); ++k) {
      const auto p = on[k].second;
      const auto q = on[k + 1].second;
      unique.emplace(std::min(p, q), std::max(p, q));
    }
  }
  sub.edges.assign(unique.begin(), unique.end());

  // Half-edges 2e (u -> v) and 2e + 1 (v -> u).
  const std::size_t nh = 2 * sub.edges.size();
  std::vector<std::size_t> origin(nh), target(nh);
  for (std::size_t e = 0; e < sub.edges.size(); ++e) {
    origin[2 * e] = target[2 * e + 1] = sub.edges[e].first;
    target[2 * e] = origin[2 * e + 1] = sub.edges[e].second;
  }
  std::vector<std::vector<std::size_t>> around(sub.verts.size());
  for (std::size_t h = 0; h < nh; ++h) around[origin[h]].push_back(h);
  std::vector<std::size_t> slot(nh);
  for (auto& out : around) {
    std::sort(out.begin(), out.end(), [&](std::size_t h1, std::size_t h2) {
      const Point d1 = sub.verts[target[h1]] - sub.verts[origin[h1]];
      const Point d2 = sub.verts[target[h2]] - sub.verts[origin[h2]];
      return std::atan2(d1.y, d1.x) < std::atan2(d2.y, d2.x);
    });
    for (std::size_t k = 0; k < out.size(); ++k) slot[out[k]] = k;
  }
  const auto next = [&](std::size_t h) {
    const std::size_t twin = h ^ 1u;
    const auto& out = around[origin[twin]];
    return out[(slot[twin] + out.size() - 1) % out.size()];
  };

  // Trace cycles.
  std::vector<std::size_t> cycle_of(nh, SIZE_MAX);
  std::vector<std::vector<std::size_t>> cycles;
  for (std::size_t h = 0; h < nh; ++h) {
    if (cycle_of[h] != SIZE_MAX) continue;
    std::vector<std::size_t> cyc;
    for (std::size_t g = h; cycle_of[g] == SIZE_MAX; g = next(g)) {
      cycle_of[g] = cycles.size();
      cyc.push_back(g);
    }
    cycles.push_back(std::move(cyc));
  }

  std::vector<std::size_t> parent(sub.verts.size());
  std::iota(parent.begin(), parent.end(), 0);
  for (const auto& [u, v] : sub.edges) parent[find_root(parent, u)] = find_root(parent, v);

  std::vector<std::vector<Point>> loops(cycles.size());
  std::vector<double> areas(cycles.size());
  for (std::size_t c = 0; c < cycles.size(); ++c) {
    for (std::size_t h : cycles[c]) loops[c].push_back(sub.verts[origin[h]]);
    areas[c] = signed_area(loops[c]);
  }
  const std::size_t outer = static_cast<std::size_t>(std::min_element(areas.begin(), areas.end()) - areas.begin());

  std::vector<Polygon> faces;
  std::vector<std::size_t> face_cycle;
  for (std::size_t c = 0; c < cycles.size(); ++c) {
    if (c == outer || areas[c] <= 1e-12) continue;
    faces.push_back({loops[c], {}, {}, areas[c]});
    face_cycle.push_back(c);
  }

  // Every non-face cycle other than the square's outside bounds an island of
  // paths; it belongs to the smallest face of another component around it.
  std::vector<std::size_t> owner(cycles.size(), SIZE_MAX);
  for (std::size_t f = 0; f < faces.size(); ++f) owner[face_cycle[f]] = f;
  for (std::size_t c = 0; c < cycles.size(); ++c) {
    if (c == outer || owner[c] != SIZE_MAX) continue;
    const std::size_t comp = find_root(parent, origin[cycles[c].front()]);
    const Point probe = loops[c].front();
    std::size_t best = SIZE_MAX;
    for (std::size_t f = 0; f < faces.size(); ++f) {
      if (find_root(parent, origin[cycles[face_cycle[f]].front()]) == comp) continue;
      if (!inside_polygon(probe, faces[f].boundary)) continue;
      if (best == SIZE_MAX || signed_area(faces[f].boundary) < signed_area(faces[best].boundary)) best = f;
    }
    if (best == SIZE_MAX) continue;
    owner[c] = best;
    faces[best].holes.push_back(loops[c]);
    faces[best].area += areas[c];  // areas[c] <= 0
  }

  for (std::size_t e = 0; e < sub.edges.size(); ++e) {
    const std::size_t c = cycle_of[2 * e];
    if (c == cycle_of[2 * e + 1] && owner[c] != SIZE_MAX) {
      faces[owner[c]].dangling.emplace_back(sub.verts[sub.edges[e].first], sub.verts[sub.edges[e].second]);
    }
  }
  return faces;
}

std::vector<Polygon> identify_polygons(const Layout&, const ActivePathSet& paths) {
  std::vector<std::pair<Point, Point>> segments;
  segments.reserve(paths.size());
  for (const auto& p : paths) segments.emplace_back(p.from, p.to);
  return partition_square(segments);
}

}  // namespace origami
