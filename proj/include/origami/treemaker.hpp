// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "origami/geom.hpp"

namespace origami {

enum class NodeKind { Terminal, Internal };

struct TreeNode {
  std::string id;
  NodeKind kind = NodeKind::Internal;
};

struct TreeEdge {
  std::string from;
  std::string to;
  double length = 0.0;
};

// Weighted tree diagram of a uniaxial base. Terminal nodes are the flap tips
// that receive positions in the square.
class WeightedTree {
 public:
  // Throws InvalidInput unless node ids are unique, every edge joins known
  // nodes with a length > 1e-12, the graph is a connected tree, and at least
  // two nodes are terminal.
  WeightedTree(std::vector<TreeNode> nodes, std::vector<TreeEdge> edges);

  const std::vector<TreeNode>& nodes() const { return nodes_; }
  const std::vector<TreeEdge>& edges() const { return edges_; }
  // Terminal ids in declaration order.
  const std::vector<std::string>& terminals() const { return terminals_; }
  bool has_node(const std::string& id) const { return index_.count(id) != 0; }

  // Sum of edge lengths along the unique path. Throws UnknownNode.
  double distance(const std::string& u, const std::string& v) const;

  // Row-major pairwise tree distances between terminals (terminals() order).
  const std::vector<double>& terminal_distances() const { return terminal_dist_; }

 private:
  std::vector<double> distances_from(std::size_t source) const;
  std::size_t index_of(const std::string& id) const;

  std::vector<TreeNode> nodes_;
  std::vector<TreeEdge> edges_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<std::vector<std::pair<std::size_t, double>>> adjacency_;
  std::vector<std::string> terminals_;
  std::vector<double> terminal_dist_;
};

double tree_distance(const WeightedTree& tree, const std::string& u, const std::string& v);

// Scaled placement of terminal nodes in the closed unit square.
struct Layout {
  double scale = 0.0;
  std::map<std::string, Point> positions;
};

struct LayoutCheck {
  bool pass = false;
  // max over pairs of scale * d_T(i, j) - |L(i) - L(j)| (negative when slack).
  double worst_violation = 0.0;
  std::string worst_u;
  std::string worst_v;
};

// Distance condition: |L(i) - L(j)| >= m d_T(i, j) - 1e-9 for all terminal
// pairs, plus every position inside [0, 1]^2 within 1e-9. Throws
// MissingPosition when a terminal has no position.
LayoutCheck validate_layout(const WeightedTree& tree, const Layout& layout);

enum class Execution { Serial, Parallel };

struct OptimizerOptions {
  int starts = 32;
  std::uint64_t seed = 0;
  Execution execution = Execution::Parallel;
};

// Multi-start maximization of the scale m subject to the distance condition.
// Each start is seeded from (seed, start index) alone and runs a smoothed
// max-min ascent followed by an active-set polish; the best start wins, ties
// broken by the lexicographically smallest position vector. Serial and
// parallel execution return identical layouts.
Layout optimize_scale(const WeightedTree& tree, const OptimizerOptions& options = {});

struct ActivePath {
  std::string u;
  std::string v;
  Point from;
  Point to;
  double tree_distance = 0.0;
};

using ActivePathSet = std::vector<ActivePath>;

// Pairs whose separation equals the scaled tree distance within
// 1e-6 * max(1, m d). Throws InvalidLayout when validate_layout fails.
ActivePathSet mark_active_paths(const WeightedTree& tree, const Layout& layout);

// A face of the square's subdivision by active paths. `boundary` is the
// counter-clockwise outer cycle (dangling segments attached to it appear as
// back-and-forth spikes), `holes` are islands of active paths inside it.
struct Polygon {
  std::vector<Point> boundary;
  std::vector<std::vector<Point>> holes;
  std::vector<std::pair<Point, Point>> dangling;
  double area = 0.0;
};

// Faces of the planar subdivision formed by the unit square's boundary and
// the active-path segments. Throws CrossingPaths when two segments cross
// away from a shared endpoint.
std::vector<Polygon> identify_polygons(const Layout& layout, const ActivePathSet& paths);

// The subdivision core, usable for arbitrary segment sets inside the square.
std::vector<Polygon> partition_square(const std::vector<std::pair<Point, Point>>& segments);

}  // namespace origami
