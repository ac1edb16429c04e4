// SPDX-License-Identifier: Apache-2.0

#include "origami/treemaker.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <limits>
#include <random>

namespace origami {

WeightedTree::WeightedTree(std::vector<TreeNode> nodes, std::vector<TreeEdge> edges)
    : nodes_(std::move(nodes)), edges_(std::move(edges)) {
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (!index_.emplace(nodes_[i].id, i).second) {
      throw Error(ErrorCode::InvalidInput, "duplicate node id '" + nodes_[i].id + "'");
    }
    if (nodes_[i].kind == NodeKind::Terminal) terminals_.push_back(nodes_[i].id);
  }
  if (terminals_.size() < 2) throw Error(ErrorCode::InvalidInput, "a tree needs at least two terminal nodes");
  if (edges_.size() + 1 != nodes_.size()) {
    throw Error(ErrorCode::InvalidInput, "a tree on n nodes has exactly n - 1 edges");
  }
  adjacency_.resize(nodes_.size());
  for (const auto& e : edges_) {
    const auto u = index_.find(e.from);
    const auto v = index_.find(e.to);
    if (u == index_.end() || v == index_.end()) {
      throw Error(ErrorCode::InvalidInput, "edge " + e.from + "-" + e.to + " references an unknown node");
    }
    if (!std::isfinite(e.length) || e.length <= 1e-12) {
      throw Error(ErrorCode::InvalidInput, "edge " + e.from + "-" + e.to + " needs a positive length");
    }
    adjacency_[u->second].emplace_back(v->second, e.length);
    adjacency_[v->second].emplace_back(u->second, e.length);
  }
  // n - 1 edges and connected implies acyclic.
  const auto from_first = distances_from(0);
  if (std::any_of(from_first.begin(), from_first.end(), [](double d) { return std::isinf(d); })) {
    throw Error(ErrorCode::InvalidInput, "tree is not connected");
  }

  const std::size_t n = terminals_.size();
  terminal_dist_.assign(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const auto d = distances_from(index_.at(terminals_[i]));
    for (std::size_t j = 0; j < n; ++j) terminal_dist_[i * n + j] = d[index_.at(terminals_[j])];
  }
}

std::vector<double> WeightedTree::distances_from(std::size_t source) const {
  std::vector<double> dist(nodes_.size(), std::numeric_limits<double>::infinity());
  std::vector<std::size_t> stack{source};
  dist[source] = 0.0;
  while (!stack.empty()) {
    const std::size_t u = stack.back();
    stack.pop_back();
    for (const auto& [v, len] : adjacency_[u]) {
      if (std::isinf(dist[v])) {
        dist[v] = dist[u] + len;
        stack.push_back(v);
      }
    }
  }
  return dist;
}

std::size_t WeightedTree::index_of(const std::string& id) const {
  const auto it = index_.find(id);
  if (it == index_.end()) throw Error(ErrorCode::UnknownNode, "no node '" + id + "'");
  return it->second;
}

double WeightedTree::distance(const std::string& u, const std::string& v) const {
  const std::size_t iu = index_of(u);
  const std::size_t iv = index_of(v);
  return distances_from(iu)[iv];
}

double tree_distance(const WeightedTree& tree, const std::string& u, const std::string& v) {
  return tree.distance(u, v);
}

namespace {

constexpr double kLayoutTol = 1e-9;

std::vector<Point> terminal_positions(const WeightedTree& tree, const Layout& layout) {
  std::vector<Point> pts;
  for (const auto& id : tree.terminals()) {
    const auto it = layout.positions.find(id);
    if (it == layout.positions.end()) throw Error(ErrorCode::MissingPosition, "no position for '" + id + "'");
    pts.push_back(it->second);
  }
  return pts;
}

}  // namespace

LayoutCheck validate_layout(const WeightedTree& tree, const Layout& layout) {
  const auto pts = terminal_positions(tree, layout);
  const auto& ids = tree.terminals();
  const auto& D = tree.terminal_distances();
  const std::size_t n = pts.size();

  LayoutCheck check;
  check.worst_violation = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double v = layout.scale * D[i * n + j] - distance(pts[i], pts[j]);
      if (v > check.worst_violation) {
        check.worst_violation = v;
        check.worst_u = ids[i];
        check.worst_v = ids[j];
      }
    }
  }
  bool inside = std::isfinite(layout.scale) && layout.scale > 0.0;
  for (const Point& p : pts) {
    inside = inside && p.x >= -kLayoutTol && p.x <= 1.0 + kLayoutTol && p.y >= -kLayoutTol &&
             p.y <= 1.0 + kLayoutTol;
  }
  check.pass = inside && check.worst_violation <= kLayoutTol;
  return check;
}

ActivePathSet mark_active_paths(const WeightedTree& tree, const Layout& layout) {
  if (!validate_layout(tree, layout).pass) {
    throw Error(ErrorCode::InvalidLayout, "layout violates the distance condition");
  }
  const auto pts = terminal_positions(tree, layout);
  const auto& ids = tree.terminals();
  const auto& D = tree.terminal_distances();
  const std::size_t n = pts.size();
  ActivePathSet out;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double target = layout.scale * D[i * n + j];
      if (distance(pts[i], pts[j]) - target <= 1e-6 * std::max(1.0, target)) {
        out.push_back({ids[i], ids[j], pts[i], pts[j], D[i * n + j]});
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Scale optimization

namespace {

// Pairwise problem data shared by all starts.
struct ScaleProblem {
  std::size_t n = 0;
  std::vector<std::size_t> pi, pj;
  std::vector<double> inv_d;  // 1 / d_T for each pair

  explicit ScaleProblem(const WeightedTree& tree) : n(tree.terminals().size()) {
    const auto& D = tree.terminal_distances();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        pi.push_back(i);
        pj.push_back(j);
        inv_d.push_back(1.0 / D[i * n + j]);
      }
    }
  }

  std::size_t pairs() const { return inv_d.size(); }

  void ratios(const std::vector<double>& x, std::vector<double>& r) const {
    r.resize(pairs());
    for (std::size_t k = 0; k < pairs(); ++k) {
      const double dx = x[2 * pi[k]] - x[2 * pj[k]];
      const double dy = x[2 * pi[k] + 1] - x[2 * pj[k] + 1];
      r[k] = std::hypot(dx, dy) * inv_d[k];
    }
  }

  double min_ratio(const std::vector<double>& x) const {
    double m = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < pairs(); ++k) {
      const double dx = x[2 * pi[k]] - x[2 * pj[k]];
      const double dy = x[2 * pi[k] + 1] - x[2 * pj[k] + 1];
      m = std::min(m, std::hypot(dx, dy) * inv_d[k]);
    }
    return m;
  }

  // Adds w * grad r_k to g.
  void add_ratio_gradient(const std::vector<double>& x, std::size_t k, double w, std::vector<double>& g) const {
    const double dx = x[2 * pi[k]] - x[2 * pj[k]];
    const double dy = x[2 * pi[k] + 1] - x[2 * pj[k] + 1];
    const double len = std::hypot(dx, dy);
    if (len == 0.0) return;
    const double s = w * inv_d[k] / len;
    g[2 * pi[k]] += s * dx;
    g[2 * pi[k] + 1] += s * dy;
    g[2 * pj[k]] -= s * dx;
    g[2 * pj[k] + 1] -= s * dy;
  }

  // Smoothed minimum -tau log sum exp(-r / tau) and its gradient.
  double softmin(const std::vector<double>& x, double tau, std::vector<double>* grad) const {
    std::vector<double> r;
    ratios(x, r);
    const double rmin = *std::min_element(r.begin(), r.end());
    double z = 0.0;
    std::vector<double> w(r.size());
    for (std::size_t k = 0; k < r.size(); ++k) {
      w[k] = std::exp(-(r[k] - rmin) / tau);
      z += w[k];
    }
    if (grad) {
      grad->assign(x.size(), 0.0);
      for (std::size_t k = 0; k < r.size(); ++k) add_ratio_gradient(x, k, w[k] / z, *grad);
    }
    return rmin - tau * std::log(z);
  }
};

void clamp_unit(std::vector<double>& x) {
  for (double& v : x) v = std::clamp(v, 0.0, 1.0);
}

// Zero gradient components that would push a coordinate out of the box.
void project_gradient(const std::vector<double>& x, std::vector<double>& g) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    if ((x[i] <= 0.0 && g[i] < 0.0) || (x[i] >= 1.0 && g[i] > 0.0)) g[i] = 0.0;
  }
}

// Projected gradient ascent with backtracking on the smoothed objective.
void smoothed_ascent(const ScaleProblem& prob, std::vector<double>& x, std::size_t first_stage = 0) {
  static constexpr double kTemperatures[] = {1e-1, 3e-2, 1e-2, 3e-3, 1e-3, 3e-4, 1e-4};
  std::vector<double> g, trial(x.size());
  for (std::size_t stage = first_stage; stage < std::size(kTemperatures); ++stage) {
    const double tau = kTemperatures[stage];
    double step = 0.1;
    double f = prob.softmin(x, tau, &g);
    for (int it = 0; it < 400 && step > 1e-12; ++it) {
      bool accepted = false;
      while (step > 1e-12) {
        for (std::size_t i = 0; i < x.size(); ++i) trial[i] = x[i] + step * g[i];
        clamp_unit(trial);
        double gain = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) gain += g[i] * (trial[i] - x[i]);
        const double ft = prob.softmin(trial, tau, nullptr);
        if (gain > 0.0 && ft >= f + 1e-4 * gain) {
          x.swap(trial);
          f = prob.softmin(x, tau, &g);
          step = std::min(1.0, 2.0 * step);
          accepted = true;
          break;
        }
        step *= 0.5;
      }
      if (!accepted) break;
    }
  }
}

// Minimum-norm point of the convex hull of `vecs` (Frank-Wolfe on the
// simplex). Returns the ascent direction common to every active constraint.
std::vector<double> min_norm_hull_point(const std::vector<std::vector<double>>& vecs) {
  const std::size_t dim = vecs.front().size();
  std::vector<double> lambda(vecs.size(), 1.0 / static_cast<double>(vecs.size()));
  std::vector<double> p(dim, 0.0);
  const auto rebuild = [&] {
    std::fill(p.begin(), p.end(), 0.0);
    for (std::size_t k = 0; k < vecs.size(); ++k) {
      for (std::size_t i = 0; i < dim; ++i) p[i] += lambda[k] * vecs[k][i];
    }
  };
  rebuild();
  for (int it = 0; it < 500; ++it) {
    std::size_t best = 0;
    double best_dot = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < vecs.size(); ++k) {
      double d = 0.0;
      for (std::size_t i = 0; i < dim; ++i) d += vecs[k][i] * p[i];
      if (d < best_dot) {
        best_dot = d;
        best = k;
      }
    }
    // Exact line search between p and vecs[best].
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < dim; ++i) {
      const double diff = vecs[best][i] - p[i];
      num -= p[i] * diff;
      den += diff * diff;
    }
    if (den <= 0.0 || num <= 1e-30) break;
    const double gamma = std::min(1.0, num / den);
    for (double& l : lambda) l *= (1.0 - gamma);
    lambda[best] += gamma;
    rebuild();
  }
  return p;
}

// Improvement-only ascent on the exact minimum along the common ascent
// direction of the near-active constraints.
void active_set_polish(const ScaleProblem& prob, std::vector<double>& x) {
  std::vector<double> r, trial(x.size());
  double m = prob.min_ratio(x);
  double band = 1e-3;
  double step = 1e-2;
  for (int it = 0; it < 300 && band > 1e-13; ++it) {
    prob.ratios(x, r);
    std::vector<std::vector<double>> grads;
    for (std::size_t k = 0; k < r.size(); ++k) {
      if (r[k] <= m * (1.0 + band)) {
        std::vector<double> g(x.size(), 0.0);
        prob.add_ratio_gradient(x, k, 1.0, g);
        project_gradient(x, g);
        grads.push_back(std::move(g));
      }
    }
    const std::vector<double> dir = min_norm_hull_point(grads);
    double len = 0.0;
    for (double v : dir) len += v * v;
    len = std::sqrt(len);
    if (len <= 1e-14) {
      band *= 0.1;
      continue;
    }
    bool improved = false;
    for (double s = step; s > 1e-14; s *= 0.5) {
      for (std::size_t i = 0; i < x.size(); ++i) trial[i] = x[i] + s * dir[i] / len;
      clamp_unit(trial);
      const double mt = prob.min_ratio(trial);
      if (mt > m) {
        x.swap(trial);
        m = mt;
        step = std::min(1e-1, 2.0 * s);
        improved = true;
        break;
      }
    }
    if (!improved) band *= 0.1;
  }
}

struct StartResult {
  double scale = 0.0;
  std::vector<double> x;
};

StartResult run_start(const ScaleProblem& prob, std::uint64_t seed, int start) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(start)};
  std::mt19937_64 rng(seq);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> x(2 * prob.n);
  for (double& v : x) v = unit(rng);

  smoothed_ascent(prob, x);
  active_set_polish(prob, x);
  clamp_unit(x);
  double m = prob.min_ratio(x);

  // Boundary saddles (points parked in corners) have no first-order ascent
  // direction, so kick the layout and re-climb, keeping improvements.
  static constexpr double kKicks[] = {0.1, 0.05, 0.02, 0.1, 0.05, 0.02, 0.01, 0.005};
  std::normal_distribution<double> noise(0.0, 1.0);
  std::vector<double> trial(x.size());
  for (double sigma : kKicks) {
    for (std::size_t i = 0; i < x.size(); ++i) trial[i] = x[i] + sigma * noise(rng);
    clamp_unit(trial);
    smoothed_ascent(prob, trial, 2);
    active_set_polish(prob, trial);
    clamp_unit(trial);
    const double mt = prob.min_ratio(trial);
    if (mt > m) {
      m = mt;
      x = trial;
    }
  }
  return {m, std::move(x)};
}

bool better(const StartResult& a, const StartResult& b) {
  if (a.scale != b.scale) return a.scale > b.scale;
  return a.x < b.x;
}

}  // namespace

Layout optimize_scale(const WeightedTree& tree, const OptimizerOptions& options) {
  if (options.starts < 1) throw Error(ErrorCode::InvalidInput, "need at least one optimizer start");
  const ScaleProblem prob(tree);
  std::vector<StartResult> results(static_cast<std::size_t>(options.starts));

  if (options.execution == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (int s = 0; s < options.starts; ++s) results[s] = run_start(prob, options.seed, s);
  } else {
    for (int s = 0; s < options.starts; ++s) results[s] = run_start(prob, options.seed, s);
  }

  const StartResult* best = &results.front();
  for (const auto& r : results) {
    if (better(r, *best)) best = &r;
  }
  if (!(best->scale >= 1e-6)) throw Error(ErrorCode::OptimizationFailed, "no feasible layout found");

  Layout layout;
  layout.scale = best->scale;
  const auto& ids = tree.terminals();
  for (std::size_t i = 0; i < ids.size(); ++i) layout.positions[ids[i]] = Point{best->x[2 * i], best->x[2 * i + 1]};
  return layout;
}

}  // namespace origami
