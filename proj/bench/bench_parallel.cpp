// SPDX-License-Identifier: Apache-2.0
//
// Serial reference vs OpenMP kernels: optimizer multistart and batch cubics.

#include <benchmark/benchmark.h>

#include <random>
#include <string>
#include <vector>

#include "origami/fold_algebra.hpp"
#include "origami/treemaker.hpp"

using namespace origami;

namespace {

WeightedTree star(int leaves) {
  std::vector<TreeNode> nodes{{"hub", NodeKind::Internal}};
  std::vector<TreeEdge> edges;
  for (int i = 0; i < leaves; ++i) {
    nodes.push_back({"leaf" + std::to_string(i), NodeKind::Terminal});
    edges.push_back({"hub", "leaf" + std::to_string(i), 1.0 + 0.1 * i});
  }
  return WeightedTree(nodes, edges);
}

std::vector<MonicCubic> batch(std::size_t n) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-5, 5);
  std::vector<MonicCubic> out(n);
  for (auto& m : out) m = {u(rng), u(rng), u(rng)};
  return out;
}

void BM_OptimizeScale(benchmark::State& state, Execution exec) {
  const WeightedTree tree = star(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(optimize_scale(tree, {16, 3, exec}));
  }
}

void BM_SolveCubics(benchmark::State& state, bool parallel) {
  const auto cubics = batch(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(parallel ? solve_cubics_parallel(cubics) : solve_cubics_serial(cubics));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK_CAPTURE(BM_OptimizeScale, serial, Execution::Serial)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_OptimizeScale, parallel, Execution::Parallel)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_SolveCubics, serial, false)->Arg(10000)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_SolveCubics, parallel, true)->Arg(10000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
