// Serial reference kernels against their OpenMP versions on the workloads
// the algorithms actually run. Arg 0 is the serial path; arg n > 0 runs the
// parallel path with n workers.

#include <benchmark/benchmark.h>

#include "csg/cone.hpp"
#include "csg/gaps.hpp"
#include "csg/kernels.hpp"
#include "csg/semigroup.hpp"
#include "csg/unit_box.hpp"

namespace {

using csg::IntVec;
namespace kernels = csg::kernels;

const std::vector<IntVec> kRunning{{2, 0, 0}, {4, 2, 4}, {0, 1, 0}, {3, 0, 0}, {6, 3, 6}, {3, 1, 1},
                                   {4, 1, 1}, {3, 1, 2}, {1, 1, 0}, {3, 2, 3}, {1, 2, 1}};

std::vector<IntVec> run_filter(const IntVec& upper, const kernels::PointPredicate& keep, int workers) {
  return workers == 0 ? kernels::serial::filter_box(upper, keep) : kernels::parallel::filter_box(upper, keep, workers);
}

// Gap filter of the running example: the box spanned by the anchors,
// filtered by zonotope feasibility and non-membership.
void BM_GapFilter(benchmark::State& state) {
  const csg::AffineSemigroup s(kRunning);
  const std::vector<IntVec> anchors{{14, 0, 0}, {10, 5, 10}, {0, 13, 0}};
  const csg::UnitBoxFeasibility box(anchors);
  const IntVec upper{24, 18, 10};
  const auto keep = [&](const IntVec& p) { return box.feasible(p) && !s.contains(p); };
  for (auto _ : state) benchmark::DoNotOptimize(run_filter(upper, keep, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_GapFilter)->Arg(0)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

// Zonotope lattice points of scaled running-example rays.
void BM_Zonotope(benchmark::State& state) {
  const std::vector<IntVec> columns{{6, 0, 0}, {8, 4, 8}, {0, 6, 0}, {3, 1, 1}};
  const csg::UnitBoxFeasibility box(columns);
  const IntVec upper{17, 11, 9};
  const auto keep = [&](const IntVec& p) { return box.feasible(p); };
  for (auto _ : state) benchmark::DoNotOptimize(run_filter(upper, keep, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_Zonotope)->Arg(0)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

// Membership of many points, the inner loop of verification and of the
// generator reconstruction.
void BM_Membership(benchmark::State& state) {
  const csg::AffineSemigroup s(kRunning);
  std::vector<IntVec> points;
  for (long long x = 0; x < 20; ++x) {
    for (long long y = 0; y < 12; ++y) {
      for (long long z = 0; z < 16; ++z) points.push_back(IntVec{x, y, z});
    }
  }
  const auto keep = [&](const IntVec& p) { return s.contains(p); };
  const int workers = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(workers == 0 ? kernels::serial::filter_points(points, keep)
                                          : kernels::parallel::filter_points(points, keep, workers));
  }
}
BENCHMARK(BM_Membership)->Arg(0)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
