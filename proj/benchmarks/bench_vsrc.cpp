#include <benchmark/benchmark.h>

#include <random>

#include "vsrc/experiments.hpp"
#include "vsrc/kernels.hpp"
#include "vsrc/linalg.hpp"
#include "vsrc/operator.hpp"
#include "vsrc/specfun.hpp"

namespace {

using namespace vsrc;

Mesh flower(double n_lambda) {
  experiments::ExperimentConfig c;
  c.n_lambda = n_lambda;
  return experiments::make_mesh(c);
}

CVector random_vector(Eigen::Index n) {
  std::mt19937 rng(5);
  std::normal_distribution<double> g;
  CVector v(n);
  for (auto& x : v) x = Complex(g(rng), g(rng));
  return v;
}

void BM_BesselJY(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  double x = 0.5;
  for (auto _ : state) {
    benchmark::DoNotOptimize(specfun::bessel_jy(n, x));
    x = x < 100.0 ? x * 1.07 : 0.5;
  }
}
BENCHMARK(BM_BesselJY)->Arg(0)->Arg(1)->Arg(20);

void BM_KernelPair(benchmark::State& state) {
  const double k = 4 * kPi;
  const Point z(0.1, -0.2), nu(0.6, 0.8);
  double s = 0.05;
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernels::kernel_pair(k, Point(1.0 + s, 0.3), z, nu));
    s = s < 2.0 ? s + 0.01 : 0.05;
  }
}
BENCHMARK(BM_KernelPair);

void BM_OsrcApply(benchmark::State& state) {
  const VirtualSourceOperator op(flower(static_cast<double>(state.range(0))), {.cache_kernels = false});
  const CVector v = random_vector(static_cast<Eigen::Index>(op.size()));
  for (auto _ : state) benchmark::DoNotOptimize(op.apply_dtn(v));
  state.SetComplexityN(static_cast<int64_t>(op.size()));
}
BENCHMARK(BM_OsrcApply)->RangeMultiplier(2)->Range(12, 96)->Complexity(benchmark::oN);

void BM_ApplyBA(benchmark::State& state) {
  const bool cached = state.range(1) != 0;
  const VirtualSourceOperator op(flower(static_cast<double>(state.range(0))), {.cache_kernels = cached});
  const CVector v = random_vector(static_cast<Eigen::Index>(op.size()));
  for (auto _ : state) benchmark::DoNotOptimize(op.apply_BA(v));
}
BENCHMARK(BM_ApplyBA)->ArgsProduct({{12, 24, 48}, {0, 1}})->Unit(benchmark::kMicrosecond);

void BM_ManufacturedSolve(benchmark::State& state) {
  experiments::ExperimentConfig c;
  c.n_lambda = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(experiments::run_manufactured(c).rel_error);
}
BENCHMARK(BM_ManufacturedSolve)->Arg(12)->Arg(24)->Unit(benchmark::kMillisecond);

void BM_DenseSpectrum(benchmark::State& state) {
  const VirtualSourceOperator op(flower(static_cast<double>(state.range(0))));
  const CMatrix a = op.assemble_dense(OperatorKind::BA);
  for (auto _ : state) benchmark::DoNotOptimize(linalg::eigenvalues_dense(a));
}
BENCHMARK(BM_DenseSpectrum)->Arg(12)->Arg(24)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
