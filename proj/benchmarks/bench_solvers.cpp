#include <benchmark/benchmark.h>

#include <random>

#include "hypspec/discretize.hpp"
#include "hypspec/eigensolve.hpp"
#include "hypspec/reduction.hpp"
#include "hypspec/spectrum.hpp"

using namespace hypspec;

namespace {

RadialOperator scalar_op() {
  return build_radial_operator(hyperbolic_profile(), {ChannelTag::I, 4, 1, 4.0});
}

RadialOperator coupled_op() {
  return build_radial_operator(hyperbolic_profile(), {ChannelTag::III, 4, 2, 4.0});
}

void AssembleTridiagonal(benchmark::State& state) {
  const RadialOperator op = scalar_op();
  const Grid grid = make_grid(8.0, 40.0, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(assemble_tridiagonal(op, grid));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(AssembleTridiagonal)->RangeMultiplier(4)->Range(256, 16384)->Complexity();

void SturmCountProbe(benchmark::State& state) {
  const RadialOperator op = scalar_op();
  const TridiagonalSym T =
      assemble_tridiagonal(op, make_grid(8.0, 40.0, static_cast<int>(state.range(0))));
  double mu = 0.3;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sturm_count(T, mu));
    mu += 1e-9;
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(SturmCountProbe)->RangeMultiplier(4)->Range(256, 16384)->Complexity();

void SmallestEigenvalue(benchmark::State& state) {
  const RadialOperator op = scalar_op();
  const TridiagonalSym T =
      assemble_tridiagonal(op, make_grid(8.0, 40.0, static_cast<int>(state.range(0))));
  for (auto _ : state) {
    benchmark::DoNotOptimize(bisect_eigenvalues(T, 1, 1, 1e-9));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(SmallestEigenvalue)->RangeMultiplier(4)->Range(256, 16384)->Complexity();

void InertiaCountProbe(benchmark::State& state) {
  const RadialOperator op = coupled_op();
  const BlockBandedSym B =
      assemble_block(op, make_grid(8.0, 40.0, static_cast<int>(state.range(0))));
  double mu = 0.3;
  for (auto _ : state) {
    benchmark::DoNotOptimize(inertia_count_banded(B, mu));
    mu += 1e-9;
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(InertiaCountProbe)->RangeMultiplier(4)->Range(256, 16384)->Complexity();

void JacobiOracle(benchmark::State& state) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  const int n = static_cast<int>(state.range(0));
  TridiagonalSym T;
  T.diag.resize(n);
  T.off.resize(n - 1);
  for (double& d : T.diag) d = uni(rng);
  for (double& e : T.off) e = uni(rng);
  const std::vector<double> dense = to_dense(T);
  for (auto _ : state) {
    benchmark::DoNotOptimize(jacobi_eigenvalues(dense, n));
  }
}
BENCHMARK(JacobiOracle)->Arg(25)->Arg(50)->Arg(100);

void EssentialBracketChannelI(benchmark::State& state) {
  const MetricProfile hyp = hyperbolic_profile();
  BracketConfig config;
  for (auto _ : state) {
    benchmark::DoNotOptimize(essential_bottom_bracket(hyp, {ChannelTag::I, 4, 1, 4.0}, config));
  }
}
BENCHMARK(EssentialBracketChannelI);

}  // namespace

BENCHMARK_MAIN();
