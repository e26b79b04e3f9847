#include <benchmark/benchmark.h>

#include "solvops/bessel.hpp"
#include "solvops/operators.hpp"
#include "solvops/verify.hpp"
#include "solvops/whittaker.hpp"

using namespace solvops;

static void BM_BesselI2d(benchmark::State& state) {
  cplx m{0.7, 0.2};
  for (auto _ : state) {
    benchmark::DoNotOptimize(bessel_i2d(m, cplx(3.1, 0.4)).value);
  }
}
BENCHMARK(BM_BesselI2d);

static void BM_MacdonaldSmall(benchmark::State& state) {
  cplx m{0.3, 0.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(macdonald_k2d(m, cplx(1.2, 0.0)).value);
  }
}
BENCHMARK(BM_MacdonaldSmall);

static void BM_MacdonaldCompensatedBand(benchmark::State& state) {
  // r ~ 10 forces the double-double connection path
  cplx m{0.3, 0.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(macdonald_k2d(m, cplx(10.0, 0.0)).value);
  }
}
BENCHMARK(BM_MacdonaldCompensatedBand);

static void BM_WhittakerKernel(benchmark::State& state) {
  auto spec = OperatorSpec::whittaker(cplx(0.5, 0.0), cplx(0.7, 0.0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(resolvent_kernel(spec, cplx(-1.3, 0.2), 0.8, 1.7).value);
  }
}
BENCHMARK(BM_WhittakerKernel);

static void BM_OracleResolve(benchmark::State& state) {
  Grid g{-14.0, 3.0, int(state.range(0)), GridClustering::Uniform};
  auto spec = OperatorSpec::exponential(cplx(1.0, 0.0));
  auto x = g.points();
  std::vector<cplx> f(x.size());
  for (size_t i = 0; i < x.size(); ++i) f[i] = std::exp(-(x[i] + 2.0) * (x[i] + 2.0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle_resolve(spec, cplx(-0.49, 0.0), g, f).u);
  }
}
BENCHMARK(BM_OracleResolve)->Arg(10000)->Arg(40000);

static void BM_Quadrature(benchmark::State& state) {
  auto f = [](double x) { return cplx(std::cos(5.0 * x) * std::exp(-x * x), 0.0); };
  for (auto _ : state) {
    benchmark::DoNotOptimize(quadrature(f, -6.0, 6.0, 1e-10).value);
  }
}
BENCHMARK(BM_Quadrature);

BENCHMARK_MAIN();
