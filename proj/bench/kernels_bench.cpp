// Serial vs OpenMP exact kernels on the Kronecker systems the solvers build.

#include "rbmod/kernels.hpp"
#include "rbmod/linalg.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace rbmod;

// vec-system of X -> (I + B) X B for B = J_{n/2}(-1) (+) J_{n-n/2}(0)
DenseMatrix kron_system(std::size_t n) {
  const auto h = n / 2;
  const DenseMatrix B = direct_sum(std::vector<DenseMatrix>{jordan_block(h, -1), jordan_block(n - h, 0)});
  DenseMatrix S = DenseMatrix::identity(n);
  for (std::size_t i = 0; i + 1 < n; ++i) S(i, i + 1) = Rational(1, 2);
  const DenseMatrix Bc = S * B * inverse(S);
  return kron(Bc.transpose(), DenseMatrix::identity(n) + Bc);
}

void BM_RrefSerial(benchmark::State& state) {
  const auto m = kron_system(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::serial::rref(m));
}

void BM_RrefParallel(benchmark::State& state) {
  const auto m = kron_system(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::parallel::rref(m));
}

void BM_MultiplySerial(benchmark::State& state) {
  const auto m = kron_system(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::serial::multiply(m, m));
}

void BM_MultiplyParallel(benchmark::State& state) {
  const auto m = kron_system(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::parallel::multiply(m, m));
}

BENCHMARK(BM_RrefSerial)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RrefParallel)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MultiplySerial)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MultiplyParallel)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
