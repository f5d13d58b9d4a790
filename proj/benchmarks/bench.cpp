#include "zzgla/axioms.hpp"

#include <benchmark/benchmark.h>

using namespace zzgla;

static void BM_ScalarMultiply(benchmark::State& state) {
  Scalar x(Rational(7, 3), Rational(-2, 5));
  const Scalar y(Rational(5, 11), Rational(1, 2));
  for (auto _ : state) {
    benchmark::DoNotOptimize(x * y);
  }
}
BENCHMARK(BM_ScalarMultiply);

static void BM_Rref(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  ExactMatrix m(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) m(j, k) = Scalar(Rational(static_cast<long long>((j * 7 + k * 3) % 11) - 5, 1 + (j + k) % 3));
  for (auto _ : state) {
    benchmark::DoNotOptimize(rref(m));
  }
}
BENCHMARK(BM_Rref)->Arg(8)->Arg(16)->Arg(32);

static void BM_BuildBasis(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_basis(AlgebraFamily::so_odd(n, n / 2)));
  }
}
BENCHMARK(BM_BuildBasis)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

static void BM_Jacobi(benchmark::State& state) {
  const auto b = build_basis(AlgebraFamily::sp(static_cast<std::size_t>(state.range(0)), 1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_jacobi(b));
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * b.size() * b.size() * b.size()));
}
BENCHMARK(BM_Jacobi)->DenseRange(2, 3)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
