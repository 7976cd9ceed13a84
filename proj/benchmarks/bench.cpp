#include <benchmark/benchmark.h>

#include "steenrod/op_vector.hpp"
#include "steenrod/relations.hpp"
#include "steenrod/sequences.hpp"

using namespace steenrod;

static void BM_EnumerateMonomials(benchmark::State& state) {
  Prime p(2);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_monomials(state.range(0), p));
}
BENCHMARK(BM_EnumerateMonomials)->Arg(12)->Arg(20)->Arg(28);

static void BM_AntipodeMonomial(benchmark::State& state) {
  Prime p(2);
  ExponentSeq r(p, {static_cast<std::int64_t>(state.range(0))});
  for (auto _ : state) benchmark::DoNotOptimize(antipode(DualPoly::monomial(r)));
}
BENCHMARK(BM_AntipodeMonomial)->Arg(8)->Arg(16)->Arg(24);

static void BM_MuMatrixRank(benchmark::State& state) {
  Prime p(2);
  std::int64_t n = state.range(0);
  FpMatrix mu = mu_matrix(n, p);  // memoized build outside the timed loop
  for (auto _ : state) benchmark::DoNotOptimize(rank(mu));
}
BENCHMARK(BM_MuMatrixRank)->Arg(12)->Arg(18)->Arg(24);

static void BM_KernelCertificate(benchmark::State& state) {
  Prime p(2);
  std::int64_t n = state.range(0);
  mu_matrix(n, p);
  for (auto _ : state) benchmark::DoNotOptimize(kernel_certificate(n, 0, p));
}
BENCHMARK(BM_KernelCertificate)->Arg(8)->Arg(16);

static void BM_TriangularityCertificate(benchmark::State& state) {
  Prime p(2);
  std::int64_t n = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(triangularity_certificate(n, p));
}
BENCHMARK(BM_TriangularityCertificate)->Arg(8)->Arg(16);

BENCHMARK_MAIN();
