#include <benchmark/benchmark.h>

#include "padic_ell/euler.hpp"
#include "padic_ell/euler_ell.hpp"
#include "padic_ell/measures.hpp"
#include "padic_ell/padic.hpp"

using namespace padic_ell;

namespace {

const DirichletChar& quad5() {
  static const DirichletChar chi = DirichletChar::parse("M=5;e=[2]");
  return chi;
}

void BM_EulerNumbers(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(euler_numbers(n));
}
BENCHMARK(BM_EulerNumbers)->Arg(50)->Arg(200);

void BM_LogP(benchmark::State& state) {
  const int prec = static_cast<int>(state.range(0));
  auto u = angle(2, 5, prec);
  for (auto _ : state) benchmark::DoNotOptimize(log_p(u));
}
BENCHMARK(BM_LogP)->Arg(8)->Arg(20);

void BM_EllP(benchmark::State& state) {
  EllContext ctx(3, quad5(), static_cast<int>(state.range(0)), 2);
  auto s = ctx.scalar(BigRational::parse("1/2"));
  for (auto _ : state) benchmark::DoNotOptimize(ell_p(s, ctx));
}
BENCHMARK(BM_EllP)->Arg(8)->Arg(12)->Unit(benchmark::kMicrosecond);

// Montgomery summation over a <= f p^M.
void BM_WittKernel(benchmark::State& state) {
  EllContext ctx(3, quad5(), 12, 2);
  auto s = ctx.scalar(BigRational::parse("1/2"));
  const int level = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ell_p_witt(s, ctx, level));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(5 * nt::ipow(3, level)));
}
BENCHMARK(BM_WittKernel)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);

void BM_MeasureIntegral(benchmark::State& state) {
  EllContext ctx(3, quad5(), 12, 2);
  auto s = ctx.scalar(BigRational::parse("1/2"));
  const int level = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ell_p_measure(s, ctx, level));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(5 * nt::ipow(3, level)));
}
BENCHMARK(BM_MeasureIntegral)->DenseRange(6, 8, 2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
