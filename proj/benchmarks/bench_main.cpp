#include <benchmark/benchmark.h>

#include "betajacobi/expansion_b.hpp"
#include "betajacobi/expansion_beta.hpp"
#include "betajacobi/jacobi_oracle.hpp"
#include "betajacobi/laguerre.hpp"
#include "betajacobi/zero_expansions.hpp"

using namespace betajacobi;

static void BM_GenerateCk(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(generate_ck(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_GenerateCk)->DenseRange(2, 8, 2)->Unit(benchmark::kMillisecond);

static void BM_GenerateDk(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(generate_dk(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_GenerateDk)->DenseRange(2, 8, 2)->Unit(benchmark::kMillisecond);

static void BM_ComputeUV(benchmark::State& state) {
  const CKTable ck = generate_ck(5);
  for (auto _ : state) benchmark::DoNotOptimize(compute_uv(ck, static_cast<int>(state.range(0)), Rational(1, 3)));
}
BENCHMARK(BM_ComputeUV)->Arg(5)->Arg(10)->Arg(50)->Unit(benchmark::kMillisecond);

static void BM_EvalExpansionBetaExact(benchmark::State& state) {
  const UVTable uv = compute_uv(generate_ck(5), 10, Rational(1, 3));
  for (auto _ : state) benchmark::DoNotOptimize(eval_expansion_beta(uv, Rational(100), Rational(1), 5));
}
BENCHMARK(BM_EvalExpansionBetaExact);

static void BM_EvalExpansionBReal(benchmark::State& state) {
  const YZTable yz = compute_yz(generate_dk(5), 10, Rational(1, 3));
  const Real x(Rational(1), digits_to_bits(32));
  for (auto _ : state) benchmark::DoNotOptimize(eval_expansion_b(yz, Rational(100), x, 5));
}
BENCHMARK(BM_EvalExpansionBReal);

static void BM_OracleEval(benchmark::State& state) {
  const JacobiParams p{static_cast<int>(state.range(0)), Rational(1, 3), Rational(100)};
  for (auto _ : state) benchmark::DoNotOptimize(oracle_eval(p, Rational(49, 50)));
}
BENCHMARK(BM_OracleEval)->Arg(10)->Arg(50);

static void BM_LaguerreZeros(benchmark::State& state) {
  const LaguerreParams p{static_cast<int>(state.range(0)), Rational(1, 3)};
  for (auto _ : state) benchmark::DoNotOptimize(laguerre_zeros(p, 32));
}
BENCHMARK(BM_LaguerreZeros)->Arg(5)->Arg(25)->Arg(50)->Unit(benchmark::kMillisecond);

static void BM_OracleZeros(benchmark::State& state) {
  const JacobiParams p{static_cast<int>(state.range(0)), Rational(1, 3), Rational(100)};
  for (auto _ : state) benchmark::DoNotOptimize(oracle_zeros(p, 32));
}
BENCHMARK(BM_OracleZeros)->Arg(5)->Arg(25)->Unit(benchmark::kMillisecond);

static void BM_ZeroExpansionSetup(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(ZeroExpansion(static_cast<int>(state.range(0)), Rational(1, 3), ZeroMethod::delta, 5));
  }
}
BENCHMARK(BM_ZeroExpansionSetup)->Arg(5)->Arg(25)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
