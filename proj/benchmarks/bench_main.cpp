#include <benchmark/benchmark.h>

#include "cyclotome/cyclo_ctx.hpp"
#include "cyclotome/cyclo_eval.hpp"
#include "cyclotome/line.hpp"
#include "cyclotome/oracle.hpp"

using namespace cyclotome;

namespace {

// q, n pairs from small to q^n = 2^16.
const std::vector<std::pair<std::uint64_t, unsigned>> kFields = {{3, 5}, {5, 4}, {3, 6}, {2, 12}, {16, 4}, {2, 16}};

CycloPtr field_arg(const benchmark::State& state) {
  const auto& [q, n] = kFields[static_cast<std::size_t>(state.range(0))];
  return CycloCtx::create(q, n);
}

void label(benchmark::State& state) {
  const auto& [q, n] = kFields[static_cast<std::size_t>(state.range(0))];
  state.SetLabel("q=" + std::to_string(q) + " n=" + std::to_string(n));
}

// Every S_k on a fresh context, so the memo cache starts empty.
void BM_AllLines(benchmark::State& state) {
  for (auto _ : state) {
    state.PauseTiming();
    const auto ctx = field_arg(state);
    state.ResumeTiming();
    for (Residue k = 1; k < ctx->e(); ++k) benchmark::DoNotOptimize(line_set(*ctx, k));
  }
  label(state);
}
BENCHMARK(BM_AllLines)->DenseRange(0, 5)->Unit(benchmark::kMillisecond);

void BM_FullTable(benchmark::State& state) {
  for (auto _ : state) {
    state.PauseTiming();
    const auto ctx = field_arg(state);
    state.ResumeTiming();
    benchmark::DoNotOptimize(cyclo_table(*ctx, ctx->e()));
  }
  label(state);
}
BENCHMARK(BM_FullTable)->DenseRange(0, 5)->Unit(benchmark::kMillisecond);

void BM_OracleTable(benchmark::State& state) {
  const auto ctx = field_arg(state);
  for (auto _ : state) {
    const Oracle o(*ctx);
    benchmark::DoNotOptimize(o.table(ctx->e()));
  }
  label(state);
}
BENCHMARK(BM_OracleTable)->DenseRange(0, 5)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
