#include <benchmark/benchmark.h>

#include "grw/oracle.hpp"
#include "grw/rng.hpp"
#include "grw/unitstruct.hpp"

namespace {

using namespace grw;

AlgElem random_elem(const FieldCtx& ctx, const Group& grp, std::uint64_t seed) {
  CounterRng rng{seed};
  AlgElem a = alg_zero(ctx, grp);
  for (std::size_t w = 0; w < a.coeffs.size(); ++w) {
    a.coeffs[w] = static_cast<std::uint32_t>(rng.below(w, ctx.p()));
  }
  return a;
}

void BM_FieldMul(benchmark::State& state) {
  auto ctx = FieldCtx::make(3, static_cast<unsigned>(state.range(0)));
  const FieldElem a = ctx->element(ctx->q() / 2 + 1);
  const FieldElem b = ctx->element(ctx->q() / 3 + 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ctx->mul(a, b));
  }
}
BENCHMARK(BM_FieldMul)->Arg(1)->Arg(2)->Arg(4);

void BM_FieldInv(benchmark::State& state) {
  auto ctx = FieldCtx::make(3, static_cast<unsigned>(state.range(0)));
  const FieldElem a = ctx->element(ctx->q() / 2 + 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ctx->inv(a));
  }
}
BENCHMARK(BM_FieldInv)->Arg(1)->Arg(4);

void BM_AlgebraMul(benchmark::State& state) {
  auto ctx = FieldCtx::make(3, 1);
  auto grp = Group::make(GroupSpec{GroupFamily::q12, static_cast<std::uint32_t>(state.range(0))});
  const AlgElem u = random_elem(*ctx, *grp, 1);
  const AlgElem v = random_elem(*ctx, *grp, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(alg_mul(u, v));
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_AlgebraMul)->Arg(1)->Arg(4)->Arg(16);

void BM_TryInverse(benchmark::State& state) {
  auto ctx = FieldCtx::make(5, 1);
  auto grp = Group::make(GroupSpec{GroupFamily::d12, static_cast<std::uint32_t>(state.range(0))});
  const AlgElem u = alg_add(alg_one(*ctx, *grp), random_elem(*ctx, *grp, 7));
  for (auto _ : state) {
    benchmark::DoNotOptimize(try_inverse(u));
  }
}
BENCHMARK(BM_TryInverse)->Arg(1)->Arg(4);

void BM_ExhaustiveCensus(benchmark::State& state) {
  CensusOptions opts;
  opts.threads = 1;
  for (auto _ : state) {
    const UnitCensus c = count_units(2, 1, GroupFamily::q12, 1, opts);
    benchmark::DoNotOptimize(c.hits);
  }
  state.SetItemsProcessed(state.iterations() * 4096);
}
BENCHMARK(BM_ExhaustiveCensus);

void BM_SampledCensus(benchmark::State& state) {
  CensusOptions opts;
  opts.exhaustive = false;
  opts.samples = 10000;
  opts.threads = 1;
  for (auto _ : state) {
    const UnitCensus c = count_units(5, 1, GroupFamily::d12, 1, opts);
    benchmark::DoNotOptimize(c.hits);
  }
  state.SetItemsProcessed(state.iterations() * 10000);
}
BENCHMARK(BM_SampledCensus);

void BM_StructureEval(benchmark::State& state) {
  for (auto _ : state) {
    const UnitStructure us = unit_structure_q12(7, 2, 45);
    benchmark::DoNotOptimize(predicted_unit_count(us));
  }
}
BENCHMARK(BM_StructureEval);

}  // namespace

BENCHMARK_MAIN();
