#include <benchmark/benchmark.h>

#include "lehmer5/integral_basis.hpp"
#include "lehmer5/nib_enum.hpp"

using namespace lehmer5;

namespace {

void BM_BuildFieldContext(benchmark::State& state) {
  Int n(state.range(0));
  for (auto _ : state) {
    FieldContext ctx{n};
    benchmark::DoNotOptimize(&ctx);
  }
}
BENCHMARK(BM_BuildFieldContext)->Arg(14)->Arg(2888)->Arg(40846);

void BM_FactorDelta(benchmark::State& state) {
  Int D = compute_Delta(Int(state.range(0)));
  for (auto _ : state) {
    auto f = factor_integer(D);
    benchmark::DoNotOptimize(f);
  }
}
BENCHMARK(BM_FactorDelta)->Arg(14)->Arg(952)->Arg(2888);

void BM_SplitPrime(benchmark::State& state) {
  Int p(state.range(0));
  for (auto _ : state) {
    CycInt pi = split_prime(p);
    benchmark::DoNotOptimize(pi);
  }
}
BENCHMARK(BM_SplitPrime)->Arg(71)->Arg(2141)->Arg(15545731);

void BM_IntegralBasis(benchmark::State& state) {
  Int n(state.range(0));
  FieldContext ctx{n};
  FieldInvariants inv = compute_invariants(n);
  for (auto _ : state) {
    IntegralBasis basis = build_integral_basis(ctx, inv);
    benchmark::DoNotOptimize(basis);
  }
}
BENCHMARK(BM_IntegralBasis)->Arg(14)->Arg(44)->Arg(7721);

void BM_NibGenerator(benchmark::State& state) {
  Int n(state.range(0));
  FieldContext ctx{n};
  FieldInvariants inv = compute_invariants(n);
  for (auto _ : state) {
    NibGenerator gen = build_nib_generator(ctx, inv);
    benchmark::DoNotOptimize(gen);
  }
}
BENCHMARK(BM_NibGenerator)->Arg(14)->Arg(44)->Arg(2888);

void BM_CertifyNib(benchmark::State& state) {
  Int n(state.range(0));
  FieldContext ctx{n};
  FieldInvariants inv = compute_invariants(n);
  NibGenerator gen = build_nib_generator(ctx, inv);
  for (auto _ : state) benchmark::DoNotOptimize(certify_nib(ctx, gen.alpha, inv.conductor));
}
BENCHMARK(BM_CertifyNib)->Arg(14)->Arg(2888);

void BM_Enumerate(benchmark::State& state) {
  Int n(14);
  FieldContext ctx{n};
  FieldInvariants inv = compute_invariants(n);
  NibGenerator gen = build_nib_generator(ctx, inv);
  long half = state.range(0);
  for (auto _ : state) {
    auto all = enumerate(ctx, inv, gen, -half, half);
    benchmark::DoNotOptimize(all);
  }
}
BENCHMARK(BM_Enumerate)->Arg(2)->Arg(5);

void BM_OrbitMatch(benchmark::State& state) {
  Int n(14);
  FieldContext ctx{n};
  FieldInvariants inv = compute_invariants(n);
  NibGenerator gen = build_nib_generator(ctx, inv);
  FieldElement target = act_unit(ctx, {-1, 3, state.range(0)}, gen.alpha);
  for (auto _ : state)
    benchmark::DoNotOptimize(orbit_match(ctx, gen.alpha, target, 10));
}
BENCHMARK(BM_OrbitMatch)->Arg(3)->Arg(9);

}  // namespace

BENCHMARK_MAIN();
