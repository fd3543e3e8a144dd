#include <benchmark/benchmark.h>

#include "cuspidal/analysis.hpp"
#include "cuspidal/classgroup.hpp"
#include "cuspidal/criterion.hpp"

using namespace cuspidal;

static void BM_OrderVector(benchmark::State& state) {
  long N = state.range(0);
  ExponentVector f;
  f.N = N;
  f.set(1, 1, Rat(1));
  for (auto _ : state) {
    Divisor D = divisor_of(N, f);
    benchmark::DoNotOptimize(D);
  }
}
BENCHMARK(BM_OrderVector)->Arg(45)->Arg(150)->Arg(225);

static void BM_UnitLatticeBasis(benchmark::State& state) {
  long N = state.range(0);
  for (auto _ : state) {
    auto basis = unit_lattice_basis(N);
    benchmark::DoNotOptimize(basis);
  }
}
BENCHMARK(BM_UnitLatticeBasis)->Arg(45)->Arg(99)->Arg(225);

static void BM_PsiMatrix(benchmark::State& state) {
  long N = state.range(0);
  for (auto _ : state) {
    auto op = psi_full_op(N, 1, state.range(1));
    benchmark::DoNotOptimize(op);
  }
}
BENCHMARK(BM_PsiMatrix)->Args({81, 2})->Args({225, 0})->Args({441, 0});

static void BM_ConjectureA(benchmark::State& state) {
  long N = state.range(0);
  for (auto _ : state) {
    auto cert = verify_conjecture_A(N);
    benchmark::DoNotOptimize(cert);
  }
}
BENCHMARK(BM_ConjectureA)->Arg(45)->Arg(121)->Arg(225);

static void BM_ClassGroups(benchmark::State& state) {
  long N = state.range(0);
  for (auto _ : state) {
    auto g = compute_groups(N);
    benchmark::DoNotOptimize(g);
  }
}
BENCHMARK(BM_ClassGroups)->Arg(27)->Arg(99)->Arg(225);

BENCHMARK_MAIN();
