#include <benchmark/benchmark.h>

#include "grlie/alexander.hpp"
#include "grlie/cohomology.hpp"
#include "grlie/groebner.hpp"
#include "grlie/lie.hpp"
#include "grlie/resonance.hpp"

using namespace grlie;

static void BM_HallBasis(benchmark::State& state) {
  int n = (int)state.range(0), K = (int)state.range(1);
  for (auto _ : state) {
    HallBasis H(n, K);
    benchmark::DoNotOptimize(H.elems().size());
  }
}
BENCHMARK(BM_HallBasis)->Args({3, 8})->Args({6, 5});

static void BM_GradedDims(benchmark::State& state) {
  auto L = holonomy_presentation(algebra_family("beer_vP_plus", 4));
  int K = (int)state.range(0);
  for (auto _ : state) {
    auto d = graded_dims(L, K);
    benchmark::DoNotOptimize(d.dims.back());
  }
}
BENCHMARK(BM_GradedDims)->Arg(4)->Arg(5);

static void BM_GrHilbert(benchmark::State& state) {
  auto m = alexander_presentation(vP_plus(4));
  int D = (int)state.range(0);
  for (auto _ : state) {
    auto dims = gr_hilbert(m, D);
    benchmark::DoNotOptimize(dims.back());
  }
}
BENCHMARK(BM_GrHilbert)->Arg(3)->Arg(5);

static void BM_GradedHilbert(benchmark::State& state) {
  auto lin = linearized_presentation(alexander_presentation(vP_plus(5)));
  int D = (int)state.range(0);
  for (auto _ : state) {
    auto dims = graded_hilbert(lin, D);
    benchmark::DoNotOptimize(dims.back());
  }
}
BENCHMARK(BM_GradedHilbert)->Arg(1)->Arg(2);

static void BM_ResonanceIdeal(benchmark::State& state) {
  auto a = algebra_family("beer_vP_plus", 4);
  int d = (int)state.range(0);
  for (auto _ : state) {
    auto I = resonance_ideal(a, d);
    benchmark::DoNotOptimize(I.gens.size());
  }
}
BENCHMARK(BM_ResonanceIdeal)->Arg(1)->Arg(2);

static void BM_GroebnerMinors(benchmark::State& state) {
  auto I = resonance_ideal(algebra_family("beer_vP_plus", 4), 2);
  for (auto _ : state) {
    Ideal fresh(I.nvars, I.gens);
    benchmark::DoNotOptimize(fresh.groebner().size());
  }
}
BENCHMARK(BM_GroebnerMinors);

static void BM_Mildness(benchmark::State& state) {
  auto g = vP_plus(3);
  int K = (int)state.range(0);
  for (auto _ : state) {
    auto r = mildness_check(g, K);
    benchmark::DoNotOptimize(r.mild);
  }
}
BENCHMARK(BM_Mildness)->Arg(4)->Arg(5);

BENCHMARK_MAIN();
