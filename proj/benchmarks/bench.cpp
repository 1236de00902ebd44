#include <benchmark/benchmark.h>

#include <random>

#include "braids/boundary.hpp"
#include "braids/braidcplx.hpp"
#include "braids/confspace.hpp"
#include "braids/garside.hpp"
#include "braids/orthoscheme.hpp"
#include "braids/partition.hpp"

namespace {

using namespace braids;

void BM_EnumerateNC(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_nc(n));
}
BENCHMARK(BM_EnumerateNC)->Arg(6)->Arg(8)->Arg(10)->Arg(12);

void BM_NormalForm(benchmark::State& state) {
  const int n = 6;
  auto all = enumerate_nc(n);
  std::mt19937_64 rng(1234);
  std::vector<DualSimpleWord> words;
  for (int i = 0; i < 64; ++i) {
    DualSimpleWord w{n, {}};
    for (int j = 0; j < static_cast<int>(state.range(0)); ++j)
      w.factors.push_back(all[rng() % all.size()]);
    words.push_back(std::move(w));
  }
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(normal_form(words[i++ % words.size()]));
  }
}
BENCHMARK(BM_NormalForm)->Arg(2)->Arg(6)->Arg(12);

void BM_Decompose(benchmark::State& state) {
  const int n = 7;
  auto all = enumerate_nc(n);
  BoundarySet b(n, {2, 4, 5, 7});
  std::mt19937_64 rng(99);
  BoundaryWord w{n, 0, {}};
  BoundarySet cur = b;
  for (int i = 0; i < 5; ++i) {
    std::vector<NoncrossingPartition> options;
    for (const auto& pi : all)
      if (is_boundary_partition(pi, cur)) options.push_back(pi);
    w.factors.push_back(options[rng() % options.size()]);
    cur = boundary_step(w.factors.back(), cur)->image;
  }
  for (auto _ : state) benchmark::DoNotOptimize(decompose(w, b));
}
BENCHMARK(BM_Decompose);

void BM_BuildBall(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  int radius = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(build_ball(n, radius));
}
BENCHMARK(BM_BuildBall)->Args({3, 3})->Args({4, 2})->Args({5, 1});

void BM_ConfCycle(benchmark::State& state) {
  int k = static_cast<int>(state.range(0));
  int n = static_cast<int>(state.range(1));
  for (auto _ : state)
    benchmark::DoNotOptimize(build_conf_cycle(k, n, false));
}
BENCHMARK(BM_ConfCycle)->Args({2, 6})->Args({3, 6})->Args({4, 6});

void BM_SubdivideCube(benchmark::State& state) {
  int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(subdivide_cube(k));
}
BENCHMARK(BM_SubdivideCube)->Arg(3)->Arg(5)->Arg(6);

void BM_ProductCheck(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(product_check(5, BoundarySet(5, {2, 4, 5}), 1));
}
BENCHMARK(BM_ProductCheck);

}  // namespace

BENCHMARK_MAIN();
