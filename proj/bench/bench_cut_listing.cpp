// Near-minimum cut listing: serial reference vs OpenMP gray-code walk vs
// randomized contraction, on random dense capacities with small denominators.
#include <random>

#include <benchmark/benchmark.h>

#include "kconn/cut_listing.hpp"
#include "kconn/separation.hpp"

namespace {

kconn::CapacitatedInstance random_instance(int n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(0, 6), den(1, 3);
  kconn::CapacitatedInstance inst(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) inst.add(u, v, kconn::ratio(num(rng), den(rng)));
  return inst;
}

struct Case {
  kconn::CapacitatedInstance inst;
  kconn::Rational min_cut;
  kconn::Rational bound;
};

Case make_case(int n) {
  auto inst = random_instance(n, 17u + static_cast<unsigned>(n));
  auto lambda = kconn::global_min_cut(inst).value;
  kconn::Rational bound = lambda * kconn::Rational(3, 2);
  return {std::move(inst), lambda, bound};
}

void BM_Serial(benchmark::State& state) {
  Case c = make_case(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(kconn::kernels::list_cuts_below_serial(c.inst, c.bound));
}

void BM_Parallel(benchmark::State& state) {
  Case c = make_case(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(kconn::kernels::list_cuts_below_parallel(c.inst, c.bound));
}

void BM_Contraction(benchmark::State& state) {
  Case c = make_case(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(
        kconn::kernels::list_cuts_below_contraction(c.inst, c.bound, c.min_cut, 7, true));
}

}  // namespace

BENCHMARK(BM_Serial)->DenseRange(8, 16, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Parallel)->DenseRange(8, 16, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Contraction)->DenseRange(8, 16, 4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
