// Serial reference paths against the OpenMP ones. Arg(0) is serial, Arg(n) uses n threads.

#include <benchmark/benchmark.h>

#include <thread>

#include "mvpoly/primes.hpp"

using namespace mvpoly;

static void BM_EnumerateMV(benchmark::State& st) {
  auto rs = make_root_system("A", 3);
  Exec ex{static_cast<int>(st.range(0))};
  Coweight mu{{6, 8, 6}};
  std::size_t n = 0;
  for (auto _ : st) {
    auto v = enumerate_mv(rs, mu, ex);
    n = v.size();
    benchmark::DoNotOptimize(v.data());
  }
  st.counters["polytopes"] = static_cast<double>(n);
}

static void BM_PrimeCatalog(benchmark::State& st) {
  auto rs = make_root_system("A", 3);
  CatalogOptions opts;
  opts.exec.threads = static_cast<int>(st.range(0));
  for (auto _ : st) {
    PrimeCatalog cat = prime_catalog(rs, opts);
    benchmark::DoNotOptimize(cat.primes.data());
  }
}

static void thread_args(benchmark::internal::Benchmark* b) {
  b->Arg(0);
  int hw = static_cast<int>(std::max(2u, std::thread::hardware_concurrency()));
  for (int t = 2; t <= hw; t *= 2) b->Arg(t);
}

BENCHMARK(BM_EnumerateMV)->Apply(thread_args)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PrimeCatalog)->Apply(thread_args)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
