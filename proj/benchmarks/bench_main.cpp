#include <benchmark/benchmark.h>

#include <random>

#include "placticc/ctree.hpp"
#include "placticc/insertion.hpp"
#include "placticc/rewriting.hpp"

using namespace placticc;

static void BM_InsertPair(benchmark::State& state) {
  const int n = int(state.range(0));
  const auto cols = admissible_columns(n, false);
  std::size_t i = 0;
  for (auto _ : state) {
    const Column& a = cols[i % cols.size()];
    const Column& b = cols[(i * 7 + 3) % cols.size()];
    benchmark::DoNotOptimize(insert_pair(a, b, n));
    ++i;
  }
}
BENCHMARK(BM_InsertPair)->Arg(2)->Arg(3)->Arg(4);

static void BM_Polygraph(benchmark::State& state) {
  const int n = int(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(Polygraph(n, Variant::ACol).size());
}
BENCHMARK(BM_Polygraph)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_Strategy(benchmark::State& state) {
  const int n = 3;
  const Polygraph p(n, Variant::ACol);
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<std::size_t> pick(0, p.size() - 1);
  std::vector<DecoratedWord> words;
  for (int k = 0; k < 256; ++k) {
    DecoratedWord w;
    for (int j = 0; j < state.range(0); ++j) w.push_back(p.column(int(pick(rng))));
    words.push_back(w);
  }
  std::size_t i = 0;
  for (auto _ : state)
    benchmark::DoNotOptimize(run_strategy(p, words[i++ % words.size()], StrategyKind::Leftmost));
}
BENCHMARK(BM_Strategy)->Arg(3)->Arg(5)->Arg(8);

static void BM_VerifyCoherence(benchmark::State& state) {
  const Polygraph p(int(state.range(0)), Variant::ACol);
  for (auto _ : state) benchmark::DoNotOptimize(verify_coherence(p, 1).total);
}
BENCHMARK(BM_VerifyCoherence)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_EnumerateTrees(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_trees(3, int(state.range(0))).size());
}
BENCHMARK(BM_EnumerateTrees)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
