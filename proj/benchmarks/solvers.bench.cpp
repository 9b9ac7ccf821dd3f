#include <benchmark/benchmark.h>

#include <braidkit/braidkit.hpp>

#include <cstdint>
#include <vector>

using namespace braidkit;

namespace {

constexpr std::uint64_t kSeed = 2024;

std::vector<BraidWord> words_for(const benchmark::State& state, int n = 4) {
  std::vector<BraidWord> out;
  for (std::uint64_t k = 0; k < 16; ++k) {
    out.push_back(random_word(n, static_cast<std::size_t>(state.range(0)), kSeed + k));
  }
  return out;
}

void run(benchmark::State& state, Method m) {
  const auto words = words_for(state);
  std::size_t steps = 0;
  for (auto _ : state) {
    for (const auto& w : words) steps += run_method(w, m).steps;
  }
  state.counters["steps/word"] = benchmark::Counter(
      static_cast<double>(steps) / static_cast<double>(words.size()),
      benchmark::Counter::kAvgIterations);
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(words.size()));
}

}  // namespace

static void BM_Greedy(benchmark::State& state) { run(state, Method::greedy); }
static void BM_Symmetric(benchmark::State& state) { run(state, Method::symmetric); }
static void BM_RedressDouble(benchmark::State& state) { run(state, Method::redress); }
static void BM_RedressRightLeft(benchmark::State& state) { run(state, Method::redress_left); }
static void BM_Handle(benchmark::State& state) { run(state, Method::handle); }
static void BM_Dynnikov(benchmark::State& state) { run(state, Method::dynnikov); }

BENCHMARK(BM_Greedy)->RangeMultiplier(2)->Range(32, 512);
BENCHMARK(BM_Symmetric)->RangeMultiplier(2)->Range(32, 512);
BENCHMARK(BM_RedressDouble)->RangeMultiplier(2)->Range(32, 512);
BENCHMARK(BM_RedressRightLeft)->RangeMultiplier(2)->Range(32, 512);
BENCHMARK(BM_Handle)->RangeMultiplier(2)->Range(32, 512);
BENCHMARK(BM_Dynnikov)->RangeMultiplier(2)->Range(32, 512);

// Tile computation on all pairs of simples, with and without the memo table.
static void BM_CTileAllPairs(benchmark::State& state) {
  const auto simples = all_simples(static_cast<int>(state.range(0)));
  set_tile_cache_enabled(state.range(1) != 0);
  for (auto _ : state) {
    for (const auto& s : simples) {
      for (const auto& t : simples) benchmark::DoNotOptimize(c_tile(s, t));
    }
  }
  set_tile_cache_enabled(true);
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(simples.size() * simples.size()));
}
BENCHMARK(BM_CTileAllPairs)->ArgsProduct({{4, 5}, {0, 1}});

static void BM_NormalizePairAllPairs(benchmark::State& state) {
  const auto simples = all_simples(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    for (const auto& s : simples) {
      for (const auto& t : simples) benchmark::DoNotOptimize(normalize_pair(s, t));
    }
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(simples.size() * simples.size()));
}
BENCHMARK(BM_NormalizePairAllPairs)->Arg(4)->Arg(5);

static void BM_Shorten(benchmark::State& state) {
  const auto words = words_for(state);
  for (auto _ : state) {
    for (const auto& w : words) benchmark::DoNotOptimize(shorten(w));
  }
}
BENCHMARK(BM_Shorten)->Arg(32)->Arg(64);

BENCHMARK_MAIN();
