#include <benchmark/benchmark.h>

#include "hopfarb/embedding.hpp"
#include "hopfarb/enumeration.hpp"
#include "hopfarb/invariants.hpp"
#include "hopfarb/minor_lab.hpp"

using namespace hopfarb;

static void BM_Embeds(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const PlaneTree sub = random_tree(n / 4 + 1, 1);
  const PlaneTree super = random_tree(n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(embeds(sub, super));
}
BENCHMARK(BM_Embeds)->RangeMultiplier(4)->Range(16, 1024);

static void BM_EmbedWitness(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const PlaneTree super = random_tree(n, 3);
  const PlaneTree sub = parse(super.label(0) == Sign::plus ? "+" : "-");
  for (auto _ : state) benchmark::DoNotOptimize(embed_witness(sub, super));
}
BENCHMARK(BM_EmbedWitness)->Arg(64)->Arg(256);

static void BM_Fingerprint(benchmark::State& state) {
  const PlaneTree t = random_tree(static_cast<std::size_t>(state.range(0)), 4);
  for (auto _ : state) benchmark::DoNotOptimize(fingerprint(t));
}
BENCHMARK(BM_Fingerprint)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

static void BM_Enumerate(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate(n));
}
BENCHMARK(BM_Enumerate)->DenseRange(4, 7);

static void BM_Poset(benchmark::State& state) {
  const Universe u(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(poset(u));
}
BENCHMARK(BM_Poset)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
