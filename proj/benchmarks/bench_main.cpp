#include <benchmark/benchmark.h>

#include "cjones/bracket.hpp"
#include "cjones/engine.hpp"
#include "cjones/walks.hpp"

namespace {

const cjones::BraidWord kNineCrossing =
    cjones::parse_braid("[1,-2,3,1,-2,3,4,-3,2,-3,-2,-4]");
const cjones::BraidWord kFigureEight = cjones::parse_braid("[1,-2,1,-2]");
const cjones::BraidWord kTrefoil = cjones::parse_braid("[1,1,1]");

void BM_EnumerateWalks(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(cjones::enumerate_simple_walks(kNineCrossing));
}
BENCHMARK(BM_EnumerateWalks)->Unit(benchmark::kMillisecond);

void BM_BracketOracle(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(cjones::jones_via_bracket(kFigureEight));
}
BENCHMARK(BM_BracketOracle)->Unit(benchmark::kMicrosecond);

void BM_ColoredJones(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(cjones::colored_jones(kTrefoil, N));
}
BENCHMARK(BM_ColoredJones)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
