#include <benchmark/benchmark.h>

#include "fml/frames.hpp"
#include "fml/random.hpp"

using namespace fml;

namespace {

std::vector<ModalFrame> sample_frames(int n) {
  Rng rng(17);
  std::vector<ModalFrame> out;
  for (int i = 0; i < 8; ++i) out.push_back(random_frame(rng, n, 0.35));
  return out;
}

void BM_FixpointsSerial(benchmark::State& state) {
  const auto frames = sample_frames(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    for (const auto& f : frames) benchmark::DoNotOptimize(fixpoints_by_subsets_serial(f));
  }
}

void BM_FixpointsParallel(benchmark::State& state) {
  const auto frames = sample_frames(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    for (const auto& f : frames) benchmark::DoNotOptimize(fixpoints_by_subsets(f));
  }
}

// ~~p |- p has no countermodel among orthoframes, so the search is exhaustive.
void BM_SearchSerial(benchmark::State& state) {
  const Formula p = Formula::atom("p");
  const SearchOptions opt{static_cast<int>(state.range(0)), {}, false};
  for (auto _ : state) {
    benchmark::DoNotOptimize(countermodel_search_serial(Formula::neg(Formula::neg(p)), p, FrameClass::Ortho, opt));
  }
}

void BM_SearchParallel(benchmark::State& state) {
  const Formula p = Formula::atom("p");
  const SearchOptions opt{static_cast<int>(state.range(0)), {}, true};
  for (auto _ : state) {
    benchmark::DoNotOptimize(countermodel_search(Formula::neg(Formula::neg(p)), p, FrameClass::Ortho, opt));
  }
}

}  // namespace

BENCHMARK(BM_FixpointsSerial)->DenseRange(8, 14, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FixpointsParallel)->DenseRange(8, 14, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SearchSerial)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SearchParallel)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
