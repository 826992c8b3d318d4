#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "wh2dl/eval/harness.hpp"

namespace {

// The extended corpus repeated `copies` times, ids made unique.
std::vector<wh2dl::eval::CorpusEntry> corpus(int copies) {
  auto base = wh2dl::eval::load_corpus(std::string(WH2DL_CORPUS_DIR) + "/extended.jsonl");
  std::vector<wh2dl::eval::CorpusEntry> out;
  for (int c = 0; c < copies; ++c)
    for (auto e : base) {
      e.id += "#" + std::to_string(c);
      out.push_back(std::move(e));
    }
  return out;
}

void BM_EvaluateSerial(benchmark::State& state) {
  auto entries = corpus(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(wh2dl::eval::evaluate(entries));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(entries.size()));
}

void BM_EvaluateParallel(benchmark::State& state) {
  auto entries = corpus(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(wh2dl::eval::evaluate_parallel(entries));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(entries.size()));
}

}  // namespace

BENCHMARK(BM_EvaluateSerial)->Arg(1)->Arg(16)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_EvaluateParallel)->Arg(1)->Arg(16)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
