#include <benchmark/benchmark.h>

#include "expertise/formula.h"
#include "expertise/model.h"
#include "expertise/semantics.h"
#include "expertise/validity.h"

namespace {

using namespace expertise;

// n states in blocks of three, p true on even states.
ExpertiseModel Chunked(std::size_t n) {
  std::vector<std::size_t> labels(n);
  for (std::size_t x = 0; x < n; ++x) labels[x] = x / 3;
  StateSet p(n);
  for (std::size_t x = 0; x < n; x += 2) p.insert(x);
  return ExpertiseModel(StateSpace::Numbered(n), Partition::FromLabels(labels), {{"p", p}});
}

void BM_Extension(benchmark::State& state) {
  const ExpertiseModel m = Chunked(static_cast<std::size_t>(state.range(0)));
  const Formula f = Parse("E (S p -> p) & S ~S (p & ~E p) -> A (S p | ~p)");
  for (auto _ : state) benchmark::DoNotOptimize(ComputeExtension(m, f).states.count());
}
BENCHMARK(BM_Extension)->Arg(16)->Arg(256)->Arg(4096);

void BM_ExtensionLiteral(benchmark::State& state) {
  const ExpertiseModel m = Chunked(static_cast<std::size_t>(state.range(0)));
  const Formula f = Parse("S (p & ~S ~p)");
  for (auto _ : state)
    benchmark::DoNotOptimize(ComputeExtension(m, f, SoundnessMode::kLiteral).states.count());
}
BENCHMARK(BM_ExtensionLiteral)->Arg(12)->Arg(24)->Arg(48);

void BM_Enumerate(benchmark::State& state) {
  const EnumerationSpec spec{static_cast<std::size_t>(state.range(0)), {"p", "q"}, std::nullopt};
  for (auto _ : state) {
    ModelEnumerator e(spec);
    std::size_t n = 0;
    while (e.Next()) ++n;
    benchmark::DoNotOptimize(n);
  }
}
BENCHMARK(BM_Enumerate)->DenseRange(2, 4);

void BM_ValidSearch(benchmark::State& state) {
  const Formula f = Parse("S (p & ~q) & ~S ~q -> S (p & ~q & ~~q) | ~S q");
  const EnumerationSpec spec{static_cast<std::size_t>(state.range(0)), {"p", "q"}, std::nullopt};
  for (auto _ : state) benchmark::DoNotOptimize(FindCountermodel(f, spec).refuted());
}
BENCHMARK(BM_ValidSearch)->DenseRange(2, 4);

void BM_FootnoteSearch(benchmark::State& state) {
  const Formula f = Parse("E(p -> q) -> (E p -> E q)");
  const EnumerationSpec spec{3, {"p", "q"}, std::nullopt};
  for (auto _ : state) benchmark::DoNotOptimize(FindCountermodel(f, spec).models_checked());
}
BENCHMARK(BM_FootnoteSearch);

}  // namespace

BENCHMARK_MAIN();
