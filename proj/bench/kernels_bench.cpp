// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "coxeter/closure.hpp"
#include "coxeter/corpus.hpp"
#include "coxeter/verify.hpp"

using namespace coxeter;

namespace {

Execution mode(const benchmark::State& state) {
  return state.range(0) == 0 ? Execution::Serial : Execution::Parallel;
}

const CoxeterSystem& h3() {
  static auto sys = CoxeterSystem::build(corpus_entry("H3").matrix);
  return *sys;
}

void BM_CandidateScan(benchmark::State& state) {
  const auto& sys = h3();
  static const auto ball = element_ball(sys, 15);
  static const auto candidates = candidates_of_rank(ball, 2, 15);
  const std::vector<GroupElement> a{sys.parse_word("a b a"), sys.parse_word("c b c")};
  for (auto _ : state) benchmark::DoNotOptimize(scan_candidates(candidates, a, mode(state)));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(candidates.size()));
}

void BM_AllParabolics(benchmark::State& state) {
  static const auto table = oracle::FiniteGroupTable::enumerate(h3(), 1000);
  for (auto _ : state) benchmark::DoNotOptimize(oracle::all_parabolics(table, mode(state)));
}

void BM_Closure(benchmark::State& state) {
  const auto& sys = h3();
  const ClosureQuery q{{sys.parse_word("a b c"), sys.parse_word("b")}, std::nullopt};
  for (auto _ : state) benchmark::DoNotOptimize(pc(sys, q, mode(state)));
}

void BM_IntersectionSuite(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(verify::run_suite("intersection", mode(state)));
}

}  // namespace

// Argument 0 is the serial reference, 1 the parallel kernel.
BENCHMARK(BM_CandidateScan)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AllParabolics)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Closure)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_IntersectionSuite)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->Iterations(3);

BENCHMARK_MAIN();
