// Event queue throughput: how fast the dispatcher can push and pop work.
// The simulator's hot loop is schedule-one/run-one chains (every packet hop
// is an event), so both the chained pattern and bulk drain matter.

#include <benchmark/benchmark.h>

#include <cstdint>
#include <functional>
#include <random>

#include "flowsentry/simkit/event_queue.hpp"

namespace {

using flowsentry::SimTime;
using flowsentry::simkit::EventQueue;

// A self-rescheduling generator, the shape every traffic source has.
void BM_ChainedSchedule(benchmark::State& state) {
  for (auto _ : state) {
    EventQueue queue;
    std::uint64_t fired = 0;
    const std::uint64_t hops = static_cast<std::uint64_t>(state.range(0));
    std::function<void()> hop = [&] {
      if (++fired < hops) queue.schedule(queue.now() + 10, hop);
    };
    queue.schedule(0, hop);
    queue.run_until_empty(hops + 1);
    benchmark::DoNotOptimize(fired);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_ChainedSchedule)->Arg(1'000)->Arg(100'000);

// Preloaded heap with randomized times: worst case for heap discipline.
void BM_BulkDrain(benchmark::State& state) {
  const std::int64_t n = state.range(0);
  for (auto _ : state) {
    state.PauseTiming();
    EventQueue queue;
    std::mt19937_64 rng(42);
    std::uint64_t fired = 0;
    for (std::int64_t i = 0; i < n; ++i) {
      queue.schedule(static_cast<SimTime>(rng() % 1'000'000), [&fired] { ++fired; });
    }
    state.ResumeTiming();
    queue.run_until_empty(static_cast<std::uint64_t>(n));
    benchmark::DoNotOptimize(fired);
  }
  state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_BulkDrain)->Arg(10'000)->Arg(1'000'000);

// Many events on the same instant: stresses the insertion-order tiebreak.
void BM_SameInstantBurst(benchmark::State& state) {
  const std::int64_t n = state.range(0);
  for (auto _ : state) {
    state.PauseTiming();
    EventQueue queue;
    std::uint64_t fired = 0;
    for (std::int64_t i = 0; i < n; ++i) {
      queue.schedule(1'000, [&fired] { ++fired; });
    }
    state.ResumeTiming();
    queue.run_until_empty(static_cast<std::uint64_t>(n));
    benchmark::DoNotOptimize(fired);
  }
  state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_SameInstantBurst)->Arg(100'000);

}  // namespace

BENCHMARK_MAIN();
