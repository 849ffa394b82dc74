// Detector observe() cost under the two regimes a run produces: benign
// trickle (window deques stay short) and sustained flood (every packet
// fires, the throttle suppresses, and the window deque is trimmed hard).

#include <benchmark/benchmark.h>

#include <cstdint>
#include <string>
#include <vector>

#include "flowsentry/ids/engine.hpp"
#include "flowsentry/ids/rules.hpp"
#include "flowsentry/netmodel/addr.hpp"
#include "flowsentry/netmodel/packet.hpp"

namespace {

using flowsentry::SimTime;
namespace ids = flowsentry::ids;
namespace netmodel = flowsentry::netmodel;

netmodel::Packet echo(std::uint8_t host, std::uint32_t payload) {
  netmodel::Packet pkt;
  pkt.proto = netmodel::Protocol::IcmpEchoRequest;
  pkt.src_mac = netmodel::MacAddress{{0, 0, 0, 0, 0, host}};
  pkt.dst_mac = netmodel::MacAddress{{0, 0, 0, 0, 0, 0xfe}};
  pkt.src_ip = *netmodel::Ipv4Addr::parse("10.0.0." + std::to_string(host));
  pkt.dst_ip = *netmodel::Ipv4Addr::parse("192.168.56.104");
  pkt.payload_bytes = payload;
  return pkt;
}

std::vector<ids::DetectionRule> stock_rules() {
  return ids::parse_ruleset(ids::default_ruleset()).rules;
}

// One ping per second from three hosts: the steady state of a quiet network.
void BM_ObserveBenign(benchmark::State& state) {
  ids::DetectionEngine engine(stock_rules());
  const netmodel::Packet pkts[3] = {echo(1, 56), echo(2, 56), echo(3, 56)};
  SimTime now = 0;
  std::size_t i = 0;
  for (auto _ : state) {
    now += 333'333;
    benchmark::DoNotOptimize(engine.observe(pkts[i++ % 3], now));
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_ObserveBenign);

// A single source at a fixed flood rate; the rate argument sets how many
// window entries each observe() keeps live.
void BM_ObserveFlood(benchmark::State& state) {
  ids::DetectionEngine engine(stock_rules());
  const netmodel::Packet pkt = echo(1, 0);
  const SimTime gap = 1'000'000 / state.range(0);
  SimTime now = 0;
  for (auto _ : state) {
    now += gap;
    benchmark::DoNotOptimize(engine.observe(pkt, now));
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_ObserveFlood)->Arg(1'000)->Arg(21'000)->Arg(42'000);

// Oversized payloads: the stateless size rule fires on every packet, so this
// measures the alert construction + throttle path.
void BM_ObserveOversized(benchmark::State& state) {
  ids::DetectionEngine engine(stock_rules());
  const netmodel::Packet pkt = echo(1, 900);
  SimTime now = 0;
  for (auto _ : state) {
    now += 24;
    benchmark::DoNotOptimize(engine.observe(pkt, now));
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_ObserveOversized);

// Ruleset parsing, for completeness: it runs once per process start.
void BM_ParseRuleset(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(ids::parse_ruleset(ids::default_ruleset()));
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_ParseRuleset);

}  // namespace

BENCHMARK_MAIN();
