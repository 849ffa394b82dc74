// Flow-table matching cost as the table grows. Every simulated packet pays
// one lookup, and flood scenarios push hundreds of thousands of packets
// through a table that stays small (tens of rules) — but the scan is linear,
// so the curve here bounds how far the design carries.

#include <benchmark/benchmark.h>

#include <cstdint>
#include <random>
#include <vector>

#include "flowsentry/dataplane/flow_table.hpp"
#include "flowsentry/netmodel/addr.hpp"
#include "flowsentry/netmodel/flow.hpp"
#include "flowsentry/netmodel/packet.hpp"

namespace {

using flowsentry::PortId;
using flowsentry::dataplane::FlowTable;
namespace netmodel = flowsentry::netmodel;

netmodel::MacAddress mac(std::uint8_t tail) {
  return netmodel::MacAddress{{0, 0, 0, 0, 0, tail}};
}

netmodel::Ipv4Addr ip(std::uint32_t tail) {
  return netmodel::Ipv4Addr{(10u << 24) | tail};
}

// A table of learned forwarding pairs plus a few high-priority drops, the
// population a defended run produces.
FlowTable build_table(std::size_t rules) {
  FlowTable table;
  std::mt19937_64 rng(7);
  for (std::size_t i = 0; i < rules; ++i) {
    netmodel::Match match;
    match.in_port = static_cast<PortId>(1 + rng() % 5);
    match.dl_dst = mac(static_cast<std::uint8_t>(rng() % 64));
    if (i % 8 == 0) {
      match.proto = netmodel::ProtoClass::Icmp;
      match.nw_src = ip(static_cast<std::uint32_t>(rng() % 64));
      table.install(100, match, netmodel::DropAction{}, static_cast<std::int64_t>(i));
    } else {
      table.install(1, match, netmodel::OutputAction{static_cast<PortId>(1 + rng() % 5)},
                    static_cast<std::int64_t>(i));
    }
  }
  return table;
}

std::vector<netmodel::Packet> build_packets(std::size_t count) {
  std::vector<netmodel::Packet> packets(count);
  std::mt19937_64 rng(11);
  for (netmodel::Packet& pkt : packets) {
    pkt.proto = netmodel::Protocol::IcmpEchoRequest;
    pkt.src_mac = mac(static_cast<std::uint8_t>(rng() % 64));
    pkt.dst_mac = mac(static_cast<std::uint8_t>(rng() % 64));
    pkt.src_ip = ip(static_cast<std::uint32_t>(rng() % 64));
    pkt.dst_ip = ip(static_cast<std::uint32_t>(rng() % 64));
    pkt.payload_bytes = 56;
  }
  return packets;
}

void BM_Lookup(benchmark::State& state) {
  const FlowTable table = build_table(static_cast<std::size_t>(state.range(0)));
  const std::vector<netmodel::Packet> packets = build_packets(1024);
  std::size_t i = 0;
  for (auto _ : state) {
    const netmodel::Packet& pkt = packets[i++ & 1023];
    benchmark::DoNotOptimize(table.lookup(pkt, static_cast<PortId>(1 + (i % 5))));
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_Lookup)->Arg(16)->Arg(64)->Arg(256)->Arg(1024);

void BM_MatchAndCount(benchmark::State& state) {
  FlowTable table = build_table(static_cast<std::size_t>(state.range(0)));
  const std::vector<netmodel::Packet> packets = build_packets(1024);
  std::size_t i = 0;
  for (auto _ : state) {
    const netmodel::Packet& pkt = packets[i++ & 1023];
    benchmark::DoNotOptimize(
        table.match_and_count(pkt, static_cast<PortId>(1 + (i % 5)),
                              static_cast<std::int64_t>(i)));
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_MatchAndCount)->Arg(16)->Arg(64)->Arg(256);

}  // namespace

BENCHMARK_MAIN();
