#include <random>

#include "doctest.h"
#include "flowsentry/dataplane/switch.hpp"
#include "flowsentry/fault.hpp"

using namespace flowsentry;
using namespace flowsentry::netmodel;
using namespace flowsentry::dataplane;

namespace {

constexpr PortId kMirror = 5;
constexpr SimTime kMirrorLatency = 50;

OpenFlowSwitch make_switch() {
  return OpenFlowSwitch({1, 2, 3, 4}, kMirror, kMirrorLatency);
}

Packet attacker_echo() {
  Packet pkt;
  pkt.proto = Protocol::IcmpEchoRequest;
  pkt.src_mac = MacAddress::parse("00:00:00:00:00:01").value();
  pkt.dst_mac = MacAddress::parse("b2:2a:30:3a:e7:f2").value();
  pkt.src_ip = Ipv4Addr::parse("10.0.0.1").value();
  pkt.dst_ip = Ipv4Addr::parse("192.168.56.104").value();
  pkt.payload_bytes = 56;
  pkt.seq = 1;
  return pkt;
}

Match drop_match_for_attacker() {
  Match match;
  match.proto = ProtoClass::Icmp;
  match.dl_src = MacAddress::parse("00:00:00:00:00:01").value();
  match.nw_src = Ipv4Addr::parse("10.0.0.1").value();
  match.nw_dst = Ipv4Addr::parse("192.168.56.104").value();
  return match;
}

}  // namespace

TEST_CASE("table miss buffers the packet and asks the controller") {
  OpenFlowSwitch sw = make_switch();
  const SwitchEffects effects = sw.receive(attacker_echo(), 2, 1000);

  REQUIRE(effects.packet_ins.size() == 1);
  CHECK(effects.packet_ins[0].in_port == 2);
  CHECK(effects.packet_ins[0].pkt.seq == 1);
  CHECK(effects.drops.empty());
  CHECK(sw.pending_count() == 1);

  // The only egress is the mirror copy, delayed by the mirror latency.
  REQUIRE(effects.egress.size() == 1);
  CHECK(effects.egress[0].port == kMirror);
  CHECK(effects.egress[0].at == 1000 + kMirrorLatency);

  // The miss rule was charged.
  CHECK(sw.table().rules().front().n_packets == 1);
}

TEST_CASE("dropped packets still reach the mirror port") {
  // The trace this pins down, worked out by hand: ingress at t=1000 on
  // port 2 against a drop rule produces exactly (1) a mirror copy at
  // t=1050, (2) a drop record at t=1000 charged to the drop rule, and
  // (3) no forwarding egress and no controller request.
  OpenFlowSwitch sw = make_switch();
  sw.apply_flow_mod(100, drop_match_for_attacker(), DropAction{}, 500);
  const std::uint64_t drop_cookie = sw.table().rules().back().cookie;

  const SwitchEffects effects = sw.receive(attacker_echo(), 2, 1000);

  REQUIRE(effects.egress.size() == 1);
  CHECK(effects.egress[0].port == kMirror);
  CHECK(effects.egress[0].at == 1050);
  REQUIRE(effects.drops.size() == 1);
  CHECK(effects.drops[0].rule_cookie == drop_cookie);
  CHECK(effects.drops[0].at == 1000);
  CHECK(effects.drops[0].in_port == 2);
  CHECK(effects.packet_ins.empty());
  CHECK(sw.pending_count() == 0);

  CHECK(sw.table().rules().back().n_packets == 1);
  CHECK(sw.table().rules().back().n_bytes == 98);
}

TEST_CASE("output rule forwards immediately alongside the mirror copy") {
  OpenFlowSwitch sw = make_switch();
  Match match;
  match.in_port = 2;
  match.dl_dst = MacAddress::parse("b2:2a:30:3a:e7:f2").value();
  sw.apply_flow_mod(1, match, OutputAction{1}, 0);

  const SwitchEffects effects = sw.receive(attacker_echo(), 2, 2000);
  REQUIRE(effects.egress.size() == 2);
  CHECK(effects.egress[0].port == kMirror);
  CHECK(effects.egress[0].at == 2050);
  CHECK(effects.egress[1].port == 1);
  CHECK(effects.egress[1].at == 2000);
}

TEST_CASE("flow-mod releases buffered packets to the new rule") {
  OpenFlowSwitch sw = make_switch();
  sw.receive(attacker_echo(), 2, 1000);
  REQUIRE(sw.pending_count() == 1);

  Match match;
  match.in_port = 2;
  match.dl_dst = MacAddress::parse("b2:2a:30:3a:e7:f2").value();
  const SwitchEffects effects = sw.apply_flow_mod(1, match, OutputAction{1}, 1400);

  REQUIRE(effects.egress.size() == 1);
  CHECK(effects.egress[0].port == 1);
  CHECK(effects.egress[0].at == 1400);
  CHECK(effects.egress[0].pkt.seq == 1);
  CHECK(sw.pending_count() == 0);

  // The release is charged to the releasing rule; the mirror copy is NOT
  // re-emitted (the packet already visited the mirror at ingress).
  CHECK(sw.table().rules().back().n_packets == 1);

  // A non-matching flow-mod leaves other pending packets buffered.
  Packet second = attacker_echo();
  second.seq = 2;
  second.dst_mac = MacAddress::parse("00:00:00:00:00:02").value();
  sw.receive(second, 3, 2000);
  REQUIRE(sw.pending_count() == 1);
  Match unrelated;
  unrelated.in_port = 4;
  unrelated.dl_dst = MacAddress::parse("00:00:00:00:00:03").value();
  const SwitchEffects none = sw.apply_flow_mod(1, unrelated, OutputAction{2}, 2100);
  CHECK(none.egress.empty());
  CHECK(sw.pending_count() == 1);
}

TEST_CASE("flow-mod with a drop rule drops matching buffered packets") {
  OpenFlowSwitch sw = make_switch();
  sw.receive(attacker_echo(), 2, 1000);
  const SwitchEffects effects =
      sw.apply_flow_mod(100, drop_match_for_attacker(), DropAction{}, 1400);
  CHECK(effects.egress.empty());
  REQUIRE(effects.drops.size() == 1);
  CHECK(effects.drops[0].at == 1400);
  CHECK(sw.pending_count() == 0);
}

TEST_CASE("packet-out floods every data port except the ingress and mirror") {
  OpenFlowSwitch sw = make_switch();
  const SwitchEffects in = sw.receive(attacker_echo(), 2, 1000);
  const std::uint64_t buffer_id = in.packet_ins[0].buffer_id;

  const SwitchEffects flood = sw.packet_out_flood(buffer_id, 2, 1700);
  std::vector<PortId> ports;
  for (const Egress& eg : flood.egress) {
    ports.push_back(eg.port);
    CHECK(eg.at == 1700);
    CHECK(eg.pkt.seq == 1);
  }
  CHECK(ports == std::vector<PortId>{1, 3, 4});
  CHECK(sw.pending_count() == 0);

  // Stale buffer id: already released.
  const SwitchEffects stale = sw.packet_out_flood(buffer_id, 2, 1800);
  CHECK(stale.egress.empty());
  CHECK(stale.packet_ins.empty());
  CHECK(stale.drops.empty());
}

TEST_CASE("unknown ports are simulation faults") {
  OpenFlowSwitch sw = make_switch();
  CHECK_THROWS_AS(sw.receive(attacker_echo(), 9, 0), SimulationFault);
  CHECK_THROWS_AS(sw.receive(attacker_echo(), kMirror, 0), SimulationFault);

  Match match;
  match.in_port = 2;
  sw.apply_flow_mod(1, match, OutputAction{42}, 0);
  CHECK_THROWS_AS(sw.receive(attacker_echo(), 2, 100), SimulationFault);
}

TEST_CASE("mirror exactness: one mirror copy per data-port ingress, drops included") {
  std::mt19937_64 rng(41);
  OpenFlowSwitch sw = make_switch();
  sw.apply_flow_mod(100, drop_match_for_attacker(), DropAction{}, 0);
  Match fwd;
  fwd.in_port = 3;
  fwd.dl_dst = MacAddress::parse("b2:2a:30:3a:e7:f2").value();
  sw.apply_flow_mod(1, fwd, OutputAction{1}, 0);

  std::uint64_t ingress_count = 0;
  std::uint64_t mirror_count = 0;
  SimTime now = 0;
  for (int i = 0; i < 5000; ++i) {
    Packet pkt = attacker_echo();
    pkt.seq = static_cast<std::uint64_t>(i);
    if (rng() % 2) {
      pkt.src_mac = MacAddress::parse("00:00:00:00:00:02").value();
      pkt.src_ip = Ipv4Addr::parse("10.0.0.2").value();
    }
    const auto in_port = static_cast<PortId>(1 + rng() % 4);
    now += static_cast<SimTime>(rng() % 100);
    const SwitchEffects effects = sw.receive(pkt, in_port, now);
    ++ingress_count;
    for (const Egress& eg : effects.egress) {
      if (eg.port == kMirror) {
        ++mirror_count;
        CHECK(eg.at == now + kMirrorLatency);
      }
    }
  }
  CHECK(ingress_count == mirror_count);
}
