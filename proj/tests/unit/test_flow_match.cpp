#include <random>

#include "doctest.h"
#include "flowsentry/netmodel/flow.hpp"
#include "flowsentry/netmodel/packet.hpp"

using namespace flowsentry;
using namespace flowsentry::netmodel;

namespace {

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

Packet random_packet(std::mt19937_64& rng) {
  Packet pkt;
  switch (rng() % 4) {
    case 0: pkt.proto = Protocol::IcmpEchoRequest; break;
    case 1: pkt.proto = Protocol::IcmpEchoReply; break;
    case 2: pkt.proto = Protocol::Udp; break;
    default: pkt.proto = Protocol::Other; break;
  }
  for (auto& octet : pkt.src_mac.octets) octet = static_cast<std::uint8_t>(rng());
  for (auto& octet : pkt.dst_mac.octets) octet = static_cast<std::uint8_t>(rng());
  pkt.src_ip.value = static_cast<std::uint32_t>(rng());
  pkt.dst_ip.value = static_cast<std::uint32_t>(rng());
  pkt.payload_bytes = static_cast<std::uint32_t>(rng() % 1500);
  return pkt;
}

}  // namespace

TEST_CASE("wire size is payload plus the fixed 42-byte header") {
  Packet pkt = attacker_echo();
  CHECK(pkt.total_bytes() == 98);
  pkt.payload_bytes = 0;
  CHECK(pkt.total_bytes() == 42);
  pkt.payload_bytes = 900;
  CHECK(pkt.total_bytes() == 942);
}

TEST_CASE("a fully-specified drop match accepts exactly its flow") {
  Match match;
  match.proto = ProtoClass::Icmp;
  match.dl_src = MacAddress::parse("00:00:00:00:00:01").value();
  match.nw_src = Ipv4Addr::parse("10.0.0.1").value();
  match.nw_dst = Ipv4Addr::parse("192.168.56.104").value();

  const Packet pkt = attacker_echo();
  CHECK(packet_matches(match, pkt, 2));

  Packet other_src = pkt;
  other_src.src_ip = Ipv4Addr::parse("10.0.0.2").value();
  CHECK_FALSE(packet_matches(match, other_src, 2));

  Packet other_mac = pkt;
  other_mac.src_mac = MacAddress::parse("00:00:00:00:00:03").value();
  CHECK_FALSE(packet_matches(match, other_mac, 2));

  Packet udp = pkt;
  udp.proto = Protocol::Udp;
  CHECK_FALSE(packet_matches(match, udp, 2));
}

TEST_CASE("icmp protocol class covers both echo directions") {
  Match match;
  match.proto = ProtoClass::Icmp;

  Packet pkt = attacker_echo();
  pkt.proto = Protocol::IcmpEchoRequest;
  CHECK(packet_matches(match, pkt, 1));
  pkt.proto = Protocol::IcmpEchoReply;
  CHECK(packet_matches(match, pkt, 1));
  pkt.proto = Protocol::Udp;
  CHECK_FALSE(packet_matches(match, pkt, 1));
}

TEST_CASE("in_port constrained match") {
  Match match;
  match.in_port = 2;
  match.dl_dst = MacAddress::parse("b2:2a:30:3a:e7:f2").value();

  const Packet pkt = attacker_echo();
  CHECK(packet_matches(match, pkt, 2));
  CHECK_FALSE(packet_matches(match, pkt, 3));
}

TEST_CASE("an all-absent match is constant-true") {
  const Match wildcard;
  std::mt19937_64 rng(23);
  for (int i = 0; i < 5000; ++i) {
    const Packet pkt = random_packet(rng);
    CHECK(packet_matches(wildcard, pkt, static_cast<PortId>(rng() % 8)));
  }
}
