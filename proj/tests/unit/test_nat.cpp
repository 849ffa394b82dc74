#include "doctest.h"
#include "flowsentry/dataplane/nat.hpp"

using namespace flowsentry;
using namespace flowsentry::netmodel;
using namespace flowsentry::dataplane;

namespace {

const Cidr kHomeNet = Cidr::parse("10.0.0.0/8").value();
const Ipv4Addr kExternalIp = Ipv4Addr::parse("192.168.56.1").value();
const MacAddress kGatewayMac = MacAddress::parse("b2:2a:30:3a:e7:f2").value();
const MacAddress kServerMac = MacAddress::parse("08:00:27:9e:4d:5a").value();
const Ipv4Addr kServerIp = Ipv4Addr::parse("192.168.56.104").value();

NatGateway make_gateway() {
  return NatGateway(kHomeNet, kExternalIp, kGatewayMac, kServerMac);
}

Packet outward(std::uint64_t seq, const char* src_ip, std::uint8_t src_octet) {
  Packet pkt;
  pkt.proto = Protocol::IcmpEchoRequest;
  pkt.src_mac.octets = {0, 0, 0, 0, 0, src_octet};
  pkt.dst_mac = kGatewayMac;
  pkt.src_ip = Ipv4Addr::parse(src_ip).value();
  pkt.dst_ip = kServerIp;
  pkt.payload_bytes = 56;
  pkt.seq = seq;
  return pkt;
}

}  // namespace

TEST_CASE("outward translation rewrites the source and records the entry") {
  NatGateway gw = make_gateway();
  const auto out = gw.forward_outward(outward(7, "10.0.0.2", 2));
  REQUIRE(out.has_value());
  CHECK(out->src_ip == kExternalIp);
  CHECK(out->src_mac == kGatewayMac);
  CHECK(out->dst_mac == kServerMac);
  CHECK(out->dst_ip == kServerIp);
  CHECK(out->seq == 7);
  CHECK(gw.open_translations() == 1);
}

TEST_CASE("the matching reply is restored to the original host and consumed") {
  NatGateway gw = make_gateway();
  const auto out = gw.forward_outward(outward(7, "10.0.0.2", 2));
  REQUIRE(out.has_value());

  Packet reply = *out;
  reply.proto = Protocol::IcmpEchoReply;
  std::swap(reply.src_ip, reply.dst_ip);
  std::swap(reply.src_mac, reply.dst_mac);

  const auto in = gw.forward_inward(reply);
  REQUIRE(in.has_value());
  CHECK(in->dst_ip == Ipv4Addr::parse("10.0.0.2").value());
  CHECK(in->dst_mac.octets[5] == 2);
  CHECK(in->src_mac == kGatewayMac);
  CHECK(in->seq == 7);
  CHECK(gw.open_translations() == 0);

  // Replaying the same reply is now unsolicited.
  CHECK_FALSE(gw.forward_inward(reply).has_value());
  CHECK(gw.unsolicited_drops() == 1);
}

TEST_CASE("spoofed in-prefix sources translate like any other internal host") {
  NatGateway gw = make_gateway();
  const auto out = gw.forward_outward(outward(9, "10.0.0.55", 1));
  REQUIRE(out.has_value());

  Packet reply = *out;
  reply.proto = Protocol::IcmpEchoReply;
  std::swap(reply.src_ip, reply.dst_ip);
  std::swap(reply.src_mac, reply.dst_mac);
  const auto in = gw.forward_inward(reply);
  REQUIRE(in.has_value());
  // The reply goes back to the spoofed address, not the real sender's.
  CHECK(in->dst_ip == Ipv4Addr::parse("10.0.0.55").value());
  CHECK(in->dst_mac.octets[5] == 1);  // ...but to the frame's true MAC
}

TEST_CASE("unsolicited inward packets are dropped and counted") {
  NatGateway gw = make_gateway();
  Packet stray;
  stray.proto = Protocol::IcmpEchoReply;
  stray.src_mac = kServerMac;
  stray.dst_mac = kGatewayMac;
  stray.src_ip = kServerIp;
  stray.dst_ip = kExternalIp;
  stray.seq = 12345;
  CHECK_FALSE(gw.forward_inward(stray).has_value());
  CHECK(gw.unsolicited_drops() == 1);
  CHECK(gw.open_translations() == 0);
}

TEST_CASE("sources outside the internal network are refused outward") {
  NatGateway gw = make_gateway();
  const auto out = gw.forward_outward(outward(3, "172.16.0.9", 1));
  CHECK_FALSE(out.has_value());
  CHECK(gw.martian_drops() == 1);
  CHECK(gw.open_translations() == 0);
}

TEST_CASE("translations from different hosts coexist keyed by echo seq") {
  NatGateway gw = make_gateway();
  REQUIRE(gw.forward_outward(outward(100, "10.0.0.1", 1)).has_value());
  REQUIRE(gw.forward_outward(outward(200, "10.0.0.3", 3)).has_value());
  CHECK(gw.open_translations() == 2);

  Packet reply;
  reply.proto = Protocol::IcmpEchoReply;
  reply.src_mac = kServerMac;
  reply.dst_mac = kGatewayMac;
  reply.src_ip = kServerIp;
  reply.dst_ip = kExternalIp;
  reply.seq = 200;
  const auto in = gw.forward_inward(reply);
  REQUIRE(in.has_value());
  CHECK(in->dst_ip == Ipv4Addr::parse("10.0.0.3").value());
  CHECK(gw.open_translations() == 1);
}
