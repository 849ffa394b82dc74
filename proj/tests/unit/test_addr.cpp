#include <random>

#include "doctest.h"
#include "flowsentry/netmodel/addr.hpp"

using namespace flowsentry::netmodel;

TEST_CASE("mac address parses and renders canonical lowercase") {
  const auto mac = MacAddress::parse("00:00:00:00:00:01");
  REQUIRE(mac.has_value());
  CHECK(mac->octets == std::array<std::uint8_t, 6>{0, 0, 0, 0, 0, 1});
  CHECK(mac->to_string() == "00:00:00:00:00:01");

  const auto upper = MacAddress::parse("B2:2A:30:3A:E7:F2");
  REQUIRE(upper.has_value());
  CHECK(upper->to_string() == "b2:2a:30:3a:e7:f2");
}

TEST_CASE("mac address rejects malformed text") {
  CHECK_FALSE(MacAddress::parse("").has_value());
  CHECK_FALSE(MacAddress::parse("00:00:00:00:00").has_value());
  CHECK_FALSE(MacAddress::parse("00:00:00:00:00:01:02").has_value());
  CHECK_FALSE(MacAddress::parse("00-00-00-00-00-01").has_value());
  CHECK_FALSE(MacAddress::parse("0g:00:00:00:00:01").has_value());
  CHECK_FALSE(MacAddress::parse("00:00:00:00:00:1").has_value());
}

TEST_CASE("mac address round-trips over random values") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 2000; ++i) {
    MacAddress mac;
    for (auto& octet : mac.octets) {
      octet = static_cast<std::uint8_t>(rng() & 0xff);
    }
    const auto back = MacAddress::parse(mac.to_string());
    REQUIRE(back.has_value());
    CHECK(*back == mac);
  }
}

TEST_CASE("ipv4 parse and format") {
  const auto ip = Ipv4Addr::parse("192.168.56.104");
  REQUIRE(ip.has_value());
  CHECK(ip->value == 0xc0a83868u);
  CHECK(ip->to_string() == "192.168.56.104");

  CHECK_FALSE(Ipv4Addr::parse("10.0.0").has_value());
  CHECK_FALSE(Ipv4Addr::parse("10.0.0.256").has_value());
  CHECK_FALSE(Ipv4Addr::parse("10.0.0.1.2").has_value());
  CHECK_FALSE(Ipv4Addr::parse("ten.zero.zero.one").has_value());
  CHECK_FALSE(Ipv4Addr::parse("").has_value());
}

TEST_CASE("ipv4 round-trips over random values") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 2000; ++i) {
    const Ipv4Addr ip{static_cast<std::uint32_t>(rng())};
    const auto back = Ipv4Addr::parse(ip.to_string());
    REQUIRE(back.has_value());
    CHECK(*back == ip);
  }
}

TEST_CASE("cidr construction masks host bits and renders canonically") {
  const Cidr net = Cidr::make(Ipv4Addr::parse("10.1.2.3").value(), 8);
  CHECK(net.base.value == 0x0a000000u);
  CHECK(net.to_string() == "10.0.0.0/8");

  const auto parsed = Cidr::parse("10.0.0.0/8");
  REQUIRE(parsed.has_value());
  CHECK(*parsed == net);

  const auto negated = Cidr::parse("!10.0.0.0/8");
  REQUIRE(negated.has_value());
  CHECK(negated->negated);
  CHECK(negated->to_string() == "!10.0.0.0/8");

  // A bare address is a host route; "any" is the zero-length prefix,
  // not negated.
  const auto host = Cidr::parse("192.168.56.104");
  REQUIRE(host.has_value());
  CHECK(host->prefix_len == 32);
  CHECK(host->to_string() == "192.168.56.104");

  const auto any = Cidr::parse("any");
  REQUIRE(any.has_value());
  CHECK(any->prefix_len == 0);
  CHECK_FALSE(any->negated);
  CHECK(any->is_any());
  CHECK(any->to_string() == "any");

  CHECK_FALSE(Cidr::parse("10.0.0.0/33").has_value());
  CHECK_FALSE(Cidr::parse("10.0.0.0/").has_value());
  CHECK_FALSE(Cidr::parse("!").has_value());
}

TEST_CASE("cidr matching: prefix membership xor negation") {
  const Ipv4Addr spoofed = Ipv4Addr::parse("10.0.0.55").value();
  const Ipv4Addr server = Ipv4Addr::parse("192.168.56.104").value();

  CHECK(cidr_match(spoofed, Cidr::parse("10.0.0.0/8").value()));
  CHECK_FALSE(cidr_match(spoofed, Cidr::parse("!10.0.0.0/8").value()));
  CHECK(cidr_match(server, Cidr::parse("any").value()));
  CHECK_FALSE(cidr_match(server, Cidr::parse("10.0.0.0/8").value()));
  CHECK(cidr_match(server, Cidr::parse("!10.0.0.0/8").value()));
  CHECK(cidr_match(server, Cidr::parse("192.168.56.104").value()));
}

TEST_CASE("negating a cidr exactly complements its match set") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 5000; ++i) {
    const Ipv4Addr addr{static_cast<std::uint32_t>(rng())};
    const auto prefix = static_cast<std::uint8_t>(rng() % 33);
    const Cidr net = Cidr::make(Ipv4Addr{static_cast<std::uint32_t>(rng())}, prefix,
                                (rng() & 1) != 0);
    CHECK(cidr_match(addr, net) == !cidr_match(addr, net.negate()));
  }
}

TEST_CASE("cidr round-trips over random values") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 2000; ++i) {
    const auto prefix = static_cast<std::uint8_t>(rng() % 33);
    const Cidr net = Cidr::make(Ipv4Addr{static_cast<std::uint32_t>(rng())}, prefix,
                                (rng() & 1) != 0);
    const auto back = Cidr::parse(net.to_string());
    REQUIRE(back.has_value());
    CHECK(*back == net);
  }
}
