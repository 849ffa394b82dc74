#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace flowsentry::netmodel {

/// 48-bit MAC address. Canonical rendering is lowercase colon-separated,
/// e.g. "00:00:00:00:00:01".
struct MacAddress {
  std::array<std::uint8_t, 6> octets{};

  static std::optional<MacAddress> parse(std::string_view text);
  std::string to_string() const;

  auto operator<=>(const MacAddress&) const = default;
};

/// IPv4 address kept in host byte order.
struct Ipv4Addr {
  std::uint32_t value = 0;

  static std::optional<Ipv4Addr> parse(std::string_view text);
  std::string to_string() const;

  auto operator<=>(const Ipv4Addr&) const = default;
};

/// Returns the network mask for a prefix length in [0, 32].
std::uint32_t prefix_mask(unsigned prefix_len);

/// IPv4 prefix with optional negation ("!10.0.0.0/8" matches everything
/// outside 10.0.0.0/8). The base always has host bits zeroed. "any" is
/// prefix length 0, not negated.
struct Cidr {
  Ipv4Addr base{};
  std::uint8_t prefix_len = 0;
  bool negated = false;

  /// Masks host bits off `base` so the invariant holds by construction.
  static Cidr make(Ipv4Addr base, std::uint8_t prefix_len, bool negated = false);

  /// Accepts "a.b.c.d/len", "!a.b.c.d/len", a bare address (treated as /32)
  /// and "any" (0.0.0.0/0).
  static std::optional<Cidr> parse(std::string_view text);

  static Cidr any() { return Cidr{}; }

  bool is_any() const { return prefix_len == 0 && !negated; }
  Cidr negate() const { return Cidr{base, prefix_len, !negated}; }

  /// "[!]a.b.c.d/len"; /32 renders as the bare address, "any" as "any".
  std::string to_string() const;

  auto operator<=>(const Cidr&) const = default;
};

/// True iff `addr` lies inside the prefix, XOR the negated flag.
bool cidr_match(Ipv4Addr addr, const Cidr& cidr);

}  // namespace flowsentry::netmodel
