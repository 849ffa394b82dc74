#include "flowsentry/netmodel/addr.hpp"

#include <charconv>
#include <cstdio>

namespace flowsentry::netmodel {

namespace {

bool parse_u32(std::string_view text, std::uint32_t& out, std::uint32_t max) {
  if (text.empty() || text.size() > 10) return false;
  std::uint32_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size()) return false;
  if (v > max) return false;
  out = v;
  return true;
}

int hex_digit(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

std::optional<MacAddress> MacAddress::parse(std::string_view text) {
  // Exactly six colon-separated two-digit hex groups.
  if (text.size() != 17) return std::nullopt;
  MacAddress mac;
  for (int i = 0; i < 6; ++i) {
    const int pos = i * 3;
    const int hi = hex_digit(text[pos]);
    const int lo = hex_digit(text[pos + 1]);
    if (hi < 0 || lo < 0) return std::nullopt;
    if (i < 5 && text[pos + 2] != ':') return std::nullopt;
    mac.octets[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(hi * 16 + lo);
  }
  return mac;
}

std::string MacAddress::to_string() const {
  char buf[18];
  std::snprintf(buf, sizeof buf, "%02x:%02x:%02x:%02x:%02x:%02x", octets[0], octets[1],
                octets[2], octets[3], octets[4], octets[5]);
  return buf;
}

std::optional<Ipv4Addr> Ipv4Addr::parse(std::string_view text) {
  std::uint32_t value = 0;
  int octets = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == '.') {
      std::uint32_t v = 0;
      if (!parse_u32(text.substr(start, i - start), v, 255)) return std::nullopt;
      value = (value << 8) | v;
      ++octets;
      start = i + 1;
    }
  }
  if (octets != 4) return std::nullopt;
  return Ipv4Addr{value};
}

std::string Ipv4Addr::to_string() const {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%u.%u.%u.%u", (value >> 24) & 0xff, (value >> 16) & 0xff,
                (value >> 8) & 0xff, value & 0xff);
  return buf;
}

std::uint32_t prefix_mask(unsigned prefix_len) {
  if (prefix_len == 0) return 0;
  return ~std::uint32_t{0} << (32 - prefix_len);
}

Cidr Cidr::make(Ipv4Addr base, std::uint8_t prefix_len, bool negated) {
  Cidr c;
  c.prefix_len = prefix_len;
  c.base = Ipv4Addr{base.value & prefix_mask(prefix_len)};
  c.negated = negated;
  return c;
}

std::optional<Cidr> Cidr::parse(std::string_view text) {
  if (text == "any") return Cidr::any();
  bool negated = false;
  if (!text.empty() && text.front() == '!') {
    negated = true;
    text.remove_prefix(1);
  }
  std::uint32_t prefix_len = 32;
  const auto slash = text.find('/');
  if (slash != std::string_view::npos) {
    if (!parse_u32(text.substr(slash + 1), prefix_len, 32)) return std::nullopt;
    text = text.substr(0, slash);
  }
  const auto base = Ipv4Addr::parse(text);
  if (!base) return std::nullopt;
  return Cidr::make(*base, static_cast<std::uint8_t>(prefix_len), negated);
}

std::string Cidr::to_string() const {
  if (is_any()) return "any";
  std::string out = negated ? "!" : "";
  out += base.to_string();
  if (prefix_len != 32) {
    out += '/';
    out += std::to_string(prefix_len);
  }
  return out;
}

bool cidr_match(Ipv4Addr addr, const Cidr& cidr) {
  const bool inside = (addr.value & prefix_mask(cidr.prefix_len)) == cidr.base.value;
  return inside != cidr.negated;
}

}  // namespace flowsentry::netmodel
