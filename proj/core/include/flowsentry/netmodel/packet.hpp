#pragma once

#include <cstdint>
#include <string>

#include "flowsentry/netmodel/addr.hpp"
#include "flowsentry/time.hpp"

namespace flowsentry::netmodel {

/// Protocols the data plane cares about. Everything else is `Other` and
/// only ever hits wildcard rules.
enum class Protocol : std::uint8_t {
  IcmpEchoRequest,
  IcmpEchoReply,
  Udp,
  Other,
};

const char* to_string(Protocol proto);

/// True for both ICMP echo directions.
inline bool is_icmp(Protocol proto) {
  return proto == Protocol::IcmpEchoRequest || proto == Protocol::IcmpEchoReply;
}

/// Fixed per-frame overhead in bytes (Ethernet + IP + ICMP headers) added
/// on top of the payload when accounting wire bytes.
inline constexpr std::uint32_t kFrameOverheadBytes = 42;

/// A simulated frame. Identity (stream_id, seq) survives NAT rewriting so
/// echo replies can be paired with the request that caused them.
struct Packet {
  Protocol proto = Protocol::IcmpEchoRequest;
  MacAddress src_mac{};
  MacAddress dst_mac{};
  Ipv4Addr src_ip{};
  Ipv4Addr dst_ip{};
  std::uint32_t payload_bytes = 0;

  /// Originating traffic stream; used to key NAT translation state.
  std::uint32_t stream_id = 0;
  /// Echo sequence number, unique across the whole run (streams carve
  /// disjoint ranges) so a reply can always be traced to its request.
  std::uint64_t seq = 0;
  /// When the original request was created at its source host; RTT and
  /// mitigation-time accounting measure from here.
  SimTime created_at = 0;

  /// Wire size used by byte counters: payload plus fixed header overhead.
  std::uint32_t total_bytes() const { return payload_bytes + kFrameOverheadBytes; }
};

}  // namespace flowsentry::netmodel
