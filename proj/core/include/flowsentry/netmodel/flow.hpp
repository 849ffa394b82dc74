#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>

#include "flowsentry/netmodel/addr.hpp"
#include "flowsentry/netmodel/packet.hpp"
#include "flowsentry/time.hpp"

namespace flowsentry::netmodel {

/// Protocol class as it appears in a flow match ("icmp" covers both echo
/// directions).
enum class ProtoClass : std::uint8_t {
  Icmp,
  Udp,
};

const char* to_string(ProtoClass pc);

/// Maps a concrete packet protocol onto its match class, or nullopt for
/// protocols no classed rule can match.
std::optional<ProtoClass> proto_class_of(Protocol proto);

/// OpenFlow-style match. Absent fields are wildcards; an all-absent match
/// matches every packet.
struct Match {
  std::optional<ProtoClass> proto;
  std::optional<PortId> in_port;
  std::optional<MacAddress> dl_src;
  std::optional<MacAddress> dl_dst;
  std::optional<Ipv4Addr> nw_src;
  std::optional<Ipv4Addr> nw_dst;

  bool operator==(const Match&) const = default;
};

/// True iff every present field of `match` equals the packet's value.
bool packet_matches(const Match& match, const Packet& pkt, PortId in_port);

struct OutputAction {
  PortId port = 0;
  bool operator==(const OutputAction&) const = default;
};
struct DropAction {
  bool operator==(const DropAction&) const = default;
};
struct ToControllerAction {
  bool operator==(const ToControllerAction&) const = default;
};

using Action = std::variant<OutputAction, DropAction, ToControllerAction>;

std::string to_string(const Action& action);

/// One flow table entry. Counters are mutated in place as packets match.
struct FlowRule {
  std::uint32_t priority = 0;
  Match match;
  Action action = ToControllerAction{};
  std::uint64_t cookie = 0;
  SimTime installed_at = 0;

  std::uint64_t n_packets = 0;
  std::uint64_t n_bytes = 0;
  /// Time of the most recent match, used for the idle_age column in dumps.
  SimTime last_matched_at = 0;
};

}  // namespace flowsentry::netmodel
