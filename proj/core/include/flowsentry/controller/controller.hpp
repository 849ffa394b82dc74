#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <variant>
#include <vector>

#include "flowsentry/ids/engine.hpp"
#include "flowsentry/netmodel/flow.hpp"
#include "flowsentry/netmodel/packet.hpp"
#include "flowsentry/time.hpp"

namespace flowsentry::controller {

/// Install a flow rule on the switch.
struct FlowModAction {
  std::uint32_t priority = 0;
  netmodel::Match match;
  netmodel::Action action = netmodel::DropAction{};
};

/// Flood a buffered packet out of every data port except in_port.
struct PacketOutAction {
  std::uint64_t buffer_id = 0;
  PortId in_port = 0;
};

using ControlAction = std::variant<FlowModAction, PacketOutAction>;

/// A (source MAC, source IP, destination IP) flow identity that has already
/// been blocked.
struct BlockEntry {
  netmodel::MacAddress src_mac{};
  netmodel::Ipv4Addr src_ip{};
  netmodel::Ipv4Addr dst_ip{};
  SimTime blocked_at = 0;
};

/// The control-plane brain: learns MAC→port bindings from packet-ins to
/// install forwarding rules, and turns "ryu block" alerts into drop rules.
class Controller {
 public:
  /// MAC learning plus disposition of the buffered packet: a known
  /// destination yields a priority-1 forwarding rule (whose installation
  /// releases the buffered packet); an unknown one yields a flood
  /// packet-out and no rule.
  std::vector<ControlAction> handle_packet_in(std::uint64_t buffer_id,
                                              const netmodel::Packet& pkt,
                                              PortId in_port);

  /// Drop-rule synthesis: a "ryu block" alert for a flow identity not yet
  /// blocked yields a priority-100 icmp drop rule matching the offender's
  /// MAC, source IP and destination IP. Other messages and already-blocked
  /// identities yield nothing.
  std::optional<FlowModAction> process_alert(const ids::Alert& alert, SimTime now);

  const std::map<netmodel::MacAddress, PortId>& mac_table() const { return mac_table_; }
  const std::vector<BlockEntry>& blocklist() const { return blocklist_; }

 private:
  bool is_blocked(const netmodel::MacAddress& mac, netmodel::Ipv4Addr src,
                  netmodel::Ipv4Addr dst) const;

  std::map<netmodel::MacAddress, PortId> mac_table_;
  std::vector<BlockEntry> blocklist_;
};

}  // namespace flowsentry::controller
