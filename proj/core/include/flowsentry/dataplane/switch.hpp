#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "flowsentry/dataplane/flow_table.hpp"
#include "flowsentry/netmodel/packet.hpp"
#include "flowsentry/time.hpp"

namespace flowsentry::dataplane {

/// A frame leaving the switch on `port` at time `at`. Mirror copies carry
/// the mirror latency in `at`; ordinary forwards leave immediately.
struct Egress {
  PortId port = 0;
  netmodel::Packet pkt;
  SimTime at = 0;
};

/// Table-miss notification for the controller. The full packet travels with
/// the request; `buffer_id` identifies the copy buffered in the switch so a
/// later packet-out can release exactly that copy.
struct PacketInRequest {
  std::uint64_t buffer_id = 0;
  netmodel::Packet pkt;
  PortId in_port = 0;
};

/// Audit record for a packet discarded by a Drop rule.
struct DropRecord {
  netmodel::Packet pkt;
  PortId in_port = 0;
  std::uint64_t rule_cookie = 0;
  SimTime at = 0;
};

/// Everything a switch operation asks the event loop to enact.
struct SwitchEffects {
  std::vector<Egress> egress;
  std::vector<PacketInRequest> packet_ins;
  std::vector<DropRecord> drops;
};

/// OpenFlow-style switch: a flow table, a set of data ports, an optional
/// mirror port, and a buffer of packets awaiting controller decisions.
///
/// Mirroring happens at ingress: every packet received on a non-mirror port
/// is duplicated to the mirror port exactly once, whatever the flow table
/// then decides (including drops). Packets the switch re-emits later —
/// flooded packet-outs, buffered packets released by a flow-mod — are not
/// mirrored again.
class OpenFlowSwitch {
 public:
  OpenFlowSwitch(std::vector<PortId> data_ports, std::optional<PortId> mirror_port,
                 SimTime mirror_latency);

  /// Ingress processing for one frame: mirror copy, then flow-table match.
  /// Output → egress; Drop → drop record; ToController → the packet is
  /// buffered and a packet-in request emitted.
  /// Throws SimulationFault for an unknown in_port or egress port.
  SwitchEffects receive(const netmodel::Packet& pkt, PortId in_port, SimTime now);

  /// Installs a rule (no-op when an identical priority/match/action rule
  /// exists) and re-evaluates buffered packets against the updated table;
  /// packets that now hit a non-controller rule execute it and leave the
  /// buffer.
  SwitchEffects apply_flow_mod(std::uint32_t priority, const netmodel::Match& match,
                               const netmodel::Action& action, SimTime now);

  /// Controller-directed flood of a buffered packet out of every data port
  /// except `exclude_port`. A stale buffer_id (already released by a
  /// flow-mod) is ignored.
  SwitchEffects packet_out_flood(std::uint64_t buffer_id, PortId exclude_port,
                                 SimTime now);

  FlowTable& table() { return table_; }
  const FlowTable& table() const { return table_; }
  const std::vector<PortId>& data_ports() const { return data_ports_; }
  std::optional<PortId> mirror_port() const { return mirror_port_; }
  std::size_t pending_count() const { return pending_.size(); }

 private:
  struct Pending {
    std::uint64_t buffer_id;
    netmodel::Packet pkt;
    PortId in_port;
  };

  bool is_data_port(PortId port) const;
  void execute(const netmodel::FlowRule& rule, const netmodel::Packet& pkt,
               PortId in_port, SimTime now, SwitchEffects& out);

  std::vector<PortId> data_ports_;
  std::optional<PortId> mirror_port_;
  SimTime mirror_latency_;
  FlowTable table_;
  std::vector<Pending> pending_;
  std::uint64_t next_buffer_id_ = 0;
};

}  // namespace flowsentry::dataplane
