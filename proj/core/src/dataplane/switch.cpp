#include "flowsentry/dataplane/switch.hpp"

#include <algorithm>

#include "flowsentry/fault.hpp"

namespace flowsentry::dataplane {

OpenFlowSwitch::OpenFlowSwitch(std::vector<PortId> data_ports,
                               std::optional<PortId> mirror_port,
                               SimTime mirror_latency)
    : data_ports_(std::move(data_ports)),
      mirror_port_(mirror_port),
      mirror_latency_(mirror_latency) {}

bool OpenFlowSwitch::is_data_port(PortId port) const {
  return std::find(data_ports_.begin(), data_ports_.end(), port) != data_ports_.end();
}

void OpenFlowSwitch::execute(const netmodel::FlowRule& rule,
                             const netmodel::Packet& pkt, PortId in_port, SimTime now,
                             SwitchEffects& out) {
  if (const auto* output = std::get_if<netmodel::OutputAction>(&rule.action)) {
    if (!is_data_port(output->port)) {
      throw SimulationFault("flow rule outputs to unknown port " +
                            std::to_string(output->port));
    }
    out.egress.push_back(Egress{output->port, pkt, now});
  } else if (std::holds_alternative<netmodel::DropAction>(rule.action)) {
    out.drops.push_back(DropRecord{pkt, in_port, rule.cookie, now});
  } else {
    Pending pending{next_buffer_id_++, pkt, in_port};
    out.packet_ins.push_back(PacketInRequest{pending.buffer_id, pkt, in_port});
    pending_.push_back(std::move(pending));
  }
}

SwitchEffects OpenFlowSwitch::receive(const netmodel::Packet& pkt, PortId in_port,
                                      SimTime now) {
  if (!is_data_port(in_port)) {
    throw SimulationFault("packet received on unknown port " + std::to_string(in_port));
  }
  SwitchEffects out;
  if (mirror_port_ && in_port != *mirror_port_) {
    out.egress.push_back(Egress{*mirror_port_, pkt, now + mirror_latency_});
  }
  const netmodel::FlowRule& rule = table_.match_and_count(pkt, in_port, now);
  execute(rule, pkt, in_port, now, out);
  return out;
}

SwitchEffects OpenFlowSwitch::apply_flow_mod(std::uint32_t priority,
                                             const netmodel::Match& match,
                                             const netmodel::Action& action,
                                             SimTime now) {
  table_.install(priority, match, action, now);

  // Re-evaluate buffered packets oldest first. A packet whose best rule is
  // still ToController stays buffered (and is not re-charged to the miss
  // rule); one that now hits a concrete rule executes it and leaves.
  SwitchEffects out;
  for (auto it = pending_.begin(); it != pending_.end();) {
    const netmodel::FlowRule* rule = table_.lookup(it->pkt, it->in_port);
    if (std::holds_alternative<netmodel::ToControllerAction>(rule->action)) {
      ++it;
      continue;
    }
    const netmodel::FlowRule& counted =
        table_.match_and_count(it->pkt, it->in_port, now);
    execute(counted, it->pkt, it->in_port, now, out);
    it = pending_.erase(it);
  }
  return out;
}

SwitchEffects OpenFlowSwitch::packet_out_flood(std::uint64_t buffer_id,
                                               PortId exclude_port, SimTime now) {
  SwitchEffects out;
  auto it = std::find_if(pending_.begin(), pending_.end(),
                         [buffer_id](const Pending& p) { return p.buffer_id == buffer_id; });
  if (it == pending_.end()) return out;  // already released by a flow-mod
  for (PortId port : data_ports_) {
    if (port == exclude_port) continue;
    out.egress.push_back(Egress{port, it->pkt, now});
  }
  pending_.erase(it);
  return out;
}

}  // namespace flowsentry::dataplane
