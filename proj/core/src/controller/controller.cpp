#include "flowsentry/controller/controller.hpp"

namespace flowsentry::controller {

std::vector<ControlAction> Controller::handle_packet_in(std::uint64_t buffer_id,
                                                        const netmodel::Packet& pkt,
                                                        PortId in_port) {
  mac_table_[pkt.src_mac] = in_port;  // last writer wins

  std::vector<ControlAction> actions;
  const auto it = mac_table_.find(pkt.dst_mac);
  if (it == mac_table_.end()) {
    actions.push_back(PacketOutAction{buffer_id, in_port});
    return actions;
  }

  netmodel::Match match;
  match.in_port = in_port;
  match.dl_dst = pkt.dst_mac;
  actions.push_back(
      FlowModAction{1, match, netmodel::OutputAction{it->second}});
  return actions;
}

bool Controller::is_blocked(const netmodel::MacAddress& mac, netmodel::Ipv4Addr src,
                            netmodel::Ipv4Addr dst) const {
  for (const BlockEntry& entry : blocklist_) {
    if (entry.src_mac == mac && entry.src_ip == src && entry.dst_ip == dst) return true;
  }
  return false;
}

std::optional<FlowModAction> Controller::process_alert(const ids::Alert& alert,
                                                       SimTime now) {
  if (alert.msg != "ryu block") return std::nullopt;
  if (is_blocked(alert.src_mac, alert.src_ip, alert.dst_ip)) return std::nullopt;

  blocklist_.push_back(BlockEntry{alert.src_mac, alert.src_ip, alert.dst_ip, now});

  netmodel::Match match;
  match.proto = alert.proto;
  match.dl_src = alert.src_mac;
  match.nw_src = alert.src_ip;
  match.nw_dst = alert.dst_ip;
  return FlowModAction{100, match, netmodel::DropAction{}};
}

}  // namespace flowsentry::controller
