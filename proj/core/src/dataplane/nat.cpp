#include "flowsentry/dataplane/nat.hpp"

namespace flowsentry::dataplane {

NatGateway::NatGateway(netmodel::Cidr internal_net, netmodel::Ipv4Addr external_ip,
                       netmodel::MacAddress gateway_mac, netmodel::MacAddress server_mac)
    : internal_net_(internal_net),
      external_ip_(external_ip),
      gateway_mac_(gateway_mac),
      server_mac_(server_mac) {}

std::optional<netmodel::Packet> NatGateway::forward_outward(const netmodel::Packet& pkt) {
  if (!netmodel::cidr_match(pkt.src_ip, internal_net_)) {
    ++martian_drops_;
    return std::nullopt;
  }
  translations_[pkt.seq] = Translation{pkt.src_ip, pkt.src_mac};
  netmodel::Packet out = pkt;
  out.src_ip = external_ip_;
  out.src_mac = gateway_mac_;
  out.dst_mac = server_mac_;
  return out;
}

std::optional<netmodel::Packet> NatGateway::forward_inward(const netmodel::Packet& pkt) {
  auto it = translations_.find(pkt.seq);
  if (it == translations_.end()) {
    ++unsolicited_drops_;
    return std::nullopt;
  }
  netmodel::Packet out = pkt;
  out.dst_ip = it->second.orig_src_ip;
  out.dst_mac = it->second.orig_src_mac;
  out.src_mac = gateway_mac_;
  translations_.erase(it);
  return out;
}

}  // namespace flowsentry::dataplane
