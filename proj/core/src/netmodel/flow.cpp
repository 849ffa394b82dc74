#include "flowsentry/netmodel/flow.hpp"

namespace flowsentry::netmodel {

const char* to_string(Protocol proto) {
  switch (proto) {
    case Protocol::IcmpEchoRequest: return "icmp_echo_request";
    case Protocol::IcmpEchoReply: return "icmp_echo_reply";
    case Protocol::Udp: return "udp";
    case Protocol::Other: return "other";
  }
  return "other";
}

const char* to_string(ProtoClass pc) {
  switch (pc) {
    case ProtoClass::Icmp: return "icmp";
    case ProtoClass::Udp: return "udp";
  }
  return "icmp";
}

std::optional<ProtoClass> proto_class_of(Protocol proto) {
  switch (proto) {
    case Protocol::IcmpEchoRequest:
    case Protocol::IcmpEchoReply:
      return ProtoClass::Icmp;
    case Protocol::Udp:
      return ProtoClass::Udp;
    case Protocol::Other:
      return std::nullopt;
  }
  return std::nullopt;
}

bool packet_matches(const Match& match, const Packet& pkt, PortId in_port) {
  if (match.proto && proto_class_of(pkt.proto) != *match.proto) return false;
  if (match.in_port && *match.in_port != in_port) return false;
  if (match.dl_src && !(*match.dl_src == pkt.src_mac)) return false;
  if (match.dl_dst && !(*match.dl_dst == pkt.dst_mac)) return false;
  if (match.nw_src && !(*match.nw_src == pkt.src_ip)) return false;
  if (match.nw_dst && !(*match.nw_dst == pkt.dst_ip)) return false;
  return true;
}

std::string to_string(const Action& action) {
  if (std::holds_alternative<DropAction>(action)) return "drop";
  if (std::holds_alternative<ToControllerAction>(action)) return "CONTROLLER:65535";
  return "output:" + std::to_string(std::get<OutputAction>(action).port);
}

}  // namespace flowsentry::netmodel
