#include "flowsentry/dataplane/server.hpp"

#include <algorithm>

namespace flowsentry::dataplane {

Server::Server(netmodel::Ipv4Addr ip, netmodel::MacAddress mac,
               std::uint32_t capacity_pps, std::uint32_t queue_limit)
    : ip_(ip),
      mac_(mac),
      service_time_us_(std::max<SimTime>(
          1, (kMicrosPerSecond + capacity_pps / 2) / capacity_pps)),
      queue_limit_(queue_limit) {}

std::uint32_t Server::queue_len(SimTime now) const {
  if (busy_until_ <= now) return 0;
  const SimTime backlog = busy_until_ - now;
  return static_cast<std::uint32_t>((backlog + service_time_us_ - 1) / service_time_us_);
}

std::optional<std::pair<netmodel::Packet, SimTime>> Server::handle(
    const netmodel::Packet& request, SimTime now) {
  if (queue_len(now) >= queue_limit_) {
    ++drops_;
    return std::nullopt;
  }
  const SimTime start = std::max(now, busy_until_);
  const SimTime depart = start + service_time_us_;
  busy_until_ = depart;
  ++served_;

  netmodel::Packet reply = request;
  reply.proto = netmodel::Protocol::IcmpEchoReply;
  reply.src_mac = mac_;
  reply.dst_mac = request.src_mac;
  reply.src_ip = ip_;
  reply.dst_ip = request.src_ip;
  // seq, payload and created_at carry over so the reply pairs with its
  // request for RTT measurement.
  return std::make_pair(reply, depart);
}

}  // namespace flowsentry::dataplane
