#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "flowsentry/netmodel/addr.hpp"
#include "flowsentry/netmodel/packet.hpp"
#include "flowsentry/time.hpp"

namespace flowsentry::dataplane {

/// Capacity-limited echo server: a single FIFO queue served at a fixed
/// per-packet service time of 1/capacity_pps. A request arriving when
/// queue_limit packets are already waiting or in service is dropped.
/// This is the bottleneck that turns an over-capacity flood into delay and
/// loss for everyone behind it.
class Server {
 public:
  Server(netmodel::Ipv4Addr ip, netmodel::MacAddress mac, std::uint32_t capacity_pps,
         std::uint32_t queue_limit);

  /// Accepts or drops one request. On accept, returns the echo reply and
  /// the time it departs the server (FIFO behind everything already
  /// queued). On a full queue returns nullopt and counts the drop.
  std::optional<std::pair<netmodel::Packet, SimTime>> handle(
      const netmodel::Packet& request, SimTime now);

  /// Packets accepted but not yet finished at `now` (including the one in
  /// service).
  std::uint32_t queue_len(SimTime now) const;

  SimTime service_time_us() const { return service_time_us_; }
  std::uint64_t drops() const { return drops_; }
  std::uint64_t served() const { return served_; }
  netmodel::Ipv4Addr ip() const { return ip_; }
  netmodel::MacAddress mac() const { return mac_; }

 private:
  netmodel::Ipv4Addr ip_;
  netmodel::MacAddress mac_;
  SimTime service_time_us_;
  std::uint32_t queue_limit_;
  SimTime busy_until_ = 0;
  std::uint64_t drops_ = 0;
  std::uint64_t served_ = 0;
};

}  // namespace flowsentry::dataplane
