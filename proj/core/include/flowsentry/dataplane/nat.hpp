#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>

#include "flowsentry/netmodel/addr.hpp"
#include "flowsentry/netmodel/packet.hpp"

namespace flowsentry::dataplane {

/// Gateway between the internal home network and the external server
/// segment. Outward traffic gets its source IP rewritten to the gateway's
/// external address; the original (source IP, echo seq) pair is remembered
/// so the matching reply can be rewritten back and delivered inward.
class NatGateway {
 public:
  NatGateway(netmodel::Cidr internal_net, netmodel::Ipv4Addr external_ip,
             netmodel::MacAddress gateway_mac, netmodel::MacAddress server_mac);

  /// Home → server. Returns the translated packet (src_ip = external_ip,
  /// gateway/server MACs) and records the translation. Packets whose source
  /// lies outside the internal network are refused (martian source) and
  /// counted.
  std::optional<netmodel::Packet> forward_outward(const netmodel::Packet& pkt);

  /// Server → home. Restores the original destination from the translation
  /// entry (which is consumed). Unsolicited packets — no matching entry —
  /// are dropped and counted.
  std::optional<netmodel::Packet> forward_inward(const netmodel::Packet& pkt);

  std::uint64_t unsolicited_drops() const { return unsolicited_drops_; }
  std::uint64_t martian_drops() const { return martian_drops_; }
  std::size_t open_translations() const { return translations_.size(); }

 private:
  struct Translation {
    netmodel::Ipv4Addr orig_src_ip;
    netmodel::MacAddress orig_src_mac;
  };

  netmodel::Cidr internal_net_;
  netmodel::Ipv4Addr external_ip_;
  netmodel::MacAddress gateway_mac_;
  netmodel::MacAddress server_mac_;
  // Echo seq numbers are unique across the run, so the seq alone names the
  // (source IP, seq) translation pair; the entry keeps the full pair.
  std::unordered_map<std::uint64_t, Translation> translations_;
  std::uint64_t unsolicited_drops_ = 0;
  std::uint64_t martian_drops_ = 0;
};

}  // namespace flowsentry::dataplane
