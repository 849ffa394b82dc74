#pragma once

#include <cstdint>
#include <deque>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "flowsentry/ids/rules.hpp"
#include "flowsentry/netmodel/packet.hpp"
#include "flowsentry/time.hpp"

namespace flowsentry::ids {

/// Notification handed to the controller when a rule fires and survives the
/// event filter. Carries everything a drop rule needs: the offender's IP as
/// seen on the wire (spoofed or not) plus the genuine frame-level MAC.
struct Alert {
  std::string msg;
  std::uint32_t sid = 0;
  netmodel::Ipv4Addr src_ip{};
  netmodel::MacAddress src_mac{};
  netmodel::Ipv4Addr dst_ip{};
  netmodel::ProtoClass proto = netmodel::ProtoClass::Icmp;
  SimTime emitted_at = 0;
};

/// Per-source sliding-window packet counter backing one rule's
/// detection_filter. Fires when, after recording the current packet,
/// strictly more than `count` packets from that source fall inside the
/// trailing window (now − seconds, now].
class RateTracker {
 public:
  RateTracker(std::uint32_t count, std::uint32_t seconds);

  bool record_and_check(netmodel::Ipv4Addr src, SimTime now);

 private:
  std::uint32_t count_;
  SimTime window_us_;
  std::unordered_map<std::uint32_t, std::deque<SimTime>> per_src_;
};

/// Per-source alert throttle (the "limit" kind): passes the first `count`
/// alerts from a source in a fixed window starting at the first passed
/// alert, suppresses the rest, and opens a fresh window once `seconds`
/// have elapsed.
class EventFilter {
 public:
  EventFilter(std::uint32_t count, std::uint32_t seconds);

  bool pass(netmodel::Ipv4Addr src, SimTime now);

 private:
  struct SrcState {
    SimTime window_start;
    std::uint32_t passed;
  };

  std::uint32_t count_;
  SimTime window_us_;
  std::unordered_map<std::uint32_t, SrcState> state_;
};

struct ObserveResult {
  /// Rules that fired on this packet, ascending sid, before throttling.
  std::vector<std::uint32_t> fired_sids;
  /// The alert that made it through the event filter, if any; built from
  /// the lowest-sid firing rule.
  std::optional<Alert> alert;
};

/// Streaming detector fed every packet seen on the mirror port.
class DetectionEngine {
 public:
  explicit DetectionEngine(std::vector<DetectionRule> rules,
                           std::uint32_t filter_count = 1,
                           std::uint32_t filter_seconds = 60);

  /// Evaluates every rule against the packet (size test first, then the
  /// rate window, both per rule), updating rate state as a side effect.
  ObserveResult observe(const netmodel::Packet& pkt, SimTime now);

  std::uint64_t packets_observed() const { return packets_observed_; }
  std::uint64_t packets_fired() const { return packets_fired_; }
  std::uint64_t alerts_emitted() const { return alerts_emitted_; }
  std::uint64_t alerts_suppressed() const { return alerts_suppressed_; }
  const std::vector<DetectionRule>& rules() const { return rules_; }

 private:
  std::vector<DetectionRule> rules_;        // sorted by sid
  std::vector<RateTracker> trackers_;       // parallel to rules_ (unused if no filter)
  EventFilter filter_;
  std::uint64_t packets_observed_ = 0;
  std::uint64_t packets_fired_ = 0;
  std::uint64_t alerts_emitted_ = 0;
  std::uint64_t alerts_suppressed_ = 0;
};

}  // namespace flowsentry::ids
