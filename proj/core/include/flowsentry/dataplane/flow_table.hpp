#pragma once

#include <cstdint>
#include <vector>

#include "flowsentry/netmodel/flow.hpp"
#include "flowsentry/netmodel/packet.hpp"
#include "flowsentry/time.hpp"

namespace flowsentry::dataplane {

/// Priority-ordered flow table. Starts with the single table-miss rule
/// (priority 0, wildcard, ToController) and only ever grows: rules are
/// permanent, there is no expiry.
///
/// Matching picks the highest-priority rule whose match covers the packet;
/// ties go to the earliest installed_at, and among rules installed in the
/// same instant to the one installed first.
class FlowTable {
 public:
  FlowTable();

  /// Returns the governing rule without touching counters. Never null:
  /// the table-miss rule matches everything.
  const netmodel::FlowRule* lookup(const netmodel::Packet& pkt, PortId in_port) const;

  /// Returns the governing rule and charges the packet to its counters.
  netmodel::FlowRule& match_and_count(const netmodel::Packet& pkt, PortId in_port,
                                      SimTime now);

  /// Appends a rule with a fresh cookie and installed_at = now. Installing
  /// a rule identical in (priority, match, action) to an existing one is a
  /// no-op; returns false in that case.
  bool install(std::uint32_t priority, const netmodel::Match& match,
               const netmodel::Action& action, SimTime now);

  const std::vector<netmodel::FlowRule>& rules() const { return rules_; }

 private:
  netmodel::FlowRule* find_best(const netmodel::Packet& pkt, PortId in_port) const;

  std::vector<netmodel::FlowRule> rules_;
  std::uint64_t next_cookie_ = 0;
};

}  // namespace flowsentry::dataplane
