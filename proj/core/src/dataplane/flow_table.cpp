#include "flowsentry/dataplane/flow_table.hpp"

namespace flowsentry::dataplane {

FlowTable::FlowTable() {
  netmodel::FlowRule miss;
  miss.priority = 0;
  miss.action = netmodel::ToControllerAction{};
  miss.cookie = next_cookie_++;
  miss.installed_at = 0;
  rules_.push_back(miss);
}

netmodel::FlowRule* FlowTable::find_best(const netmodel::Packet& pkt,
                                         PortId in_port) const {
  // Scan in insertion order with strict comparisons: equal (priority,
  // installed_at) keeps the rule seen first, i.e. the one installed first.
  const netmodel::FlowRule* best = nullptr;
  for (const auto& rule : rules_) {
    if (!netmodel::packet_matches(rule.match, pkt, in_port)) continue;
    if (best == nullptr || rule.priority > best->priority ||
        (rule.priority == best->priority && rule.installed_at < best->installed_at)) {
      best = &rule;
    }
  }
  return const_cast<netmodel::FlowRule*>(best);
}

const netmodel::FlowRule* FlowTable::lookup(const netmodel::Packet& pkt,
                                            PortId in_port) const {
  return find_best(pkt, in_port);
}

netmodel::FlowRule& FlowTable::match_and_count(const netmodel::Packet& pkt,
                                               PortId in_port, SimTime now) {
  netmodel::FlowRule* rule = find_best(pkt, in_port);
  rule->n_packets += 1;
  rule->n_bytes += pkt.total_bytes();
  rule->last_matched_at = now;
  return *rule;
}

bool FlowTable::install(std::uint32_t priority, const netmodel::Match& match,
                        const netmodel::Action& action, SimTime now) {
  for (const auto& rule : rules_) {
    if (rule.priority == priority && rule.match == match && rule.action == action) {
      return false;
    }
  }
  netmodel::FlowRule rule;
  rule.priority = priority;
  rule.match = match;
  rule.action = action;
  rule.cookie = next_cookie_++;
  rule.installed_at = now;
  rules_.push_back(rule);
  return true;
}

}  // namespace flowsentry::dataplane
