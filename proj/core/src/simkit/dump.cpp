#include "flowsentry/simkit/dump.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>

namespace flowsentry::simkit {

std::string render_match(std::uint32_t priority, const netmodel::Match& match) {
  std::string out = "priority=" + std::to_string(priority);
  if (match.proto) {
    out += ',';
    out += netmodel::to_string(*match.proto);
  }
  if (match.in_port) out += ",in_port=" + std::to_string(*match.in_port);
  if (match.dl_src) out += ",dl_src=" + match.dl_src->to_string();
  if (match.dl_dst) out += ",dl_dst=" + match.dl_dst->to_string();
  if (match.nw_src) out += ",nw_src=" + match.nw_src->to_string();
  if (match.nw_dst) out += ",nw_dst=" + match.nw_dst->to_string();
  return out;
}

std::string render_flow_table(const dataplane::FlowTable& table, SimTime now) {
  const auto& rules = table.rules();

  std::vector<std::size_t> order(rules.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (rules[a].priority != rules[b].priority) {
      return rules[a].priority > rules[b].priority;
    }
    return rules[a].installed_at < rules[b].installed_at;
  });

  std::string out = "NXST_FLOW reply (xid=0x4):\n";
  char buf[160];
  for (const std::size_t idx : order) {
    const netmodel::FlowRule& rule = rules[idx];
    const SimTime age_us = now - rule.installed_at;
    const SimTime idle_from = rule.n_packets > 0 ? rule.last_matched_at : rule.installed_at;
    const SimTime idle_s = (now - idle_from) / kMicrosPerSecond;
    std::snprintf(buf, sizeof buf,
                  " cookie=0x%llx, duration=%lld.%03llds, table=0, n_packets=%llu, "
                  "n_bytes=%llu, idle_age=%lld, ",
                  static_cast<unsigned long long>(rule.cookie),
                  static_cast<long long>(age_us / kMicrosPerSecond),
                  static_cast<long long>((age_us % kMicrosPerSecond) / 1000),
                  static_cast<unsigned long long>(rule.n_packets),
                  static_cast<unsigned long long>(rule.n_bytes),
                  static_cast<long long>(idle_s));
    out += buf;
    out += render_match(rule.priority, rule.match);
    out += " actions=";
    out += netmodel::to_string(rule.action);
    out += '\n';
  }
  return out;
}

}  // namespace flowsentry::simkit
