#include "flowsentry/ids/engine.hpp"

#include <algorithm>

namespace flowsentry::ids {

RateTracker::RateTracker(std::uint32_t count, std::uint32_t seconds)
    : count_(count), window_us_(static_cast<SimTime>(seconds) * kMicrosPerSecond) {}

bool RateTracker::record_and_check(netmodel::Ipv4Addr src, SimTime now) {
  std::deque<SimTime>& stamps = per_src_[src.value];
  const SimTime cutoff = now - window_us_;
  while (!stamps.empty() && stamps.front() <= cutoff) stamps.pop_front();
  stamps.push_back(now);
  return stamps.size() > count_;
}

EventFilter::EventFilter(std::uint32_t count, std::uint32_t seconds)
    : count_(count), window_us_(static_cast<SimTime>(seconds) * kMicrosPerSecond) {}

bool EventFilter::pass(netmodel::Ipv4Addr src, SimTime now) {
  auto [it, inserted] = state_.try_emplace(src.value, SrcState{now, 0});
  SrcState& state = it->second;
  if (!inserted && now - state.window_start >= window_us_) {
    state.window_start = now;
    state.passed = 0;
  }
  if (state.passed < count_) {
    ++state.passed;
    return true;
  }
  return false;
}

DetectionEngine::DetectionEngine(std::vector<DetectionRule> rules,
                                 std::uint32_t filter_count,
                                 std::uint32_t filter_seconds)
    : rules_(std::move(rules)), filter_(filter_count, filter_seconds) {
  std::sort(rules_.begin(), rules_.end(),
            [](const DetectionRule& a, const DetectionRule& b) { return a.sid < b.sid; });
  trackers_.reserve(rules_.size());
  for (const DetectionRule& rule : rules_) {
    const RateFilter rf = rule.rate_filter.value_or(RateFilter{1, 1});
    trackers_.emplace_back(rf.count, rf.seconds);
  }
}

ObserveResult DetectionEngine::observe(const netmodel::Packet& pkt, SimTime now) {
  ++packets_observed_;
  ObserveResult result;

  for (std::size_t i = 0; i < rules_.size(); ++i) {
    const DetectionRule& rule = rules_[i];
    if (netmodel::proto_class_of(pkt.proto) != rule.proto) continue;
    if (!netmodel::cidr_match(pkt.src_ip, rule.src)) continue;
    if (!netmodel::cidr_match(pkt.dst_ip, rule.dst)) continue;
    // The size test gates the rule entirely: an undersized packet neither
    // fires nor counts toward the rate window.
    if (rule.dsize_gt && !(pkt.payload_bytes > *rule.dsize_gt)) continue;

    const bool fired =
        rule.rate_filter ? trackers_[i].record_and_check(pkt.src_ip, now) : true;
    if (fired) result.fired_sids.push_back(rule.sid);
  }

  if (result.fired_sids.empty()) return result;
  ++packets_fired_;

  if (!filter_.pass(pkt.src_ip, now)) {
    ++alerts_suppressed_;
    return result;
  }
  ++alerts_emitted_;

  const auto it = std::find_if(rules_.begin(), rules_.end(), [&](const DetectionRule& r) {
    return r.sid == result.fired_sids.front();
  });
  Alert alert;
  alert.msg = it->msg;
  alert.sid = it->sid;
  alert.src_ip = pkt.src_ip;
  alert.src_mac = pkt.src_mac;
  alert.dst_ip = pkt.dst_ip;
  alert.proto = it->proto;
  alert.emitted_at = now;
  result.alert = std::move(alert);
  return result;
}

}  // namespace flowsentry::ids
