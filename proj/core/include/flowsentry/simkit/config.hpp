#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "flowsentry/netmodel/addr.hpp"
#include "flowsentry/time.hpp"

namespace flowsentry::simkit {

enum class ScenarioId { Baseline, I, II, III };

const char* to_string(ScenarioId id);
std::optional<ScenarioId> scenario_from_string(std::string_view name);

/// What one home-network host does during the measured window. Attackers
/// behave normally (one ping per interval to the server) until attack_start,
/// then switch to flooding.
struct HostRole {
  SimTime ping_interval = kMicrosPerSecond;  // benign ping cadence

  bool attacker = false;
  SimTime attack_start = 0;                  // relative to measurement start
  std::optional<SimTime> attack_stop;        // default: end of run
  std::uint32_t attack_rate_pps = 0;
  std::uint32_t attack_payload_bytes = 0;
  std::optional<netmodel::Ipv4Addr> spoofed_src;
};

/// Full description of one run. The warmup window precedes measurement:
/// pairwise pings converge the switch's forwarding table before any metric
/// counts. All times inside HostRole are relative to the end of warmup.
struct ScenarioConfig {
  ScenarioId scenario = ScenarioId::Baseline;
  SimTime duration = 30 * kMicrosPerSecond;  // measured window length
  SimTime warmup = 1 * kMicrosPerSecond;
  std::array<HostRole, 3> hosts;

  std::uint32_t server_capacity_pps = 10'000;
  std::uint32_t server_queue_limit = 1'000;
  std::uint32_t benign_ping_payload_bytes = 56;

  SimTime host_switch_latency = 20;
  SimTime switch_nat_latency = 20;
  SimTime nat_server_latency = 100;
  SimTime mirror_latency = 50;
  SimTime alert_channel_latency = 100;
  SimTime controller_proc_latency = 200;
  SimTime control_link_latency = 100;

  /// Detection ruleset file; empty means the embedded default rules.
  std::string rules_path;
  std::uint64_t seed = 42;

  /// End-to-end delay from a packet leaving its host to the drop rule the
  /// packet provokes being installed (mirror, alert delivery, controller
  /// processing, control link).
  SimTime alert_path_latency() const {
    return host_switch_latency + mirror_latency + alert_channel_latency +
           controller_proc_latency + control_link_latency;
  }

  /// Echo round trip on an idle network with all forwarding rules in place.
  SimTime baseline_rtt() const {
    return 2 * (host_switch_latency + switch_nat_latency + nat_server_latency) +
           (kMicrosPerSecond + server_capacity_pps / 2) / server_capacity_pps;
  }

  /// Returns human-readable problems; empty when the config is usable.
  std::vector<std::string> validate() const;
};

/// The canned configurations: a no-attack baseline, a two-host flood, a
/// single spoofed-source flood, and an oversized-payload flood.
ScenarioConfig preset(ScenarioId id);

/// Applies `key=value` lines from a config file over `cfg`. `#` starts a
/// comment; unknown keys and unparsable values are reported, not applied.
std::vector<std::string> apply_config_file(ScenarioConfig& cfg, const std::string& path);

/// Same, for already-loaded text (exposed for tests).
std::vector<std::string> apply_config_text(ScenarioConfig& cfg, std::string_view text);

}  // namespace flowsentry::simkit
