#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "flowsentry/controller/controller.hpp"
#include "flowsentry/dataplane/host.hpp"
#include "flowsentry/dataplane/nat.hpp"
#include "flowsentry/dataplane/server.hpp"
#include "flowsentry/dataplane/switch.hpp"
#include "flowsentry/ids/engine.hpp"
#include "flowsentry/simkit/config.hpp"
#include "flowsentry/simkit/event_log.hpp"
#include "flowsentry/simkit/event_queue.hpp"
#include "flowsentry/simkit/metrics.hpp"

namespace flowsentry::simkit {

/// Raw counters kept alongside the event log for invariant checks and the
/// CLI's closing line.
struct RunStats {
  std::uint64_t switch_ingress = 0;    // frames received on data ports
  std::uint64_t mirror_delivered = 0;  // frames handed to the detector
  std::uint64_t switch_drops = 0;
  std::uint64_t nat_ingress = 0;       // home→server frames reaching the gateway
  std::uint64_t nat_unsolicited = 0;
  std::uint64_t server_drops = 0;
  std::uint64_t packets_fired = 0;     // detector firings before throttling
  std::uint64_t alerts_passed = 0;
  std::uint64_t alerts_suppressed = 0;
  std::uint64_t flow_mods = 0;
  std::uint64_t packet_outs = 0;
};

/// A flow-table dump taken at a named instant of the run.
struct Checkpoint {
  std::string name;
  SimTime at = 0;
  std::string dump;
};

struct RunResult {
  MetricsReport report;
  RunStats stats;
  std::vector<Checkpoint> checkpoints;
  std::uint64_t event_log_digest = 0;
  std::uint64_t event_log_lines = 0;
};

/// The wired topology of one run — three hosts and a mirror-tapped switch
/// on the home side, NAT gateway and capacity-limited server on the far
/// side, detector on the mirror port, controller on the control channel —
/// plus the traffic generators and metric collectors that drive it.
///
/// A run is: a warmup window in which every endpoint pings every other so
/// the controller's learning converges, then the measured window in which
/// benign pings and any configured floods play out. All reported times are
/// relative to the start of the measured window.
class World {
 public:
  /// `rules` is the parsed detection ruleset (see load_rules); `log`
  /// receives one JSONL record per simulation event and must outlive run().
  World(const ScenarioConfig& cfg, std::vector<ids::DetectionRule> rules, EventLog& log);

  World(const World&) = delete;
  World& operator=(const World&) = delete;

  /// Executes the whole scenario to quiescence and gathers results.
  RunResult run();

  // Topology facts, shared with tests.
  static constexpr PortId kNatPort = 1;
  static constexpr std::array<PortId, 3> kHostPorts = {2, 3, 4};
  static constexpr PortId kMirrorPort = 5;

  static netmodel::MacAddress host_mac(int host);
  static netmodel::Ipv4Addr host_ip(int host);
  static netmodel::MacAddress gateway_mac();
  static netmodel::MacAddress server_mac();
  static netmodel::Ipv4Addr server_ip();
  static netmodel::Ipv4Addr external_ip();

  const dataplane::OpenFlowSwitch& switch_dev() const { return switch_; }
  const controller::Controller& control() const { return controller_; }
  const ids::DetectionEngine& detector() const { return engine_; }
  const dataplane::Server& server() const { return server_; }
  const dataplane::NatGateway& gateway() const { return nat_; }

 private:
  enum class StreamKind : std::uint8_t { Warmup, Benign, Attack };
  struct StreamInfo {
    int host;
    StreamKind kind;
  };
  struct BenignStats {
    std::uint64_t sent = 0;
    std::uint64_t received = 0;
    double rtt_sum_us = 0;
    std::vector<std::pair<SimTime, SimTime>> samples;  // (received_at, rtt)
  };
  struct AttackerStats {
    SimTime first_packet_at = -1;
    SimTime alert_at = -1;
    SimTime block_at = -1;
  };

  std::uint32_t new_stream(int host, StreamKind kind);
  StreamKind stream_kind(std::uint64_t seq) const;
  int stream_host(std::uint64_t seq) const;

  netmodel::Packet make_request(int host, std::uint32_t stream, std::uint64_t counter,
                                const netmodel::MacAddress& dst_mac,
                                netmodel::Ipv4Addr dst_ip, std::uint32_t payload,
                                SimTime now) const;

  // Event handlers; each runs at the time the thing happens.
  void host_send(int host, const netmodel::Packet& pkt);
  void switch_ingress(const netmodel::Packet& pkt, PortId in_port);
  void enact(const dataplane::SwitchEffects& effects);
  void deliver_mirror(const netmodel::Packet& pkt);
  void controller_packet_in(const dataplane::PacketInRequest& request);
  void controller_alert(const ids::Alert& alert);
  void apply_control_action(const controller::ControlAction& action);
  void nat_from_home(const netmodel::Packet& pkt);
  void server_receive(const netmodel::Packet& pkt);
  void nat_from_server(const netmodel::Packet& pkt);
  void host_receive(int host, const netmodel::Packet& pkt);

  // Generators and scheduling.
  void schedule_warmup();
  void schedule_benign(int host, std::uint32_t stream, std::uint64_t counter,
                       SimTime at);
  void schedule_attack(int host, std::uint32_t stream, std::uint64_t counter);
  void take_checkpoint(const std::string& name);

  // Log record helpers.
  void log_packet_event(const char* kind, const netmodel::Packet& pkt, PortId port);
  void log_line(std::string_view line);

  ScenarioConfig cfg_;
  EventLog& log_;
  EventQueue queue_;

  netmodel::MacAddress gw_mac_;
  netmodel::Ipv4Addr srv_ip_;
  std::array<dataplane::Host, 3> hosts_;
  dataplane::OpenFlowSwitch switch_;
  dataplane::NatGateway nat_;
  dataplane::Server server_;
  ids::DetectionEngine engine_;
  controller::Controller controller_;

  SimTime t0_;    // measurement start (end of warmup)
  SimTime end_;   // measurement end
  std::vector<StreamInfo> streams_;
  std::array<BenignStats, 3> benign_;
  std::array<AttackerStats, 3> attackers_;
  int attackers_expected_ = 0;
  int attackers_blocked_ = 0;

  std::map<std::pair<std::int64_t, std::uint32_t>, std::uint64_t> nat_bins_;
  std::map<std::int64_t, std::uint64_t> attack_switch_bins_;

  RunStats stats_;
  std::vector<Checkpoint> checkpoints_;
};

/// Reads and parses the configured ruleset (embedded default when
/// cfg.rules_path is empty). Parse problems come back as messages;
/// on success `rules` holds the result.
struct LoadedRules {
  std::vector<ids::DetectionRule> rules;
  std::vector<std::string> errors;
  bool ok() const { return errors.empty(); }
};
LoadedRules load_rules(const ScenarioConfig& cfg);

}  // namespace flowsentry::simkit
