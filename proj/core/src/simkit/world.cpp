#include "flowsentry/simkit/world.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>

#include "flowsentry/fault.hpp"
#include "flowsentry/ids/rules.hpp"
#include "flowsentry/simkit/dump.hpp"

namespace flowsentry::simkit {

namespace {

// Members are built from cfg in the initializer list (the server divides by
// its capacity, for one), so the config must be checked before any of them.
const ScenarioConfig& validated(const ScenarioConfig& cfg) {
  const auto errors = cfg.validate();
  if (!errors.empty()) {
    throw SimulationFault("invalid config: " + errors.front());
  }
  return cfg;
}

}  // namespace

netmodel::MacAddress World::host_mac(int host) {
  netmodel::MacAddress mac{};
  mac.octets[5] = static_cast<std::uint8_t>(host + 1);
  return mac;
}

netmodel::Ipv4Addr World::host_ip(int host) {
  return netmodel::Ipv4Addr{0x0a000001u + static_cast<std::uint32_t>(host)};
}

netmodel::MacAddress World::gateway_mac() {
  return netmodel::MacAddress::parse("b2:2a:30:3a:e7:f2").value();
}

netmodel::MacAddress World::server_mac() {
  return netmodel::MacAddress::parse("08:00:27:9e:4d:5a").value();
}

netmodel::Ipv4Addr World::server_ip() {
  return netmodel::Ipv4Addr::parse("192.168.56.104").value();
}

netmodel::Ipv4Addr World::external_ip() {
  return netmodel::Ipv4Addr::parse("192.168.56.1").value();
}

World::World(const ScenarioConfig& cfg, std::vector<ids::DetectionRule> rules,
             EventLog& log)
    : cfg_(validated(cfg)),
      log_(log),
      gw_mac_(gateway_mac()),
      srv_ip_(server_ip()),
      hosts_{dataplane::Host{"host1", host_mac(0), host_ip(0), kHostPorts[0]},
             dataplane::Host{"host2", host_mac(1), host_ip(1), kHostPorts[1]},
             dataplane::Host{"host3", host_mac(2), host_ip(2), kHostPorts[2]}},
      switch_({kNatPort, kHostPorts[0], kHostPorts[1], kHostPorts[2]}, kMirrorPort,
              cfg.mirror_latency),
      nat_(netmodel::Cidr::make(netmodel::Ipv4Addr{0x0a000000}, 8), external_ip(),
           gateway_mac(), server_mac()),
      server_(server_ip(), server_mac(), cfg.server_capacity_pps, cfg.server_queue_limit),
      engine_(std::move(rules)),
      t0_(cfg.warmup),
      end_(cfg.warmup + cfg.duration) {
  for (const HostRole& role : cfg_.hosts) {
    if (role.attacker) ++attackers_expected_;
  }
}

std::uint32_t World::new_stream(int host, StreamKind kind) {
  streams_.push_back(StreamInfo{host, kind});
  return static_cast<std::uint32_t>(streams_.size() - 1);
}

World::StreamKind World::stream_kind(std::uint64_t seq) const {
  return streams_[static_cast<std::size_t>(seq >> 32)].kind;
}

int World::stream_host(std::uint64_t seq) const {
  return streams_[static_cast<std::size_t>(seq >> 32)].host;
}

netmodel::Packet World::make_request(int host, std::uint32_t stream,
                                     std::uint64_t counter,
                                     const netmodel::MacAddress& dst_mac,
                                     netmodel::Ipv4Addr dst_ip, std::uint32_t payload,
                                     SimTime now) const {
  netmodel::Packet pkt;
  pkt.proto = netmodel::Protocol::IcmpEchoRequest;
  pkt.src_mac = hosts_[static_cast<std::size_t>(host)].mac;
  pkt.dst_mac = dst_mac;
  pkt.src_ip = hosts_[static_cast<std::size_t>(host)].ip;
  pkt.dst_ip = dst_ip;
  pkt.payload_bytes = payload;
  pkt.stream_id = stream;
  pkt.seq = (static_cast<std::uint64_t>(stream) << 32) | counter;
  pkt.created_at = now;
  return pkt;
}

// ---------------------------------------------------------------------------
// Log records. Hand-assembled JSON keeps the hot path allocation-free.

void World::log_line(std::string_view line) { log_.record(line); }

void World::log_packet_event(const char* kind, const netmodel::Packet& pkt,
                             PortId port) {
  char buf[320];
  const int n = std::snprintf(
      buf, sizeof buf,
      "{\"t\":%lld,\"e\":\"%s\",\"port\":%d,\"proto\":\"%s\",\"src\":\"%s\","
      "\"dst\":\"%s\",\"smac\":\"%s\",\"dmac\":\"%s\",\"seq\":%llu,\"pb\":%u}",
      static_cast<long long>(queue_.now()), kind, port, netmodel::to_string(pkt.proto),
      pkt.src_ip.to_string().c_str(), pkt.dst_ip.to_string().c_str(),
      pkt.src_mac.to_string().c_str(), pkt.dst_mac.to_string().c_str(),
      static_cast<unsigned long long>(pkt.seq), pkt.payload_bytes);
  log_line(std::string_view(buf, static_cast<std::size_t>(n)));
}

// ---------------------------------------------------------------------------
// Event handlers.

void World::host_send(int host, const netmodel::Packet& pkt) {
  const PortId port = hosts_[static_cast<std::size_t>(host)].port;
  queue_.schedule(queue_.now() + cfg_.host_switch_latency,
                  [this, pkt, port] { switch_ingress(pkt, port); });
}

void World::switch_ingress(const netmodel::Packet& pkt, PortId in_port) {
  log_packet_event("sw_in", pkt, in_port);
  ++stats_.switch_ingress;
  // Attack-rate bins count the send side only; echo replies re-entering
  // from the gateway port must not inflate the measured flood rate.
  if (in_port != kNatPort && stream_kind(pkt.seq) == StreamKind::Attack) {
    const SimTime now = queue_.now();
    if (now >= t0_ && now < end_) {
      ++attack_switch_bins_[(now - t0_) / kMicrosPerSecond];
    }
  }
  enact(switch_.receive(pkt, in_port, queue_.now()));
}

void World::enact(const dataplane::SwitchEffects& effects) {
  for (const dataplane::Egress& eg : effects.egress) {
    if (eg.port == kMirrorPort) {
      queue_.schedule(eg.at, [this, pkt = eg.pkt] { deliver_mirror(pkt); });
    } else if (eg.port == kNatPort) {
      queue_.schedule(eg.at + cfg_.switch_nat_latency,
                      [this, pkt = eg.pkt] { nat_from_home(pkt); });
    } else {
      const int host = eg.port - kHostPorts[0];
      queue_.schedule(eg.at + cfg_.host_switch_latency,
                      [this, pkt = eg.pkt, host] { host_receive(host, pkt); });
    }
  }
  for (const dataplane::PacketInRequest& request : effects.packet_ins) {
    char buf[96];
    const int n = std::snprintf(
        buf, sizeof buf, "{\"t\":%lld,\"e\":\"pkt_in\",\"buf\":%llu,\"port\":%d,\"seq\":%llu}",
        static_cast<long long>(queue_.now()),
        static_cast<unsigned long long>(request.buffer_id), request.in_port,
        static_cast<unsigned long long>(request.pkt.seq));
    log_line(std::string_view(buf, static_cast<std::size_t>(n)));
    queue_.schedule(queue_.now() + cfg_.control_link_latency,
                    [this, request] { controller_packet_in(request); });
  }
  for (const dataplane::DropRecord& drop : effects.drops) {
    ++stats_.switch_drops;
    char buf[224];
    const int n = std::snprintf(
        buf, sizeof buf,
        "{\"t\":%lld,\"e\":\"sw_drop\",\"cookie\":%llu,\"src\":\"%s\",\"dst\":\"%s\","
        "\"smac\":\"%s\",\"seq\":%llu}",
        static_cast<long long>(drop.at), static_cast<unsigned long long>(drop.rule_cookie),
        drop.pkt.src_ip.to_string().c_str(), drop.pkt.dst_ip.to_string().c_str(),
        drop.pkt.src_mac.to_string().c_str(),
        static_cast<unsigned long long>(drop.pkt.seq));
    log_line(std::string_view(buf, static_cast<std::size_t>(n)));
  }
}

void World::deliver_mirror(const netmodel::Packet& pkt) {
  char buf[64];
  const int n = std::snprintf(buf, sizeof buf, "{\"t\":%lld,\"e\":\"mir\",\"seq\":%llu}",
                              static_cast<long long>(queue_.now()),
                              static_cast<unsigned long long>(pkt.seq));
  log_line(std::string_view(buf, static_cast<std::size_t>(n)));
  ++stats_.mirror_delivered;

  ids::ObserveResult result = engine_.observe(pkt, queue_.now());
  if (!result.alert) return;

  const ids::Alert& alert = *result.alert;
  char abuf[224];
  const int an = std::snprintf(
      abuf, sizeof abuf,
      "{\"t\":%lld,\"e\":\"alert\",\"sid\":%u,\"msg\":\"%s\",\"src\":\"%s\","
      "\"smac\":\"%s\",\"dst\":\"%s\"}",
      static_cast<long long>(alert.emitted_at), alert.sid, alert.msg.c_str(),
      alert.src_ip.to_string().c_str(), alert.src_mac.to_string().c_str(),
      alert.dst_ip.to_string().c_str());
  log_line(std::string_view(abuf, static_cast<std::size_t>(an)));

  queue_.schedule(queue_.now() + cfg_.alert_channel_latency,
                  [this, alert] { controller_alert(alert); });
}

void World::controller_packet_in(const dataplane::PacketInRequest& request) {
  const auto actions =
      controller_.handle_packet_in(request.buffer_id, request.pkt, request.in_port);
  const SimTime apply_at =
      queue_.now() + cfg_.controller_proc_latency + cfg_.control_link_latency;
  for (const controller::ControlAction& action : actions) {
    queue_.schedule(apply_at, [this, action] { apply_control_action(action); });
  }
}

void World::controller_alert(const ids::Alert& alert) {
  for (std::size_t i = 0; i < hosts_.size(); ++i) {
    if (hosts_[i].mac == alert.src_mac && attackers_[i].alert_at < 0) {
      attackers_[i].alert_at = alert.emitted_at;
    }
  }
  const auto flow_mod = controller_.process_alert(alert, queue_.now());
  if (!flow_mod) return;
  const SimTime apply_at =
      queue_.now() + cfg_.controller_proc_latency + cfg_.control_link_latency;
  queue_.schedule(apply_at,
                  [this, action = controller::ControlAction(*flow_mod)] {
                    apply_control_action(action);
                  });
}

void World::apply_control_action(const controller::ControlAction& action) {
  if (const auto* po = std::get_if<controller::PacketOutAction>(&action)) {
    ++stats_.packet_outs;
    char buf[96];
    const int n = std::snprintf(
        buf, sizeof buf, "{\"t\":%lld,\"e\":\"pkt_out\",\"buf\":%llu,\"port\":%d}",
        static_cast<long long>(queue_.now()),
        static_cast<unsigned long long>(po->buffer_id), po->in_port);
    log_line(std::string_view(buf, static_cast<std::size_t>(n)));
    enact(switch_.packet_out_flood(po->buffer_id, po->in_port, queue_.now()));
    return;
  }

  const auto& fm = std::get<controller::FlowModAction>(action);
  ++stats_.flow_mods;

  std::string line = "{\"t\":" + std::to_string(queue_.now()) +
                     ",\"e\":\"flow_mod\",\"rule\":\"" +
                     render_match(fm.priority, fm.match) +
                     " actions=" + netmodel::to_string(fm.action) + "\"";
  const bool is_drop = std::holds_alternative<netmodel::DropAction>(fm.action);
  if (is_drop && fm.match.dl_src && fm.match.nw_src && fm.match.nw_dst) {
    line += ",\"smac\":\"" + fm.match.dl_src->to_string() + "\",\"src\":\"" +
            fm.match.nw_src->to_string() + "\",\"dst\":\"" +
            fm.match.nw_dst->to_string() + "\"";
  }
  line += '}';
  log_line(line);

  enact(switch_.apply_flow_mod(fm.priority, fm.match, fm.action, queue_.now()));

  if (is_drop && fm.match.dl_src) {
    for (std::size_t i = 0; i < hosts_.size(); ++i) {
      if (hosts_[i].mac == *fm.match.dl_src && attackers_[i].block_at < 0) {
        attackers_[i].block_at = queue_.now();
      }
    }
    ++attackers_blocked_;
    if (attackers_blocked_ == attackers_expected_) {
      take_checkpoint("post_mitigation");
    }
  }
}

void World::nat_from_home(const netmodel::Packet& pkt) {
  log_packet_event("nat_in", pkt, kNatPort);
  ++stats_.nat_ingress;
  const SimTime now = queue_.now();
  if (now >= t0_ && now < end_) {
    ++nat_bins_[{(now - t0_) / kMicrosPerSecond, pkt.src_ip.value}];
  }
  const auto translated = nat_.forward_outward(pkt);
  if (!translated) {
    char buf[96];
    const int n = std::snprintf(buf, sizeof buf,
                                "{\"t\":%lld,\"e\":\"nat_martian\",\"seq\":%llu}",
                                static_cast<long long>(now),
                                static_cast<unsigned long long>(pkt.seq));
    log_line(std::string_view(buf, static_cast<std::size_t>(n)));
    return;
  }
  queue_.schedule(now + cfg_.nat_server_latency,
                  [this, pkt = *translated] { server_receive(pkt); });
}

void World::server_receive(const netmodel::Packet& pkt) {
  char buf[128];
  if (pkt.dst_ip != srv_ip_) {
    const int n = std::snprintf(buf, sizeof buf,
                                "{\"t\":%lld,\"e\":\"srv_ign\",\"seq\":%llu}",
                                static_cast<long long>(queue_.now()),
                                static_cast<unsigned long long>(pkt.seq));
    log_line(std::string_view(buf, static_cast<std::size_t>(n)));
    return;
  }
  const int n = std::snprintf(
      buf, sizeof buf, "{\"t\":%lld,\"e\":\"srv_in\",\"src\":\"%s\",\"seq\":%llu}",
      static_cast<long long>(queue_.now()), pkt.src_ip.to_string().c_str(),
      static_cast<unsigned long long>(pkt.seq));
  log_line(std::string_view(buf, static_cast<std::size_t>(n)));

  const auto reply = server_.handle(pkt, queue_.now());
  if (!reply) {
    ++stats_.server_drops;
    const int dn = std::snprintf(
        buf, sizeof buf, "{\"t\":%lld,\"e\":\"srv_drop\",\"src\":\"%s\",\"seq\":%llu}",
        static_cast<long long>(queue_.now()), pkt.src_ip.to_string().c_str(),
        static_cast<unsigned long long>(pkt.seq));
    log_line(std::string_view(buf, static_cast<std::size_t>(dn)));
    return;
  }
  queue_.schedule(reply->second + cfg_.nat_server_latency,
                  [this, pkt = reply->first] { nat_from_server(pkt); });
}

void World::nat_from_server(const netmodel::Packet& pkt) {
  const auto translated = nat_.forward_inward(pkt);
  if (!translated) {
    ++stats_.nat_unsolicited;
    char buf[96];
    const int n = std::snprintf(buf, sizeof buf,
                                "{\"t\":%lld,\"e\":\"nat_unsol\",\"seq\":%llu}",
                                static_cast<long long>(queue_.now()),
                                static_cast<unsigned long long>(pkt.seq));
    log_line(std::string_view(buf, static_cast<std::size_t>(n)));
    return;
  }
  queue_.schedule(queue_.now() + cfg_.switch_nat_latency,
                  [this, pkt = *translated] { switch_ingress(pkt, kNatPort); });
}

void World::host_receive(int host, const netmodel::Packet& pkt) {
  const dataplane::Host& me = hosts_[static_cast<std::size_t>(host)];
  if (!(pkt.dst_mac == me.mac)) return;  // flooded copy meant for someone else
  if (pkt.dst_ip != me.ip) return;       // reply to a spoofed source

  if (pkt.proto == netmodel::Protocol::IcmpEchoRequest) {
    // Peer echo (pairwise warmup pings): answer immediately.
    netmodel::Packet reply = pkt;
    reply.proto = netmodel::Protocol::IcmpEchoReply;
    reply.src_mac = me.mac;
    reply.dst_mac = pkt.src_mac;
    reply.src_ip = me.ip;
    reply.dst_ip = pkt.src_ip;
    host_send(host, reply);
    return;
  }
  if (pkt.proto != netmodel::Protocol::IcmpEchoReply) return;
  if (stream_host(pkt.seq) != host) return;
  if (stream_kind(pkt.seq) != StreamKind::Benign) return;

  BenignStats& stats = benign_[static_cast<std::size_t>(host)];
  ++stats.received;
  const SimTime rtt = queue_.now() - pkt.created_at;
  stats.rtt_sum_us += static_cast<double>(rtt);
  stats.samples.emplace_back(queue_.now(), rtt);

  char buf[112];
  const int n = std::snprintf(
      buf, sizeof buf, "{\"t\":%lld,\"e\":\"rtt\",\"host\":%d,\"us\":%lld,\"seq\":%llu}",
      static_cast<long long>(queue_.now()), host + 1, static_cast<long long>(rtt),
      static_cast<unsigned long long>(pkt.seq));
  log_line(std::string_view(buf, static_cast<std::size_t>(n)));
}

// ---------------------------------------------------------------------------
// Generators and checkpoints.

void World::schedule_warmup() {
  const std::array<std::uint32_t, 3> streams = {new_stream(0, StreamKind::Warmup),
                                                new_stream(1, StreamKind::Warmup),
                                                new_stream(2, StreamKind::Warmup)};
  std::array<std::uint64_t, 3> counters = {0, 0, 0};

  // Two rounds of "everyone pings everyone, then the server", spaced far
  // enough apart that each controller round trip settles before the next
  // ping; the second round fills in forwarding rules the first could not
  // (a destination must be learned before a rule toward it can install).
  SimTime at = 10'000;
  for (int round = 0; round < 2; ++round) {
    for (int src = 0; src < 3; ++src) {
      for (int dst = 0; dst < 4; ++dst) {
        if (dst == src) continue;
        const netmodel::MacAddress dst_mac = dst < 3 ? hosts_[dst].mac : gw_mac_;
        const netmodel::Ipv4Addr dst_ip = dst < 3 ? hosts_[dst].ip : srv_ip_;
        const std::uint64_t counter = counters[static_cast<std::size_t>(src)]++;
        const std::uint32_t stream = streams[static_cast<std::size_t>(src)];
        queue_.schedule(at, [this, src, stream, counter, dst_mac, dst_ip, at] {
          host_send(src, make_request(src, stream, counter, dst_mac, dst_ip,
                                      cfg_.benign_ping_payload_bytes, at));
        });
        at += 10'000;
      }
    }
  }
}

void World::schedule_benign(int host, std::uint32_t stream, std::uint64_t counter,
                            SimTime at) {
  const HostRole& role = cfg_.hosts[static_cast<std::size_t>(host)];
  if (at >= end_) return;
  if (role.attacker && at >= t0_ + role.attack_start) return;  // flood takes over
  const SimTime interval = role.ping_interval;
  queue_.schedule(at, [this, host, stream, counter, at, interval] {
    ++benign_[static_cast<std::size_t>(host)].sent;
    host_send(host, make_request(host, stream, counter, gw_mac_, srv_ip_,
                                 cfg_.benign_ping_payload_bytes, at));
    schedule_benign(host, stream, counter + 1, at + interval);
  });
}

void World::schedule_attack(int host, std::uint32_t stream, std::uint64_t counter) {
  const HostRole& role = cfg_.hosts[static_cast<std::size_t>(host)];
  const SimTime start = t0_ + role.attack_start;
  const SimTime stop =
      t0_ + std::min(role.attack_stop.value_or(cfg_.duration), cfg_.duration);
  const SimTime at = start + static_cast<SimTime>(counter) * kMicrosPerSecond /
                                 role.attack_rate_pps;
  if (at >= stop) return;
  queue_.schedule(at, [this, host, stream, counter, at] {
    const HostRole& role = cfg_.hosts[static_cast<std::size_t>(host)];
    netmodel::Packet pkt = make_request(host, stream, counter, gw_mac_, srv_ip_,
                                        role.attack_payload_bytes, at);
    if (role.spoofed_src) pkt.src_ip = *role.spoofed_src;
    AttackerStats& astats = attackers_[static_cast<std::size_t>(host)];
    if (astats.first_packet_at < 0) astats.first_packet_at = at;
    host_send(host, pkt);
    schedule_attack(host, stream, counter + 1);
  });
}

void World::take_checkpoint(const std::string& name) {
  checkpoints_.push_back(
      Checkpoint{name, queue_.now(), render_flow_table(switch_.table(), queue_.now())});
  log_line("{\"t\":" + std::to_string(queue_.now()) +
           ",\"e\":\"checkpoint\",\"name\":\"" + name + "\"}");
}

// ---------------------------------------------------------------------------

RunResult World::run() {
  schedule_warmup();

  queue_.schedule(t0_, [this] { take_checkpoint("pingall"); });
  if (attackers_expected_ > 0) {
    SimTime first_attack = end_;
    for (const HostRole& role : cfg_.hosts) {
      if (role.attacker) first_attack = std::min(first_attack, t0_ + role.attack_start);
    }
    queue_.schedule(first_attack - 1, [this] { take_checkpoint("pre_attack"); });
  }
  queue_.schedule(end_, [this] { take_checkpoint("end"); });

  std::mt19937_64 rng(cfg_.seed);
  for (int host = 0; host < 3; ++host) {
    // Ping phase is the one seeded choice: anywhere in [0.5 s, 0.6 s) past
    // measurement start, so each 1 s bin holds exactly one benign ping.
    const SimTime phase =
        500'000 + static_cast<SimTime>(std::uniform_int_distribution<std::uint32_t>(
                      0, 99'999)(rng));
    schedule_benign(host, new_stream(host, StreamKind::Benign), 0, t0_ + phase);
    if (cfg_.hosts[static_cast<std::size_t>(host)].attacker) {
      schedule_attack(host, new_stream(host, StreamKind::Attack), 0);
    }
  }

  // Budget: generous multiple of the expected event count, so a scheduling
  // bug cannot spin forever.
  std::uint64_t expected_attack = 0;
  for (const HostRole& role : cfg_.hosts) {
    if (!role.attacker) continue;
    const SimTime window =
        std::min(role.attack_stop.value_or(cfg_.duration), cfg_.duration) -
        role.attack_start;
    expected_attack += static_cast<std::uint64_t>(role.attack_rate_pps) *
                           static_cast<std::uint64_t>(window) / kMicrosPerSecond +
                       1;
  }
  const std::uint64_t expected_benign =
      3 * (static_cast<std::uint64_t>(cfg_.duration / kMicrosPerSecond) + 2) + 30;
  const std::uint64_t budget = 1'000'000 + expected_attack * 12 + expected_benign * 24;
  queue_.run_until_empty(budget);

  // -------------------------------------------------------------------------
  // Results.
  RunResult result;
  result.stats = stats_;
  result.stats.packets_fired = engine_.packets_fired();
  result.stats.alerts_passed = engine_.alerts_emitted();
  result.stats.alerts_suppressed = engine_.alerts_suppressed();
  result.stats.server_drops = server_.drops();
  result.stats.nat_unsolicited = nat_.unsolicited_drops();
  result.checkpoints = checkpoints_;

  for (std::size_t i = 0; i < hosts_.size(); ++i) {
    const BenignStats& b = benign_[i];
    HostReport hr;
    hr.host = hosts_[i].name;
    hr.ip = hosts_[i].ip;
    hr.requests_sent = b.sent;
    hr.replies_received = b.received;
    hr.avg_rtt_ms = b.received ? b.rtt_sum_us / static_cast<double>(b.received) / 1000.0
                               : 0.0;
    hr.loss_pct = b.sent ? 100.0 * static_cast<double>(b.sent - b.received) /
                               static_cast<double>(b.sent)
                         : 0.0;
    const AttackerStats& a = attackers_[i];
    if (cfg_.hosts[i].attacker && a.first_packet_at >= 0) {
      hr.first_attack_s = us_to_seconds(a.first_packet_at - t0_);
      if (a.alert_at >= 0) hr.alert_s = us_to_seconds(a.alert_at - t0_);
      if (a.block_at >= 0) {
        hr.block_s = us_to_seconds(a.block_at - t0_);
        hr.mitigation_s = us_to_seconds(a.block_at - a.first_packet_at);
      }
    }
    result.report.hosts.push_back(std::move(hr));
  }

  for (const auto& entry : attack_switch_bins_) {
    result.report.attack_peak_pps =
        std::max(result.report.attack_peak_pps, static_cast<double>(entry.second));
  }
  for (const auto& [key, count] : nat_bins_) {
    result.report.timeseries.push_back(
        TimeseriesRow{key.first, netmodel::Ipv4Addr{key.second}, count});
  }

  log_.flush();
  result.event_log_digest = log_.digest();
  result.event_log_lines = log_.lines();
  return result;
}

LoadedRules load_rules(const ScenarioConfig& cfg) {
  LoadedRules out;
  std::string text;
  std::string origin = "<embedded>";
  if (cfg.rules_path.empty()) {
    text = std::string(ids::default_ruleset());
  } else {
    origin = cfg.rules_path;
    std::ifstream in(cfg.rules_path, std::ios::binary);
    if (!in) {
      out.errors.push_back("cannot open rules file '" + cfg.rules_path + "'");
      return out;
    }
    std::ostringstream body;
    body << in.rdbuf();
    text = body.str();
  }
  ids::ParseResult parsed = ids::parse_ruleset(text);
  for (const ids::ParseError& err : parsed.errors) {
    out.errors.push_back(origin + ":" + std::to_string(err.line) + ":" +
                         std::to_string(err.column) + ": " + err.message);
  }
  out.rules = std::move(parsed.rules);
  return out;
}

}  // namespace flowsentry::simkit
