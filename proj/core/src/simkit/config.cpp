#include "flowsentry/simkit/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace flowsentry::simkit {

const char* to_string(ScenarioId id) {
  switch (id) {
    case ScenarioId::Baseline: return "baseline";
    case ScenarioId::I: return "I";
    case ScenarioId::II: return "II";
    case ScenarioId::III: return "III";
  }
  return "baseline";
}

std::optional<ScenarioId> scenario_from_string(std::string_view name) {
  if (name == "baseline") return ScenarioId::Baseline;
  if (name == "I") return ScenarioId::I;
  if (name == "II") return ScenarioId::II;
  if (name == "III") return ScenarioId::III;
  return std::nullopt;
}

ScenarioConfig preset(ScenarioId id) {
  ScenarioConfig cfg;
  cfg.scenario = id;
  switch (id) {
    case ScenarioId::Baseline:
      cfg.duration = seconds_us(30);
      break;
    case ScenarioId::I:
      // Two hosts flood the server from t=60 s; the third keeps pinging.
      cfg.duration = seconds_us(75);
      for (const int host : {0, 2}) {
        cfg.hosts[host].attacker = true;
        cfg.hosts[host].attack_start = seconds_us(60);
        cfg.hosts[host].attack_rate_pps = 21'000;
        cfg.hosts[host].attack_payload_bytes = 0;
      }
      break;
    case ScenarioId::II:
      // One host floods from t=2 s behind a spoofed in-network source.
      cfg.duration = seconds_us(10);
      cfg.hosts[0].attacker = true;
      cfg.hosts[0].attack_start = seconds_us(2);
      cfg.hosts[0].attack_rate_pps = 42'000;
      cfg.hosts[0].attack_payload_bytes = 0;
      cfg.hosts[0].spoofed_src = netmodel::Ipv4Addr::parse("10.0.0.55");
      break;
    case ScenarioId::III:
      // One host floods oversized payloads from t=11 s.
      cfg.duration = seconds_us(20);
      cfg.hosts[0].attacker = true;
      cfg.hosts[0].attack_start = seconds_us(11);
      cfg.hosts[0].attack_rate_pps = 42'000;
      cfg.hosts[0].attack_payload_bytes = 900;
      break;
  }
  return cfg;
}

std::vector<std::string> ScenarioConfig::validate() const {
  std::vector<std::string> errors;
  if (duration <= 0) errors.push_back("duration_s must be positive");
  if (warmup < seconds_us(0.5)) {
    errors.push_back("warmup_s must be at least 0.5 (pairwise pings need the room)");
  }
  if (server_capacity_pps == 0) errors.push_back("server.capacity_pps must be positive");
  if (server_queue_limit == 0) errors.push_back("server.queue_limit must be positive");

  const SimTime* latencies[] = {&host_switch_latency,    &switch_nat_latency,
                                &nat_server_latency,     &mirror_latency,
                                &alert_channel_latency,  &controller_proc_latency,
                                &control_link_latency};
  for (const SimTime* latency : latencies) {
    if (*latency < 0) {
      errors.push_back("latencies must be non-negative");
      break;
    }
  }

  for (std::size_t i = 0; i < hosts.size(); ++i) {
    const HostRole& role = hosts[i];
    const std::string who = "host" + std::to_string(i + 1);
    if (role.ping_interval <= 0) errors.push_back(who + ".ping_interval_s must be positive");
    if (!role.attacker) continue;
    if (role.attack_start < 0 || role.attack_start >= duration) {
      errors.push_back(who + ".attack_start_s must lie inside the run duration");
    }
    if (role.attack_rate_pps == 0) {
      errors.push_back(who + ".attack_rate_pps must be positive");
    }
    if (role.attack_stop && *role.attack_stop <= role.attack_start) {
      errors.push_back(who + ".attack_stop_s must be after attack_start_s");
    }
  }
  return errors;
}

namespace {

bool parse_double(std::string_view value, double& out) {
  const char* begin = value.data();
  const char* end = value.data() + value.size();
  auto [ptr, ec] = std::from_chars(begin, end, out);
  return ec == std::errc{} && ptr == end;
}

bool parse_u32(std::string_view value, std::uint32_t& out) {
  const char* begin = value.data();
  const char* end = value.data() + value.size();
  auto [ptr, ec] = std::from_chars(begin, end, out);
  return ec == std::errc{} && ptr == end;
}

bool parse_u64(std::string_view value, std::uint64_t& out) {
  const char* begin = value.data();
  const char* end = value.data() + value.size();
  auto [ptr, ec] = std::from_chars(begin, end, out);
  return ec == std::errc{} && ptr == end;
}

bool parse_bool(std::string_view value, bool& out) {
  if (value == "true" || value == "1") { out = true; return true; }
  if (value == "false" || value == "0") { out = false; return true; }
  return false;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

/// Applies one key=value pair; returns an error message or empty string.
std::string apply_pair(ScenarioConfig& cfg, std::string_view key, std::string_view value) {
  const auto bad = [&](const char* what) {
    return std::string(key) + ": expected " + what + ", got '" + std::string(value) + "'";
  };

  double d = 0;
  std::uint32_t u = 0;
  std::uint64_t u64 = 0;
  bool b = false;

  if (key == "scenario") {
    const auto id = scenario_from_string(value);
    if (!id) return bad("one of baseline|I|II|III");
    cfg.scenario = *id;
    return "";
  }
  if (key == "duration_s") {
    if (!parse_double(value, d)) return bad("a number of seconds");
    cfg.duration = seconds_us(d);
    return "";
  }
  if (key == "warmup_s") {
    if (!parse_double(value, d)) return bad("a number of seconds");
    cfg.warmup = seconds_us(d);
    return "";
  }
  if (key == "seed") {
    if (!parse_u64(value, u64)) return bad("an unsigned integer");
    cfg.seed = u64;
    return "";
  }
  if (key == "rules_path") {
    cfg.rules_path = std::string(value);
    return "";
  }
  if (key == "server.capacity_pps") {
    if (!parse_u32(value, u)) return bad("an unsigned integer");
    cfg.server_capacity_pps = u;
    return "";
  }
  if (key == "server.queue_limit") {
    if (!parse_u32(value, u)) return bad("an unsigned integer");
    cfg.server_queue_limit = u;
    return "";
  }
  if (key == "benign.ping_payload_bytes") {
    if (!parse_u32(value, u)) return bad("an unsigned integer");
    cfg.benign_ping_payload_bytes = u;
    return "";
  }

  struct LatencyKey {
    const char* name;
    SimTime ScenarioConfig::*field;
  };
  static constexpr LatencyKey latency_keys[] = {
      {"latency.host_switch_us", &ScenarioConfig::host_switch_latency},
      {"latency.switch_nat_us", &ScenarioConfig::switch_nat_latency},
      {"latency.nat_server_us", &ScenarioConfig::nat_server_latency},
      {"latency.mirror_us", &ScenarioConfig::mirror_latency},
      {"latency.alert_channel_us", &ScenarioConfig::alert_channel_latency},
      {"latency.controller_proc_us", &ScenarioConfig::controller_proc_latency},
      {"latency.control_link_us", &ScenarioConfig::control_link_latency},
  };
  for (const LatencyKey& lk : latency_keys) {
    if (key != lk.name) continue;
    if (!parse_u64(value, u64)) return bad("microseconds as an unsigned integer");
    cfg.*(lk.field) = static_cast<SimTime>(u64);
    return "";
  }

  // hostN.* keys
  if (key.size() > 6 && key.substr(0, 4) == "host" && key[4] >= '1' && key[4] <= '3' &&
      key[5] == '.') {
    HostRole& role = cfg.hosts[static_cast<std::size_t>(key[4] - '1')];
    const std::string_view field = key.substr(6);
    if (field == "ping_interval_s") {
      if (!parse_double(value, d)) return bad("a number of seconds");
      role.ping_interval = seconds_us(d);
      return "";
    }
    if (field == "attacker") {
      if (!parse_bool(value, b)) return bad("true or false");
      role.attacker = b;
      return "";
    }
    if (field == "attack_start_s") {
      if (!parse_double(value, d)) return bad("a number of seconds");
      role.attack_start = seconds_us(d);
      return "";
    }
    if (field == "attack_stop_s") {
      if (!parse_double(value, d)) return bad("a number of seconds");
      role.attack_stop = seconds_us(d);
      return "";
    }
    if (field == "attack_rate_pps") {
      if (!parse_u32(value, u)) return bad("an unsigned integer");
      role.attack_rate_pps = u;
      return "";
    }
    if (field == "attack_payload_bytes") {
      if (!parse_u32(value, u)) return bad("an unsigned integer");
      role.attack_payload_bytes = u;
      return "";
    }
    if (field == "spoofed_src") {
      const auto ip = netmodel::Ipv4Addr::parse(value);
      if (!ip) return bad("an IPv4 address");
      role.spoofed_src = *ip;
      return "";
    }
  }

  return "unknown config key '" + std::string(key) + "'";
}

}  // namespace

std::vector<std::string> apply_config_text(ScenarioConfig& cfg, std::string_view text) {
  std::vector<std::string> errors;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    ++line_no;
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view raw = text.substr(start, end - start);
    const bool last = end == text.size();
    start = end + 1;

    const std::string_view line = trim(raw);
    if (!line.empty() && line.front() != '#') {
      const std::size_t eq = line.find('=');
      if (eq == std::string_view::npos) {
        errors.push_back("line " + std::to_string(line_no) + ": expected key=value");
      } else {
        const std::string err =
            apply_pair(cfg, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
        if (!err.empty()) {
          errors.push_back("line " + std::to_string(line_no) + ": " + err);
        }
      }
    }
    if (last) break;
  }
  return errors;
}

std::vector<std::string> apply_config_file(ScenarioConfig& cfg, const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    return {"cannot open config file '" + path + "'"};
  }
  std::ostringstream body;
  body << in.rdbuf();
  return apply_config_text(cfg, body.str());
}

}  // namespace flowsentry::simkit
