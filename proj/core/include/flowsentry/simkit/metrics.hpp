#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "flowsentry/netmodel/addr.hpp"
#include "flowsentry/simkit/config.hpp"

namespace flowsentry::simkit {

/// Per-host quality-of-service results over the measured window. Benign
/// counters cover the host's normal pings only; the attack columns are set
/// for attacking hosts once their drop rule lands.
struct HostReport {
  std::string host;
  netmodel::Ipv4Addr ip{};
  std::uint64_t requests_sent = 0;
  std::uint64_t replies_received = 0;
  double avg_rtt_ms = 0.0;
  double loss_pct = 0.0;

  std::optional<double> first_attack_s;  // relative to measurement start
  std::optional<double> alert_s;
  std::optional<double> block_s;
  std::optional<double> mitigation_s;    // block − first attack packet
};

/// One 1-second bin of traffic forwarded toward the server, per source IP.
struct TimeseriesRow {
  std::int64_t bin_s = 0;
  netmodel::Ipv4Addr src{};
  std::uint64_t pps = 0;
};

struct MetricsReport {
  std::vector<HostReport> hosts;
  double attack_peak_pps = 0.0;
  std::vector<TimeseriesRow> timeseries;  // sorted by (bin, src)
};

/// metrics.csv body: header + one row per host,
/// `host,avg_rtt_ms,loss_pct,mitigation_s` with "-" for hosts that never
/// attacked.
std::string render_metrics_csv(const MetricsReport& report);

/// timeseries.csv body: header + `t_bin_s,src,pps` rows.
std::string render_timeseries_csv(const MetricsReport& report);

/// Fixed-column human summary printed by the CLI after a run. The label
/// overload serves re-rendering from saved CSVs, where the scenario id is
/// not recorded ("-" is conventional there).
std::string render_summary(const MetricsReport& report, ScenarioId scenario);
std::string render_summary(const MetricsReport& report, const std::string& label);

}  // namespace flowsentry::simkit
