#include "flowsentry/simkit/metrics.hpp"

#include <cstdio>

namespace flowsentry::simkit {

namespace {

std::string format_optional_s(const std::optional<double>& value) {
  if (!value) return "-";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", *value);
  return buf;
}

}  // namespace

std::string render_metrics_csv(const MetricsReport& report) {
  std::string out = "host,avg_rtt_ms,loss_pct,mitigation_s\n";
  char buf[128];
  for (const HostReport& host : report.hosts) {
    std::snprintf(buf, sizeof buf, "%s,%.3f,%.2f,", host.host.c_str(), host.avg_rtt_ms,
                  host.loss_pct);
    out += buf;
    out += format_optional_s(host.mitigation_s);
    out += '\n';
  }
  return out;
}

std::string render_timeseries_csv(const MetricsReport& report) {
  std::string out = "t_bin_s,src,pps\n";
  char buf[64];
  for (const TimeseriesRow& row : report.timeseries) {
    std::snprintf(buf, sizeof buf, "%lld,%s,%llu\n", static_cast<long long>(row.bin_s),
                  row.src.to_string().c_str(), static_cast<unsigned long long>(row.pps));
    out += buf;
  }
  return out;
}

std::string render_summary(const MetricsReport& report, ScenarioId scenario) {
  return render_summary(report, std::string(to_string(scenario)));
}

std::string render_summary(const MetricsReport& report, const std::string& label) {
  std::string out = "scenario  host   mitigation_s  avg_rtt_ms  loss_pct\n";
  char buf[128];
  for (const HostReport& host : report.hosts) {
    std::snprintf(buf, sizeof buf, "%-9s %-6s %-13s %-11.3f %.2f\n", label.c_str(),
                  host.host.c_str(), format_optional_s(host.mitigation_s).c_str(),
                  host.avg_rtt_ms, host.loss_pct);
    out += buf;
  }
  std::snprintf(buf, sizeof buf, "attack_peak_pps=%.0f\n", report.attack_peak_pps);
  out += buf;
  return out;
}

}  // namespace flowsentry::simkit
