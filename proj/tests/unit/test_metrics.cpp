#include <string>

#include "doctest.h"
#include "flowsentry/simkit/metrics.hpp"

using namespace flowsentry;
using namespace flowsentry::simkit;
using netmodel::Ipv4Addr;

namespace {

MetricsReport sample_report() {
  MetricsReport report;

  HostReport h1;
  h1.host = "h1";
  h1.ip = Ipv4Addr::parse("10.0.0.1").value();
  h1.requests_sent = 60;
  h1.replies_received = 60;
  h1.avg_rtt_ms = 0.380;
  h1.loss_pct = 0.0;
  h1.first_attack_s = 60.0;
  h1.alert_s = 60.000898;
  h1.block_s = 60.000898;
  h1.mitigation_s = 0.000898;

  HostReport h2;
  h2.host = "h2";
  h2.ip = Ipv4Addr::parse("10.0.0.2").value();
  h2.requests_sent = 75;
  h2.replies_received = 72;
  h2.avg_rtt_ms = 0.431;
  h2.loss_pct = 4.0;

  report.hosts = {h1, h2};
  report.attack_peak_pps = 42000.0;
  report.timeseries = {
      {0, Ipv4Addr::parse("10.0.0.1").value(), 1},
      {0, Ipv4Addr::parse("10.0.0.2").value(), 1},
      {1, Ipv4Addr::parse("10.0.0.1").value(), 20973},
  };
  return report;
}

}  // namespace

TEST_CASE("metrics csv lists one row per host with '-' for never-attacked") {
  CHECK(render_metrics_csv(sample_report()) ==
        "host,avg_rtt_ms,loss_pct,mitigation_s\n"
        "h1,0.380,0.00,0.000898\n"
        "h2,0.431,4.00,-\n");
}

TEST_CASE("metrics csv of an empty report is just the header") {
  CHECK(render_metrics_csv(MetricsReport{}) == "host,avg_rtt_ms,loss_pct,mitigation_s\n");
  CHECK(render_timeseries_csv(MetricsReport{}) == "t_bin_s,src,pps\n");
}

TEST_CASE("timeseries csv writes one row per (bin, source)") {
  CHECK(render_timeseries_csv(sample_report()) ==
        "t_bin_s,src,pps\n"
        "0,10.0.0.1,1\n"
        "0,10.0.0.2,1\n"
        "1,10.0.0.1,20973\n");
}

TEST_CASE("the summary table is fixed-width with a peak-rate footer") {
  CHECK(render_summary(sample_report(), ScenarioId::I) ==
        "scenario  host   mitigation_s  avg_rtt_ms  loss_pct\n"
        "I         h1     0.000898      0.380       0.00\n"
        "I         h2     -             0.431       4.00\n"
        "attack_peak_pps=42000\n");
}

TEST_CASE("the label overload serves renders where no scenario id exists") {
  const std::string out = render_summary(sample_report(), "-");
  CHECK(out.find("-         h1") == out.find('\n') + 1);
  CHECK(render_summary(sample_report(), ScenarioId::Baseline).find("baseline  h1") !=
        std::string::npos);
}
