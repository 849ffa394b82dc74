// flowsentry — command-line front end for the simulator.
//
//   flowsentry run --scenario I [--config cfg] [--seed N] [--out DIR] [--rules PATH]
//   flowsentry rules-check PATH
//   flowsentry report --out DIR
//
// Exit codes: 0 success, 1 configuration/usage/parse error, 2 simulation fault.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "flowsentry/fault.hpp"
#include "flowsentry/ids/rules.hpp"
#include "flowsentry/simkit/config.hpp"
#include "flowsentry/simkit/dump.hpp"
#include "flowsentry/simkit/event_log.hpp"
#include "flowsentry/simkit/metrics.hpp"
#include "flowsentry/simkit/world.hpp"

namespace fs = std::filesystem;
using namespace flowsentry;

namespace {

int fail_config(const std::vector<std::string>& errors) {
  for (const std::string& err : errors) {
    std::cerr << "error: " << err << '\n';
  }
  return 1;
}

bool write_file(const fs::path& path, const std::string& body, std::string& error) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << body;
  out.close();
  if (!out) {
    error = "cannot write " + path.string();
    return false;
  }
  return true;
}

struct RunOptions {
  std::string scenario;
  std::string config_path;
  std::uint64_t seed = 42;
  bool seed_set = false;
  std::string out_dir = "./out";
  std::string rules_path;
  bool rules_set = false;
};

int cmd_run(const RunOptions& opts) {
  if (opts.scenario.empty() && opts.config_path.empty()) {
    return fail_config({"run needs --scenario or --config"});
  }

  simkit::ScenarioConfig cfg;
  if (!opts.scenario.empty()) {
    const auto id = simkit::scenario_from_string(opts.scenario);
    if (!id) return fail_config({"unknown scenario '" + opts.scenario + "'"});
    cfg = simkit::preset(*id);
  }
  if (!opts.config_path.empty()) {
    const auto errors = simkit::apply_config_file(cfg, opts.config_path);
    if (!errors.empty()) {
      std::vector<std::string> prefixed;
      for (const std::string& err : errors) prefixed.push_back(opts.config_path + ": " + err);
      return fail_config(prefixed);
    }
  }
  if (opts.seed_set) cfg.seed = opts.seed;
  if (opts.rules_set) cfg.rules_path = opts.rules_path;

  const auto config_errors = cfg.validate();
  if (!config_errors.empty()) return fail_config(config_errors);

  const auto loaded = simkit::load_rules(cfg);
  if (!loaded.ok()) return fail_config(loaded.errors);

  std::error_code ec;
  fs::create_directories(opts.out_dir, ec);
  if (ec) return fail_config({"cannot create output directory " + opts.out_dir});
  const fs::path out_dir(opts.out_dir);

  simkit::EventLog log((out_dir / "events.jsonl").string());
  try {
    simkit::World world(cfg, loaded.rules, log);
    const simkit::RunResult result = world.run();

    std::string error;
    if (!write_file(out_dir / "metrics.csv", simkit::render_metrics_csv(result.report),
                    error) ||
        !write_file(out_dir / "timeseries.csv",
                    simkit::render_timeseries_csv(result.report), error)) {
      return fail_config({error});
    }
    for (const simkit::Checkpoint& cp : result.checkpoints) {
      if (!write_file(out_dir / ("flowtable_" + cp.name + ".txt"), cp.dump, error)) {
        return fail_config({error});
      }
    }

    std::cout << simkit::render_summary(result.report, cfg.scenario);
    std::printf(
        "events=%llu digest=%016llx switch_in=%llu mirrored=%llu alerts=%llu+%llu "
        "flow_mods=%llu switch_drops=%llu server_drops=%llu\n",
        static_cast<unsigned long long>(result.event_log_lines),
        static_cast<unsigned long long>(result.event_log_digest),
        static_cast<unsigned long long>(result.stats.switch_ingress),
        static_cast<unsigned long long>(result.stats.mirror_delivered),
        static_cast<unsigned long long>(result.stats.alerts_passed),
        static_cast<unsigned long long>(result.stats.alerts_suppressed),
        static_cast<unsigned long long>(result.stats.flow_mods),
        static_cast<unsigned long long>(result.stats.switch_drops),
        static_cast<unsigned long long>(result.stats.server_drops));
    return 0;
  } catch (const SimulationFault& fault) {
    log.flush();
    std::cerr << "simulation fault: " << fault.what() << "\n";
    std::cerr << "last " << log.tail().size() << " event records:\n";
    for (const std::string& line : log.tail()) {
      std::cerr << "  " << line << '\n';
    }
    return 2;
  }
}

int cmd_rules_check(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot open rules file '" << path << "'\n";
    return 1;
  }
  std::ostringstream body;
  body << in.rdbuf();

  const ids::ParseResult parsed = ids::parse_ruleset(body.str());
  if (!parsed.ok()) {
    for (const ids::ParseError& err : parsed.errors) {
      std::cerr << path << ':' << err.line << ':' << err.column << ": error: "
                << err.message << '\n';
    }
    return 1;
  }
  for (const ids::DetectionRule& rule : parsed.rules) {
    std::cout << ids::format_rule(rule) << '\n';
  }
  std::cout << parsed.rules.size() << " rules OK\n";
  return 0;
}

// Rebuilds a report from the CSVs `run` wrote. The attack peak is not part
// of the CSV contract, so the footer here shows the forwarded-traffic peak
// computed from the time series instead.
int cmd_report(const std::string& out_dir) {
  const fs::path dir(out_dir);
  std::ifstream metrics(dir / "metrics.csv");
  if (!metrics) {
    std::cerr << "error: cannot open " << (dir / "metrics.csv").string() << '\n';
    return 1;
  }

  simkit::MetricsReport report;
  std::string line;
  std::getline(metrics, line);  // header
  while (std::getline(metrics, line)) {
    if (line.empty()) continue;
    simkit::HostReport host;
    std::istringstream fields(line);
    std::string cell;
    if (!std::getline(fields, host.host, ',')) continue;
    if (std::getline(fields, cell, ',')) host.avg_rtt_ms = std::stod(cell);
    if (std::getline(fields, cell, ',')) host.loss_pct = std::stod(cell);
    if (std::getline(fields, cell, ',') && cell != "-") {
      host.mitigation_s = std::stod(cell);
    }
    report.hosts.push_back(std::move(host));
  }

  std::map<std::int64_t, std::uint64_t> bin_totals;
  std::ifstream timeseries(dir / "timeseries.csv");
  if (timeseries) {
    std::getline(timeseries, line);  // header
    while (std::getline(timeseries, line)) {
      if (line.empty()) continue;
      std::istringstream fields(line);
      std::string bin, src, pps;
      if (std::getline(fields, bin, ',') && std::getline(fields, src, ',') &&
          std::getline(fields, pps, ',')) {
        bin_totals[std::stoll(bin)] += std::stoull(pps);
      }
    }
  }
  std::uint64_t peak = 0;
  for (const auto& entry : bin_totals) peak = std::max(peak, entry.second);

  std::cout << simkit::render_summary(report, std::string("-"));
  std::printf("forwarded_peak_pps=%llu\n", static_cast<unsigned long long>(peak));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"SDN-based DDoS detection and mitigation simulator"};
  app.require_subcommand(1);

  RunOptions run_opts;
  CLI::App* run = app.add_subcommand("run", "Execute a scenario and write its artifacts");
  run->add_option("--scenario", run_opts.scenario,
                  "Scenario preset: baseline, I, II or III");
  run->add_option("--config", run_opts.config_path,
                  "key=value config file applied over the preset");
  auto* seed_opt = run->add_option("--seed", run_opts.seed, "RNG seed (default 42)");
  run->add_option("--out", run_opts.out_dir, "Output directory (default ./out)");
  auto* rules_opt =
      run->add_option("--rules", run_opts.rules_path,
                      "Detection ruleset path (default: embedded ruleset)");

  std::string rules_file;
  CLI::App* rules_check =
      app.add_subcommand("rules-check", "Parse a ruleset and print its normal form");
  rules_check->add_option("path", rules_file, "Ruleset file")->required();

  std::string report_dir = "./out";
  CLI::App* report =
      app.add_subcommand("report", "Re-render the run summary from saved CSVs");
  report->add_option("--out", report_dir, "Directory holding metrics.csv");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  if (run->parsed()) {
    run_opts.seed_set = seed_opt->count() > 0;
    run_opts.rules_set = rules_opt->count() > 0;
    return cmd_run(run_opts);
  }
  if (rules_check->parsed()) return cmd_rules_check(rules_file);
  if (report->parsed()) return cmd_report(report_dir);
  return 1;
}
