#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "flowsentry/netmodel/addr.hpp"
#include "flowsentry/netmodel/flow.hpp"

namespace flowsentry::ids {

/// Rate predicate: fire when strictly more than `count` packets from one
/// source arrive within a trailing window of `seconds`.
struct RateFilter {
  std::uint32_t count = 0;
  std::uint32_t seconds = 0;

  bool operator==(const RateFilter&) const = default;
};

/// One parsed detection rule. At least one of rate_filter / dsize_gt is
/// present; when both are, the size test gates which packets the rate
/// window counts.
struct DetectionRule {
  netmodel::ProtoClass proto = netmodel::ProtoClass::Icmp;
  netmodel::Cidr src;
  netmodel::Cidr dst;
  std::string msg;
  std::optional<RateFilter> rate_filter;
  std::optional<std::uint32_t> dsize_gt;
  std::uint32_t sid = 0;

  bool operator==(const DetectionRule&) const = default;
};

struct ParseError {
  std::size_t line = 0;    // 1-based
  std::size_t column = 0;  // 1-based
  std::string message;
};

struct ParseResult {
  std::vector<DetectionRule> rules;
  std::vector<ParseError> errors;

  bool ok() const { return errors.empty(); }
};

/// Parses a ruleset: one rule per non-empty, non-`#`-comment line, grammar
///
///   alert icmp <cidr|!cidr|any> any -> <cidr|ip|any> any ( key:value; ... )
///
/// with options msg:"...", detection_filter:track by_src, count N,
/// seconds M, dsize:>N and sid:N. Unknown option keys, non-`any` ports,
/// missing or duplicate sids are errors; a bad line is reported and
/// skipped, parsing continues on the next line.
ParseResult parse_ruleset(std::string_view text);

/// Canonical one-line rendering. format_rule(r) always reparses to a rule
/// equal to r.
std::string format_rule(const DetectionRule& rule);

/// The detection rules the simulator ships with: the over-rate home-network
/// rule, its outside-network twin, and the oversized-payload rule, all
/// targeting the server and alerting "ryu block".
std::string_view default_ruleset();

}  // namespace flowsentry::ids
