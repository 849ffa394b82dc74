#pragma once

#include <string>

#include "flowsentry/dataplane/flow_table.hpp"
#include "flowsentry/time.hpp"

namespace flowsentry::simkit {

/// Renders a flow table the way ovs-ofctl prints one: a header line, then
/// one line per rule in (priority descending, installed_at ascending)
/// order, fields in the order
///   cookie=, duration=, table=0, n_packets=, n_bytes=, idle_age=,
///   priority=,<match fields> actions=
/// with match fields ordered proto, in_port, dl_src, dl_dst, nw_src, nw_dst.
std::string render_flow_table(const dataplane::FlowTable& table, SimTime now);

/// The match half of a rule line ("priority=1,in_port=2,dl_dst=..."); also
/// used by flow-mod event records.
std::string render_match(std::uint32_t priority, const netmodel::Match& match);

}  // namespace flowsentry::simkit
