#pragma once

#include <string>

#include "flowsentry/netmodel/addr.hpp"
#include "flowsentry/time.hpp"

namespace flowsentry::dataplane {

/// A home-network endpoint: static MAC/IP bound to one switch port.
/// Hosts accept only frames addressed to their MAC and IP; behavior
/// (pinging, flooding, replying) lives in the simulation harness.
struct Host {
  std::string name;
  netmodel::MacAddress mac{};
  netmodel::Ipv4Addr ip{};
  PortId port = 0;
};

}  // namespace flowsentry::dataplane
