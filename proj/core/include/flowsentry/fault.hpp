#pragma once

#include <stdexcept>

namespace flowsentry {

/// Configuration or wiring error detected while the simulation is running
/// (e.g. a flow rule pointing at a port that does not exist). Aborts the
/// run; the CLI reports it together with the tail of the event log.
class SimulationFault : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace flowsentry
