#pragma once

#include <cmath>
#include <cstdint>

namespace flowsentry {

/// Virtual simulation time in integer microseconds. Integer so event
/// ordering is exact and runs are reproducible bit for bit.
using SimTime = std::int64_t;

/// Switch port identifier. Ports are small positive integers.
using PortId = std::int32_t;

inline constexpr SimTime kMicrosPerSecond = 1'000'000;

inline constexpr SimTime seconds_us(double seconds) {
  return static_cast<SimTime>(seconds * static_cast<double>(kMicrosPerSecond) + 0.5);
}

inline constexpr double us_to_seconds(SimTime us) {
  return static_cast<double>(us) / static_cast<double>(kMicrosPerSecond);
}

}  // namespace flowsentry
