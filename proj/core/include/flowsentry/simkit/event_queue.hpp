#pragma once

#include <cstdint>
#include <functional>
#include <queue>
#include <vector>

#include "flowsentry/time.hpp"

namespace flowsentry::simkit {

/// Deterministic discrete-event dispatcher. Events run in (time, insertion
/// order) order; scheduling into the past is a fault. All simulation state
/// is mutated exclusively from event callbacks, so a fixed schedule always
/// replays identically.
class EventQueue {
 public:
  /// Enqueues `fn` to run at virtual time `at` (≥ now).
  void schedule(SimTime at, std::function<void()> fn);

  /// Runs the earliest event; false when the queue is empty.
  bool step();

  /// Drains the queue. `max_events` guards against runaway self-scheduling.
  void run_until_empty(std::uint64_t max_events = UINT64_MAX);

  SimTime now() const { return now_; }
  bool empty() const { return heap_.empty(); }
  std::uint64_t dispatched() const { return dispatched_; }

 private:
  struct Event {
    SimTime at;
    std::uint64_t seq;
    std::function<void()> fn;
  };
  struct Later {
    bool operator()(const Event& a, const Event& b) const {
      if (a.at != b.at) return a.at > b.at;
      return a.seq > b.seq;
    }
  };

  std::priority_queue<Event, std::vector<Event>, Later> heap_;
  SimTime now_ = 0;
  std::uint64_t next_seq_ = 0;
  std::uint64_t dispatched_ = 0;
};

}  // namespace flowsentry::simkit
