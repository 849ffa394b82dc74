#include "flowsentry/simkit/event_queue.hpp"

#include "flowsentry/fault.hpp"

namespace flowsentry::simkit {

void EventQueue::schedule(SimTime at, std::function<void()> fn) {
  if (at < now_) {
    throw SimulationFault("event scheduled at " + std::to_string(at) +
                          " µs, before current time " + std::to_string(now_) + " µs");
  }
  heap_.push(Event{at, next_seq_++, std::move(fn)});
}

bool EventQueue::step() {
  if (heap_.empty()) return false;
  // priority_queue::top is const; the event must be moved out before the
  // callback runs because it may schedule (and so reallocate) more events.
  Event ev = std::move(const_cast<Event&>(heap_.top()));
  heap_.pop();
  now_ = ev.at;
  ++dispatched_;
  ev.fn();
  return true;
}

void EventQueue::run_until_empty(std::uint64_t max_events) {
  for (std::uint64_t used = 0; used < max_events; ++used) {
    if (!step()) return;
  }
  if (heap_.empty()) return;
  throw SimulationFault("event budget exhausted after " + std::to_string(max_events) +
                        " events; a generator is likely self-scheduling forever");
}

}  // namespace flowsentry::simkit
