#include "flowsentry/simkit/event_log.hpp"

#include <fcntl.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>

#include "flowsentry/fault.hpp"

namespace flowsentry::simkit {

namespace {
constexpr std::size_t kBufferFlushSize = 1 << 20;
constexpr std::uint64_t kFnvPrime = 1099511628211ULL;
}  // namespace

EventLog::EventLog(const std::string& path, std::size_t tail_capacity)
    : path_(path), tail_capacity_(tail_capacity) {
  buffer_.reserve(kBufferFlushSize + 4096);
  if (path_.empty()) return;
  fd_ = ::open(path_.c_str(), O_WRONLY | O_CREAT | O_TRUNC, 0644);
  if (fd_ < 0) {
    throw SimulationFault("cannot open event log '" + path_ +
                          "': " + std::strerror(errno));
  }
}

EventLog::~EventLog() {
  try {
    close();
  } catch (...) {
    // Destructor must not throw; close() explicitly to observe errors.
  }
}

void EventLog::record(std::string_view line) {
  ++lines_;

  for (const char c : line) {
    digest_ = (digest_ ^ static_cast<unsigned char>(c)) * kFnvPrime;
  }
  digest_ = (digest_ ^ static_cast<unsigned char>('\n')) * kFnvPrime;

  tail_.emplace_back(line);
  if (tail_.size() > tail_capacity_) tail_.pop_front();

  if (fd_ >= 0) {
    buffer_.append(line);
    buffer_.push_back('\n');
    if (buffer_.size() >= kBufferFlushSize) flush();
  }
}

void EventLog::write_raw(std::string_view bytes) {
  std::size_t off = 0;
  while (off < bytes.size()) {
    const ssize_t n = ::write(fd_, bytes.data() + off, bytes.size() - off);
    if (n < 0) {
      if (errno == EINTR) continue;
      throw SimulationFault("event log write to '" + path_ +
                            "' failed: " + std::strerror(errno));
    }
    off += static_cast<std::size_t>(n);
  }
}

void EventLog::flush() {
  if (fd_ < 0 || buffer_.empty()) return;
  write_raw(buffer_);
  buffer_.clear();
}

void EventLog::close() {
  if (fd_ < 0) return;
  flush();
  ::close(fd_);
  fd_ = -1;
}

}  // namespace flowsentry::simkit
