#pragma once

#include <cstdint>
#include <deque>
#include <string>
#include <string_view>

#include "flowsentry/time.hpp"

namespace flowsentry::simkit {

/// Append-only JSONL run log. Lines are written through a large buffer (a
/// busy run emits millions of records), a 64-bit FNV-1a digest of the byte
/// stream is maintained for cheap whole-run comparison, and the most recent
/// lines are retained in memory so a simulation fault can show its context.
class EventLog {
 public:
  /// Opens `path` for writing; an empty path keeps the log memory-only
  /// (digest and tail still work), which unit tests use.
  explicit EventLog(const std::string& path, std::size_t tail_capacity = 50);
  ~EventLog();

  EventLog(const EventLog&) = delete;
  EventLog& operator=(const EventLog&) = delete;

  /// Appends one record; `line` must be a complete JSON object without the
  /// trailing newline.
  void record(std::string_view line);

  void flush();
  void close();

  std::uint64_t digest() const { return digest_; }
  std::uint64_t lines() const { return lines_; }
  const std::deque<std::string>& tail() const { return tail_; }
  const std::string& path() const { return path_; }

 private:
  void write_raw(std::string_view bytes);

  std::string path_;
  int fd_ = -1;
  std::string buffer_;
  std::uint64_t digest_ = 14695981039346656037ULL;  // FNV-1a offset basis
  std::uint64_t lines_ = 0;
  std::size_t tail_capacity_;
  std::deque<std::string> tail_;
};

}  // namespace flowsentry::simkit
