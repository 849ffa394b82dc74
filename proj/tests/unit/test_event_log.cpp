#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "flowsentry/simkit/event_log.hpp"

using namespace flowsentry::simkit;

namespace {

// Reference FNV-1a over the exact byte stream the log claims to hash:
// each record followed by its newline.
std::uint64_t fnv1a(const std::vector<std::string>& lines) {
  std::uint64_t h = 14695981039346656037ULL;
  for (const std::string& line : lines) {
    for (const char c : line) {
      h ^= static_cast<unsigned char>(c);
      h *= 1099511628211ULL;
    }
    h ^= static_cast<unsigned char>('\n');
    h *= 1099511628211ULL;
  }
  return h;
}

std::string temp_log_path(const char* name) {
  return std::string("/tmp/flowsentry_test_") + name + ".jsonl";
}

}  // namespace

TEST_CASE("an empty log has the offset-basis digest and zero lines") {
  EventLog log("");
  CHECK(log.lines() == 0);
  CHECK(log.digest() == 14695981039346656037ULL);
  CHECK(log.tail().empty());
}

TEST_CASE("digest and line count match a byte-level recomputation") {
  const std::vector<std::string> lines = {
      R"({"t":0,"e":"sw_in","seq":1})",
      R"({"t":20,"e":"mir","seq":1})",
      R"({"t":470,"e":"alert","sid":1000001})",
  };
  EventLog log("");
  for (const std::string& line : lines) log.record(line);

  CHECK(log.lines() == 3);
  CHECK(log.digest() == fnv1a(lines));
}

TEST_CASE("the digest depends on content and order") {
  EventLog ab(""), ba(""), a2("");
  ab.record("alpha");
  ab.record("beta");
  ba.record("beta");
  ba.record("alpha");
  a2.record("alpha");
  a2.record("betb");
  CHECK(ab.digest() != ba.digest());
  CHECK(ab.digest() != a2.digest());
}

TEST_CASE("the tail keeps only the most recent lines in order") {
  EventLog log("", 5);
  for (int i = 0; i < 12; ++i) {
    log.record("line " + std::to_string(i));
  }
  REQUIRE(log.tail().size() == 5);
  for (int i = 0; i < 5; ++i) {
    CHECK(log.tail()[static_cast<std::size_t>(i)] == "line " + std::to_string(7 + i));
  }
}

TEST_CASE("a file-backed log round-trips every line through the buffer") {
  const std::string path = temp_log_path("roundtrip");
  std::vector<std::string> lines;
  // Enough volume to force several buffer flushes (the buffer is ~1 MB).
  std::uint64_t expect_digest = 0;
  {
    EventLog log(path);
    std::string payload(400, 'x');
    for (int i = 0; i < 10000; ++i) {
      lines.push_back(R"({"n":)" + std::to_string(i) + R"(,"pad":")" + payload + "\"}");
      log.record(lines.back());
    }
    expect_digest = log.digest();
    CHECK(log.path() == path);
  }  // destructor closes and flushes

  std::ifstream in(path);
  REQUIRE(in.good());
  std::string line;
  std::size_t n = 0;
  std::uint64_t h = 14695981039346656037ULL;
  while (std::getline(in, line)) {
    REQUIRE(n < lines.size());
    CHECK(line == lines[n]);
    for (const char c : line) {
      h ^= static_cast<unsigned char>(c);
      h *= 1099511628211ULL;
    }
    h ^= static_cast<unsigned char>('\n');
    h *= 1099511628211ULL;
    ++n;
  }
  CHECK(n == lines.size());
  CHECK(h == expect_digest);
  std::remove(path.c_str());
}

TEST_CASE("flush makes everything written so far visible on disk") {
  const std::string path = temp_log_path("flush");
  EventLog log(path);
  log.record("first");
  log.record("second");
  log.flush();

  std::ifstream in(path);
  std::stringstream contents;
  contents << in.rdbuf();
  CHECK(contents.str() == "first\nsecond\n");

  log.close();
  std::remove(path.c_str());
}

TEST_CASE("memory-only and file-backed logs agree on digests") {
  const std::string path = temp_log_path("agree");
  EventLog mem("");
  std::uint64_t file_digest = 0;
  std::uint64_t file_lines = 0;
  {
    EventLog file(path);
    for (int i = 0; i < 100; ++i) {
      const std::string line = R"({"i":)" + std::to_string(i * i) + "}";
      mem.record(line);
      file.record(line);
    }
    file_digest = file.digest();
    file_lines = file.lines();
  }
  CHECK(mem.digest() == file_digest);
  CHECK(mem.lines() == file_lines);
  std::remove(path.c_str());
}
