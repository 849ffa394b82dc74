#include "flowsentry/ids/rules.hpp"

#include <cctype>
#include <charconv>
#include <map>

namespace flowsentry::ids {

namespace {

/// Cursor over a single rule line; all errors it raises carry the 1-based
/// column of the offending token.
class LineParser {
 public:
  LineParser(std::string_view line, std::size_t line_no, std::vector<ParseError>& errors)
      : line_(line), line_no_(line_no), errors_(errors) {}

  std::optional<DetectionRule> parse() {
    DetectionRule rule;

    if (!expect_word("alert", "expected action 'alert'")) return std::nullopt;
    const std::size_t proto_col = peek_col();
    const std::string proto = take_token();
    if (proto != "icmp") {
      return fail(proto_col, "unsupported protocol '" + proto + "' (only icmp)");
    }
    rule.proto = netmodel::ProtoClass::Icmp;

    if (auto src = take_cidr("source")) rule.src = *src; else return std::nullopt;
    if (!expect_any_port("source")) return std::nullopt;

    const std::size_t arrow_col = peek_col();
    if (take_token() != "->") return fail(arrow_col, "expected '->'");

    if (auto dst = take_cidr("destination")) rule.dst = *dst; else return std::nullopt;
    if (!expect_any_port("destination")) return std::nullopt;

    skip_ws();
    if (!consume('(')) return fail(peek_col(), "expected '(' to open options");
    if (!parse_options(rule)) return std::nullopt;
    skip_ws();
    if (pos_ != line_.size()) {
      return fail(peek_col(), "unexpected text after ')'");
    }

    if (!saw_msg_) return fail(1, "missing msg option");
    if (!rule.rate_filter && !rule.dsize_gt) {
      return fail(1, "rule needs a detection_filter or dsize option");
    }
    if (!saw_sid_) return fail(1, "missing sid option");
    return rule;
  }

 private:
  std::optional<DetectionRule> fail(std::size_t column, std::string message) {
    errors_.push_back(ParseError{line_no_, column, std::move(message)});
    return std::nullopt;
  }

  void skip_ws() {
    while (pos_ < line_.size() && (line_[pos_] == ' ' || line_[pos_] == '\t')) ++pos_;
  }

  std::size_t peek_col() {
    skip_ws();
    return pos_ + 1;
  }

  bool consume(char c) {
    skip_ws();
    if (pos_ < line_.size() && line_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  /// Next whitespace-delimited token (stops before '(' so options can abut).
  std::string take_token() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < line_.size() && line_[pos_] != ' ' && line_[pos_] != '\t' &&
           line_[pos_] != '(') {
      ++pos_;
    }
    return std::string(line_.substr(start, pos_ - start));
  }

  bool expect_word(std::string_view word, const char* message) {
    const std::size_t col = peek_col();
    if (take_token() != word) {
      fail(col, message);
      return false;
    }
    return true;
  }

  std::optional<netmodel::Cidr> take_cidr(const char* which) {
    const std::size_t col = peek_col();
    const std::string token = take_token();
    auto cidr = netmodel::Cidr::parse(token);
    if (!cidr) {
      fail(col, std::string("invalid ") + which + " address '" + token + "'");
      return std::nullopt;
    }
    return cidr;
  }

  bool expect_any_port(const char* which) {
    const std::size_t col = peek_col();
    if (take_token() != "any") {
      fail(col, std::string("only 'any' is supported for the ") + which + " port");
      return false;
    }
    return true;
  }

  bool parse_options(DetectionRule& rule) {
    while (true) {
      skip_ws();
      if (consume(')')) return true;
      if (pos_ >= line_.size()) {
        fail(line_.size() + 1, "unterminated options (missing ')')");
        return false;
      }

      const std::size_t key_col = pos_ + 1;
      const std::size_t key_start = pos_;
      while (pos_ < line_.size() && (std::isalnum(static_cast<unsigned char>(line_[pos_])) ||
                                     line_[pos_] == '_')) {
        ++pos_;
      }
      const std::string key(line_.substr(key_start, pos_ - key_start));
      if (key.empty() || !consume(':')) {
        fail(key_col, "expected 'key:value;' option");
        return false;
      }

      bool ok = false;
      if (key == "msg") {
        ok = parse_msg(rule, key_col);
      } else if (key == "detection_filter") {
        ok = parse_detection_filter(rule, key_col);
      } else if (key == "dsize") {
        ok = parse_dsize(rule, key_col);
      } else if (key == "sid") {
        ok = parse_sid(rule, key_col);
      } else {
        fail(key_col, "unknown option '" + key + "'");
        return false;
      }
      if (!ok) return false;
    }
  }

  bool parse_msg(DetectionRule& rule, std::size_t key_col) {
    if (saw_msg_) {
      fail(key_col, "duplicate msg option");
      return false;
    }
    saw_msg_ = true;
    skip_ws();
    if (!consume('"')) {
      fail(peek_col(), "msg value must be quoted");
      return false;
    }
    const std::size_t start = pos_;
    const std::size_t end = line_.find('"', start);
    if (end == std::string_view::npos) {
      fail(start + 1, "unterminated msg string");
      return false;
    }
    rule.msg = std::string(line_.substr(start, end - start));
    pos_ = end + 1;
    return end_option();
  }

  bool parse_detection_filter(DetectionRule& rule, std::size_t key_col) {
    if (rule.rate_filter) {
      fail(key_col, "duplicate detection_filter option");
      return false;
    }
    // Value shape: track by_src, count N, seconds M
    skip_ws();
    if (take_word() != "track" || (skip_ws(), take_word()) != "by_src") {
      fail(key_col, "detection_filter must start with 'track by_src'");
      return false;
    }
    RateFilter rf;
    if (!consume(',')) {
      fail(peek_col(), "expected ',' after 'track by_src'");
      return false;
    }
    if (!take_counted_field("count", rf.count)) return false;
    if (!consume(',')) {
      fail(peek_col(), "expected ',' after count");
      return false;
    }
    if (!take_counted_field("seconds", rf.seconds)) return false;
    rule.rate_filter = rf;
    return end_option();
  }

  /// Word of [A-Za-z_] characters (option values, not header tokens).
  std::string take_word() {
    const std::size_t start = pos_;
    while (pos_ < line_.size() && (std::isalpha(static_cast<unsigned char>(line_[pos_])) ||
                                   line_[pos_] == '_')) {
      ++pos_;
    }
    return std::string(line_.substr(start, pos_ - start));
  }

  bool take_counted_field(const char* name, std::uint32_t& out) {
    skip_ws();
    const std::size_t col = pos_ + 1;
    if (take_word() != name) {
      fail(col, std::string("expected '") + name + " N'");
      return false;
    }
    skip_ws();
    if (!take_number(out) || out == 0) {
      fail(pos_ + 1, std::string(name) + " must be a positive integer");
      return false;
    }
    return true;
  }

  bool take_number(std::uint32_t& out) {
    const char* begin = line_.data() + pos_;
    const char* end = line_.data() + line_.size();
    auto [ptr, ec] = std::from_chars(begin, end, out);
    if (ec != std::errc{} || ptr == begin) return false;
    pos_ += static_cast<std::size_t>(ptr - begin);
    return true;
  }

  bool parse_dsize(DetectionRule& rule, std::size_t key_col) {
    if (rule.dsize_gt) {
      fail(key_col, "duplicate dsize option");
      return false;
    }
    skip_ws();
    if (!consume('>')) {
      fail(peek_col(), "dsize supports only '>N'");
      return false;
    }
    skip_ws();
    std::uint32_t value = 0;
    if (!take_number(value)) {
      fail(pos_ + 1, "dsize needs an integer byte count");
      return false;
    }
    rule.dsize_gt = value;
    return end_option();
  }

  bool parse_sid(DetectionRule& rule, std::size_t key_col) {
    if (saw_sid_) {
      fail(key_col, "duplicate sid option");
      return false;
    }
    skip_ws();
    std::uint32_t value = 0;
    if (!take_number(value) || value == 0) {
      fail(pos_ + 1, "sid must be a positive integer");
      return false;
    }
    rule.sid = value;
    saw_sid_ = true;
    return end_option();
  }

  bool end_option() {
    if (!consume(';')) {
      fail(peek_col(), "expected ';' after option value");
      return false;
    }
    return true;
  }

  std::string_view line_;
  std::size_t line_no_;
  std::size_t pos_ = 0;
  std::vector<ParseError>& errors_;
  bool saw_sid_ = false;
  bool saw_msg_ = false;
};

}  // namespace

ParseResult parse_ruleset(std::string_view text) {
  ParseResult result;
  std::map<std::uint32_t, std::size_t> sid_lines;

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    ++line_no;
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    const std::size_t first = line.find_first_not_of(" \t");
    if (first == std::string_view::npos || line[first] == '#') {
      if (start > text.size()) break;
      continue;
    }

    LineParser parser(line, line_no, result.errors);
    if (auto rule = parser.parse()) {
      auto [it, inserted] = sid_lines.emplace(rule->sid, line_no);
      if (!inserted) {
        result.errors.push_back(ParseError{
            line_no, 1,
            "duplicate sid " + std::to_string(rule->sid) + " (first used on line " +
                std::to_string(it->second) + ")"});
      } else {
        result.rules.push_back(std::move(*rule));
      }
    }
    if (start > text.size()) break;
  }
  return result;
}

std::string format_rule(const DetectionRule& rule) {
  std::string out = "alert ";
  out += netmodel::to_string(rule.proto);
  out += ' ';
  out += rule.src.to_string();
  out += " any -> ";
  out += rule.dst.to_string();
  out += " any (msg:\"";
  out += rule.msg;
  out += "\"; ";
  if (rule.rate_filter) {
    out += "detection_filter:track by_src, count " +
           std::to_string(rule.rate_filter->count) + ", seconds " +
           std::to_string(rule.rate_filter->seconds) + "; ";
  }
  if (rule.dsize_gt) {
    out += "dsize:>" + std::to_string(*rule.dsize_gt) + "; ";
  }
  out += "sid:" + std::to_string(rule.sid) + ";)";
  return out;
}

std::string_view default_ruleset() {
  return "# Block any home-network source that sends the server more than 10\n"
         "# ICMP packets in one second, any source outside the home network\n"
         "# doing the same, and any oversized ICMP payload.\n"
         "alert icmp 10.0.0.0/8 any -> 192.168.56.104 any "
         "(msg:\"ryu block\"; detection_filter:track by_src, count 10, seconds 1; "
         "sid:1000001;)\n"
         "alert icmp !10.0.0.0/8 any -> 192.168.56.104 any "
         "(msg:\"ryu block\"; detection_filter:track by_src, count 10, seconds 1; "
         "sid:1000002;)\n"
         "alert icmp 10.0.0.0/8 any -> 192.168.56.104 any "
         "(msg:\"ryu block\"; dsize:>800; sid:1000003;)\n";
}

}  // namespace flowsentry::ids
