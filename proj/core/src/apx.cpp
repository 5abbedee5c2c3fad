#include "afrob/apx.hpp"

#include <cstddef>
#include <set>
#include <vector>

#include "afrob/error.hpp"

namespace afrob {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

bool is_name_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
}

class LineScanner {
 public:
  LineScanner(std::string_view line, std::size_t line_no) : line_(line), line_no_(line_no) {}

  void skip_space() {
    while (pos_ < line_.size() && is_space(line_[pos_])) ++pos_;
  }
  bool at_end() const { return pos_ >= line_.size(); }
  char peek() const { return at_end() ? '\0' : line_[pos_]; }

  [[noreturn]] void fail(const std::string& reason) const {
    throw ParseError(line_no_, pos_ + 1, reason);
  }

  void expect(char c) {
    skip_space();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string_view word() {
    const std::size_t start = pos_;
    while (pos_ < line_.size() && is_name_char(line_[pos_])) ++pos_;
    return line_.substr(start, pos_ - start);
  }

  std::string name() {
    skip_space();
    const std::string_view w = word();
    if (w.empty()) fail("expected argument name");
    return std::string(w);
  }

  void finish() {
    skip_space();
    if (!at_end()) fail("unexpected trailing characters");
  }

 private:
  std::string_view line_;
  std::size_t line_no_;
  std::size_t pos_ = 0;
};

struct PendingAttack {
  std::string source;
  std::string target;
  std::size_t line;
};

}  // namespace

Framework parse_apx(std::string_view text) {
  std::set<std::string> declared;
  std::vector<PendingAttack> pending;

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(start, end - start);
    ++line_no;
    start = end + 1;

    LineScanner scan(line, line_no);
    scan.skip_space();
    if (scan.at_end() || scan.peek() == '%') continue;

    const std::string_view keyword = scan.word();
    if (keyword == "arg") {
      scan.expect('(');
      std::string n = scan.name();
      scan.expect(')');
      scan.expect('.');
      scan.finish();
      declared.insert(std::move(n));
    } else if (keyword == "att") {
      scan.expect('(');
      std::string src = scan.name();
      scan.expect(',');
      std::string tgt = scan.name();
      scan.expect(')');
      scan.expect('.');
      scan.finish();
      pending.push_back({std::move(src), std::move(tgt), line_no});
    } else {
      scan.fail("expected 'arg' or 'att'");
    }
  }

  std::vector<Attack> attacks;
  attacks.reserve(pending.size());
  for (const auto& p : pending) {
    if (!declared.contains(p.source)) throw UndeclaredArgument(p.source, p.line);
    if (!declared.contains(p.target)) throw UndeclaredArgument(p.target, p.line);
    attacks.push_back({ArgumentId(p.source), ArgumentId(p.target)});
  }
  std::vector<ArgumentId> arguments;
  arguments.reserve(declared.size());
  for (const auto& n : declared) arguments.emplace_back(n);
  return Framework(std::move(arguments), attacks);
}

std::string to_apx(const Framework& g) {
  std::string out;
  for (const auto& a : g.arguments()) out += "arg(" + a.str() + ").\n";
  for (const auto& e : g.attacks()) out += "att(" + e.source.str() + "," + e.target.str() + ").\n";
  return out;
}

}  // namespace afrob
