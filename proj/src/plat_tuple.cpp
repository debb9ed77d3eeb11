#include "platfill/plat_tuple.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

namespace platfill {

PlatTuple::PlatTuple(std::vector<Band> bands) : bands_(std::move(bands)) {
  if (bands_.empty() || bands_.size() % 2 == 0) {
    throw ValidityError("tuple length must be odd and at least 1, got " +
                        std::to_string(bands_.size()));
  }
  for (std::size_t i = 0; i < bands_.size(); ++i) {
    const Band& b = bands_[i];
    const bool expect_side = (i % 2 == 1);
    if (b.side != expect_side) {
      throw ValidityError("band " + std::to_string(i + 1) + " must be a " +
                          (expect_side ? "side pair (u,l)" : "center integer"));
    }
    if (b.side) {
      if (b.upper < 0 || b.lower < 0) {
        throw ValidityError("side band " + std::to_string(i + 1) +
                            " has a negative sub-band count");
      }
      if (b.upper + b.lower == 0) {
        throw ValidityError("side band " + std::to_string(i + 1) +
                            " must have u+l > 0");
      }
    } else if (b.center <= 0) {
      throw ValidityError("center band " + std::to_string(i + 1) + " must be > 0");
    }
  }
}

int PlatTuple::total_crossings() const {
  int n = 0;
  for (const auto& b : bands_) n += b.crossings();
  return n;
}

std::string PlatTuple::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < bands_.size(); ++i) {
    if (i) os << ',';
    const Band& b = bands_[i];
    if (b.side)
      os << '(' << b.upper << ',' << b.lower << ')';
    else
      os << b.center;
  }
  os << ']';
  return os.str();
}

namespace {

class Lexer {
 public:
  explicit Lexer(std::string_view s) : s_(s) {}

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= s_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  int integer() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    int value = 0;
    const char* first = s_.data() + start;
    if (*first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, s_.data() + pos_, value);
    if (ec != std::errc() || ptr != s_.data() + pos_ || first == s_.data() + pos_) {
      pos_ = start;
      fail("expected integer");
    }
    return value;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in \"" +
                     std::string(s_) + "\"");
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

PlatTuple parse_tuple(std::string_view text) {
  Lexer lex(text);
  std::vector<Band> bands;
  lex.expect('[');
  if (lex.peek() == ']') lex.fail("empty tuple");
  while (true) {
    if (lex.peek() == '(') {
      lex.expect('(');
      int u = lex.integer();
      lex.expect(',');
      int l = lex.integer();
      lex.expect(')');
      bands.push_back(Band::make_side(u, l));
    } else {
      bands.push_back(Band::make_center(lex.integer()));
    }
    if (lex.peek() == ',') {
      lex.expect(',');
      continue;
    }
    lex.expect(']');
    break;
  }
  if (!lex.at_end()) lex.fail("trailing characters");
  return PlatTuple(std::move(bands));
}

}  // namespace platfill
