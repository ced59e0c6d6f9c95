#include "qsing/parse.hpp"

#include <cctype>

namespace qsing {

namespace {

constexpr unsigned kMaxExponent = 64;

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  BiPoly parse() {
    skip();
    if (at_end()) throw ParseError("empty expression", pos_);
    BiPoly r = expr();
    skip();
    if (!at_end()) fail_unexpected();
    return r;
  }

 private:
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[pos_]; }
  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail_unexpected() {
    if (at_end()) throw ParseError("unexpected end of input", pos_);
    char c = peek();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      std::string ident;
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ident += s_[pos_++];
      throw ParseError("unknown identifier '" + ident + "'", start);
    }
    if (c == '(') throw ParseError("implicit multiplication is not allowed", pos_);
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }

  BiPoly expr() {
    skip();
    bool neg = false;
    if (peek() == '+' || peek() == '-') {
      neg = peek() == '-';
      ++pos_;
    }
    BiPoly acc = term();
    if (neg) acc = -acc;
    for (;;) {
      skip();
      char c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      BiPoly t = term();
      acc = c == '+' ? acc + t : acc - t;
    }
    return acc;
  }

  BiPoly term() {
    BiPoly acc = factor();
    for (;;) {
      skip();
      if (peek() == '*') {
        ++pos_;
        acc = acc * factor();
        continue;
      }
      if (peek() == '/') throw ParseError("division is only allowed inside rational literals", pos_);
      char c = peek();
      if (c == '(' || c == 'x' || c == 'y' || std::isdigit(static_cast<unsigned char>(c)))
        throw ParseError("implicit multiplication is not allowed", pos_);
      break;
    }
    return acc;
  }

  BiPoly factor() {
    BiPoly b = base();
    skip();
    if (peek() != '^') return b;
    ++pos_;
    return b.pow(exponent());
  }

  unsigned exponent() {
    skip();
    std::size_t start = pos_;
    if (peek() == '-') throw ParseError("negative exponent", start);
    bool paren = false;
    if (peek() == '(') {
      paren = true;
      ++pos_;
      skip();
      if (peek() == '-') throw ParseError("negative exponent", start);
    }
    if (!std::isdigit(static_cast<unsigned char>(peek()))) throw ParseError("exponent must be a nonnegative integer", start);
    std::string digits;
    while (std::isdigit(static_cast<unsigned char>(peek()))) digits += s_[pos_++];
    skip();
    if (peek() == '/' || peek() == '.') throw ParseError("fractional exponent", start);
    if (paren) {
      if (peek() != ')') throw ParseError("exponent must be a nonnegative integer", start);
      ++pos_;
    }
    if (digits.size() > 4 || std::stoul(digits) > kMaxExponent) throw ParseError("exponent too large", start);
    return static_cast<unsigned>(std::stoul(digits));
  }

  BiPoly base() {
    skip();
    char c = peek();
    if (c == 'x' || c == 'y') {
      std::size_t start = pos_++;
      if (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') {
        pos_ = start;
        fail_unexpected();
      }
      return c == 'x' ? BiPoly::x() : BiPoly::y();
    }
    if (c == '(') {
      ++pos_;
      BiPoly inner = expr();
      skip();
      if (peek() != ')') {
        if (at_end()) throw ParseError("missing ')'", pos_);
        fail_unexpected();
      }
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return BiPoly(literal());
    fail_unexpected();
  }

  Rat literal() {
    std::size_t start = pos_;
    std::string num, den;
    while (std::isdigit(static_cast<unsigned char>(peek()))) num += s_[pos_++];
    if (peek() == '.') throw ParseError("decimal literals are not supported", pos_);
    if (peek() == '/') {
      ++pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) den += s_[pos_++];
      if (den.empty()) throw ParseError("malformed rational literal", start);
      if (BigInt(den) == 0) throw ParseError("zero denominator", start);
    }
    return make_rat(BigInt(num), den.empty() ? BigInt(1) : BigInt(den));
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

BiPoly parse_poly(std::string_view text) { return Parser(text).parse(); }

std::pair<Rat, Rat> parse_point(std::string_view text) {
  auto comma = text.find(',');
  if (comma == std::string_view::npos) throw DomainError("point must be given as x,y");
  auto strip = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  return {parse_rat(strip(text.substr(0, comma))), parse_rat(strip(text.substr(comma + 1)))};
}

}  // namespace qsing
