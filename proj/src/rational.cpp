#include "qsing/rational.hpp"

#include <cctype>

namespace qsing {

Rat make_rat(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DomainError("zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Rat make_rat(long num, long den) { return make_rat(BigInt(num), BigInt(den)); }

std::string to_string(const Rat& r) { return r.get_str(); }

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rat parse_rat(std::string_view text) {
  std::string_view body = text;
  bool neg = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    neg = body.front() == '-';
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw DomainError("malformed rational '" + std::string(text) + "'");
  Rat r = make_rat(BigInt(std::string(num)), BigInt(std::string(den)));
  return neg ? Rat(-r) : r;
}

BigInt rat_floor(const Rat& r) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

Rat rat_abs(const Rat& r) { return sgn(r) < 0 ? Rat(-r) : r; }

}  // namespace qsing
