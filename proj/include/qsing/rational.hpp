#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace qsing {

using BigInt = mpz_class;
/// Exact rational; mpq_class keeps lowest terms with a positive denominator.
using Rat = mpq_class;

/// Base class for errors the CLI reports as domain failures.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Rat make_rat(const BigInt& num, const BigInt& den);
Rat make_rat(long num, long den = 1);

inline bool is_zero(const Rat& r) { return sgn(r) == 0; }

/// "p" or "p/q".
std::string to_string(const Rat& r);

/// Accepts "p", "-p", "p/q"; throws DomainError otherwise.
Rat parse_rat(std::string_view text);

BigInt rat_floor(const Rat& r);
Rat rat_abs(const Rat& r);

}  // namespace qsing
