#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "qsing/bipoly.hpp"

namespace qsing {

class ParseError : public DomainError {
 public:
  ParseError(const std::string& msg, std::size_t pos)
      : DomainError(msg + " at position " + std::to_string(pos)), pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

/**
 * Parses an expanded or unexpanded polynomial in x and y.
 *
 *   expr   := sign? term (('+'|'-') term)*
 *   term   := factor ('*' factor)*
 *   factor := base ('^' nat)?
 *   base   := rational | 'x' | 'y' | '(' expr ')'
 *
 * Whitespace is ignored.  Implicit multiplication is rejected.
 */
BiPoly parse_poly(std::string_view text);

/// Parses "a,b" with rational a and b.
std::pair<Rat, Rat> parse_point(std::string_view text);

}  // namespace qsing
