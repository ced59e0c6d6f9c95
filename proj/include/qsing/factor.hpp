#pragma once

#include <utility>
#include <vector>

#include "qsing/bipoly.hpp"
#include "qsing/upoly.hpp"

namespace qsing {

struct UnivariateFactors {
  Rat unit;
  /// Primitive integer factors with positive leading coefficient.
  std::vector<std::pair<QPoly, unsigned>> factors;
};

/// Complete factorization over Q (Zassenhaus: mod-p split, Hensel lift, recombination).
UnivariateFactors factor_univariate(const QPoly& f);

/// Distinct rational roots, ascending.
std::vector<Rat> rational_roots(const QPoly& f);

struct FactorList {
  Rat unit;
  std::vector<std::pair<BiPoly, unsigned>> factors;

  BiPoly expand() const;
  /// Number of factors counted without multiplicity.
  std::size_t distinct() const { return factors.size(); }
};

inline constexpr int kFactorDegreeCap = 8;

/// Factorization over Q of a bivariate polynomial of total degree <= 8.
FactorList factor_rational(const BiPoly& f);

}  // namespace qsing
