#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "qsing/algebraic.hpp"
#include "qsing/bipoly.hpp"

namespace qsing {

/// The expansion needed exponents beyond the cap before separating.
class CapExceeded : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A repeated factor of f showed up (input was not square-free).
class MultipleComponent : public DomainError {
 public:
  using DomainError::DomainError;
};

struct PuiseuxTerm {
  Rat exponent;
  AlgebraicNumber coeff;
};

using KBiPoly = Bivariate<AlgebraicNumber>;

namespace detail {
/// Remaining equation after the last term: x = t^q, y = jet + t^m * w, g(t, w) = 0.
struct Continuation {
  Tower tower;
  KBiPoly g;
  unsigned q = 1;
  unsigned m = 0;
};
}  // namespace detail

/**
 * One distinct Puiseux expansion, truncated where it became distinguishable
 * from all others.  Coefficients all live in tower().
 */
struct ProBranch {
  std::vector<PuiseuxTerm> terms;
  unsigned ramification = 1;
  /// Largest contact exponent with any other branch of the same run (0 if alone).
  Rat separated_at;
  bool real_representable = true;
  /// The stored jet solves f exactly (y minus the jet divides f).
  bool exact = false;
  /// Expansion-tree node per term; branches agree on a term iff the ids match.
  std::vector<std::size_t> path;
  std::shared_ptr<const detail::Continuation> continuation;

  const Tower& tower() const;
  /// Coefficient at exponent e, zero when absent.
  AlgebraicNumber coeff_at(const Rat& e) const;
};

/// Every pro-branch of f at the origin, each expanded until it separates.
std::vector<ProBranch> expand_to_separation(const BiPoly& f, const Rat& cap = Rat(8));

/// First exponent at which the two branches differ; throws std::logic_error if they never do.
Rat contact_exponent(const ProBranch& a, const ProBranch& b);

/**
 * True if some zeta with zeta^q = +1 or -1 makes every c_k zeta^k real, where
 * the exponents are k/q.  Decided exactly.
 */
bool real_representable(const std::vector<PuiseuxTerm>& terms);
bool real_representable(const ProBranch& b);

/// b with `extra` further terms (fewer if the jet becomes exact).
ProBranch extend_branch(const ProBranch& b, unsigned extra);

/// ord_x f(x, y(x)); nullopt stands for infinity (exact solution).
using Valuation = std::optional<Rat>;
Valuation residual_valuation(const BiPoly& f, const ProBranch& b, unsigned extra);

/// Valuation of f along an explicit jet.
Valuation valuation_along(const BiPoly& f, const std::vector<PuiseuxTerm>& jet);

/// "y = c1*x^(e1) + ..." with generator names from the branch tower.
std::string jet_string(const ProBranch& b);

}  // namespace qsing
