#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "qsing/numeric.hpp"
#include "qsing/rational.hpp"
#include "qsing/upoly.hpp"

namespace qsing {

namespace detail {
struct Level;
}

/// Axis-parallel rectangle with dyadic corners in the complex plane.
struct Region {
  Rat re_lo, re_hi, im_lo, im_hi;

  bool contains(const Rat& re, const Rat& im) const {
    return re_lo <= re && re <= re_hi && im_lo <= im && im <= im_hi;
  }
  std::string to_string() const;
};

/**
 * A chain Q = K0 < K1 < ... < Kh of simple extensions.  Level k adjoins one
 * chosen root of a monic polynomial with coefficients in K(k-1).  Towers are
 * immutable and share their lower levels.
 */
class Tower {
 public:
  Tower() = default;

  std::size_t height() const;
  /// Product of the level degrees: the length of an element representation.
  std::size_t dimension() const;
  /// True if every level of *this is a level of o (same objects).
  bool is_prefix_of(const Tower& o) const;
  friend bool operator==(const Tower& a, const Tower& b) { return a.top_ == b.top_; }

  /// Levels bottom to top.
  std::vector<const detail::Level*> levels() const;
  const detail::Level* top() const { return top_.get(); }
  /// The isolating region of level k (1-based).
  Region region(std::size_t k) const;
  /// "r1 = RootOf(...) ~ approx, r2 = ..."; empty for Q.  With exact_regions
  /// the isolating rectangles are printed instead of approximations.
  std::string describe(bool exact_regions = false) const;

 private:
  friend class TowerBuilder;
  explicit Tower(std::shared_ptr<const detail::Level> top) : top_(std::move(top)) {}
  std::shared_ptr<const detail::Level> top_;
};

class AlgebraicNumber {
 public:
  AlgebraicNumber() : rep_{Rat(0)} {}
  AlgebraicNumber(const Rat& r) : rep_{r} {}  // NOLINT: rationals embed implicitly
  AlgebraicNumber(long v) : rep_{Rat(v)} {}   // NOLINT
  AlgebraicNumber(Tower t, std::vector<Rat> rep);

  /// The top generator of t.
  static AlgebraicNumber generator(const Tower& t);

  const Tower& tower() const { return tower_; }
  const std::vector<Rat>& rep() const { return rep_; }
  /// Same value represented in an extension of the current tower.
  AlgebraicNumber lift(const Tower& t) const;

  bool rep_is_zero() const;
  bool is_rational() const;
  /// Requires is_rational().
  const Rat& rational_value() const { return rep_[0]; }

  friend AlgebraicNumber operator+(const AlgebraicNumber& a, const AlgebraicNumber& b);
  friend AlgebraicNumber operator-(const AlgebraicNumber& a, const AlgebraicNumber& b);
  friend AlgebraicNumber operator*(const AlgebraicNumber& a, const AlgebraicNumber& b);
  /// Throws DomainError when b is exactly zero.
  friend AlgebraicNumber operator/(const AlgebraicNumber& a, const AlgebraicNumber& b);
  AlgebraicNumber operator-() const;
  AlgebraicNumber inverse() const;
  AlgebraicNumber pow(unsigned e) const;
  friend bool operator==(const AlgebraicNumber& a, const AlgebraicNumber& b);

  /// Approximation whose error is well below 2^-prec times the element scale.
  BigComplex approx(mpfr_prec_t prec) const;
  /// Approximation plus a bound on its absolute error.
  std::pair<BigComplex, BigFloat> approx_with_error(mpfr_prec_t prec) const;

  /// Expression in the generators r1, r2, ... with rational coefficients.
  std::string expr() const;
  /// expr() followed by " where ..." listing the generators used.
  std::string to_string() const;

 private:
  Tower tower_;
  std::vector<Rat> rep_;
};

/// Exact zero test: annihilating polynomial plus a lower root bound.
bool is_zero(const AlgebraicNumber& a);
/// Exact realness test via a root separation bound.
bool is_real(const AlgebraicNumber& a);
/// Sign of a - b for real a, b; throws DomainError on non-real input.
int compare_real(const AlgebraicNumber& a, const AlgebraicNumber& b);

/// Square-free polynomial over Q vanishing at a (from the Krylov sequence of a).
QPoly annihilating_polynomial(const AlgebraicNumber& a);

/// Smallest tower containing both, when one extends the other.
Tower common_tower(const Tower& a, const Tower& b);

using KPoly = Poly<AlgebraicNumber>;

/// Adjoins the unique root of p inside region.  p must be square-free over t.
Tower adjoin_root(const Tower& t, const KPoly& p, const Region& region);

/// All complex roots with multiplicities, ordered by real then imaginary part.
std::vector<std::pair<AlgebraicNumber, unsigned>> roots_over(const Tower& t, const KPoly& p);

struct ConjugatePairing {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::vector<std::size_t> fixed;
};
/// Matches non-real entries with their conjugates; throws if the input is not closed.
ConjugatePairing conjugate_pairs(const std::vector<AlgebraicNumber>& xs);

}  // namespace qsing
