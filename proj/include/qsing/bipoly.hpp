#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qsing/rational.hpp"
#include "qsing/upoly.hpp"

namespace qsing {

/// Exponent pair (i, j) of the monomial x^i y^j.
using Monomial = std::pair<unsigned, unsigned>;

/**
 * Sparse bivariate polynomial over a field F.  Zero coefficients are never
 * stored.
 */
template <class F>
class Bivariate {
 public:
  using TermMap = std::map<Monomial, F>;

  Bivariate() = default;
  explicit Bivariate(const F& c) { add_term(0, 0, c); }

  static Bivariate x() { return term(1, 0, F(Rat(1))); }
  static Bivariate y() { return term(0, 1, F(Rat(1))); }
  static Bivariate term(unsigned i, unsigned j, const F& c) {
    Bivariate r;
    r.add_term(i, j, c);
    return r;
  }

  const TermMap& terms() const { return t_; }
  bool zero() const { return t_.empty(); }
  F coeff(unsigned i, unsigned j) const {
    auto it = t_.find({i, j});
    return it == t_.end() ? F() : it->second;
  }

  void add_term(unsigned i, unsigned j, const F& c) {
    auto [it, fresh] = t_.try_emplace({i, j}, c);
    if (!fresh) it->second = it->second + c;
    if (is_zero(it->second)) t_.erase(it);
  }

  /// -1 for the zero polynomial.
  int total_degree() const {
    int d = -1;
    for (const auto& [m, c] : t_) d = std::max(d, static_cast<int>(m.first + m.second));
    return d;
  }
  int degree_x() const {
    int d = -1;
    for (const auto& [m, c] : t_) d = std::max(d, static_cast<int>(m.first));
    return d;
  }
  int degree_y() const {
    int d = -1;
    for (const auto& [m, c] : t_) d = std::max(d, static_cast<int>(m.second));
    return d;
  }

  Bivariate operator-() const {
    Bivariate r;
    for (const auto& [m, c] : t_) r.t_.emplace(m, -c);
    return r;
  }
  friend Bivariate operator+(Bivariate a, const Bivariate& b) {
    for (const auto& [m, c] : b.t_) a.add_term(m.first, m.second, c);
    return a;
  }
  friend Bivariate operator-(Bivariate a, const Bivariate& b) {
    for (const auto& [m, c] : b.t_) a.add_term(m.first, m.second, -c);
    return a;
  }
  friend Bivariate operator*(const Bivariate& a, const Bivariate& b) {
    Bivariate r;
    for (const auto& [ma, ca] : a.t_)
      for (const auto& [mb, cb] : b.t_) r.add_term(ma.first + mb.first, ma.second + mb.second, ca * cb);
    return r;
  }
  friend Bivariate operator*(const F& s, const Bivariate& p) {
    Bivariate r;
    if (is_zero(s)) return r;
    for (const auto& [m, c] : p.t_) r.add_term(m.first, m.second, s * c);
    return r;
  }
  friend bool operator==(const Bivariate& a, const Bivariate& b) { return (a - b).zero(); }

  Bivariate pow(unsigned e) const {
    Bivariate r(F(Rat(1)));
    Bivariate base = *this;
    while (e) {
      if (e & 1u) r = r * base;
      e >>= 1u;
      if (e) base = base * base;
    }
    return r;
  }

  Bivariate diff_x() const {
    Bivariate r;
    for (const auto& [m, c] : t_)
      if (m.first > 0) r.add_term(m.first - 1, m.second, F(Rat(static_cast<long>(m.first))) * c);
    return r;
  }
  Bivariate diff_y() const {
    Bivariate r;
    for (const auto& [m, c] : t_)
      if (m.second > 0) r.add_term(m.first, m.second - 1, F(Rat(static_cast<long>(m.second))) * c);
    return r;
  }

  /// Homogeneous part of total degree d.
  Bivariate homogeneous_part(unsigned d) const {
    Bivariate r;
    for (const auto& [m, c] : t_)
      if (m.first + m.second == d) r.t_.emplace(m, c);
    return r;
  }

  /// Substitutes x <- px and y <- py.
  Bivariate compose(const Bivariate& px, const Bivariate& py) const {
    std::vector<Bivariate> xp{Bivariate(F(Rat(1)))}, yp{Bivariate(F(Rat(1)))};
    Bivariate r;
    for (const auto& [m, c] : t_) {
      while (xp.size() <= m.first) xp.push_back(xp.back() * px);
      while (yp.size() <= m.second) yp.push_back(yp.back() * py);
      r = r + c * (xp[m.first] * yp[m.second]);
    }
    return r;
  }

  F eval(const F& xv, const F& yv) const {
    F acc;
    for (const auto& [m, c] : t_) {
      F term = c;
      for (unsigned k = 0; k < m.first; ++k) term = term * xv;
      for (unsigned k = 0; k < m.second; ++k) term = term * yv;
      acc = acc + term;
    }
    return acc;
  }

 private:
  TermMap t_;
};

using BiPoly = Bivariate<Rat>;

/// Graded-lex comparison of monomials: total degree first, then x-degree.
bool grlex_less(const Monomial& a, const Monomial& b);
/// Leading monomial in graded-lex order; f must be nonzero.
Monomial leading_monomial(const BiPoly& f);

/// Prints in descending graded-lex order, e.g. "x^2*y - 1/4*y^3 + 1".
std::string to_string(const BiPoly& f);

/// min(i+j) over the support; f(0,0) must vanish and f be nonzero.
unsigned multiplicity_at_origin(const BiPoly& f);
BiPoly tangent_cone(const BiPoly& f);

/// f(x + p.first, y + p.second).
BiPoly translate(const BiPoly& f, const std::pair<Rat, Rat>& p);

using Mat2 = std::array<std::array<Rat, 2>, 2>;
/// f(M11 x + M12 y, M21 x + M22 y); throws on singular M.
BiPoly linear_change(const BiPoly& f, const Mat2& m);
Mat2 inverse(const Mat2& m);

/// Coefficients of f as a polynomial in y, each a polynomial in x.
std::vector<QPoly> coeffs_in_y(const BiPoly& f);
BiPoly from_coeffs_in_y(const std::vector<QPoly>& c);
/// Swaps the roles of x and y.
BiPoly swap_xy(const BiPoly& f);

/// f(x0, y) as a polynomial in y.
QPoly specialize_x(const BiPoly& f, const Rat& x0);
/// Treats a univariate polynomial as one in x (or y).
BiPoly in_x(const QPoly& p);
BiPoly in_y(const QPoly& p);

enum class Var { x, y };

/// Sylvester resultant eliminating var; a polynomial in the other variable.
BiPoly resultant(const BiPoly& f, const BiPoly& g, Var var);

/// gcd over Q with positive graded-lex leading coefficient, primitive.
BiPoly gcd(const BiPoly& a, const BiPoly& b);
/// Exact quotient a/b, or false if b does not divide a.
bool exact_divide(const BiPoly& a, const BiPoly& b, BiPoly& quotient);

/// Integer coefficients with gcd 1 and positive graded-lex leading coefficient.
BiPoly primitive_normalized(const BiPoly& f, Rat* unit = nullptr);

struct SquareFreeResult {
  BiPoly part;
  bool had_multiple = false;
};
SquareFreeResult square_free_part(const BiPoly& f);

}  // namespace qsing
