#pragma once

#include <algorithm>
#include <stdexcept>
#include <tuple>
#include <string>
#include <utility>
#include <vector>

#include "qsing/rational.hpp"

namespace qsing {

/**
 * Dense univariate polynomial over a field F, coefficients stored from the
 * constant term upward.  F must default-construct to zero, be constructible
 * from Rat, and provide field operators plus an ADL-visible is_zero().
 */
template <class F>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }
  explicit Poly(const F& constant) : c_{constant} { trim(); }

  static Poly monomial(const F& coeff, std::size_t deg) {
    std::vector<F> c(deg + 1);
    c[deg] = coeff;
    return Poly(std::move(c));
  }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool zero() const { return c_.empty(); }
  const std::vector<F>& coeffs() const { return c_; }
  F coeff(std::size_t k) const { return k < c_.size() ? c_[k] : F(); }
  const F& lc() const {
    if (c_.empty()) throw std::logic_error("leading coefficient of zero polynomial");
    return c_.back();
  }

  Poly operator-() const {
    std::vector<F> r;
    r.reserve(c_.size());
    for (const auto& a : c_) r.push_back(-a);
    return Poly(std::move(r));
  }
  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<F> r(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t k = 0; k < r.size(); ++k) r[k] = a.coeff(k) + b.coeff(k);
    return Poly(std::move(r));
  }
  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.zero() || b.zero()) return Poly();
    std::vector<F> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
    return Poly(std::move(r));
  }
  friend Poly operator*(const F& s, const Poly& p) {
    std::vector<F> r;
    r.reserve(p.c_.size());
    for (const auto& a : p.c_) r.push_back(s * a);
    return Poly(std::move(r));
  }
  friend bool operator==(const Poly& a, const Poly& b) { return (a - b).zero(); }

  /// Quotient and remainder; divisor must be nonzero.
  std::pair<Poly, Poly> divmod(const Poly& d) const {
    if (d.zero()) throw std::domain_error("polynomial division by zero");
    std::vector<F> r = c_;
    int dd = d.degree();
    if (degree() < dd) return {Poly(), *this};
    std::vector<F> q(static_cast<std::size_t>(degree() - dd + 1));
    F inv_lc = F(Rat(1)) / d.lc();
    for (int k = degree(); k >= dd; --k) {
      F t = r[static_cast<std::size_t>(k)] * inv_lc;
      q[static_cast<std::size_t>(k - dd)] = t;
      if (is_zero(t)) continue;
      for (int i = 0; i <= dd; ++i)
        r[static_cast<std::size_t>(k - dd + i)] = r[static_cast<std::size_t>(k - dd + i)] - t * d.c_[static_cast<std::size_t>(i)];
    }
    r.resize(static_cast<std::size_t>(dd));
    return {Poly(std::move(q)), Poly(std::move(r))};
  }
  friend Poly operator/(const Poly& a, const Poly& b) { return a.divmod(b).first; }
  friend Poly operator%(const Poly& a, const Poly& b) { return a.divmod(b).second; }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<F> r(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) r[k - 1] = F(Rat(static_cast<long>(k))) * c_[k];
    return Poly(std::move(r));
  }

  F eval(const F& x) const {
    F acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Poly monic() const {
    if (zero()) return *this;
    return (F(Rat(1)) / lc()) * *this;
  }

  Poly pow(unsigned e) const {
    Poly r(F(Rat(1)));
    for (unsigned k = 0; k < e; ++k) r = r * *this;
    return r;
  }

 private:
  void trim() {
    while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
  }
  std::vector<F> c_;
};

/// Monic gcd (zero if both inputs are zero).
template <class F>
Poly<F> gcd(Poly<F> a, Poly<F> b) {
  while (!b.zero()) {
    Poly<F> r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// Extended Euclid: returns (g, s, t) with s*a + t*b = g, g monic.
template <class F>
std::tuple<Poly<F>, Poly<F>, Poly<F>> ext_gcd(const Poly<F>& a, const Poly<F>& b) {
  Poly<F> r0 = a, r1 = b, s0(F(Rat(1))), s1, t0, t1(F(Rat(1)));
  while (!r1.zero()) {
    auto [q, r] = r0.divmod(r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly<F> s2 = s0 - q * s1, t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.zero()) return {r0, s0, t0};
  F inv = F(Rat(1)) / r0.lc();
  return {inv * r0, inv * s0, inv * t0};
}

/// Yun's square-free decomposition: pairs (monic square-free part, multiplicity).
template <class F>
std::vector<std::pair<Poly<F>, unsigned>> square_free_decomposition(const Poly<F>& f) {
  std::vector<std::pair<Poly<F>, unsigned>> out;
  if (f.degree() < 1) return out;
  Poly<F> fp = f.derivative();
  Poly<F> a = gcd(f, fp);
  Poly<F> b = f / a;
  Poly<F> c = fp / a;
  Poly<F> d = c - b.derivative();
  unsigned k = 1;
  while (b.degree() > 0) {
    Poly<F> g = gcd(b, d);
    if (g.degree() > 0) out.emplace_back(g, k);
    b = b / g;
    c = d / g;
    d = c - b.derivative();
    ++k;
  }
  return out;
}

using QPoly = Poly<Rat>;

std::string to_string(const QPoly& p, const std::string& var = "Z");

}  // namespace qsing
