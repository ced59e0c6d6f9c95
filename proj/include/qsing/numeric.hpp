#pragma once

#include <mpfr.h>

#include <string>
#include <vector>

#include "qsing/rational.hpp"

namespace qsing {

/// RAII wrapper over an MPFR float.  Binary results take the larger precision.
class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t prec = 64);
  BigFloat(const Rat& r, mpfr_prec_t prec);
  BigFloat(long v, mpfr_prec_t prec);
  BigFloat(const BigFloat& o);
  BigFloat(BigFloat&& o) noexcept;
  BigFloat& operator=(const BigFloat& o);
  BigFloat& operator=(BigFloat&& o) noexcept;
  ~BigFloat();

  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
  mpfr_srcptr get() const { return v_; }
  mpfr_ptr get() { return v_; }

  /// 2^e at the given precision.
  static BigFloat pow2(long e, mpfr_prec_t prec);

  friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
  BigFloat operator-() const;
  friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.v_, b.v_); }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_greater_p(a.v_, b.v_); }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_lessequal_p(a.v_, b.v_); }

  BigFloat abs() const;
  BigFloat sqrt() const;
  int sign() const { return mpfr_sgn(v_); }
  bool is_zero() const { return mpfr_zero_p(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  /// Exact dyadic value.
  Rat to_rat() const;
  /// Binary exponent e with 2^(e-1) <= |x| < 2^e; very negative for zero.
  long exponent() const;
  std::string to_string(int digits = 17) const;

 private:
  mpfr_t v_;
};

BigFloat max(const BigFloat& a, const BigFloat& b);

struct BigComplex {
  BigFloat re, im;

  explicit BigComplex(mpfr_prec_t prec = 64) : re(prec), im(prec) {}
  BigComplex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}
  BigComplex(const Rat& r, mpfr_prec_t prec) : re(r, prec), im(prec) {}

  mpfr_prec_t prec() const { return re.prec(); }
  friend BigComplex operator+(const BigComplex& a, const BigComplex& b) { return {a.re + b.re, a.im + b.im}; }
  friend BigComplex operator-(const BigComplex& a, const BigComplex& b) { return {a.re - b.re, a.im - b.im}; }
  friend BigComplex operator*(const BigComplex& a, const BigComplex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend BigComplex operator*(const BigFloat& s, const BigComplex& a) { return {s * a.re, s * a.im}; }
  friend BigComplex operator/(const BigComplex& a, const BigComplex& b);
  BigComplex operator-() const { return {-re, -im}; }
  BigComplex conj() const { return {re, -im}; }
  BigFloat norm2() const { return re * re + im * im; }
  BigFloat abs() const { return norm2().sqrt(); }
  std::string to_string(int digits = 17) const;
};

/// Approximate roots (Aberth-Ehrlich) of sum c_k z^k; c must have a nonzero top coefficient.
std::vector<BigComplex> approximate_roots(const std::vector<BigComplex>& c, mpfr_prec_t prec);

struct RootDisk {
  BigComplex center;
  BigFloat radius;
};

/**
 * Weierstrass inclusion disks around approximate roots.  Every root lies in
 * the union; if the disks are pairwise disjoint each holds exactly one root.
 * coeff_err bounds the absolute error of each coefficient.
 */
std::vector<RootDisk> inclusion_disks(const std::vector<BigComplex>& c, const std::vector<BigComplex>& z,
                                      const BigFloat& coeff_err);
bool pairwise_disjoint(const std::vector<RootDisk>& disks);

/// Horner evaluation.
BigComplex horner(const std::vector<BigComplex>& c, const BigComplex& z);

}  // namespace qsing
