#include "qsing/numeric.hpp"

#include <cmath>
#include <vector>

namespace qsing {

BigFloat::BigFloat(mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(const Rat& r, mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_q(v_, r.get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(long v, mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_si(v_, v, MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& o) {
  mpfr_init2(v_, o.prec());
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& o) noexcept {
  mpfr_init2(v_, MPFR_PREC_MIN);
  mpfr_swap(v_, o.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& o) {
  if (this != &o) {
    mpfr_set_prec(v_, o.prec());
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& o) noexcept {
  mpfr_swap(v_, o.v_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

BigFloat BigFloat::pow2(long e, mpfr_prec_t prec) {
  BigFloat r(prec);
  mpfr_set_ui_2exp(r.v_, 1, e, MPFR_RNDN);
  return r;
}

namespace {
mpfr_prec_t pmax(const BigFloat& a, const BigFloat& b) { return std::max(a.prec(), b.prec()); }
}  // namespace

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
  BigFloat r(pmax(a, b));
  mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}
BigFloat operator-(const BigFloat& a, const BigFloat& b) {
  BigFloat r(pmax(a, b));
  mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}
BigFloat operator*(const BigFloat& a, const BigFloat& b) {
  BigFloat r(pmax(a, b));
  mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}
BigFloat operator/(const BigFloat& a, const BigFloat& b) {
  BigFloat r(pmax(a, b));
  mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}
BigFloat BigFloat::operator-() const {
  BigFloat r(prec());
  mpfr_neg(r.v_, v_, MPFR_RNDN);
  return r;
}
BigFloat BigFloat::abs() const {
  BigFloat r(prec());
  mpfr_abs(r.v_, v_, MPFR_RNDN);
  return r;
}
BigFloat BigFloat::sqrt() const {
  BigFloat r(prec());
  mpfr_sqrt(r.v_, v_, MPFR_RNDU);
  return r;
}

Rat BigFloat::to_rat() const {
  if (mpfr_zero_p(v_)) return Rat(0);
  BigInt m;
  mpfr_exp_t e = mpfr_get_z_2exp(m.get_mpz_t(), v_);
  Rat r(m);
  if (e >= 0) {
    mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(e));
  } else {
    mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(-e));
  }
  return r;
}

long BigFloat::exponent() const {
  if (mpfr_zero_p(v_)) return -(1L << 40);
  return mpfr_get_exp(v_);
}

std::string BigFloat::to_string(int digits) const {
  char buf[256];
  mpfr_snprintf(buf, sizeof buf, "%.*Rg", digits, v_);
  return buf;
}

BigFloat max(const BigFloat& a, const BigFloat& b) { return a < b ? b : a; }

BigComplex operator/(const BigComplex& a, const BigComplex& b) {
  BigFloat d = b.norm2();
  return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}

std::string BigComplex::to_string(int digits) const {
  return re.to_string(digits) + (im.sign() < 0 ? " - " : " + ") + im.abs().to_string(digits) + "*I";
}

BigComplex horner(const std::vector<BigComplex>& c, const BigComplex& z) {
  BigComplex acc(z.prec());
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
  return acc;
}

std::vector<BigComplex> approximate_roots(const std::vector<BigComplex>& c, mpfr_prec_t prec) {
  const std::size_t n = c.size() - 1;
  std::vector<BigComplex> z;
  if (n == 0) return z;
  std::vector<BigComplex> dc;
  for (std::size_t k = 1; k <= n; ++k) dc.push_back(BigFloat(static_cast<long>(k), prec) * c[k]);

  // Starting radius from the Fujiwara-type bound max |c_k/c_n|^(1/(n-k)).
  double lead = c[n].abs().to_double();
  double radius = 0;
  for (std::size_t k = 0; k < n; ++k) {
    double a = c[k].abs().to_double() / lead;
    if (a > 0) radius = std::max(radius, std::pow(a, 1.0 / static_cast<double>(n - k)));
  }
  if (!(radius > 0) || !std::isfinite(radius)) radius = 1;
  for (std::size_t k = 0; k < n; ++k) {
    double ang = 6.283185307179586 * static_cast<double>(k) / static_cast<double>(n) + 0.4;
    z.emplace_back(BigFloat(Rat(radius * std::cos(ang)), prec), BigFloat(Rat(radius * std::sin(ang)), prec));
  }
  const BigFloat tol = BigFloat::pow2(-static_cast<long>(prec) + 8, prec);
  for (int iter = 0; iter < 2000; ++iter) {
    bool done = true;
    for (std::size_t i = 0; i < n; ++i) {
      BigComplex pv = horner(c, z[i]);
      BigComplex dv = horner(dc, z[i]);
      if (pv.re.is_zero() && pv.im.is_zero()) continue;
      BigComplex w = pv / dv;
      BigComplex s(prec);
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) s = s + BigComplex(BigFloat(1L, prec), BigFloat(prec)) / (z[i] - z[j]);
      BigComplex step = w / (BigComplex(BigFloat(1L, prec), BigFloat(prec)) - w * s);
      z[i] = z[i] - step;
      BigFloat scale = max(BigFloat(1L, prec), z[i].abs());
      if (!(step.abs() <= tol * scale)) done = false;
    }
    if (done) break;
  }
  return z;
}

std::vector<RootDisk> inclusion_disks(const std::vector<BigComplex>& c, const std::vector<BigComplex>& z,
                                      const BigFloat& coeff_err) {
  const std::size_t n = z.size();
  const mpfr_prec_t prec = c.back().prec();
  std::vector<RootDisk> out;
  BigFloat lead = c.back().abs();
  for (std::size_t i = 0; i < n; ++i) {
    BigComplex pv = horner(c, z[i]);
    // Coefficient uncertainty propagated through sum |z|^k.
    BigFloat az = z[i].abs();
    BigFloat powsum(1L, prec), zk(1L, prec);
    for (std::size_t k = 1; k < c.size(); ++k) {
      zk = zk * az;
      powsum = powsum + zk;
    }
    BigFloat num = pv.abs() + coeff_err * powsum;
    BigFloat den = lead;
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) den = den * (z[i] - z[j]).abs();
    BigFloat r = den.is_zero() ? BigFloat::pow2(1L << 20, prec) : BigFloat(static_cast<long>(n), prec) * num / den;
    // Slack for rounding in the evaluation itself.
    r = r * BigFloat(Rat(2), prec) + BigFloat::pow2(-static_cast<long>(prec) + 4, prec) * max(BigFloat(1L, prec), az);
    out.push_back({z[i], r});
  }
  return out;
}

bool pairwise_disjoint(const std::vector<RootDisk>& disks) {
  for (std::size_t i = 0; i < disks.size(); ++i)
    for (std::size_t j = i + 1; j < disks.size(); ++j) {
      BigFloat d = (disks[i].center - disks[j].center).abs();
      if (!(disks[i].radius + disks[j].radius < d)) return false;
    }
  return true;
}

}  // namespace qsing
