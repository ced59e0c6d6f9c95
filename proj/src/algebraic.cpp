#include "qsing/algebraic.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <sstream>

#include "qsing/factor.hpp"

namespace qsing {

namespace detail {

struct Level {
  std::shared_ptr<const Level> parent;
  std::size_t index = 0;  // 1-based height of this level
  std::size_t degree = 0;
  std::size_t parent_dim = 1;
  std::size_t dim = 1;
  /// Monic defining polynomial; poly[k] is the coefficient of Z^k in the parent tower.
  std::vector<std::vector<Rat>> poly;
  RootDisk isolation;
  Region region;

  mutable std::mutex mu;
  mutable BigComplex root{64};
  mutable mpfr_prec_t root_prec = 0;
};

}  // namespace detail

using detail::Level;

// ------------------------------------------------------------------ tower --

std::size_t Tower::height() const { return top_ ? top_->index : 0; }
std::size_t Tower::dimension() const { return top_ ? top_->dim : 1; }

bool Tower::is_prefix_of(const Tower& o) const {
  if (!top_) return true;
  for (const Level* l = o.top_.get(); l; l = l->parent.get())
    if (l == top_.get()) return true;
  return false;
}

std::vector<const Level*> Tower::levels() const {
  std::vector<const Level*> out;
  for (const Level* l = top_.get(); l; l = l->parent.get()) out.push_back(l);
  std::reverse(out.begin(), out.end());
  return out;
}

Region Tower::region(std::size_t k) const {
  auto ls = levels();
  if (k == 0 || k > ls.size()) throw std::out_of_range("tower level");
  return ls[k - 1]->region;
}

Tower common_tower(const Tower& a, const Tower& b) {
  if (a.is_prefix_of(b)) return b;
  if (b.is_prefix_of(a)) return a;
  throw std::logic_error("algebraic numbers live in unrelated towers");
}

std::string Region::to_string() const {
  return "[" + qsing::to_string(re_lo) + "," + qsing::to_string(re_hi) + "]×[" + qsing::to_string(im_lo) + "," +
         qsing::to_string(im_hi) + "]";
}

class TowerBuilder {
 public:
  static Tower extend(const Tower& t, std::vector<std::vector<Rat>> poly, RootDisk disk, Region region) {
    auto lvl = std::make_shared<Level>();
    lvl->parent = t.top_;
    lvl->index = t.height() + 1;
    lvl->degree = poly.size() - 1;
    lvl->parent_dim = t.dimension();
    lvl->dim = lvl->parent_dim * lvl->degree;
    lvl->poly = std::move(poly);
    lvl->root = disk.center;
    lvl->isolation = std::move(disk);
    lvl->region = std::move(region);
    return Tower(std::move(lvl));
  }
};

// ------------------------------------------------------ representations --

namespace {

bool slice_zero(const Rat* a, std::size_t n) {
  for (std::size_t k = 0; k < n; ++k)
    if (!is_zero(a[k])) return false;
  return true;
}

/// out = a * b reduced, all of length dim(L).
void mul_rec(const Level* L, const Rat* a, const Rat* b, Rat* out) {
  if (!L) {
    out[0] = a[0] * b[0];
    return;
  }
  const std::size_t pd = L->parent_dim, d = L->degree;
  const Level* P = L->parent.get();
  std::vector<Rat> c((2 * d - 1) * pd);
  std::vector<Rat> tmp(pd);
  for (std::size_t i = 0; i < d; ++i) {
    if (slice_zero(a + i * pd, pd)) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (slice_zero(b + j * pd, pd)) continue;
      mul_rec(P, a + i * pd, b + j * pd, tmp.data());
      for (std::size_t k = 0; k < pd; ++k) c[(i + j) * pd + k] += tmp[k];
    }
  }
  std::vector<Rat> top(pd);
  for (std::size_t n = 2 * d - 1; n-- > d;) {
    if (slice_zero(&c[n * pd], pd)) continue;
    std::copy(&c[n * pd], &c[n * pd] + pd, top.begin());
    for (std::size_t i = 0; i < d; ++i) {
      if (slice_zero(L->poly[i].data(), pd)) continue;
      mul_rec(P, top.data(), L->poly[i].data(), tmp.data());
      for (std::size_t k = 0; k < pd; ++k) c[(n - d + i) * pd + k] -= tmp[k];
    }
  }
  std::copy(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(d * pd), out);
}

std::vector<Rat> mul_rep(const Level* L, const std::vector<Rat>& a, const std::vector<Rat>& b) {
  std::vector<Rat> out(L ? L->dim : 1);
  mul_rec(L, a.data(), b.data(), out.data());
  return out;
}

BigComplex level_root(const Level* L, mpfr_prec_t prec);

constexpr mpfr_prec_t kGuard = 32;

/// Numeric value and magnitude (sum of absolute term sizes) of a representation.
void eval_rec(const Level* L, const Rat* a, mpfr_prec_t prec, BigComplex& val, BigFloat& mag) {
  if (!L) {
    val = BigComplex(a[0], prec);
    mag = BigFloat(rat_abs(a[0]), 64);
    return;
  }
  const std::size_t pd = L->parent_dim;
  BigComplex r = level_root(L, prec + kGuard);
  BigFloat rabs = r.abs();
  val = BigComplex(prec);
  mag = BigFloat(64);
  BigComplex v(prec);
  BigFloat m(64);
  for (std::size_t e = L->degree; e-- > 0;) {
    val = val * r;
    mag = mag * rabs;
    if (slice_zero(a + e * pd, pd)) continue;
    eval_rec(L->parent.get(), a + e * pd, prec, v, m);
    val = val + v;
    mag = mag + m;
  }
}

std::vector<BigComplex> numeric_coeffs(const Level* parent, const std::vector<std::vector<Rat>>& poly, mpfr_prec_t prec,
                                       BigFloat* max_err) {
  std::vector<BigComplex> c;
  BigFloat worst(64);
  for (const auto& rep : poly) {
    BigComplex v(prec);
    BigFloat m(64);
    eval_rec(parent, rep.data(), prec, v, m);
    c.push_back(v);
    BigFloat err = m * BigFloat::pow2(-static_cast<long>(prec) + 24, 64);
    worst = max(worst, err);
  }
  if (max_err) *max_err = worst;
  return c;
}

BigComplex level_root(const Level* L, mpfr_prec_t prec) {
  std::lock_guard<std::mutex> lock(L->mu);
  if (L->root_prec >= prec) return L->root;
  const mpfr_prec_t work = prec + kGuard;
  std::vector<BigComplex> c = numeric_coeffs(L->parent.get(), L->poly, work, nullptr);
  std::vector<BigComplex> dc;
  for (std::size_t k = 1; k < c.size(); ++k) dc.push_back(BigFloat(static_cast<long>(k), work) * c[k]);
  BigComplex z(work);
  mpfr_set(z.re.get(), L->root.re.get(), MPFR_RNDN);
  mpfr_set(z.im.get(), L->root.im.get(), MPFR_RNDN);
  const BigFloat tol = BigFloat::pow2(-static_cast<long>(prec) - 8, work);
  bool converged = false;
  for (int it = 0; it < 400; ++it) {
    BigComplex step = horner(c, z) / horner(dc, z);
    z = z - step;
    if (step.abs() <= tol * max(BigFloat(1L, work), z.abs())) {
      if (converged) break;
      converged = true;  // one extra step past the tolerance
    }
  }
  if (!((z - L->isolation.center).abs() <= L->isolation.radius))
    throw std::logic_error("root refinement left its isolating disk");
  L->root = z;
  L->root_prec = prec;
  return z;
}

Region region_of(const RootDisk& d) {
  long e = d.radius.exponent();  // radius < 2^e
  long k = std::max(-e, 0L) + 1;  // grid step 2^-k <= radius
  Rat step = make_rat(BigInt(1), BigInt(1) << static_cast<mp_bitcnt_t>(k));
  auto down = [&](const BigFloat& v) -> Rat { return Rat(rat_floor(v.to_rat() / step)) * step; };
  auto up = [&](const BigFloat& v) -> Rat { return Rat(rat_floor(v.to_rat() / step) + 1) * step; };
  return {down(d.center.re - d.radius), up(d.center.re + d.radius), down(d.center.im - d.radius),
          up(d.center.im + d.radius)};
}

bool well_separated(const std::vector<RootDisk>& disks) {
  for (std::size_t i = 0; i < disks.size(); ++i)
    for (std::size_t j = i + 1; j < disks.size(); ++j) {
      BigFloat d = (disks[i].center - disks[j].center).abs();
      BigFloat s = (disks[i].radius + disks[j].radius) * BigFloat(8L, 64);
      if (!(s < d)) return false;
    }
  return true;
}

/// Certified, well-separated disks for all roots of a monic polynomial over a tower.
std::vector<RootDisk> isolate(const Tower& t, const std::vector<std::vector<Rat>>& poly, mpfr_prec_t start = 128) {
  for (mpfr_prec_t prec = start; prec <= (1 << 16); prec *= 2) {
    BigFloat err(64);
    std::vector<BigComplex> c = numeric_coeffs(t.top(), poly, prec, &err);
    std::vector<BigComplex> z = approximate_roots(c, prec);
    std::vector<RootDisk> disks = inclusion_disks(c, z, err);
    if (well_separated(disks)) return disks;
  }
  throw std::logic_error("root isolation did not converge");
}

std::vector<std::vector<Rat>> reps_of(const Tower& t, const KPoly& p) {
  std::vector<std::vector<Rat>> out;
  for (const auto& c : p.coeffs()) out.push_back(c.lift(t).rep());
  return out;
}

Tower extend_with_disk(const Tower& t, std::vector<std::vector<Rat>> poly, const RootDisk& disk) {
  return TowerBuilder::extend(t, std::move(poly), disk, region_of(disk));
}

QPoly to_qpoly_checked(const KPoly& p) {
  std::vector<Rat> c;
  for (const auto& a : p.coeffs()) c.push_back(a.rational_value());
  return QPoly(std::move(c));
}

}  // namespace

// -------------------------------------------------------- element basics --

AlgebraicNumber::AlgebraicNumber(Tower t, std::vector<Rat> rep) : tower_(std::move(t)), rep_(std::move(rep)) {
  if (rep_.size() != tower_.dimension()) throw std::logic_error("representation length does not match tower");
}

AlgebraicNumber AlgebraicNumber::generator(const Tower& t) {
  if (t.height() == 0) throw std::logic_error("Q has no generator");
  std::vector<Rat> rep(t.dimension());
  rep[t.top()->parent_dim] = 1;
  return AlgebraicNumber(t, std::move(rep));
}

AlgebraicNumber AlgebraicNumber::lift(const Tower& t) const {
  if (t == tower_) return *this;
  if (!tower_.is_prefix_of(t)) throw std::logic_error("cannot lift into a tower that does not extend this one");
  std::vector<Rat> rep(t.dimension());
  std::copy(rep_.begin(), rep_.end(), rep.begin());
  return AlgebraicNumber(t, std::move(rep));
}

bool AlgebraicNumber::rep_is_zero() const { return slice_zero(rep_.data(), rep_.size()); }

bool AlgebraicNumber::is_rational() const { return slice_zero(rep_.data() + 1, rep_.size() - 1); }

AlgebraicNumber operator+(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  Tower t = common_tower(a.tower_, b.tower_);
  AlgebraicNumber x = a.lift(t);
  const AlgebraicNumber y = b.lift(t);
  for (std::size_t k = 0; k < x.rep_.size(); ++k) x.rep_[k] += y.rep_[k];
  return x;
}

AlgebraicNumber AlgebraicNumber::operator-() const {
  AlgebraicNumber r = *this;
  for (auto& c : r.rep_) c = -c;
  return r;
}

AlgebraicNumber operator-(const AlgebraicNumber& a, const AlgebraicNumber& b) { return a + (-b); }

AlgebraicNumber operator*(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  if (a.is_rational() || b.is_rational()) {
    const AlgebraicNumber& s = a.is_rational() ? a : b;
    const AlgebraicNumber& o = a.is_rational() ? b : a;
    Tower t = common_tower(a.tower_, b.tower_);
    AlgebraicNumber r = o.lift(t);
    const Rat k = s.rep_[0];
    for (auto& c : r.rep_) c *= k;
    return r;
  }
  Tower t = common_tower(a.tower_, b.tower_);
  return AlgebraicNumber(t, mul_rep(t.top(), a.lift(t).rep_, b.lift(t).rep_));
}

AlgebraicNumber AlgebraicNumber::pow(unsigned e) const {
  AlgebraicNumber r = AlgebraicNumber(Rat(1)).lift(tower_);
  for (unsigned k = 0; k < e; ++k) r = r * *this;
  return r;
}

namespace {

/// Monic minimal polynomial of multiplication by a, from the Krylov sequence 1, a, a^2, ...
QPoly krylov_minpoly(const AlgebraicNumber& a) {
  const std::size_t D = a.rep().size();
  struct Row {
    std::vector<Rat> vec;
    std::size_t pivot;
    std::vector<Rat> combo;
  };
  std::vector<Row> rows;
  AlgebraicNumber power = AlgebraicNumber(Rat(1)).lift(a.tower());
  for (std::size_t k = 0; k <= D; ++k) {
    std::vector<Rat> v = power.rep();
    std::vector<Rat> combo(k + 1);
    combo[k] = 1;
    for (const Row& r : rows) {
      if (is_zero(v[r.pivot])) continue;
      Rat f = v[r.pivot] / r.vec[r.pivot];
      for (std::size_t i = 0; i < D; ++i)
        if (!is_zero(r.vec[i])) v[i] -= f * r.vec[i];
      for (std::size_t i = 0; i < r.combo.size(); ++i) combo[i] -= f * r.combo[i];
    }
    std::size_t piv = 0;
    while (piv < D && is_zero(v[piv])) ++piv;
    if (piv == D) return QPoly(std::move(combo)).monic();
    rows.push_back({std::move(v), piv, std::move(combo)});
    power = power * a;
  }
  throw std::logic_error("Krylov sequence did not terminate");
}

QPoly square_free(const QPoly& p) { return (p / gcd(p, p.derivative())).monic(); }

/// Integer coefficient vector of a rational polynomial, primitive.
std::vector<BigInt> integer_coeffs(const QPoly& p) {
  BigInt den = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<BigInt> out;
  BigInt g = 0;
  for (const auto& c : p.coeffs()) {
    Rat s = c * den;
    out.push_back(s.get_num());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out.back().get_mpz_t());
  }
  for (auto& c : out) c /= g;
  return out;
}

/// floor(log2) of a positive rational, rounded down by one for safety.
long log2_floor(const Rat& r) {
  long ln = static_cast<long>(mpz_sizeinbase(r.get_num_mpz_t(), 2));
  long ld = static_cast<long>(mpz_sizeinbase(r.get_den_mpz_t(), 2));
  return ln - ld - 2;
}

}  // namespace

QPoly annihilating_polynomial(const AlgebraicNumber& a) { return square_free(krylov_minpoly(a)); }

std::pair<BigComplex, BigFloat> AlgebraicNumber::approx_with_error(mpfr_prec_t prec) const {
  BigComplex v(prec);
  BigFloat m(64);
  eval_rec(tower_.top(), rep_.data(), prec, v, m);
  return {v, m * BigFloat::pow2(-static_cast<long>(prec) + 24, 64)};
}

BigComplex AlgebraicNumber::approx(mpfr_prec_t prec) const { return approx_with_error(prec).first; }

bool is_zero(const AlgebraicNumber& a) {
  if (a.rep_is_zero()) return true;
  if (a.is_rational()) return false;
  {
    auto [v, err] = a.approx_with_error(64);
    if (err < v.abs()) return false;
  }
  QPoly m = annihilating_polynomial(a);
  if (!is_zero(m.coeff(0))) return false;
  QPoly m1 = m / QPoly::monomial(Rat(1), 1);
  if (m1.degree() < 1) return true;
  // Nonzero roots of m1 satisfy |z| > |c0| / (|c0| + max |ck|).
  Rat c0 = rat_abs(m1.coeff(0));
  Rat cmax = 0;
  for (int k = 1; k <= m1.degree(); ++k) cmax = std::max(cmax, rat_abs(m1.coeff(static_cast<std::size_t>(k))));
  Rat beta = c0 / (c0 + cmax);
  long lb = log2_floor(beta);  // beta >= 2^lb
  for (mpfr_prec_t prec = 64; prec <= (1 << 18); prec *= 2) {
    auto [v, err] = a.approx_with_error(prec);
    if (err.exponent() < lb - 2) return v.abs().exponent() < lb;  // |v| < 2^(lb-1) <= beta/2
  }
  throw std::logic_error("zero test did not reach the required precision");
}

bool is_real(const AlgebraicNumber& a) {
  if (a.is_rational()) return true;
  {
    auto [v, err] = a.approx_with_error(64);
    if (err < v.im.abs()) return false;
  }
  QPoly m = annihilating_polynomial(a);
  const int n = m.degree();
  if (n <= 1) return true;
  // Mahler: sep >= sqrt(3 |disc|) n^(-(n+2)/2) |m|_2^(1-n), with |disc| >= 1 for primitive integer m.
  std::vector<BigInt> z = integer_coeffs(m);
  BigInt norm2 = 0;
  for (const auto& c : z) norm2 += c * c;
  double log_norm = 0.5 * static_cast<double>(mpz_sizeinbase(norm2.get_mpz_t(), 2));
  double log_sep = 0.5 * std::log2(3.0) - 0.5 * (n + 2) * std::log2(static_cast<double>(n)) - (n - 1) * log_norm;
  long sep_exp = static_cast<long>(std::floor(log_sep)) - 1;  // sep >= 2^sep_exp
  // A non-real root has |Im| >= sep/2 >= 2^(sep_exp-1); decide with error < 2^(sep_exp-3).
  for (mpfr_prec_t prec = 64; prec <= (1 << 18); prec *= 2) {
    auto [v, err] = a.approx_with_error(prec);
    if (err.exponent() < sep_exp - 3) return v.im.abs().exponent() < sep_exp - 2;
  }
  throw std::logic_error("realness test did not reach the required precision");
}

int compare_real(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  if (!is_real(a) || !is_real(b)) throw DomainError("compare_real requires real arguments");
  if (a.is_rational() && b.is_rational()) {
    int c = cmp(a.rational_value(), b.rational_value());
    return (c > 0) - (c < 0);
  }
  AlgebraicNumber d = a - b;
  if (is_zero(d)) return 0;
  for (mpfr_prec_t prec = 64;; prec *= 2) {
    auto [v, err] = d.approx_with_error(prec);
    if (err < v.re.abs()) return v.re.sign();
  }
}

AlgebraicNumber AlgebraicNumber::inverse() const {
  if (is_rational()) {
    if (qsing::is_zero(rep_[0])) throw DomainError("division by zero");
    return AlgebraicNumber(1 / rep_[0]).lift(tower_);
  }
  if (is_zero(*this)) throw DomainError("division by zero");
  QPoly mu = krylov_minpoly(*this);
  // Strip factors of Z: the value of a is nonzero, so mu1(a) vanishes too.
  std::size_t s = 0;
  while (is_zero(mu.coeff(s))) ++s;
  std::vector<Rat> c(mu.coeffs().begin() + static_cast<std::ptrdiff_t>(s), mu.coeffs().end());
  // a^-1 = -(c1 + c2 a + ... ) / c0
  AlgebraicNumber acc = AlgebraicNumber(Rat(0)).lift(tower_);
  for (std::size_t k = c.size(); k-- > 1;) acc = acc * *this + AlgebraicNumber(c[k]);
  return acc * AlgebraicNumber(Rat(-1) / c[0]);
}

AlgebraicNumber operator/(const AlgebraicNumber& a, const AlgebraicNumber& b) { return a * b.inverse(); }

bool operator==(const AlgebraicNumber& a, const AlgebraicNumber& b) { return is_zero(a - b); }

// -------------------------------------------------------------- printing --

namespace {

std::string rep_expr(const std::vector<const Level*>& levels, const std::vector<Rat>& rep) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t idx = rep.size(); idx-- > 0;) {
    const Rat& c = rep[idx];
    if (is_zero(c)) continue;
    std::string mono;
    std::size_t rest = idx;
    for (std::size_t k = 0; k < levels.size(); ++k) {
      std::size_t e = rest % levels[k]->degree;
      rest /= levels[k]->degree;
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "r" + std::to_string(k + 1);
      if (e > 1) mono += "^" + std::to_string(e);
    }
    Rat a = rat_abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (mono.empty()) {
      os << to_string(a);
    } else if (a == 1) {
      os << mono;
    } else {
      os << to_string(a) << "*" << mono;
    }
  }
  return first ? "0" : os.str();
}

}  // namespace

std::string AlgebraicNumber::expr() const { return rep_expr(tower_.levels(), rep_); }

std::string AlgebraicNumber::to_string() const {
  if (is_rational()) return qsing::to_string(rep_[0]);
  return expr() + " where " + tower_.describe(true);
}

namespace {

std::string approx_text(const Region& r) {
  const Rat re_mid = (r.re_lo + r.re_hi) / 2, im_mid = (r.im_lo + r.im_hi) / 2;
  double re = re_mid.get_d(), im = im_mid.get_d();
  const bool has_re = !r.contains(Rat(0), im_mid), has_im = r.im_lo > 0 || r.im_hi < 0;
  std::ostringstream os;
  os.precision(6);
  if (has_re || !has_im) os << (has_re ? re : 0.0);
  if (has_im) {
    if (has_re) os << (im < 0 ? " - " : " + ");
    else if (im < 0) os << "-";
    os << std::abs(im) << "i";
  }
  return os.str();
}

}  // namespace

std::string Tower::describe(bool exact_regions) const {
  auto ls = levels();
  std::ostringstream os;
  for (std::size_t k = 0; k < ls.size(); ++k) {
    std::vector<const Level*> below(ls.begin(), ls.begin() + static_cast<std::ptrdiff_t>(k));
    std::string poly;
    for (std::size_t e = ls[k]->degree + 1; e-- > 0;) {
      std::string c = rep_expr(below, ls[k]->poly[e]);
      if (c == "0") continue;
      std::string mono = e == 0 ? "" : (e == 1 ? "Z" : "Z^" + std::to_string(e));
      std::string term;
      if (mono.empty()) {
        term = "(" + c + ")";
      } else if (c == "1") {
        term = mono;
      } else {
        term = "(" + c + ")*" + mono;
      }
      poly += poly.empty() ? term : " + " + term;
    }
    if (k) os << ", ";
    os << "r" << k + 1 << " = RootOf(" << poly;
    if (exact_regions)
      os << ", region=" << ls[k]->region.to_string() << ", index=" << k + 1 << ")";
    else
      os << ") ~ " << approx_text(ls[k]->region);
  }
  return os.str();
}

// ------------------------------------------------------- root operations --

Tower adjoin_root(const Tower& t, const KPoly& p, const Region& region) {
  if (p.degree() < 2) throw DomainError("adjoin_root needs degree at least two");
  KPoly lifted;
  {
    std::vector<AlgebraicNumber> c;
    for (const auto& a : p.coeffs()) c.push_back(a.lift(t));
    lifted = KPoly(std::move(c));
  }
  if (gcd(lifted, lifted.derivative()).degree() > 0) throw DomainError("defining polynomial is not square-free");
  KPoly monic = lifted.monic();
  std::vector<std::vector<Rat>> reps = reps_of(t, monic);
  for (mpfr_prec_t prec = 128; prec <= (1 << 14); prec *= 2) {
    std::vector<RootDisk> disks = isolate(t, reps, prec);
    int inside = 0, undecided = 0;
    const RootDisk* chosen = nullptr;
    for (const auto& d : disks) {
      Rat re = d.center.re.to_rat(), im = d.center.im.to_rat(), r = d.radius.to_rat();
      bool in = region.re_lo <= re - r && re + r <= region.re_hi && region.im_lo <= im - r && im + r <= region.im_hi;
      bool out = re + r < region.re_lo || re - r > region.re_hi || im + r < region.im_lo || im - r > region.im_hi;
      if (in) {
        ++inside;
        chosen = &d;
      } else if (!out) {
        ++undecided;
      }
    }
    if (undecided) continue;
    if (inside != 1) throw DomainError("region isolates " + std::to_string(inside) + " roots, expected exactly one");
    return extend_with_disk(t, reps, *chosen);
  }
  throw DomainError("region boundary passes through a root");
}

std::vector<std::pair<AlgebraicNumber, unsigned>> roots_over(const Tower& t, const KPoly& p) {
  if (p.zero()) throw DomainError("roots of the zero polynomial");
  KPoly lifted;
  {
    std::vector<AlgebraicNumber> c;
    for (const auto& a : p.coeffs()) c.push_back(a.lift(t));
    lifted = KPoly(std::move(c));
  }
  std::vector<std::pair<AlgebraicNumber, unsigned>> out;
  auto add_all = [&](const std::vector<std::vector<Rat>>& reps, unsigned mult) {
    for (const RootDisk& d : isolate(t, reps)) out.emplace_back(AlgebraicNumber::generator(extend_with_disk(t, reps, d)), mult);
  };
  for (const auto& [s, mult] : square_free_decomposition(lifted)) {
    bool rational = std::all_of(s.coeffs().begin(), s.coeffs().end(), [](const auto& a) { return a.is_rational(); });
    if (rational) {
      for (const auto& [g, m] : factor_univariate(to_qpoly_checked(s)).factors) {
        if (g.degree() == 1) {
          out.emplace_back(AlgebraicNumber(-g.coeff(0) / g.coeff(1)).lift(t), mult);
          continue;
        }
        std::vector<std::vector<Rat>> reps;
        QPoly gm = g.monic();
        for (const auto& c : gm.coeffs()) reps.push_back(AlgebraicNumber(c).lift(t).rep());
        add_all(reps, mult);
      }
    } else if (s.degree() == 1) {
      out.emplace_back(-s.coeff(0) / s.coeff(1), mult);
    } else {
      add_all(reps_of(t, s.monic()), mult);
    }
  }
  // Presentation order: real part, then imaginary part, at a fixed precision.
  const mpfr_prec_t prec = 256;
  std::vector<std::pair<BigComplex, std::size_t>> keys;
  for (std::size_t i = 0; i < out.size(); ++i) keys.emplace_back(out[i].first.approx(prec), i);
  const BigFloat eps = BigFloat::pow2(-200, prec);
  std::stable_sort(keys.begin(), keys.end(), [&](const auto& a, const auto& b) {
    BigFloat scale = max(BigFloat(1L, prec), max(a.first.abs(), b.first.abs()));
    BigFloat dre = a.first.re - b.first.re;
    if (eps * scale < dre.abs()) return dre.sign() < 0;
    BigFloat dim = a.first.im - b.first.im;
    return dim.sign() < 0;
  });
  std::vector<std::pair<AlgebraicNumber, unsigned>> sorted;
  for (const auto& k : keys) sorted.push_back(out[k.second]);
  return sorted;
}

ConjugatePairing conjugate_pairs(const std::vector<AlgebraicNumber>& xs) {
  ConjugatePairing res;
  std::vector<std::size_t> open;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (is_real(xs[i])) {
      res.fixed.push_back(i);
    } else {
      open.push_back(i);
    }
  }
  if (open.size() % 2) throw DomainError("input is not closed under conjugation");
  for (mpfr_prec_t prec = 64; prec <= (1 << 14); prec *= 2) {
    std::vector<std::pair<BigComplex, BigFloat>> ap;
    for (std::size_t i : open) ap.push_back(xs[i].approx_with_error(prec));
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    std::vector<bool> used(open.size(), false);
    bool ambiguous = false;
    for (std::size_t a = 0; a < open.size() && !ambiguous; ++a) {
      if (used[a]) continue;
      std::vector<std::size_t> cand;
      for (std::size_t b = 0; b < open.size(); ++b) {
        if (b == a || used[b]) continue;
        BigFloat d = (ap[a].first.conj() - ap[b].first).abs();
        if (d <= (ap[a].second + ap[b].second) * BigFloat(2L, 64)) cand.push_back(b);
      }
      if (cand.empty()) throw DomainError("input is not closed under conjugation");
      if (cand.size() > 1) {
        // Exactly equal candidates are interchangeable.
        bool all_equal = true;
        for (std::size_t k = 1; k < cand.size() && all_equal; ++k) {
          const auto& u = xs[open[cand[0]]];
          const auto& v = xs[open[cand[k]]];
          all_equal = (u.tower().is_prefix_of(v.tower()) || v.tower().is_prefix_of(u.tower())) && u == v;
        }
        if (!all_equal) {
          ambiguous = true;
          break;
        }
      }
      used[a] = used[cand[0]] = true;
      pairs.emplace_back(open[a], open[cand[0]]);
    }
    if (!ambiguous) {
      res.pairs = std::move(pairs);
      return res;
    }
  }
  throw DomainError("conjugate matching did not resolve");
}

}  // namespace qsing
