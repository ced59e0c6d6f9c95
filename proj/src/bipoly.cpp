#include "qsing/bipoly.hpp"

#include <sstream>

namespace qsing {

std::string to_string(const QPoly& p, const std::string& var) {
  if (p.zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = p.degree(); k >= 0; --k) {
    const Rat& c = p.coeffs()[static_cast<std::size_t>(k)];
    if (is_zero(c)) continue;
    Rat a = rat_abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = a == 1;
    if (!unit || k == 0) os << to_string(a);
    if (k > 0) {
      if (!unit) os << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

bool grlex_less(const Monomial& a, const Monomial& b) {
  unsigned da = a.first + a.second, db = b.first + b.second;
  if (da != db) return da < db;
  return a.first < b.first;
}

Monomial leading_monomial(const BiPoly& f) {
  if (f.zero()) throw std::logic_error("leading monomial of zero polynomial");
  Monomial best = f.terms().begin()->first;
  for (const auto& [m, c] : f.terms())
    if (grlex_less(best, m)) best = m;
  return best;
}

std::string to_string(const BiPoly& f) {
  if (f.zero()) return "0";
  std::vector<std::pair<Monomial, Rat>> ts(f.terms().begin(), f.terms().end());
  std::sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) { return grlex_less(b.first, a.first); });
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : ts) {
    Rat a = rat_abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    bool constant = m.first == 0 && m.second == 0;
    bool unit = a == 1;
    std::string mono;
    if (m.first > 0) mono += m.first > 1 ? "x^" + std::to_string(m.first) : "x";
    if (m.second > 0) {
      if (!mono.empty()) mono += "*";
      mono += m.second > 1 ? "y^" + std::to_string(m.second) : "y";
    }
    if (constant) {
      os << to_string(a);
    } else if (unit) {
      os << mono;
    } else {
      os << to_string(a) << "*" << mono;
    }
  }
  return os.str();
}

unsigned multiplicity_at_origin(const BiPoly& f) {
  if (f.zero()) throw DomainError("zero polynomial has no multiplicity");
  if (!is_zero(f.coeff(0, 0))) throw DomainError("origin is not on the curve");
  unsigned m = ~0u;
  for (const auto& [mono, c] : f.terms()) m = std::min(m, mono.first + mono.second);
  return m;
}

BiPoly tangent_cone(const BiPoly& f) { return f.homogeneous_part(multiplicity_at_origin(f)); }

BiPoly translate(const BiPoly& f, const std::pair<Rat, Rat>& p) {
  if (is_zero(p.first) && is_zero(p.second)) return f;
  return f.compose(BiPoly::x() + BiPoly(p.first), BiPoly::y() + BiPoly(p.second));
}

BiPoly linear_change(const BiPoly& f, const Mat2& m) {
  Rat det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
  if (is_zero(det)) throw DomainError("singular coordinate change");
  BiPoly nx = m[0][0] * BiPoly::x() + m[0][1] * BiPoly::y();
  BiPoly ny = m[1][0] * BiPoly::x() + m[1][1] * BiPoly::y();
  return f.compose(nx, ny);
}

Mat2 inverse(const Mat2& m) {
  Rat det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
  if (is_zero(det)) throw DomainError("singular coordinate change");
  Mat2 r;
  r[0][0] = m[1][1] / det;
  r[0][1] = -m[0][1] / det;
  r[1][0] = -m[1][0] / det;
  r[1][1] = m[0][0] / det;
  return r;
}

std::vector<QPoly> coeffs_in_y(const BiPoly& f) {
  int dy = f.degree_y();
  if (dy < 0) return {};
  std::vector<std::vector<Rat>> raw(static_cast<std::size_t>(dy + 1));
  for (const auto& [m, c] : f.terms()) {
    auto& v = raw[m.second];
    if (v.size() <= m.first) v.resize(m.first + 1);
    v[m.first] = c;
  }
  std::vector<QPoly> out;
  out.reserve(raw.size());
  for (auto& v : raw) out.emplace_back(std::move(v));
  return out;
}

BiPoly from_coeffs_in_y(const std::vector<QPoly>& c) {
  BiPoly r;
  for (std::size_t j = 0; j < c.size(); ++j)
    for (std::size_t i = 0; i < c[j].coeffs().size(); ++i)
      r.add_term(static_cast<unsigned>(i), static_cast<unsigned>(j), c[j].coeffs()[i]);
  return r;
}

BiPoly swap_xy(const BiPoly& f) {
  BiPoly r;
  for (const auto& [m, c] : f.terms()) r.add_term(m.second, m.first, c);
  return r;
}

QPoly specialize_x(const BiPoly& f, const Rat& x0) {
  auto cs = coeffs_in_y(f);
  std::vector<Rat> out;
  out.reserve(cs.size());
  for (const auto& c : cs) out.push_back(c.eval(x0));
  return QPoly(std::move(out));
}

BiPoly in_x(const QPoly& p) {
  BiPoly r;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) r.add_term(static_cast<unsigned>(i), 0, p.coeffs()[i]);
  return r;
}

BiPoly in_y(const QPoly& p) { return swap_xy(in_x(p)); }

namespace {

/// Fraction-free determinant over Q[z] (Bareiss); entries are consumed.
QPoly bareiss_det(std::vector<std::vector<QPoly>> m) {
  const std::size_t n = m.size();
  if (n == 0) return QPoly(Rat(1));
  QPoly prev(Rat(1));
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].zero()) {
      std::size_t swap = k + 1;
      while (swap < n && m[swap][k].zero()) ++swap;
      if (swap == n) return QPoly();
      std::swap(m[k], m[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        QPoly num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        m[i][j] = num / prev;
      }
      m[i][k] = QPoly();
    }
    prev = m[k][k];
  }
  QPoly d = m[n - 1][n - 1];
  return sign < 0 ? -d : d;
}

}  // namespace

BiPoly resultant(const BiPoly& f, const BiPoly& g, Var var) {
  if (f.zero() || g.zero()) throw DomainError("resultant of zero polynomial");
  BiPoly ff = var == Var::y ? f : swap_xy(f);
  BiPoly gg = var == Var::y ? g : swap_xy(g);
  auto a = coeffs_in_y(ff);
  auto b = coeffs_in_y(gg);
  const std::size_t n = a.size() - 1, m = b.size() - 1;
  const std::size_t size = n + m;
  std::vector<std::vector<QPoly>> syl(size, std::vector<QPoly>(size));
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t k = 0; k <= n; ++k) syl[r][r + k] = a[n - k];
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k <= m; ++k) syl[m + r][r + k] = b[m - k];
  QPoly det = bareiss_det(std::move(syl));
  BiPoly out = in_x(det);
  return var == Var::y ? out : swap_xy(out);
}

namespace {

using YPoly = std::vector<QPoly>;  // coefficients in y over Q[x], trimmed

void trim(YPoly& p) {
  while (!p.empty() && p.back().zero()) p.pop_back();
}

QPoly content(const YPoly& p) {
  QPoly g;
  for (const auto& c : p) g = gcd(g, c);
  return g;
}

YPoly div_content(const YPoly& p, const QPoly& c) {
  YPoly r;
  r.reserve(p.size());
  for (const auto& a : p) r.push_back(a / c);
  return r;
}

YPoly pseudo_rem(YPoly a, const YPoly& b) {
  const std::size_t db = b.size() - 1;
  const QPoly& lb = b.back();
  while (!a.empty() && a.size() - 1 >= db) {
    QPoly la = a.back();
    std::size_t shift = a.size() - 1 - db;
    for (auto& c : a) c = c * lb;
    for (std::size_t k = 0; k <= db; ++k) a[shift + k] = a[shift + k] - la * b[k];
    trim(a);
  }
  return a;
}

}  // namespace

BiPoly gcd(const BiPoly& a, const BiPoly& b) {
  if (a.zero() && b.zero()) return BiPoly();
  if (a.zero()) return primitive_normalized(b);
  if (b.zero()) return primitive_normalized(a);
  YPoly pa = coeffs_in_y(a), pb = coeffs_in_y(b);
  QPoly ca = content(pa), cb = content(pb);
  QPoly cg = gcd(ca, cb);
  pa = div_content(pa, ca);
  pb = div_content(pb, cb);
  if (pa.size() < pb.size()) std::swap(pa, pb);
  while (!pb.empty()) {
    YPoly r = pseudo_rem(pa, pb);
    pa = std::move(pb);
    pb = r.empty() ? r : div_content(r, content(r));
  }
  YPoly g = pa.size() <= 1 ? YPoly{QPoly(Rat(1))} : pa;
  for (auto& c : g) c = c * cg;
  return primitive_normalized(from_coeffs_in_y(g));
}

bool exact_divide(const BiPoly& a, const BiPoly& b, BiPoly& quotient) {
  if (b.zero()) return false;
  YPoly r = coeffs_in_y(a);
  const YPoly d = coeffs_in_y(b);
  const std::size_t dd = d.size() - 1;
  YPoly q(r.size() >= d.size() ? r.size() - dd : 0);
  while (!r.empty() && r.size() - 1 >= dd) {
    auto [qc, rem] = r.back().divmod(d.back());
    if (!rem.zero()) return false;
    std::size_t shift = r.size() - 1 - dd;
    q[shift] = qc;
    for (std::size_t k = 0; k <= dd; ++k) r[shift + k] = r[shift + k] - qc * d[k];
    trim(r);
  }
  if (!r.empty()) return false;
  quotient = from_coeffs_in_y(q);
  return true;
}

BiPoly primitive_normalized(const BiPoly& f, Rat* unit) {
  if (f.zero()) {
    if (unit) *unit = 0;
    return f;
  }
  BigInt den = 1, num = 0;
  for (const auto& [m, c] : f.terms()) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), c.get_num_mpz_t());
  }
  Rat scale = make_rat(den, num);
  if (sgn(f.coeff(leading_monomial(f).first, leading_monomial(f).second)) < 0) scale = -scale;
  if (unit) *unit = 1 / scale;
  return scale * f;
}

SquareFreeResult square_free_part(const BiPoly& f) {
  if (f.zero()) throw DomainError("square-free part of zero polynomial");
  BiPoly g = gcd(gcd(f, f.diff_x()), f.diff_y());
  if (g.total_degree() <= 0) return {f, false};
  BiPoly q;
  if (!exact_divide(f, g, q)) throw std::logic_error("gcd does not divide its argument");
  return {q, true};
}

}  // namespace qsing
