#include <algorithm>

#include "qsing/factor.hpp"

namespace qsing {

BiPoly FactorList::expand() const {
  BiPoly r(unit);
  for (const auto& [g, m] : factors) r = r * g.pow(m);
  return r;
}

namespace {

/// Power series in X truncated at X^prec, coefficients polynomials in y.
using Series = std::vector<QPoly>;

Series series_mul(const Series& a, const Series& b, std::size_t prec) {
  Series r(prec);
  for (std::size_t i = 0; i < a.size() && i < prec; ++i) {
    if (a[i].zero()) continue;
    for (std::size_t j = 0; j < b.size() && i + j < prec; ++j) r[i + j] = r[i + j] + a[i] * b[j];
  }
  return r;
}

/// Series in X of a bivariate polynomial (x plays the role of X).
Series to_series(const BiPoly& f, std::size_t prec) {
  Series s(prec);
  for (const auto& [m, c] : f.terms())
    if (m.first < prec) s[m.first] = s[m.first] + QPoly::monomial(c, m.second);
  return s;
}

BiPoly from_series(const Series& s) {
  BiPoly r;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = 0; j < s[i].coeffs().size(); ++j)
      r.add_term(static_cast<unsigned>(i), static_cast<unsigned>(j), s[i].coeffs()[j]);
  return r;
}

/// Inverse of a univariate series with nonzero constant term, mod X^prec.
std::vector<Rat> series_inverse(const QPoly& a, std::size_t prec) {
  std::vector<Rat> inv(prec);
  inv[0] = 1 / a.coeff(0);
  for (std::size_t k = 1; k < prec; ++k) {
    Rat acc = 0;
    for (std::size_t i = 1; i <= k; ++i) acc += a.coeff(i) * inv[k - i];
    inv[k] = -acc * inv[0];
  }
  return inv;
}

QPoly lc_in_y(const BiPoly& f) { return coeffs_in_y(f).back(); }

/// Primitive part with respect to y (content in Q[x] removed), normalized.
BiPoly primitive_in_y(const BiPoly& f) {
  auto cs = coeffs_in_y(f);
  QPoly g;
  for (const auto& c : cs) g = gcd(g, c);
  for (auto& c : cs) c = c / g;
  return primitive_normalized(from_coeffs_in_y(cs));
}

std::vector<BiPoly> factor_squarefree(BiPoly h);

/// Irreducible factors of h, which is primitive in y and square-free.
std::vector<BiPoly> factor_squarefree(BiPoly h) {
  const int dy = h.degree_y();
  if (dy <= 0) return {};
  if (dy == 1) return {primitive_normalized(h)};
  if (h.degree_x() == 0) {
    std::vector<BiPoly> out;
    for (const auto& [g, m] : factor_univariate(specialize_x(h, 0)).factors) out.push_back(primitive_normalized(in_y(g)));
    return out;
  }

  // Lucky specialization point: leading coefficient survives, image square-free.
  Rat x0 = 0;
  for (long k = 0;; ++k) {
    x0 = (k % 2 == 0) ? Rat(k / 2) : Rat(-(k + 1) / 2);
    if (is_zero(lc_in_y(h).eval(x0))) continue;
    QPoly u = specialize_x(h, x0);
    if (gcd(u, u.derivative()).degree() == 0) break;
  }
  QPoly image = specialize_x(h, x0);
  std::vector<QPoly> us;
  for (const auto& [g, m] : factor_univariate(image).factors) us.push_back(g.monic());
  if (us.size() == 1) return {primitive_normalized(h)};

  // Shift to X = x - x0 and lift h / lc = prod U_i in Q[y][[X]].
  BiPoly H = translate(h, {x0, Rat(0)});
  const std::size_t prec = 2 * static_cast<std::size_t>(h.degree_x()) + 2;
  QPoly lcH = lc_in_y(H);
  std::vector<Rat> lc_inv = series_inverse(lcH, prec);
  Series target(prec);
  {
    Series hs = to_series(H, prec);
    for (std::size_t i = 0; i < prec; ++i)
      for (std::size_t j = 0; j <= i; ++j)
        if (!is_zero(lc_inv[j])) target[i] = target[i] + lc_inv[j] * hs[i - j];
  }
  const std::size_t r = us.size();
  std::vector<QPoly> cof(r);
  for (std::size_t i = 0; i < r; ++i) {
    QPoly others(Rat(1));
    for (std::size_t l = 0; l < r; ++l)
      if (l != i) others = others * us[l];
    auto [g, s, t] = ext_gcd(others, us[i]);
    cof[i] = s % us[i];
  }
  std::vector<Series> lifted(r, Series(prec));
  for (std::size_t i = 0; i < r; ++i) lifted[i][0] = us[i];
  for (std::size_t j = 1; j < prec; ++j) {
    Series prod(prec);
    prod[0] = QPoly(Rat(1));
    for (const auto& u : lifted) prod = series_mul(prod, u, j + 1);
    QPoly e = target[j] - prod[j];
    if (e.zero()) continue;
    for (std::size_t i = 0; i < r; ++i) lifted[i][j] = (cof[i] * e) % us[i];
  }

  // Recombination: lc * prod over subsets, truncated, shifted back.
  std::vector<BiPoly> out;
  std::vector<Series> rest = lifted;
  std::size_t d = 1;
  while (2 * d <= rest.size()) {
    bool found = false;
    std::vector<std::size_t> idx(d);
    for (std::size_t i = 0; i < d; ++i) idx[i] = i;
    for (;;) {
      Series cand(prec);
      QPoly lcr = lc_in_y(H);
      for (std::size_t i = 0; i < prec; ++i) cand[i] = QPoly(lcr.coeff(i));
      for (std::size_t i : idx) cand = series_mul(cand, rest[i], prec);
      BiPoly g = primitive_in_y(translate(from_series(cand), {-x0, Rat(0)}));
      BiPoly q;
      if (g.degree_y() > 0 && exact_divide(h, g, q)) {
        out.push_back(g);
        h = q;
        H = translate(h, {x0, Rat(0)});
        std::vector<Series> keep;
        for (std::size_t i = 0; i < rest.size(); ++i)
          if (std::find(idx.begin(), idx.end(), i) == idx.end()) keep.push_back(rest[i]);
        rest = std::move(keep);
        found = true;
        break;
      }
      std::size_t pos = d;
      while (pos > 0 && idx[pos - 1] == rest.size() - d + pos - 1) --pos;
      if (pos == 0) break;
      ++idx[pos - 1];
      for (std::size_t i = pos; i < d; ++i) idx[i] = idx[i - 1] + 1;
    }
    if (!found) ++d;
  }
  if (h.degree_y() > 0) out.push_back(primitive_in_y(h));
  return out;
}

}  // namespace

FactorList factor_rational(const BiPoly& f) {
  if (f.zero()) throw DomainError("cannot factor the zero polynomial");
  if (f.total_degree() > kFactorDegreeCap) throw DomainError("factorization degree cap exceeded");
  FactorList out;
  std::vector<std::pair<BiPoly, unsigned>> found;

  auto cs = coeffs_in_y(f);
  QPoly content;
  for (const auto& c : cs) content = gcd(content, c);
  if (content.degree() > 0)
    for (const auto& [g, m] : factor_univariate(content).factors) found.emplace_back(primitive_normalized(in_x(g)), m);
  for (auto& c : cs) c = c / content;
  BiPoly pp = from_coeffs_in_y(cs);

  // Yun's algorithm over Q(x)[y]; pp is primitive so all parts are too.
  auto divide = [](const BiPoly& a, const BiPoly& b) {
    BiPoly q;
    if (!exact_divide(a, b, q)) throw std::logic_error("inexact division in square-free decomposition");
    return q;
  };
  if (pp.degree_y() > 0) {
    BiPoly a = gcd(pp, pp.diff_y());
    BiPoly b = divide(pp, a);
    BiPoly c = divide(pp.diff_y(), a);
    BiPoly d = c - b.diff_y();
    unsigned k = 1;
    while (b.degree_y() > 0) {
      BiPoly g = gcd(b, d);
      if (g.degree_y() > 0)
        for (auto& irr : factor_squarefree(g)) found.emplace_back(std::move(irr), k);
      b = divide(b, g);
      c = divide(d, g);
      d = c - b.diff_y();
      ++k;
    }
  }

  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
    Monomial la = leading_monomial(a.first), lb = leading_monomial(b.first);
    if (la != lb) return grlex_less(la, lb);
    return to_string(a.first) < to_string(b.first);
  });
  out.factors = std::move(found);
  out.unit = 1;
  BiPoly prod = out.expand();
  Monomial lm = leading_monomial(f);
  out.unit = f.coeff(lm.first, lm.second) / prod.coeff(lm.first, lm.second);
  return out;
}

}  // namespace qsing
