#include <algorithm>
#include <cstdint>
#include <random>

#include "qsing/factor.hpp"

namespace qsing {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

// ---------------------------------------------------------------- mod p ----

/// Polynomials over Z/p, constant term first, trimmed.
struct ModP {
  u64 p;

  u64 mul(u64 a, u64 b) const { return static_cast<u64>(static_cast<u128>(a) * b % p); }
  u64 add(u64 a, u64 b) const { return (a + b) % p; }
  u64 sub(u64 a, u64 b) const { return (a + p - b) % p; }
  u64 pw(u64 a, u64 e) const {
    u64 r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  u64 inv(u64 a) const { return pw(a, p - 2); }

  using V = std::vector<u64>;
  static void trim(V& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  V mul(const V& a, const V& b) const {
    if (a.empty() || b.empty()) return {};
    V r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = add(r[i + j], mul(a[i], b[j]));
    trim(r);
    return r;
  }
  V sub(V a, const V& b) const {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = sub(a[i], b[i]);
    trim(a);
    return a;
  }
  std::pair<V, V> divmod(V a, const V& b) const {
    if (a.size() < b.size()) return {{}, a};
    V q(a.size() - b.size() + 1, 0);
    u64 il = inv(b.back());
    for (std::size_t k = a.size(); k-- >= b.size();) {
      u64 t = mul(a[k], il);
      q[k - (b.size() - 1)] = t;
      if (t)
        for (std::size_t i = 0; i < b.size(); ++i) a[k - (b.size() - 1) + i] = sub(a[k - (b.size() - 1) + i], mul(t, b[i]));
    }
    a.resize(b.size() - 1);
    trim(a);
    trim(q);
    return {q, a};
  }
  V rem(const V& a, const V& b) const { return divmod(a, b).second; }
  V monic(V a) const {
    if (a.empty()) return a;
    u64 il = inv(a.back());
    for (auto& c : a) c = mul(c, il);
    return a;
  }
  V gcd(V a, V b) const {
    while (!b.empty()) {
      V r = rem(a, b);
      a = std::move(b);
      b = std::move(r);
    }
    return monic(a);
  }
  /// Inverse of a modulo m (assumes coprime).
  V inv_mod(const V& a, const V& m) const {
    V r0 = m, r1 = rem(a, m), t0, t1{1};
    while (!r1.empty()) {
      auto [q, r] = divmod(r0, r1);
      r0 = std::move(r1);
      r1 = std::move(r);
      V t2 = sub(t0, mul(q, t1));
      t0 = std::move(t1);
      t1 = std::move(t2);
    }
    u64 il = inv(r0.back());
    for (auto& c : t0) c = mul(c, il);
    return rem(t0, m);
  }
  V powmod(V base, const BigInt& e, const V& m) const {
    V r{1};
    base = rem(base, m);
    std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t k = bits; k-- > 0;) {
      r = rem(mul(r, r), m);
      if (mpz_tstbit(e.get_mpz_t(), k)) r = rem(mul(r, base), m);
    }
    return r;
  }
  V derivative(const V& a) const {
    V r;
    for (std::size_t k = 1; k < a.size(); ++k) r.push_back(mul(k % p, a[k]));
    trim(r);
    return r;
  }

  /// Cantor-Zassenhaus equal-degree split of a monic product of degree-d irreducibles.
  void edf(const V& f, std::size_t d, std::mt19937_64& rng, std::vector<V>& out) const {
    if (f.size() - 1 == d) {
      out.push_back(f);
      return;
    }
    BigInt e;
    mpz_ui_pow_ui(e.get_mpz_t(), p, d);
    e = (e - 1) / 2;
    for (;;) {
      V a(f.size() - 1);
      for (auto& c : a) c = rng() % p;
      trim(a);
      if (a.size() < 2) continue;
      V b = powmod(a, e, f);
      b = sub(b, V{1});
      V g = gcd(f, b);
      if (g.size() > 1 && g.size() < f.size()) {
        edf(g, d, rng, out);
        edf(divmod(f, g).first, d, rng, out);
        return;
      }
    }
  }

  /// Factors a monic square-free polynomial into monic irreducibles.
  std::vector<V> factor(V f) const {
    std::vector<V> out;
    std::mt19937_64 rng(0x5eed + p);
    V h{0, 1};
    const V x{0, 1};
    for (std::size_t d = 1; 2 * d <= f.size() - 1; ++d) {
      h = powmod(h, BigInt(static_cast<unsigned long>(p)), f);
      V g = gcd(f, sub(h, x));
      if (g.size() > 1) {
        edf(g, d, rng, out);
        f = divmod(f, g).first;
        h = rem(h, f);
      }
    }
    if (f.size() > 1) out.push_back(f);
    return out;
  }
};

// ------------------------------------------------------------- integers ----

using ZPoly = std::vector<BigInt>;

void ztrim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ZPoly to_zpoly(const QPoly& f) {
  BigInt den = 1;
  for (const auto& c : f.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  ZPoly r;
  for (const auto& c : f.coeffs()) {
    Rat s = c * den;
    r.push_back(s.get_num());
  }
  BigInt g = 0;
  for (const auto& c : r) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  for (auto& c : r) c /= g;
  if (!r.empty() && r.back() < 0)
    for (auto& c : r) c = -c;
  return r;
}

QPoly to_qpoly(const ZPoly& a) {
  std::vector<Rat> c;
  for (const auto& v : a) c.emplace_back(v);
  return QPoly(std::move(c));
}

ZPoly zmul_mod(const ZPoly& a, const ZPoly& b, const BigInt& m) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  for (auto& c : r) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
  ztrim(r);
  return r;
}

ZPoly zmod(ZPoly a, const BigInt& m) {
  for (auto& c : a) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
  ztrim(a);
  return a;
}

ZPoly symmetric(ZPoly a, const BigInt& m) {
  BigInt half = m / 2;
  for (auto& c : a) {
    mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    if (c > half) c -= m;
  }
  ztrim(a);
  return a;
}

std::vector<u64> reduce_p(const ZPoly& a, u64 p) {
  std::vector<u64> r;
  BigInt pp(static_cast<unsigned long>(p));
  for (const auto& c : a) {
    BigInt t;
    mpz_fdiv_r(t.get_mpz_t(), c.get_mpz_t(), pp.get_mpz_t());
    r.push_back(t.get_ui());
  }
  ModP::trim(r);
  return r;
}

ZPoly lift_p(const std::vector<u64>& a) {
  ZPoly r;
  for (u64 c : a) r.emplace_back(static_cast<unsigned long>(c));
  return r;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/**
 * Lifts f = lc * prod(u_i) mod p to mod p^k; the u_i are monic and pairwise
 * coprime mod p.  Linear lifting with partial-fraction cofactors.
 */
std::vector<ZPoly> hensel_lift(const ZPoly& f, const std::vector<std::vector<u64>>& us, const ModP& mp, unsigned k,
                               BigInt& modulus) {
  const BigInt p(static_cast<unsigned long>(mp.p));
  mpz_pow_ui(modulus.get_mpz_t(), p.get_mpz_t(), k);
  BigInt lc_inv;
  mpz_invert(lc_inv.get_mpz_t(), f.back().get_mpz_t(), modulus.get_mpz_t());
  ZPoly target = f;
  for (auto& c : target) c *= lc_inv;
  target = zmod(target, modulus);

  const std::size_t r = us.size();
  std::vector<std::vector<u64>> cof(r);
  for (std::size_t i = 0; i < r; ++i) {
    std::vector<u64> others{1};
    for (std::size_t l = 0; l < r; ++l)
      if (l != i) others = mp.mul(others, us[l]);
    cof[i] = mp.inv_mod(others, us[i]);
  }
  std::vector<ZPoly> lifted;
  for (const auto& u : us) lifted.push_back(lift_p(u));
  BigInt pj = p;
  for (unsigned j = 1; j < k; ++j) {
    BigInt pj1 = pj * p;
    ZPoly prod{1};
    for (const auto& u : lifted) prod = zmul_mod(prod, u, pj1);
    ZPoly e = zmod(target, pj1);
    if (e.size() < prod.size()) e.resize(prod.size(), 0);
    for (std::size_t i = 0; i < prod.size(); ++i) e[i] -= prod[i];
    e = zmod(e, pj1);
    for (auto& c : e) c /= pj;
    std::vector<u64> ep = reduce_p(e, mp.p);
    for (std::size_t i = 0; i < r; ++i) {
      std::vector<u64> delta = mp.rem(mp.mul(cof[i], ep), us[i]);
      ZPoly& u = lifted[i];
      for (std::size_t t = 0; t < delta.size(); ++t) u[t] += pj * BigInt(static_cast<unsigned long>(delta[t]));
    }
    pj = pj1;
  }
  return lifted;
}

bool zdivides(const ZPoly& g, const ZPoly& f, ZPoly& quotient) {
  auto [q, r] = to_qpoly(f).divmod(to_qpoly(g));
  if (!r.zero()) return false;
  for (const auto& c : q.coeffs())
    if (c.get_den() != 1) return false;
  quotient.clear();
  for (const auto& c : q.coeffs()) quotient.push_back(c.get_num());
  return true;
}

ZPoly primitive(ZPoly a) {
  BigInt g = 0;
  for (const auto& c : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g != 0)
    for (auto& c : a) c /= g;
  if (!a.empty() && a.back() < 0)
    for (auto& c : a) c = -c;
  return a;
}

/// Irreducible factors of a primitive square-free integer polynomial.
std::vector<ZPoly> zassenhaus(ZPoly f) {
  const std::size_t n = f.size() - 1;
  if (n <= 1) return {f};

  const ZPoly fd = [&] {
    ZPoly d;
    for (std::size_t k = 1; k < f.size(); ++k) d.push_back(f[k] * static_cast<unsigned long>(k));
    return d;
  }();

  // Pick the prime giving the fewest modular factors among a few candidates.
  u64 best_p = 0;
  std::vector<std::vector<u64>> best;
  int tried = 0;
  for (u64 p = 3; tried < 6 && p < 100000; p += 2) {
    if (!is_prime(p)) continue;
    ModP mp{p};
    auto fp = reduce_p(f, p);
    if (fp.size() != f.size()) continue;
    if (mp.gcd(fp, reduce_p(fd, p)).size() != 1) continue;
    auto fs = mp.factor(mp.monic(fp));
    ++tried;
    if (best_p == 0 || fs.size() < best.size()) {
      best_p = p;
      best = fs;
    }
    if (best.size() == 1) break;
  }
  if (best.size() == 1) return {f};

  // Coefficient bound for any lc-scaled factor.
  BigInt maxc = 0;
  for (const auto& c : f) maxc = std::max(maxc, BigInt(abs(c)));
  BigInt bound = BigInt(abs(f.back())) * maxc * static_cast<unsigned long>(n + 1);
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), n + 1);
  unsigned k = 1;
  BigInt pk(static_cast<unsigned long>(best_p));
  while (pk <= bound) {
    pk *= static_cast<unsigned long>(best_p);
    ++k;
  }

  ModP mp{best_p};
  BigInt modulus;
  std::vector<ZPoly> lifted = hensel_lift(f, best, mp, k, modulus);

  std::vector<ZPoly> out;
  std::size_t d = 1;
  while (2 * d <= lifted.size()) {
    bool found = false;
    std::vector<std::size_t> idx(d);
    for (std::size_t i = 0; i < d; ++i) idx[i] = i;
    for (;;) {
      ZPoly cand{f.back()};
      for (std::size_t i : idx) cand = zmul_mod(cand, lifted[i], modulus);
      cand = primitive(symmetric(cand, modulus));
      ZPoly q;
      if (zdivides(cand, f, q)) {
        out.push_back(cand);
        f = primitive(q);
        std::vector<ZPoly> rest;
        for (std::size_t i = 0; i < lifted.size(); ++i)
          if (std::find(idx.begin(), idx.end(), i) == idx.end()) rest.push_back(lifted[i]);
        lifted = std::move(rest);
        found = true;
        break;
      }
      // next combination
      std::size_t pos = d;
      while (pos > 0 && idx[pos - 1] == lifted.size() - d + pos - 1) --pos;
      if (pos == 0) break;
      ++idx[pos - 1];
      for (std::size_t i = pos; i < d; ++i) idx[i] = idx[i - 1] + 1;
    }
    if (!found) ++d;
  }
  if (f.size() > 1) out.push_back(primitive(f));
  return out;
}

bool poly_less(const QPoly& a, const QPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int k = a.degree(); k >= 0; --k) {
    const Rat& x = a.coeffs()[static_cast<std::size_t>(k)];
    const Rat& y = b.coeffs()[static_cast<std::size_t>(k)];
    if (x != y) return x < y;
  }
  return false;
}

}  // namespace

UnivariateFactors factor_univariate(const QPoly& f) {
  if (f.zero()) throw DomainError("cannot factor the zero polynomial");
  UnivariateFactors out;
  if (f.degree() == 0) {
    out.unit = f.lc();
    return out;
  }
  for (const auto& [part, mult] : square_free_decomposition(f)) {
    for (const ZPoly& z : zassenhaus(to_zpoly(part))) out.factors.emplace_back(to_qpoly(z), mult);
  }
  std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) { return poly_less(a.first, b.first); });
  Rat lc = 1;
  for (const auto& [g, m] : out.factors)
    for (unsigned k = 0; k < m; ++k) lc *= g.lc();
  out.unit = f.lc() / lc;
  return out;
}

std::vector<Rat> rational_roots(const QPoly& f) {
  std::vector<Rat> roots;
  if (f.degree() < 1) return roots;
  for (const auto& [g, m] : factor_univariate(f).factors)
    if (g.degree() == 1) roots.push_back(-g.coeffs()[0] / g.coeffs()[1]);
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace qsing
