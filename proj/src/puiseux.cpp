#include "qsing/puiseux.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

#include "qsing/newton.hpp"

namespace qsing {

namespace {

KBiPoly lift_poly(const KBiPoly& g, const Tower& t) {
  KBiPoly r;
  for (const auto& [m, c] : g.terms()) r.add_term(m.first, m.second, c.lift(t));
  return r;
}

KBiPoly to_kpoly(const BiPoly& f) {
  KBiPoly r;
  for (const auto& [m, c] : f.terms()) r.add_term(m.first, m.second, AlgebraicNumber(c));
  return r;
}

std::vector<Monomial> support_of(const KBiPoly& g) {
  std::vector<Monomial> s;
  for (const auto& [m, c] : g.terms()) s.push_back(m);
  return s;
}

/// s^-n g(s^q, s^p (c + w)) where n is the minimum of q i + p j over the support.
KBiPoly substitute(const KBiPoly& g, unsigned q, unsigned p, const AlgebraicNumber& c) {
  unsigned n = ~0u, jmax = 0;
  for (const auto& [m, a] : g.terms()) {
    n = std::min(n, q * m.first + p * m.second);
    jmax = std::max(jmax, m.second);
  }
  std::vector<AlgebraicNumber> cpow{AlgebraicNumber(1)};
  for (unsigned k = 1; k <= jmax; ++k) cpow.push_back(cpow.back() * c);
  KBiPoly r;
  for (const auto& [m, a] : g.terms()) {
    const unsigned i = m.first, j = m.second;
    const unsigned shift = q * i + p * j - n;
    BigInt binom = 1;
    for (unsigned k = 0; k <= j; ++k) {
      // binomial(j, k) c^(j-k) w^k
      r.add_term(shift, k, a * AlgebraicNumber(Rat(binom)) * cpow[j - k]);
      binom = binom * (j - k) / (k + 1);
    }
  }
  return r;
}

struct Node {
  Tower tower;
  KBiPoly g;
  unsigned q = 1, m = 0;
  std::vector<PuiseuxTerm> jet;
  std::vector<std::size_t> path;
};

unsigned lcm_denominators(const std::vector<PuiseuxTerm>& terms) {
  unsigned q = 1;
  for (const auto& t : terms) q = std::lcm(q, static_cast<unsigned>(t.exponent.get_den().get_ui()));
  return q;
}

ProBranch finish(const Node& n, bool exact, std::shared_ptr<const detail::Continuation> cont) {
  ProBranch b;
  for (const auto& t : n.jet) b.terms.push_back({t.exponent, t.coeff.lift(n.tower)});
  b.path = n.path;
  b.ramification = lcm_denominators(b.terms);
  b.exact = exact;
  b.continuation = std::move(cont);
  return b;
}

class Expander {
 public:
  explicit Expander(Rat cap) : cap_(std::move(cap)) {}

  void run(const Node& n, std::vector<ProBranch>& out) {
    NewtonPolygon poly = hull_of_support(support_of(n.g));
    if (poly.y_offset() >= 2) throw MultipleComponent("repeated factor found during expansion");
    if (poly.y_offset() == 1) out.push_back(finish(n, true, nullptr));
    for (const auto& seg : poly.segments) {
      const unsigned p = static_cast<unsigned>(seg.exponent.get_num().get_ui());
      const unsigned q = static_cast<unsigned>(seg.exponent.get_den().get_ui());
      KPoly phi = edge_polynomial(n.g, seg);
      Rat e(static_cast<long>(n.m * q + p), static_cast<long>(n.q * q));
      e.canonicalize();
      for (const auto& [c, mult] : roots_over(n.tower, phi)) {
        if (e > cap_) throw CapExceeded("branches not separated below exponent " + to_string(cap_));
        Node child;
        child.tower = c.tower();
        child.g = substitute(lift_poly(n.g, child.tower), q, p, c);
        child.q = n.q * q;
        child.m = n.m * q + p;
        child.jet = n.jet;
        child.jet.push_back({e, c});
        child.path = n.path;
        child.path.push_back(next_id_++);
        if (mult == 1) {
          auto cont = std::make_shared<detail::Continuation>();
          cont->tower = child.tower;
          cont->g = child.g;
          cont->q = child.q;
          cont->m = child.m;
          out.push_back(finish(child, false, std::move(cont)));
        } else {
          run(child, out);
        }
      }
    }
  }

 private:
  Rat cap_;
  std::size_t next_id_ = 0;
};

/// Cyclotomic polynomial of order n.
QPoly cyclotomic(unsigned n) {
  QPoly r = QPoly::monomial(Rat(1), n) - QPoly(Rat(1));
  for (unsigned d = 1; d < n; ++d)
    if (n % d == 0) r = r / cyclotomic(d);
  return r;
}

}  // namespace

const Tower& ProBranch::tower() const {
  static const Tower base;
  return terms.empty() ? base : terms.front().coeff.tower();
}

AlgebraicNumber ProBranch::coeff_at(const Rat& e) const {
  for (const auto& t : terms)
    if (t.exponent == e) return t.coeff;
  return AlgebraicNumber(0);
}

std::vector<ProBranch> expand_to_separation(const BiPoly& f, const Rat& cap) {
  if (f.zero()) throw DomainError("zero polynomial");
  if (!is_zero(f.coeff(0, 0))) throw DomainError("origin is not on the curve");
  if (sgn(cap) <= 0) throw DomainError("cap must be positive");
  BiPoly cone = tangent_cone(f);
  if (is_zero(cone.coeff(0, multiplicity_at_origin(f)))) throw DomainError("vertical tangent; shear first");
  if (square_free_part(f).had_multiple) throw MultipleComponent("curve has a multiple component");

  Node root;
  root.g = to_kpoly(f);
  std::vector<ProBranch> out;
  Expander(cap).run(root, out);

  for (std::size_t a = 0; a < out.size(); ++a) {
    Rat sep(0);
    for (std::size_t b = 0; b < out.size(); ++b)
      if (a != b) sep = std::max(sep, contact_exponent(out[a], out[b]));
    out[a].separated_at = sep;
    out[a].real_representable = real_representable(out[a]);
  }
  return out;
}

Rat contact_exponent(const ProBranch& a, const ProBranch& b) {
  std::size_t k = 0;
  while (k < a.path.size() && k < b.path.size() && a.path[k] == b.path[k]) ++k;
  const bool more_a = k < a.terms.size(), more_b = k < b.terms.size();
  if (!more_a && !more_b) throw std::logic_error("contact exponent of identical branches");
  if (!more_a) return b.terms[k].exponent;
  if (!more_b) return a.terms[k].exponent;
  return std::min(a.terms[k].exponent, b.terms[k].exponent);
}

bool real_representable(const std::vector<PuiseuxTerm>& terms) {
  const unsigned q = lcm_denominators(terms);
  auto all_real = [&](auto&& scaled) {
    for (const auto& t : terms)
      if (!is_real(scaled(t))) return false;
    return true;
  };
  if (all_real([](const PuiseuxTerm& t) { return t.coeff; })) return true;
  if (q == 1) return false;  // zeta = +-1 only
  const Tower base = terms.front().coeff.tower();
  for (unsigned m = 1; m < q; ++m) {
    // zeta = exp(i pi m / q), a primitive d-th root of unity.
    const unsigned d = 2 * q / std::gcd(m, 2 * q);
    const double ang = M_PI * m / q;
    const Rat half(1, 4 * static_cast<long>(d));
    const Rat re(std::cos(ang)), im(std::sin(ang));
    Region box{re - half, re + half, im - half, im + half};
    QPoly phi = cyclotomic(d);
    std::vector<AlgebraicNumber> c(phi.coeffs().begin(), phi.coeffs().end());
    Tower t = adjoin_root(base, KPoly(std::move(c)), box);
    AlgebraicNumber zeta = AlgebraicNumber::generator(t);
    bool ok = all_real([&](const PuiseuxTerm& term) {
      Rat k = term.exponent * q;
      return term.coeff.lift(t) * zeta.pow(static_cast<unsigned>(k.get_num().get_ui()));
    });
    if (ok) return true;
  }
  return false;
}

bool real_representable(const ProBranch& b) { return b.terms.empty() || real_representable(b.terms); }

ProBranch extend_branch(const ProBranch& b, unsigned extra) {
  ProBranch r = b;
  std::shared_ptr<const detail::Continuation> cur = b.continuation;
  for (unsigned step = 0; step < extra && cur; ++step) {
    const KBiPoly& g = cur->g;
    // After a simple root the polygon is one edge from (0,1) to the first (i,0).
    AlgebraicNumber slope_coeff = g.coeff(0, 1);
    unsigned i0 = ~0u;
    for (const auto& [m, c] : g.terms())
      if (m.second == 0) i0 = std::min(i0, m.first);
    if (i0 == ~0u) {
      r.exact = true;
      cur = nullptr;
      break;
    }
    AlgebraicNumber c = -(g.coeff(i0, 0) / slope_coeff);
    auto next = std::make_shared<detail::Continuation>();
    next->tower = cur->tower;
    next->g = substitute(g, 1, i0, c);
    next->q = cur->q;
    next->m = cur->m + i0;
    Rat e(static_cast<long>(next->m), static_cast<long>(next->q));
    e.canonicalize();
    r.terms.push_back({e, c.lift(cur->tower)});
    r.path.push_back(~std::size_t{0} - r.path.size());
    cur = std::move(next);
  }
  r.continuation = cur;
  r.ramification = lcm_denominators(r.terms);
  return r;
}

Valuation valuation_along(const BiPoly& f, const std::vector<PuiseuxTerm>& jet) {
  const unsigned q = lcm_denominators(jet);
  Tower t;
  for (const auto& term : jet) t = common_tower(t, term.coeff.tower());
  // y(t) with x = t^q.
  std::vector<AlgebraicNumber> yc;
  for (const auto& term : jet) {
    Rat k = term.exponent * q;
    std::size_t idx = k.get_num().get_ui();
    if (yc.size() <= idx) yc.resize(idx + 1);
    yc[idx] = yc[idx] + term.coeff.lift(t);
  }
  KPoly y(std::move(yc));
  std::vector<KPoly> ypow{KPoly(AlgebraicNumber(1))};
  KPoly sum;
  for (const auto& [m, a] : f.terms()) {
    while (ypow.size() <= m.second) ypow.push_back(ypow.back() * y);
    sum = sum + KPoly::monomial(AlgebraicNumber(a), m.first * q) * ypow[m.second];
  }
  if (sum.zero()) return std::nullopt;
  for (std::size_t k = 0; k < sum.coeffs().size(); ++k)
    if (!is_zero(sum.coeffs()[k])) {
      Rat v(static_cast<long>(k), static_cast<long>(q));
      v.canonicalize();
      return v;
    }
  return std::nullopt;
}

Valuation residual_valuation(const BiPoly& f, const ProBranch& b, unsigned extra) {
  return valuation_along(f, extend_branch(b, extra).terms);
}

std::string jet_string(const ProBranch& b) {
  if (b.terms.empty()) return "y = 0";
  std::ostringstream os;
  os << "y = ";
  for (std::size_t k = 0; k < b.terms.size(); ++k) {
    const auto& t = b.terms[k];
    std::string c = t.coeff.expr();
    std::string mono = "x";
    if (t.exponent != 1) {
      mono += t.exponent.get_den() == 1 ? "^" + to_string(t.exponent) : "^(" + to_string(t.exponent) + ")";
    }
    bool neg = false;
    if (c == "1") {
      c.clear();
    } else if (c == "-1") {
      c.clear();
      neg = true;
    } else if (t.coeff.is_rational() && c[0] == '-') {
      c = c.substr(1) + "*";
      neg = true;
    } else if (t.coeff.is_rational()) {
      c += "*";
    } else {
      c = "(" + c + ")*";
    }
    if (k == 0) {
      os << (neg ? "-" : "");
    } else {
      os << (neg ? " - " : " + ");
    }
    os << c << mono;
  }
  return os.str();
}

}  // namespace qsing
