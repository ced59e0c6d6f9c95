#include "qsing/classify.hpp"

#include <algorithm>
#include <set>

#include "qsing/puiseux.hpp"

namespace qsing {

namespace {

QPoly as_x_poly(const BiPoly& f) { return coeffs_in_y(f).front(); }

QPoly content_in_y(const BiPoly& f) {
  QPoly g;
  for (const auto& c : coeffs_in_y(f))
    if (!c.zero()) g = g.zero() ? c : gcd(g, c);
  return g;
}

/// True if p has an irreducible factor of degree at least two.
bool has_nonlinear_factor(const QPoly& p) {
  if (p.degree() < 2) return false;
  for (const auto& [fac, m] : factor_univariate(p).factors)
    if (fac.degree() >= 2) return true;
  return false;
}

bool vanishes(const BiPoly& f, const Point& p) { return is_zero(f.eval(p.first, p.second)); }

}  // namespace

Mat2 Normalization::matrix() const { return Mat2{{{Rat(1), Rat(shear)}, {Rat(0), Rat(1)}}}; }

SingularPoints rational_singular_points(const BiPoly& f) {
  SingularPoints out;
  if (f.zero() || f.total_degree() < 2) return out;
  const BiPoly fx = f.diff_x(), fy = f.diff_y();
  std::set<Point> found;
  auto consider = [&](const Point& p) {
    if (vanishes(f, p) && vanishes(fx, p) && vanishes(fy, p)) found.insert(p);
  };

  // Split off the factor depending on x alone: vertical lines.
  const QPoly c = content_in_y(f);
  BiPoly r = f;
  if (c.degree() >= 1) {
    BiPoly q;
    if (!exact_divide(f, in_x(c), q)) throw std::logic_error("content does not divide");
    r = q;
    if (r.degree_y() >= 1) {
      if (has_nonlinear_factor(c)) out.others_possible = true;
      for (const Rat& a : rational_roots(c)) {
        const QPoly line = specialize_x(r, a);
        for (const Rat& b : rational_roots(line)) consider({a, b});
        QPoly rest = line;
        if (has_nonlinear_factor(rest)) out.others_possible = true;
      }
    }
  }

  if (r.degree_y() >= 1) {
    const BiPoly ry = r.diff_y(), rx = r.diff_x();
    const QPoly res = as_x_poly(resultant(r, ry, Var::y));
    if (!res.zero()) {
      if (has_nonlinear_factor(res)) out.others_possible = true;
      for (const Rat& a : rational_roots(res)) {
        QPoly g = gcd(gcd(specialize_x(r, a), specialize_x(ry, a)), specialize_x(rx, a));
        if (g.degree() < 1) continue;
        for (const Rat& b : rational_roots(g)) consider({a, b});
        if (has_nonlinear_factor(g)) out.others_possible = true;
      }
    }
  }
  out.points.assign(found.begin(), found.end());
  return out;
}

ClassificationReport classify_point(const BiPoly& f, const Point& p, const ClassifyOptions& opts) {
  if (f.zero()) throw DomainError("zero polynomial");
  if (!vanishes(f, p)) throw DomainError("point " + to_string(p.first) + "," + to_string(p.second) + " is not on the curve");
  if (square_free_part(f).had_multiple) throw MultipleComponent("multiple component: input is not square-free");

  ClassificationReport rep;
  rep.input = f;
  rep.point = p;
  rep.normalization.shift = p;
  BiPoly local = translate(f, p);
  rep.multiplicity = multiplicity_at_origin(local);
  if (rep.multiplicity < 2) throw DomainError("point is not singular");

  // Tangent cone divisible by x: shear until y^m has a nonzero coefficient.
  BiPoly cone = tangent_cone(local);
  if (is_zero(cone.coeff(0, rep.multiplicity))) {
    unsigned lambda = 1;
    while (is_zero(cone.eval(Rat(lambda), Rat(1)))) ++lambda;
    rep.normalization.shear = lambda;
    local = linear_change(local, rep.normalization.matrix());
    cone = tangent_cone(local);
  }
  rep.local = local;
  rep.tangent_cone = cone;
  rep.polygon = newton_polygon(local);
  rep.branches = expand_to_separation(local, opts.cap);
  rep.diagram = build_diagram(rep.branches);
  rep.code = canonical_code(rep.diagram);
  for (const auto& w : rep.diagram.warnings) rep.warnings.push_back(w);

  rep.factors = factor_rational(f);
  rep.context.curve_degree = static_cast<unsigned>(f.total_degree());
  switch (opts.context) {
    case ContextMode::automatic: rep.context.q_irreducible = rep.factors.distinct() == 1; break;
    case ContextMode::irreducible: rep.context.q_irreducible = true; break;
    case ContextMode::reducible: rep.context.q_irreducible = false; break;
  }

  const Catalog& cat = opts.catalog ? *opts.catalog : Catalog::builtin();
  rep.match = cat.classify_diagram(rep.diagram, rep.context);
  if (!rep.match && opts.context == ContextMode::automatic && rep.context.q_irreducible &&
      rep.context.curve_degree <= 5) {
    // Irreducible over Q but split over R or C: the reducible table may still apply.
    rep.match = cat.find_code(rep.code, false);
    if (rep.match)
      rep.warnings.push_back("not in the irreducible table; matched in the reducible table (curve may split over R or C)");
  }
  if (!rep.match) rep.warnings.push_back("diagram not in the quintic catalog");
  return rep;
}

ClassifyAllResult classify_all(const BiPoly& f, const ClassifyOptions& opts) {
  ClassifyAllResult out;
  if (square_free_part(f).had_multiple) throw MultipleComponent("multiple component: input is not square-free");
  SingularPoints sp = rational_singular_points(f);
  out.others_possible = sp.others_possible;
  for (const auto& p : sp.points) {
    PointOutcome o{p, std::nullopt, {}};
    try {
      o.report = classify_point(f, p, opts);
    } catch (const DomainError& e) {
      o.error = e.what();
    }
    out.outcomes.push_back(std::move(o));
  }
  return out;
}

}  // namespace qsing
