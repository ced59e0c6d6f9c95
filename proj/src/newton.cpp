#include "qsing/newton.hpp"

#include <algorithm>
#include <numeric>

namespace qsing {

unsigned NewtonSegment::lattice_length() const {
  return std::gcd(to.first - from.first, from.second - to.second);
}

NewtonPolygon hull_of_support(const std::vector<Monomial>& support) {
  NewtonPolygon poly;
  if (support.empty()) return poly;
  unsigned low_row = support.front().second;
  bool on_axis = false;
  unsigned start = 0;
  for (const auto& m : support) {
    low_row = std::min(low_row, m.second);
    if (m.first == 0 && (!on_axis || m.second < start)) {
      start = m.second;
      on_axis = true;
    }
  }
  if (!on_axis) throw DomainError("support has no point on the y-axis");

  Monomial cur{0, start};
  poly.vertices.push_back(cur);
  while (cur.second > low_row) {
    // Next vertex: smallest inclination, ties broken by the farthest point.
    const Monomial* best = nullptr;
    Rat best_slope;
    for (const auto& m : support) {
      if (m.second >= cur.second) continue;
      Rat slope(static_cast<long>(m.first) - static_cast<long>(cur.first),
                static_cast<long>(cur.second - m.second));
      slope.canonicalize();
      if (!best || slope < best_slope || (slope == best_slope && m.second < best->second)) {
        best = &m;
        best_slope = slope;
      }
    }
    poly.segments.push_back({cur, *best, best_slope});
    cur = *best;
    poly.vertices.push_back(cur);
  }
  return poly;
}

NewtonPolygon newton_polygon(const BiPoly& f) {
  if (f.zero()) throw DomainError("zero polynomial has no Newton polygon");
  if (!is_zero(f.coeff(0, 0))) throw DomainError("origin is not on the curve");
  std::vector<Monomial> support;
  bool has_axis = false;
  for (const auto& [m, c] : f.terms()) {
    support.push_back(m);
    has_axis = has_axis || m.first == 0;
  }
  if (!has_axis) throw DomainError("x divides the polynomial (vertical tangent); shear first");
  NewtonPolygon poly = hull_of_support(support);
  if (poly.segments.empty()) throw DomainError("Newton polygon has no segment: f is a power of y times a constant");
  return poly;
}

SegmentData segment_data(const BiPoly& f, const NewtonSegment& s) {
  NewtonPolygon poly = newton_polygon(f);
  bool found = std::any_of(poly.segments.begin(), poly.segments.end(),
                           [&](const NewtonSegment& e) { return e.from == s.from && e.to == s.to; });
  if (!found) throw DomainError("segment is not an edge of the Newton polygon");

  SegmentData d;
  d.segment = s;
  d.p = s.exponent.get_num();
  d.q = s.exponent.get_den();
  d.segment_poly = edge_polynomial(f, s);
  const unsigned q = static_cast<unsigned>(d.q.get_ui());
  std::vector<Rat> reduced(s.lattice_length() + 1);
  for (std::size_t k = 0; k < reduced.size(); ++k) reduced[k] = d.segment_poly.coeff(k * q);
  d.reduced_poly = QPoly(std::move(reduced));
  d.multiple_root = gcd(d.reduced_poly, d.reduced_poly.derivative()).degree() > 0;
  return d;
}

}  // namespace qsing
