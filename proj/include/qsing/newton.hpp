#pragma once

#include <vector>

#include "qsing/bipoly.hpp"
#include "qsing/rational.hpp"
#include "qsing/upoly.hpp"

namespace qsing {

/// Edge of the polygon; `from` has the larger y-exponent.
struct NewtonSegment {
  Monomial from, to;
  /// Inclination (i1 - i0) / (j0 - j1): the exponent of y in terms of x.
  Rat exponent;

  unsigned height() const { return from.second - to.second; }
  /// Number of lattice steps along the edge.
  unsigned lattice_length() const;
};

/**
 * Lower-left hull of a support, from the lowest point on the y-axis down to
 * the leftmost point of the lowest row.  Exponents increase along segments.
 */
struct NewtonPolygon {
  std::vector<Monomial> vertices;
  std::vector<NewtonSegment> segments;
  /// Row of the last vertex; a positive value means y^offset divides f.
  unsigned y_offset() const { return vertices.empty() ? 0 : vertices.back().second; }
};

/// Hull of an arbitrary support; requires a point with i = 0.
NewtonPolygon hull_of_support(const std::vector<Monomial>& support);

/// Throws DomainError if f(0,0) != 0, x divides f, or there is no segment.
NewtonPolygon newton_polygon(const BiPoly& f);

struct SegmentData {
  NewtonSegment segment;
  BigInt p, q;  // exponent = p/q in lowest terms
  /// sum a_ij Z^(j - j1) over the edge: its roots are the leading coefficients.
  QPoly segment_poly;
  /// segment_poly(Z) = reduced_poly(Z^q); degree equals the lattice length.
  QPoly reduced_poly;
  bool multiple_root = false;
};

/// sum a_ij Z^(j - j1) over the lattice points of s, for any coefficient field.
template <class F>
Poly<F> edge_polynomial(const Bivariate<F>& f, const NewtonSegment& s) {
  std::vector<F> c(s.height() + 1);
  const long di = static_cast<long>(s.to.first) - static_cast<long>(s.from.first);
  const long dj = static_cast<long>(s.from.second) - static_cast<long>(s.to.second);
  for (const auto& [m, a] : f.terms()) {
    if (m.second < s.to.second || m.second > s.from.second) continue;
    // On the edge: (i - i0) * dj == (j0 - j) * di.
    const long i = static_cast<long>(m.first) - static_cast<long>(s.from.first);
    const long j = static_cast<long>(s.from.second) - static_cast<long>(m.second);
    if (i * dj == j * di) c[m.second - s.to.second] = a;
  }
  return Poly<F>(std::move(c));
}

/// Throws DomainError if s is not an edge of newton_polygon(f).
SegmentData segment_data(const BiPoly& f, const NewtonSegment& s);

}  // namespace qsing
