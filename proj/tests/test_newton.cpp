#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "qsing/newton.hpp"
#include "qsing/parse.hpp"

using namespace qsing;

namespace {

std::string vertices(const NewtonPolygon& p) {
  std::string s;
  for (const auto& v : p.vertices) s += "(" + std::to_string(v.first) + "," + std::to_string(v.second) + ")";
  return s;
}

}  // namespace

TEST_CASE("newton_polygon examples") {
  NewtonPolygon a = newton_polygon(parse_poly("y^4 + x^5"));
  CHECK(vertices(a) == "(0,4)(5,0)");
  REQUIRE(a.segments.size() == 1);
  CHECK(a.segments[0].exponent == make_rat(5, 4));

  NewtonPolygon b = newton_polygon(parse_poly("y^2*(y-x) + x^5"));
  CHECK(vertices(b) == "(0,3)(1,2)(5,0)");
  REQUIRE(b.segments.size() == 2);
  CHECK(b.segments[0].exponent == 1);
  CHECK(b.segments[1].exponent == 2);

  NewtonPolygon c = newton_polygon(parse_poly("y^2 + x^3"));
  CHECK(vertices(c) == "(0,2)(3,0)");
  CHECK(c.segments[0].exponent == make_rat(3, 2));

  // Collinear interior points are not vertices.
  NewtonPolygon d = newton_polygon(parse_poly("x^2*y + x^4 + 2*x*y^2 + y^3"));
  CHECK(vertices(d) == "(0,3)(2,1)(4,0)");

  // y divides f: the hull stops at the lowest row.
  NewtonPolygon e = newton_polygon(parse_poly("y*(y - x^2)"));
  CHECK(vertices(e) == "(0,2)(2,1)");
  CHECK(e.y_offset() == 1);
}

TEST_CASE("newton_polygon errors") {
  CHECK_THROWS_AS(newton_polygon(parse_poly("x*y + x^2")), DomainError);
  CHECK_THROWS_AS(newton_polygon(parse_poly("y^2 + 1")), DomainError);
  CHECK_THROWS_AS(newton_polygon(parse_poly("3*y^2")), DomainError);
  CHECK_THROWS_AS(newton_polygon(BiPoly()), DomainError);
}

TEST_CASE("segment_data examples") {
  BiPoly f = parse_poly("(y + x^2)^2 + x^5");
  NewtonPolygon p = newton_polygon(f);
  REQUIRE(p.segments.size() == 1);
  SegmentData s = segment_data(f, p.segments[0]);
  CHECK(s.segment_poly == QPoly({Rat(1), Rat(2), Rat(1)}));
  CHECK(s.multiple_root);
  CHECK(s.p == 2);
  CHECK(s.q == 1);
  CHECK(s.reduced_poly.degree() == 2);

  BiPoly g = parse_poly("y^2*(y-x) + x^5");
  NewtonPolygon pg = newton_polygon(g);
  SegmentData low = segment_data(g, pg.segments[1]);
  // -x y^2 + x^5 on the edge: Z^2 coefficient -1, constant 1.
  CHECK(low.segment_poly == QPoly({Rat(1), Rat(0), Rat(-1)}));
  CHECK_FALSE(low.multiple_root);

  BiPoly h = parse_poly("y^2 - x^5");
  SegmentData sh = segment_data(h, newton_polygon(h).segments[0]);
  CHECK(sh.segment_poly == QPoly({Rat(-1), Rat(0), Rat(1)}));
  CHECK(sh.p == 5);
  CHECK(sh.q == 2);
  CHECK(sh.reduced_poly == QPoly({Rat(-1), Rat(1)}));
  CHECK(sh.segment.lattice_length() == 1);

  NewtonSegment bogus{{0, 2}, {4, 0}, Rat(2)};
  CHECK_THROWS_AS(segment_data(h, bogus), DomainError);
}

TEST_CASE("polygon properties on random curves") {
  std::mt19937 rng(7);
  int checked = 0;
  for (int trial = 0; trial < 300; ++trial) {
    BiPoly f = test::random_poly(rng, 6, 6, true);
    f.add_term(0, static_cast<unsigned>(1 + trial % 4), Rat(1));  // ensure a point on the y-axis
    unsigned axis = ~0u, low = ~0u;
    for (const auto& [m, c] : f.terms()) {
      if (m.first == 0) axis = std::min(axis, m.second);
      low = std::min(low, m.second);
    }
    if (axis == ~0u) continue;  // the added term cancelled
    if (low == axis) {  // nothing below the y-axis point: no edge
      CHECK_THROWS_AS(newton_polygon(f), DomainError);
      continue;
    }
    NewtonPolygon p = newton_polygon(f);
    ++checked;
    // Every support point lies on or above every edge line.
    for (const auto& s : p.segments) {
      Rat base = Rat(s.from.first) + s.exponent * s.from.second;
      for (const auto& [m, c] : f.terms()) CHECK(Rat(m.first) + s.exponent * m.second >= base);
    }
    // Exponents increase strictly; heights account for every root.
    unsigned total = 0;
    for (std::size_t k = 0; k < p.segments.size(); ++k) {
      total += p.segments[k].height();
      if (k) CHECK(p.segments[k - 1].exponent < p.segments[k].exponent);
    }
    CHECK(total + p.y_offset() == p.vertices.front().second);
    // Scaling invariance.
    NewtonPolygon q = newton_polygon(BiPoly::term(0, 0, make_rat(-7, 3)) * f);
    CHECK(vertices(p) == vertices(q));
    // Segment polynomial degree equals the edge height, reduced degree the lattice length.
    for (const auto& s : p.segments) {
      SegmentData d = segment_data(f, s);
      CHECK(d.segment_poly.degree() == static_cast<int>(s.height()));
      CHECK(d.reduced_poly.degree() == static_cast<int>(s.lattice_length()));
    }
  }
  CHECK(checked > 200);
}
