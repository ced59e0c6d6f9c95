#include <cmath>

#include "doctest.h"
#include "qsing/parse.hpp"
#include "qsing/puiseux.hpp"

using namespace qsing;

namespace {

/// |f(x, jet(x))| at x = t^q for real t > 0, evaluated in 400-bit floats.
double residual_size(const BiPoly& f, const ProBranch& b, const Rat& t) {
  const mpfr_prec_t prec = 400;
  const unsigned q = b.ramification;
  BigComplex y(prec);
  for (const auto& term : b.terms) {
    Rat k = term.exponent * q;
    Rat tk = 1;
    for (unsigned long n = 0; n < k.get_num().get_ui(); ++n) tk *= t;
    y = y + BigFloat(tk, prec) * term.coeff.approx(prec);
  }
  Rat x = 1;
  for (unsigned n = 0; n < q; ++n) x *= t;
  BigComplex acc(prec);
  for (const auto& [m, c] : f.terms()) {
    Rat xi = c;
    for (unsigned n = 0; n < m.first; ++n) xi *= x;
    BigComplex term(xi, prec);
    for (unsigned n = 0; n < m.second; ++n) term = term * y;
    acc = acc + term;
  }
  return std::log(acc.abs().to_double() > 0 ? acc.abs().to_double() : 1e-300);
}

}  // namespace

TEST_CASE("cusp y^2 + x^3") {
  auto br = expand_to_separation(parse_poly("y^2 + x^3"));
  REQUIRE(br.size() == 2);
  for (const auto& b : br) {
    CHECK(b.ramification == 2);
    REQUIRE(b.terms.size() == 1);
    CHECK(b.terms[0].exponent == make_rat(3, 2));
    CHECK(is_zero(b.terms[0].coeff * b.terms[0].coeff + AlgebraicNumber(1)));
    CHECK(b.real_representable);
    CHECK(b.separated_at == make_rat(3, 2));
  }
  CHECK(contact_exponent(br[0], br[1]) == make_rat(3, 2));
  CHECK_FALSE(residual_valuation(parse_poly("y^2 + x^3"), br[0], 0).has_value());
}

TEST_CASE("three-branch example") {
  BiPoly f = parse_poly("x^2*y + x^4 + 2*x*y^2 + y^3");
  auto br = expand_to_separation(f);
  REQUIRE(br.size() == 3);
  // Two branches -x +- x^(3/2) and one -x^2.
  int found_pair = 0, found_single = 0;
  const ProBranch* pair[2] = {nullptr, nullptr};
  const ProBranch* single = nullptr;
  for (const auto& b : br) {
    if (b.terms.size() == 2) {
      CHECK(b.terms[0].exponent == 1);
      CHECK(b.terms[0].coeff == AlgebraicNumber(-1));
      CHECK(b.terms[1].exponent == make_rat(3, 2));
      CHECK((b.terms[1].coeff == AlgebraicNumber(1) || b.terms[1].coeff == AlgebraicNumber(-1)));
      pair[found_pair++ % 2] = &b;
    } else {
      REQUIRE(b.terms.size() == 1);
      CHECK(b.terms[0].exponent == 2);
      CHECK(b.terms[0].coeff == AlgebraicNumber(-1));
      CHECK(b.separated_at == 1);
      CHECK(b.coeff_at(Rat(1)) == AlgebraicNumber(0));
      single = &b;
      ++found_single;
    }
    CHECK(b.real_representable);
  }
  REQUIRE(found_pair == 2);
  REQUIRE(found_single == 1);
  CHECK_FALSE(pair[0]->terms[1].coeff == pair[1]->terms[1].coeff);
  CHECK(contact_exponent(*pair[0], *pair[1]) == make_rat(3, 2));
  CHECK(contact_exponent(*pair[0], *single) == 1);
  CHECK(contact_exponent(*single, *pair[1]) == 1);
  CHECK_THROWS_AS(contact_exponent(*single, *single), std::logic_error);

  // Valuations by hand: along y = -x^2 the residual is x^5 - ... of order 5.
  Valuation v0 = residual_valuation(f, *single, 0);
  Valuation v1 = residual_valuation(f, *single, 1);
  REQUIRE(v0.has_value());
  CHECK(*v0 == 5);
  CHECK((!v1.has_value() || *v1 > *v0));
}

TEST_CASE("(y + x^2)^2 + x^5 gives a conjugate pair that is real-representable") {
  auto br = expand_to_separation(parse_poly("(y + x^2)^2 + x^5"));
  REQUIRE(br.size() == 2);
  for (const auto& b : br) {
    REQUIRE(b.terms.size() == 2);
    CHECK(b.terms[0].exponent == 2);
    CHECK(b.terms[0].coeff == AlgebraicNumber(-1));
    CHECK(b.terms[1].exponent == make_rat(5, 2));
    CHECK(is_zero(b.terms[1].coeff.pow(2) + AlgebraicNumber(1)));
    CHECK(b.real_representable);
  }
}

TEST_CASE("y^2 + x^4 + x^5 gives a braced pair") {
  auto br = expand_to_separation(parse_poly("y^2 + x^4 + x^5"));
  REQUIRE(br.size() == 2);
  for (const auto& b : br) {
    CHECK(b.terms[0].exponent == 2);
    CHECK_FALSE(b.real_representable);
  }
}

TEST_CASE("real_representable rule") {
  auto ri = roots_over(Tower(), KPoly(std::vector<AlgebraicNumber>{AlgebraicNumber(1), AlgebraicNumber(0), AlgebraicNumber(1)}));
  AlgebraicNumber i = ri[1].first;
  CHECK(real_representable({{make_rat(3, 2), i}}));
  CHECK_FALSE(real_representable({{Rat(2), i}}));
  CHECK(real_representable({{Rat(1), AlgebraicNumber(3)}, {Rat(2), AlgebraicNumber(-1)}}));
  // i x^(3/2) + x^2: zeta = i makes the first real and the second -1.
  CHECK(real_representable({{make_rat(3, 2), i}, {Rat(2), AlgebraicNumber(1).lift(i.tower())}}));
  // i x^(3/2) + x^(5/2): i*i^3 = 1 but i^5 = i.
  CHECK_FALSE(real_representable({{make_rat(3, 2), i}, {make_rat(5, 2), AlgebraicNumber(1).lift(i.tower())}}));
  // q = 3: x^(4/3) with coefficient -1 is real already; (-1)^(1/3)-type coefficients need zeta.
  auto rc = roots_over(Tower(), KPoly(std::vector<AlgebraicNumber>{AlgebraicNumber(1), AlgebraicNumber(0), AlgebraicNumber(0), AlgebraicNumber(1)}));
  for (const auto& [w, m] : rc) CHECK(real_representable({{make_rat(4, 3), w}}));
}

TEST_CASE("expansion errors") {
  CHECK_THROWS_AS(expand_to_separation(parse_poly("x*y + y^3 + x^3")), DomainError);
  CHECK_THROWS_AS(expand_to_separation(parse_poly("(y - x^2)^2 * (y + x)")), MultipleComponent);
  CHECK_THROWS_AS(expand_to_separation(parse_poly("(y - x^2)^2 + x^9"), make_rat(3, 2)), CapExceeded);
  CHECK_THROWS_AS(expand_to_separation(parse_poly("y^2 + x^3 + 1")), DomainError);
}

TEST_CASE("exact line branches") {
  auto br = expand_to_separation(parse_poly("y*(y - x)"));
  REQUIRE(br.size() == 2);
  CHECK(br[0].exact);
  CHECK(br[0].terms.empty());
  CHECK(br[1].terms.size() == 1);
  CHECK(contact_exponent(br[0], br[1]) == 1);
}

TEST_CASE("numeric residual oracle on assorted curves") {
  const char* curves[] = {"y^2 + x^3",        "x^2*y + x^4 + 2*x*y^2 + y^3", "y^3 - x^5 + x^4*y",
                          "(y+x^2)^2 + x^5",  "y^2*(y-x)^2 + x^5",           "(x^2+y^2)^2 + x^5",
                          "y^4 + x^5 + x^3*y", "y*(y-x)*(y+x) + x^4"};
  for (const char* s : curves) {
    BiPoly f = parse_poly(s);
    auto br = expand_to_separation(f);
    CHECK(br.size() == multiplicity_at_origin(f));
    for (const auto& b : br) {
      ProBranch e = extend_branch(b, 2);
      Valuation v = valuation_along(f, e.terms);
      if (!v) continue;
      // |f(x, jet)| ~ C x^v: the log-slope between two small t approximates v.
      const Rat t1(1, 1000), t2(1, 2000);
      const double q = e.ramification;
      const double slope = (residual_size(f, e, t1) - residual_size(f, e, t2)) / (q * std::log(2.0));
      CHECK_MESSAGE(std::abs(slope - v->get_d()) < 0.35, s << " slope " << slope << " vs " << v->get_d());
      // Monotone valuations.
      Valuation v0 = residual_valuation(f, b, 0), v1 = residual_valuation(f, b, 1);
      if (v0 && v1) CHECK(*v0 < *v1);
      if (!v0) CHECK_FALSE(v1.has_value());
    }
  }
}
