#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qsing/catalog.hpp"
#include "qsing/factor.hpp"
#include "qsing/newton.hpp"

namespace qsing {

using Point = std::pair<Rat, Rat>;

enum class ContextMode { automatic, irreducible, reducible };

struct ClassifyOptions {
  Rat cap = Rat(8);
  ContextMode context = ContextMode::automatic;
  /// nullptr means Catalog::builtin().
  const Catalog* catalog = nullptr;
};

struct Normalization {
  Point shift;
  /// (x, y) <- (x + shear * y, y); 0 when the tangent cone had no x factor.
  unsigned shear = 0;

  Mat2 matrix() const;
};

struct ClassificationReport {
  BiPoly input;
  Point point;
  Normalization normalization;
  /// The curve after translation and shear; the singular point is the origin.
  BiPoly local;
  unsigned multiplicity = 0;
  BiPoly tangent_cone;
  NewtonPolygon polygon;
  std::vector<ProBranch> branches;
  Diagram diagram;
  std::string code;
  LookupContext context;
  std::optional<SingularityClass> match;
  FactorList factors;
  std::vector<std::string> warnings;
};

struct SingularPoints {
  /// Sorted ascending by (x, y).
  std::vector<Point> points;
  /// Some singular point has an irrational or complex coordinate and is not listed.
  bool others_possible = false;
};

/// Rational common zeros of f, f_x and f_y.
SingularPoints rational_singular_points(const BiPoly& f);

ClassificationReport classify_point(const BiPoly& f, const Point& p, const ClassifyOptions& opts = {});

struct PointOutcome {
  Point point;
  std::optional<ClassificationReport> report;
  /// Set when classification at this point failed.
  std::string error;
};

struct ClassifyAllResult {
  std::vector<PointOutcome> outcomes;
  bool others_possible = false;
};

/// classify_point over every rational singular point, in point order.
ClassifyAllResult classify_all(const BiPoly& f, const ClassifyOptions& opts = {});

}  // namespace qsing
