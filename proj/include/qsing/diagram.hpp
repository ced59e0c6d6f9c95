#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qsing/puiseux.hpp"

namespace qsing {

struct DiagramNode {
  /// Column of this vertex; 0 for the root.
  Rat exponent;
  std::vector<DiagramNode> children;
  /// Pairs of child indices joined by a brace.
  std::vector<std::pair<std::size_t, std::size_t>> braces;
  unsigned leaf_count = 1;
  /// Input indices of the branches below this vertex.
  std::vector<std::size_t> branches;

  bool is_leaf() const { return children.empty(); }
};

struct Diagram {
  DiagramNode root;
  /// Conditions the brace rule could not resolve locally.
  std::vector<std::string> warnings;

  /// Split exponents, ascending.
  std::vector<Rat> columns() const;
};

/// Groups branches by shared coefficients and marks conjugate non-real pairs.
Diagram build_diagram(const std::vector<ProBranch>& branches);

/**
 * Text code equal for two diagrams iff they agree up to sibling order.
 * Leaf: "•"; vertex: "(e:c1,c2,...|braces:a+b;...)" with e the split exponent
 * of its children and sorted child and pair codes.
 */
std::string canonical_code(const Diagram& d);
std::string canonical_code(const DiagramNode& n);

bool equals(const Diagram& a, const Diagram& b);

/// Column header plus an indented tree; braced vertices carry "{k}" marks.
std::string render_ascii(const Diagram& d);

}  // namespace qsing
