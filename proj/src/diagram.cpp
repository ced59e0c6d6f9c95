#include "qsing/diagram.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace qsing {

namespace {

std::vector<PuiseuxTerm> truncated(const ProBranch& b, const Rat& e) {
  std::vector<PuiseuxTerm> out;
  for (const auto& t : b.terms)
    if (t.exponent <= e) out.push_back(t);
  return out;
}

/// Index of the sibling whose coefficient at column e is conjugate to v's, or -1.
long conjugate_sibling(const std::vector<ProBranch>& br, const DiagramNode& parent, std::size_t v,
                       const std::vector<bool>& open, const Rat& e) {
  const AlgebraicNumber cv = br[parent.children[v].branches.front()].coeff_at(e);
  for (mpfr_prec_t prec = 64; prec <= (1 << 14); prec *= 2) {
    auto [av, ev] = cv.approx_with_error(prec);
    std::vector<std::size_t> cand;
    for (std::size_t w = 0; w < parent.children.size(); ++w) {
      if (w == v || !open[w]) continue;
      auto [aw, ew] = br[parent.children[w].branches.front()].coeff_at(e).approx_with_error(prec);
      if ((av.conj() - aw).abs() <= (ev + ew) * BigFloat(2L, 64)) cand.push_back(w);
    }
    if (cand.empty()) return -1;
    if (cand.size() == 1) return static_cast<long>(cand.front());
  }
  return -1;
}

DiagramNode group(const std::vector<ProBranch>& br, std::vector<std::size_t> members, const Rat& column,
                  bool under_brace, std::vector<std::string>& warnings) {
  DiagramNode n;
  n.exponent = column;
  n.branches = members;
  n.leaf_count = static_cast<unsigned>(members.size());
  if (members.size() == 1) return n;

  Rat split = contact_exponent(br[members[0]], br[members[1]]);
  for (std::size_t a = 0; a < members.size(); ++a)
    for (std::size_t b = a + 1; b < members.size(); ++b)
      split = std::min(split, contact_exponent(br[members[a]], br[members[b]]));

  // Classes of "agree beyond the split exponent"; contact is ultrametric.
  std::vector<std::vector<std::size_t>> classes;
  for (std::size_t m : members) {
    bool placed = false;
    for (auto& c : classes)
      if (contact_exponent(br[c.front()], br[m]) > split) {
        c.push_back(m);
        placed = true;
        break;
      }
    if (!placed) classes.push_back({m});
  }

  std::vector<bool> non_real(classes.size());
  for (std::size_t k = 0; k < classes.size(); ++k) {
    n.children.push_back(DiagramNode{});
    n.children.back().branches = classes[k];
    non_real[k] = !under_brace && !real_representable(truncated(br[classes[k].front()], split));
  }
  std::vector<bool> braced(classes.size(), false);
  std::vector<bool> open = non_real;
  for (std::size_t v = 0; v < classes.size(); ++v) {
    if (!open[v]) continue;
    open[v] = false;
    long w = conjugate_sibling(br, n, v, open, split);
    if (w < 0) {
      warnings.push_back("non-real vertex at column " + to_string(split) + " has no conjugate among its siblings");
      continue;
    }
    open[static_cast<std::size_t>(w)] = false;
    braced[v] = braced[static_cast<std::size_t>(w)] = true;
    n.braces.emplace_back(v, static_cast<std::size_t>(w));
  }
  for (std::size_t k = 0; k < classes.size(); ++k)
    n.children[k] = group(br, classes[k], split, under_brace || braced[k], warnings);
  return n;
}

void collect_columns(const DiagramNode& n, std::set<Rat>& out) {
  for (const auto& c : n.children) {
    out.insert(c.exponent);
    collect_columns(c, out);
  }
}

}  // namespace

std::vector<Rat> Diagram::columns() const {
  std::set<Rat> s;
  collect_columns(root, s);
  return {s.begin(), s.end()};
}

Diagram build_diagram(const std::vector<ProBranch>& branches) {
  Diagram d;
  if (branches.empty()) throw DomainError("no branches");
  std::vector<std::size_t> all(branches.size());
  for (std::size_t k = 0; k < all.size(); ++k) all[k] = k;
  d.root = group(branches, all, Rat(0), false, d.warnings);
  return d;
}

std::string canonical_code(const DiagramNode& n) {
  if (n.is_leaf()) return "•";
  std::vector<std::string> kids;
  for (const auto& c : n.children) kids.push_back(canonical_code(c));
  std::vector<std::string> pairs;
  for (const auto& [a, b] : n.braces) {
    std::string x = kids[a], y = kids[b];
    if (y < x) std::swap(x, y);
    pairs.push_back(x + "+" + y);
  }
  std::sort(kids.begin(), kids.end());
  std::sort(pairs.begin(), pairs.end());
  std::string s = "(" + to_string(n.children.front().exponent) + ":";
  for (std::size_t k = 0; k < kids.size(); ++k) s += (k ? "," : "") + kids[k];
  s += "|braces:";
  for (std::size_t k = 0; k < pairs.size(); ++k) s += (k ? ";" : "") + pairs[k];
  return s + ")";
}

std::string canonical_code(const Diagram& d) { return canonical_code(d.root); }

bool equals(const Diagram& a, const Diagram& b) { return canonical_code(a) == canonical_code(b); }

std::string render_ascii(const Diagram& d) {
  std::ostringstream os;
  os << "columns:";
  for (const auto& c : d.columns()) os << " " << to_string(c);
  os << "\n";
  int brace_id = 0;
  std::function<void(const DiagramNode&, const std::string&)> walk = [&](const DiagramNode& n,
                                                                       const std::string& prefix) {
        std::vector<std::string> marks(n.children.size());
        for (const auto& [a, b] : n.braces) {
          ++brace_id;
          marks[a] = marks[b] = " {" + std::to_string(brace_id) + "}";
        }
        for (std::size_t k = 0; k < n.children.size(); ++k) {
          const DiagramNode& c = n.children[k];
          const bool last = k + 1 == n.children.size();
          os << prefix << (last ? "`-- " : "+-- ") << to_string(c.exponent);
          if (c.is_leaf()) os << " • #" << c.branches.front() + 1;
          os << marks[k] << "\n";
          walk(c, prefix + (last ? "    " : "|   "));
        }
      };
  if (d.root.is_leaf()) {
    os << "• #" << d.root.branches.front() + 1 << "\n";
  } else {
    os << "o\n";
    walk(d.root, "");
  }
  return os.str();
}

}  // namespace qsing
