#include "qsing/catalog.hpp"

#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"
#include "qsing/factor.hpp"
#include "qsing/parse.hpp"

namespace qsing {

namespace {

using nlohmann::json;

std::optional<unsigned> opt_uint(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<unsigned>();
}

std::string pipeline_code(const std::string& poly) {
  return canonical_code(build_diagram(expand_to_separation(parse_poly(poly))));
}

std::string tag(const SingularityClass& c) { return "#" + std::to_string(c.id) + " " + c.label; }

}  // namespace

Catalog Catalog::from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw DomainError(std::string("catalog: ") + e.what());
  }
  Catalog cat;
  try {
    for (const auto& row : doc.at("classes")) {
      SingularityClass c;
      c.id = row.at("id").get<unsigned>();
      c.label = row.at("label").get<std::string>();
      c.irreducible = row.at("irreducible").get<bool>();
      c.reducible = row.at("reducible").get<bool>();
      c.irreducible_case = opt_uint(row, "irreducible_case");
      c.reducible_case = opt_uint(row, "reducible_case");
      c.code = row.at("code").get<std::string>();
      c.representative = row.at("representative").get<std::string>();
      if (row.contains("reducible_representative") && !row.at("reducible_representative").is_null())
        c.reducible_representative = row.at("reducible_representative").get<std::string>();
      c.note = row.value("note", "");
      cat.classes_.push_back(std::move(c));
    }
  } catch (const json::exception& e) {
    throw DomainError(std::string("catalog: ") + e.what());
  }
  return cat;
}

Catalog Catalog::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("catalog: cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return from_json(ss.str());
}

const Catalog& Catalog::builtin() {
  static const Catalog cat = [] {
    const char* env = std::getenv("QSING_CATALOG");
    return load(env && *env ? env : QSING_DEFAULT_CATALOG);
  }();
  return cat;
}

std::optional<SingularityClass> Catalog::find_code(const std::string& code, bool irreducible_flag) const {
  for (const auto& c : classes_)
    if (c.code == code && (irreducible_flag ? c.irreducible : c.reducible)) return c;
  return std::nullopt;
}

std::optional<SingularityClass> Catalog::classify_diagram(const Diagram& d, const LookupContext& ctx) const {
  if (ctx.curve_degree > 5) return std::nullopt;
  return find_code(canonical_code(d), ctx.q_irreducible);
}

SelfCheckReport Catalog::self_check() const {
  SelfCheckReport r;
  std::set<unsigned> ids;
  std::map<std::string, std::string> irr_codes, red_codes;
  auto fail = [&](const SingularityClass& c, const std::string& what) { r.failures.push_back(tag(c) + ": " + what); };

  auto check_rep = [&](const SingularityClass& c, const std::string& rep, bool want_irreducible) {
    try {
      BiPoly f = parse_poly(rep);
      if (f.total_degree() > 5) fail(c, "representative " + rep + " has degree above 5");
      const std::string got = pipeline_code(rep);
      if (got != c.code) fail(c, "representative " + rep + " gives " + got);
      const bool irreducible = factor_rational(f).distinct() == 1;
      if (irreducible != want_irreducible)
        fail(c, "representative " + rep + (want_irreducible ? " is reducible" : " is irreducible"));
    } catch (const std::exception& e) {
      fail(c, "representative " + rep + ": " + e.what());
    }
  };

  for (const auto& c : classes_) {
    if (!ids.insert(c.id).second) fail(c, "duplicate id");
    if (!c.irreducible && !c.reducible) fail(c, "no applicability flag");
    if (c.irreducible) {
      ++r.irreducible_count;
      if (!irr_codes.emplace(c.code, c.label).second) fail(c, "irreducible code shared with " + irr_codes[c.code]);
    }
    if (c.reducible) {
      ++r.reducible_count;
      if (!red_codes.emplace(c.code, c.label).second) fail(c, "reducible code shared with " + red_codes[c.code]);
    }
    check_rep(c, c.representative, c.irreducible);
    if (c.reducible_representative) {
      if (!c.irreducible || !c.reducible) fail(c, "second representative on a single-flag class");
      check_rep(c, *c.reducible_representative, false);
    } else if (c.irreducible && c.reducible) {
      fail(c, "missing reducible representative");
    }
  }
  if (r.irreducible_count != 42)
    r.failures.push_back("irreducible count " + std::to_string(r.irreducible_count) + ", expected 42");
  if (r.reducible_count != 49)
    r.failures.push_back("reducible count " + std::to_string(r.reducible_count) + ", expected 49");

  // Tangent cones y^2(y-x)^2 and (x^2+y^2)^2 must land in different classes.
  const SingularityClass* real_pairs = nullptr;
  const SingularityClass* conj_pairs = nullptr;
  for (const auto& c : classes_) {
    if (c.irreducible_case == 3u) real_pairs = &c;
    if (c.irreducible_case == 4u) conj_pairs = &c;
  }
  if (!real_pairs || !conj_pairs)
    r.failures.push_back("irreducible cases 3 and 4 are not both present");
  else if (real_pairs->code == conj_pairs->code)
    r.failures.push_back("irreducible cases 3 and 4 share a code");
  return r;
}

}  // namespace qsing
