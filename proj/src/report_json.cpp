#include "qsing/report_json.hpp"

namespace qsing {

using nlohmann::json;

namespace {

json monomial(const Monomial& m) { return json::array({m.first, m.second}); }

json point(const Point& p) { return json::array({to_string(p.first), to_string(p.second)}); }

json tree(const DiagramNode& n) {
  json children = json::array();
  for (const auto& c : n.children) children.push_back(tree(c));
  json braces = json::array();
  for (const auto& [a, b] : n.braces) braces.push_back(json::array({a, b}));
  json out = {{"e", to_string(n.exponent)}, {"children", children}, {"braces", braces}};
  if (n.is_leaf()) out["branch"] = n.branches.front();
  return out;
}

json polygon_body(const BiPoly& f, const NewtonPolygon& p) {
  json vertices = json::array();
  for (const auto& v : p.vertices) vertices.push_back(monomial(v));
  json segments = json::array();
  for (const auto& s : p.segments) {
    SegmentData sd = segment_data(f, s);
    segments.push_back({{"from", monomial(s.from)},
                        {"to", monomial(s.to)},
                        {"exponent", to_string(s.exponent)},
                        {"multiple_root", sd.multiple_root}});
  }
  return {{"vertices", vertices}, {"segments", segments}};
}

json branch_body(const ProBranch& b) {
  json terms = json::array();
  for (const auto& t : b.terms) terms.push_back({{"exponent", to_string(t.exponent)}, {"coeff", t.coeff.expr()}});
  return {{"ramification", b.ramification},
          {"terms", terms},
          {"real", b.real_representable},
          {"separated_at", to_string(b.separated_at)},
          {"field", b.tower().describe(true)}};
}

json diagram_body(const Diagram& d) {
  json cols = json::array();
  for (const auto& c : d.columns()) cols.push_back(to_string(c));
  return {{"exponents", cols}, {"tree", tree(d.root)}, {"code", canonical_code(d)}, {"warnings", d.warnings}};
}

json class_body(const SingularityClass& c) {
  json out = {{"id", c.id},
              {"label", c.label},
              {"irreducible", c.irreducible},
              {"reducible", c.reducible},
              {"irreducible_case", c.irreducible_case ? json(*c.irreducible_case) : json(nullptr)},
              {"reducible_case", c.reducible_case ? json(*c.reducible_case) : json(nullptr)},
              {"code", c.code},
              {"representative", c.representative}};
  out["reducible_representative"] = c.reducible_representative ? json(*c.reducible_representative) : json(nullptr);
  return out;
}

json factors_body(const FactorList& fl) {
  json fs = json::array();
  for (const auto& [g, m] : fl.factors) fs.push_back({{"factor", to_string(g)}, {"multiplicity", m}});
  return {{"unit", to_string(fl.unit)}, {"factors", fs}, {"irreducible", fl.distinct() == 1 && fl.factors[0].second == 1}};
}

json report_body(const ClassificationReport& r) {
  const Mat2 m = r.normalization.matrix();
  json branches = json::array();
  for (const auto& b : r.branches) branches.push_back(branch_body(b));
  json out = {
      {"input", to_string(r.input)},
      {"point", point(r.point)},
      {"normalization",
       {{"shift", point(r.normalization.shift)},
        {"shear", r.normalization.shear},
        {"matrix", json::array({json::array({to_string(m[0][0]), to_string(m[0][1])}),
                                json::array({to_string(m[1][0]), to_string(m[1][1])})})}}},
      {"local", to_string(r.local)},
      {"multiplicity", r.multiplicity},
      {"tangent_cone", to_string(r.tangent_cone)},
      {"polygon", polygon_body(r.local, r.polygon)},
      {"branches", branches},
      {"diagram", diagram_body(r.diagram)},
      {"context", {{"curve_degree", r.context.curve_degree}, {"q_irreducible", r.context.q_irreducible}}},
      {"class", r.match ? class_body(*r.match) : json(nullptr)},
      {"factors", factors_body(r.factors)},
      {"warnings", r.warnings}};
  return out;
}

json versioned(json body) {
  body["schema_version"] = kSchemaVersion;
  return body;
}

}  // namespace

json polygon_json(const BiPoly& f) { return polygon_json(f, newton_polygon(f)); }
json polygon_json(const BiPoly& f, const NewtonPolygon& p) { return versioned(polygon_body(f, p)); }

json branch_json(const ProBranch& b) { return versioned(branch_body(b)); }

json branches_json(const std::vector<ProBranch>& bs) {
  json arr = json::array();
  for (const auto& b : bs) arr.push_back(branch_body(b));
  return versioned({{"branches", arr}});
}

json diagram_json(const Diagram& d) { return versioned(diagram_body(d)); }

json factors_json(const FactorList& fl) { return versioned(factors_body(fl)); }

json class_json(const SingularityClass& c) { return versioned(class_body(c)); }

json catalog_json(const Catalog& cat) {
  json arr = json::array();
  for (const auto& c : cat.all_classes()) arr.push_back(class_body(c));
  return versioned({{"classes", arr}});
}

json selfcheck_json(const SelfCheckReport& r) {
  return versioned({{"ok", r.ok()},
                    {"irreducible_count", r.irreducible_count},
                    {"reducible_count", r.reducible_count},
                    {"failures", r.failures}});
}

json report_json(const ClassificationReport& r) { return versioned(report_body(r)); }

json classify_all_json(const BiPoly& f, const ClassifyAllResult& all) {
  json pts = json::array();
  for (const auto& o : all.outcomes) {
    json e = {{"point", point(o.point)}};
    if (o.report)
      e["report"] = report_body(*o.report);
    else
      e["error"] = o.error;
    pts.push_back(e);
  }
  return versioned({{"input", to_string(f)}, {"points", pts}, {"others_possible", all.others_possible}});
}

}  // namespace qsing
