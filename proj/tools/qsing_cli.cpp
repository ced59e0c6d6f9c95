// qsing: classify plane curve singularities from the command line.
//
// Exit codes: 0 success, 1 domain error (bad polynomial, non-singular point,
// cap exceeded, failed self check), 2 usage error, 3 internal error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "qsing/classify.hpp"
#include "qsing/parse.hpp"
#include "qsing/puiseux.hpp"
#include "qsing/report_json.hpp"

using namespace qsing;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  std::string input;
  std::string point;
  std::string cap = "8";
  std::string format = "ascii";
  std::string context = "auto";
  std::string catalog_path;
  bool verbose = false;
};

/// Polynomial text, or the contents of a file if `input` names one.
BiPoly read_input(const std::string& input) {
  std::string text = input;
  std::error_code ec;
  if (std::filesystem::is_regular_file(input, ec)) {
    std::ifstream in(input);
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  return parse_poly(text);
}

Rat read_cap(const std::string& s) {
  Rat c;
  try {
    c = parse_rat(s);
  } catch (const DomainError&) {
    throw UsageError("--cap: expected p/q, got " + s);
  }
  if (c <= 0) throw UsageError("--cap must be positive");
  return c;
}

std::optional<Point> read_point(const std::string& s) {
  if (s.empty()) return std::nullopt;
  const auto comma = s.find(',');
  if (comma == std::string::npos) throw UsageError("--point: expected x,y");
  try {
    return Point{parse_rat(s.substr(0, comma)), parse_rat(s.substr(comma + 1))};
  } catch (const DomainError&) {
    throw UsageError("--point: coordinates must be rationals, got " + s);
  }
}

ContextMode read_context(const std::string& s) {
  if (s == "irreducible") return ContextMode::irreducible;
  if (s == "reducible") return ContextMode::reducible;
  return ContextMode::automatic;
}

std::string point_text(const Point& p) { return "(" + to_string(p.first) + ", " + to_string(p.second) + ")"; }

void print_branches(std::ostream& os, const std::vector<ProBranch>& bs, const std::string& indent) {
  for (std::size_t k = 0; k < bs.size(); ++k) {
    os << indent << "#" << k + 1 << " " << jet_string(bs[k]);
    if (!bs[k].real_representable) os << "  [non-real]";
    os << "\n";
    const std::string field = bs[k].tower().describe();
    if (!field.empty()) os << indent << "   where " << field << "\n";
  }
}

void print_indented(std::ostream& os, const std::string& block, const std::string& indent) {
  std::istringstream in(block);
  for (std::string line; std::getline(in, line);) os << indent << line << "\n";
}

void print_report(std::ostream& os, const ClassificationReport& r, bool verbose) {
  os << "point " << point_text(r.point) << "\n";
  os << "  multiplicity: " << r.multiplicity << "\n";
  os << "  tangent cone: " << to_string(r.tangent_cone) << "\n";
  if (r.normalization.shear) os << "  shear: x -> x + " << r.normalization.shear << "*y\n";
  if (verbose) os << "  local equation: " << to_string(r.local) << "\n";
  os << "  branches:\n";
  print_branches(os, r.branches, "    ");
  os << "  diagram:\n";
  print_indented(os, render_ascii(r.diagram), "    ");
  os << "  code: " << r.code << "\n";
  os << "  context: degree " << r.context.curve_degree << ", "
     << (r.context.q_irreducible ? "irreducible" : "reducible") << " over Q\n";
  if (r.match) {
    os << "  class: " << r.match->label;
    if (r.match->irreducible_case && r.context.q_irreducible) os << " (irreducible case " << *r.match->irreducible_case << ")";
    else if (r.match->reducible_case && !r.context.q_irreducible) os << " (reducible case " << *r.match->reducible_case << ")";
    os << "\n";
  } else {
    os << "  class: not in catalog\n";
  }
  for (const auto& w : r.warnings) os << "  warning: " << w << "\n";
}

void emit_json(const nlohmann::json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_classify(const Config& cfg, const Catalog& cat) {
  const BiPoly f = read_input(cfg.input);
  ClassifyOptions opts;
  opts.cap = read_cap(cfg.cap);
  opts.context = read_context(cfg.context);
  opts.catalog = &cat;
  const bool json = cfg.format == "json";

  if (auto p = read_point(cfg.point)) {
    ClassificationReport r = classify_point(f, *p, opts);
    if (json) emit_json(report_json(r));
    else print_report(std::cout, r, cfg.verbose);
    return 0;
  }

  ClassifyAllResult all = classify_all(f, opts);
  int status = 0;
  if (json) {
    emit_json(classify_all_json(f, all));
    for (const auto& o : all.outcomes)
      if (!o.report) status = 1;
  } else {
    if (all.outcomes.empty()) std::cout << "no singular points\n";
    for (const auto& o : all.outcomes) {
      if (o.report) {
        print_report(std::cout, *o.report, cfg.verbose);
      } else {
        std::cout << "point " << point_text(o.point) << "\n  error: " << o.error << "\n";
        status = 1;
      }
    }
  }
  if (all.others_possible)
    std::cerr << "note: singular points with irrational or complex coordinates may exist; use --point for rational ones only\n";
  return status;
}

int cmd_expand(const Config& cfg) {
  BiPoly f = read_input(cfg.input);
  if (auto p = read_point(cfg.point)) f = translate(f, *p);
  const std::vector<ProBranch> bs = expand_to_separation(f, read_cap(cfg.cap));
  const Diagram d = build_diagram(bs);
  if (cfg.format == "json") {
    nlohmann::json j = branches_json(bs);
    j["diagram"] = diagram_json(d);
    j["diagram"].erase("schema_version");
    emit_json(j);
  } else {
    print_branches(std::cout, bs, "");
    std::cout << render_ascii(d);
    std::cout << "code: " << canonical_code(d) << "\n";
  }
  return 0;
}

int cmd_polygon(const Config& cfg) {
  BiPoly f = read_input(cfg.input);
  if (auto p = read_point(cfg.point)) f = translate(f, *p);
  const NewtonPolygon np = newton_polygon(f);
  if (cfg.format == "json") {
    emit_json(polygon_json(f, np));
  } else {
    std::cout << "vertices:";
    for (const auto& v : np.vertices) std::cout << " (" << v.first << "," << v.second << ")";
    std::cout << "\n";
    for (const auto& s : np.segments) {
      const SegmentData sd = segment_data(f, s);
      std::cout << "segment (" << s.from.first << "," << s.from.second << ")-(" << s.to.first << "," << s.to.second
                << ") exponent " << to_string(s.exponent) << " edge polynomial " << to_string(sd.segment_poly)
                << (sd.multiple_root ? " [multiple root]" : "") << "\n";
    }
  }
  return 0;
}

int cmd_factor(const Config& cfg) {
  const FactorList fl = factor_rational(read_input(cfg.input));
  if (cfg.format == "json") {
    emit_json(factors_json(fl));
  } else {
    std::cout << "unit: " << to_string(fl.unit) << "\n";
    for (const auto& [g, m] : fl.factors) std::cout << "(" << to_string(g) << ")^" << m << "\n";
  }
  return 0;
}

int cmd_catalog_list(const Config& cfg, const Catalog& cat) {
  if (cfg.format == "json") {
    emit_json(catalog_json(cat));
    return 0;
  }
  for (const auto& c : cat.all_classes()) {
    std::cout << c.id << "\t" << c.label << "\t" << (c.irreducible ? "I" : "-") << (c.reducible ? "R" : "-") << "\t"
              << c.code << "\t" << c.representative << "\n";
  }
  return 0;
}

int cmd_catalog_selfcheck(const Config& cfg, const Catalog& cat) {
  const SelfCheckReport r = cat.self_check();
  if (cfg.format == "json") {
    emit_json(selfcheck_json(r));
  } else {
    std::cout << "irreducible classes: " << r.irreducible_count << "\n";
    std::cout << "reducible classes: " << r.reducible_count << "\n";
    for (const auto& f : r.failures) std::cout << "FAIL " << f << "\n";
    std::cout << (r.ok() ? "selfcheck passed" : "selfcheck FAILED") << "\n";
  }
  return r.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  Config cfg;
  CLI::App app{"Classify singular points of plane algebraic curves over Q"};
  app.require_subcommand(1);
  app.add_option("--catalog", cfg.catalog_path, "Catalog JSON file (default: shipped table)");

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"ascii", "json"}));
  };
  auto add_input = [&](CLI::App* sub) {
    sub->add_option("input", cfg.input, "Polynomial in x, y or a file containing one")->required();
  };

  CLI::App* classify = app.add_subcommand("classify", "Classify rational singular points");
  add_input(classify);
  classify->add_option("--point", cfg.point, "Rational point x,y");
  classify->add_option("--cap", cfg.cap, "Exponent cap p/q");
  classify->add_option("--context", cfg.context, "Catalog table")->check(CLI::IsMember({"auto", "irreducible", "reducible"}));
  classify->add_flag("-v,--verbose", cfg.verbose, "Also print the local equation");
  add_format(classify);

  CLI::App* expand = app.add_subcommand("expand", "Puiseux branches at the origin (or --point)");
  add_input(expand);
  expand->add_option("--point", cfg.point, "Rational point x,y");
  expand->add_option("--cap", cfg.cap, "Exponent cap p/q");
  add_format(expand);

  CLI::App* polygon = app.add_subcommand("polygon", "Newton polygon at the origin (or --point)");
  add_input(polygon);
  polygon->add_option("--point", cfg.point, "Rational point x,y");
  add_format(polygon);

  CLI::App* factor = app.add_subcommand("factor", "Factor over Q");
  add_input(factor);
  add_format(factor);

  CLI::App* catalog = app.add_subcommand("catalog", "Inspect the class table");
  catalog->require_subcommand(1);
  CLI::App* list = catalog->add_subcommand("list", "Print every class");
  add_format(list);
  CLI::App* selfcheck = catalog->add_subcommand("selfcheck", "Check every representative against its code");
  add_format(selfcheck);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    std::optional<Catalog> custom;
    if (!cfg.catalog_path.empty()) custom = Catalog::load(cfg.catalog_path);
    const Catalog& cat = custom ? *custom : Catalog::builtin();

    if (*classify) return cmd_classify(cfg, cat);
    if (*expand) return cmd_expand(cfg);
    if (*polygon) return cmd_polygon(cfg);
    if (*factor) return cmd_factor(cfg);
    if (*list) return cmd_catalog_list(cfg, cat);
    if (*selfcheck) return cmd_catalog_selfcheck(cfg, cat);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
