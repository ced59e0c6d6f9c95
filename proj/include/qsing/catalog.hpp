#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qsing/diagram.hpp"

namespace qsing {

struct SingularityClass {
  unsigned id = 0;
  /// Arnol'd-style label, e.g. "A_2", "D*_4", "Y^1_1,1".
  std::string label;
  bool irreducible = false;
  bool reducible = false;
  /// Numbered case in the irreducible / reducible listings, when known.
  std::optional<unsigned> irreducible_case;
  std::optional<unsigned> reducible_case;
  std::string code;
  /// Irreducible instance when `irreducible` is set, reducible instance otherwise.
  std::string representative;
  /// Reducible instance of a class that carries both flags.
  std::optional<std::string> reducible_representative;
  std::string note;
};

struct LookupContext {
  unsigned curve_degree = 5;
  bool q_irreducible = true;
};

struct SelfCheckReport {
  std::size_t irreducible_count = 0;
  std::size_t reducible_count = 0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

class Catalog {
 public:
  static Catalog from_json(const std::string& text);
  static Catalog load(const std::string& path);
  /// The shipped table; $QSING_CATALOG overrides the compiled-in path.
  static const Catalog& builtin();

  const std::vector<SingularityClass>& all_classes() const { return classes_; }

  /// Exact code lookup; nullopt means not in the quintic tables.
  std::optional<SingularityClass> classify_diagram(const Diagram& d, const LookupContext& ctx) const;
  std::optional<SingularityClass> find_code(const std::string& code, bool irreducible_flag) const;

  /// Re-runs the pipeline on every representative and checks counts and distinctness.
  SelfCheckReport self_check() const;

 private:
  std::vector<SingularityClass> classes_;
};

}  // namespace qsing
