#pragma once
// Machine-readable output.  Every document carries "schema_version".

#include "json.hpp"
#include "qsing/catalog.hpp"
#include "qsing/classify.hpp"

namespace qsing {

inline constexpr int kSchemaVersion = 1;

/// Newton polygon of f with per-segment multiple-root flags.
nlohmann::json polygon_json(const BiPoly& f);
nlohmann::json polygon_json(const BiPoly& f, const NewtonPolygon& p);

nlohmann::json branch_json(const ProBranch& b);
nlohmann::json branches_json(const std::vector<ProBranch>& bs);

nlohmann::json diagram_json(const Diagram& d);

nlohmann::json factors_json(const FactorList& fl);

nlohmann::json class_json(const SingularityClass& c);
nlohmann::json catalog_json(const Catalog& cat);
nlohmann::json selfcheck_json(const SelfCheckReport& r);

nlohmann::json report_json(const ClassificationReport& r);
nlohmann::json classify_all_json(const BiPoly& f, const ClassifyAllResult& all);

}  // namespace qsing
