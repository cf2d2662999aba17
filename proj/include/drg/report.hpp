#pragma once

// JSON and text renderings of graphs, Schur rings, catalogs and
// classification runs, and the recheck of a saved report.

#include <string>
#include <vector>

#include <json.hpp>

#include "drg/cayley.hpp"
#include "drg/classifier.hpp"
#include "drg/design_sets.hpp"
#include "drg/schur.hpp"

namespace drg {

using Json = nlohmann::ordered_json;

struct ReportOptions {
  /// decimal digits kept in value_numeric
  int precision = 12;
};

Json set_json(const AbelianGroup& g, const ElementSet& s);
ElementSet set_from_json(const AbelianGroup& g, const Json& j);
Json array_json(const IntersectionArray& a);
Json spectrum_json(const Eigensystem& e, ReportOptions opt = {});
Json family_json(const Family& f);

/// {group, connection, array, spectrum, flags, family}; array, spectrum and
/// family are null when the graph is not distance-regular.
Json graph_report(const CayleyGraph& g, ReportOptions opt = {});
Json record_json(const AbelianGroup& g, const DrgRecord& r, ReportOptions opt = {});
Json tensor_json(const Tensor3& t);
Json schur_json(const SchurRing& sr);
Json catalog_json(const AbelianGroup& g, const std::vector<CatalogEntry>& c);
/// No timing inside, so equal runs give equal bytes.
Json classification_json(const ClassificationReport& r, ReportOptions opt = {});
Json theorem_json(const TheoremCheck& t, ReportOptions opt = {});
Json error_json(const std::exception& e);

std::string graph_text(const CayleyGraph& g);
/// group, #subsets, #connected, #DRG, families, anomalies, wall time
std::string summary_table(const std::vector<ClassificationReport>& reports);

struct RecheckResult {
  int records = 0;
  std::vector<std::string> mismatches;
  bool ok() const { return mismatches.empty(); }
};

/// Re-verifies every graph record in a saved graph, classification or
/// theorem report against a fresh computation.
RecheckResult recheck(const Json& report);

}  // namespace drg
