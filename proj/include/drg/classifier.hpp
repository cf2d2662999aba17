#pragma once

// Exhaustive classification of distance-regular Cayley graphs over a given
// abelian group, and diffs against the expected catalogs.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "drg/abelian.hpp"
#include "drg/cayley.hpp"
#include "drg/classify_kernel.hpp"
#include "drg/constructions.hpp"

namespace drg {

struct SearchSpec {
  AbelianGroup group;
  bool use_aut_reduction = true;
  int jobs = 1;
  long long max_subsets = 1LL << 22;
  /// use the serial group-algebra kernel even when the bitset one applies
  bool reference = false;
};

struct DrgRecord {
  ElementSet connection;
  /// lexicographically smallest set in the Aut(G)-orbit
  ElementSet canonical;
  Family family;
  IntersectionArray array;
  Eigensystem spectrum;
  bool bipartite = false;
  bool antipodal = false;
  bool primitive = false;
};

struct ClassificationReport {
  AbelianGroup group;
  bool aut_reduced = false;
  int aut_order = 0;
  long long subsets = 0;
  long long examined = 0;
  long long pruned = 0;
  long long disconnected = 0;
  /// connected sets among the examined ones
  long long connected = 0;
  /// every DRG connection set, orbits expanded, sorted
  std::vector<DrgRecord> drgs;
  std::map<std::string, long long> family_counts;
  /// DRGs matching no known family (indices into drgs)
  std::vector<int> anomalies;
  double wall_seconds = 0;
};

/// Aut(G) when the brute force is within limits (|G| <= 200).
std::optional<AutomorphismGroup> try_automorphism_group(const AbelianGroup& g);

ClassificationReport classify_group(const SearchSpec& spec);

DrgRecord make_record(const CayleyGraph& g, const std::optional<AutomorphismGroup>& aut);

struct CatalogDiff {
  /// expected but not found
  std::vector<CatalogEntry> missing;
  /// found but not expected (including relabelled families)
  std::vector<CatalogEntry> unexpected;
  /// crowns over Z_n + Z_p with n != 2 mod 4
  std::vector<CatalogEntry> crown_congruence;
  bool empty() const { return missing.empty() && unexpected.empty() && crown_congruence.empty(); }
};

CatalogDiff diff_catalog(const std::vector<CatalogEntry>& found, const std::vector<CatalogEntry>& expected);

struct TheoremCheck {
  ClassificationReport report;
  std::vector<CatalogEntry> expected;
  CatalogDiff diff;
  bool verified() const { return diff.empty() && report.anomalies.empty(); }
};

/// G = Z_n + Z_p with p an odd prime dividing n.
TheoremCheck verify_main_theorem(const SearchSpec& spec);
/// spec.group must be cyclic of order at most 33.
TheoremCheck verify_circulant_theorem(const SearchSpec& spec);

struct NonexistenceReport {
  long long drgs = 0;
  /// diameter-3 antipodal non-bipartite, diameter-4 antipodal bipartite
  long long antipodal_d3 = 0;
  long long antipodal_bipartite_d4 = 0;
  long long primitive = 0;
  long long primitive_noncomplete = 0;
  /// G = Z_p + Z_p, where non-complete primitive DRGs are allowed
  bool pp_exempt = false;
  bool holds() const { return antipodal_d3 == 0 && antipodal_bipartite_d4 == 0 && (pp_exempt || primitive_noncomplete == 0); }
};

/// Counts the three shapes over a complete classification of Z_n + Z_p. A
/// counterexample is a bug trap whose message dumps the record.
NonexistenceReport nonexistence_report(const ClassificationReport& report);

}  // namespace drg
