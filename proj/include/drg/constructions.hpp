#pragma once

// Generators for the distance-regular Cayley graph families, each paired with
// its predicted intersection array.

#include <vector>

#include "drg/abelian.hpp"
#include "drg/cayley.hpp"

namespace drg {

struct Construction {
  CayleyGraph graph;
  IntersectionArray predicted;
  Family family;
};

Construction complete_graph(const AbelianGroup& g);
/// S = G \ H for a proper nontrivial subgroup H.
Construction complete_multipartite(const AbelianGroup& g, const Subgroup& h);
/// S = (G \ H) \ {a} for H of index 2 and an involution a outside H.
Construction crown(const AbelianGroup& g, const Subgroup& h, Elem a);
/// S = {g, -g} for a generator g of a cyclic group of order >= 3.
Construction cycle(const AbelianGroup& g, Elem gen);

/// Cay(Z_p + Z_p, H_1 + ... + H_r \ {0}) for distinct subgroups of order p.
Construction td_line_graph(int p, const std::vector<Subgroup>& subgroups);
/// The r axis-and-diagonal style subgroups <(1,0)>, <(0,1)>, <(1,1)>, <(1,2)>, ...
std::vector<Subgroup> standard_order_p_subgroups(int p, int r);

struct TransversalDesign {
  int r = 0, v = 0;
  /// (group index, smallest member of the coset of H_i)
  std::vector<std::pair<int, Elem>> points;
  std::vector<std::vector<int>> groups;
  /// line g holds the points (i, g + H_i); indexed by the element g
  std::vector<std::vector<int>> lines;
};

/// Builds the design and checks its axioms and that its line graph has the
/// same edge set as td_line_graph on the same subgroups.
TransversalDesign td_from_subgroups(int p, const std::vector<Subgroup>& subgroups);

Construction paley(int q);
Construction hamming2(int q);

struct CatalogEntry {
  ElementSet connection;
  Family family;
  bool operator==(const CatalogEntry&) const = default;
};

/// Every connection set predicted to give a distance-regular Cayley graph
/// over Z_n + Z_p, sorted by connection set.
std::vector<CatalogEntry> expected_catalog(const AbelianGroup& g);
/// The same over the cyclic group Z_n.
std::vector<CatalogEntry> expected_circulant_catalog(int n);

}  // namespace drg
