#pragma once

// Cayley graphs Cay(G, S) over abelian groups and their distance-regularity.

#include <optional>
#include <string>
#include <vector>

#include "drg/abelian.hpp"
#include "drg/cyclotomic.hpp"
#include "drg/group_algebra.hpp"

namespace drg {

class CayleyGraph {
 public:
  /// Validates 0 notin S and S = -S.
  CayleyGraph(AbelianGroup g, ElementSet s);

  const AbelianGroup& group() const { return g_; }
  const ElementSet& connection() const { return s_; }
  int order() const { return g_.order(); }
  int valency() const { return static_cast<int>(s_.size()); }
  bool adjacent(Elem x, Elem y) const;
  bool connected() const;

 private:
  AbelianGroup g_;
  ElementSet s_;
};

struct DistancePartition {
  /// classes[i] = elements at distance i from 0.
  std::vector<ElementSet> classes;
  int diameter() const { return static_cast<int>(classes.size()) - 1; }
};

/// BFS layers from 0; throws not_connected.
DistancePartition distance_partition(const CayleyGraph& g);

struct IntersectionArray {
  std::vector<std::int64_t> b;  // b_0 .. b_{d-1}
  std::vector<std::int64_t> c;  // c_1 .. c_d

  int diameter() const { return static_cast<int>(b.size()); }
  std::int64_t k() const { return b.empty() ? 0 : b[0]; }
  std::int64_t b_at(int i) const { return i < diameter() ? b[i] : 0; }
  std::int64_t c_at(int i) const { return i == 0 ? 0 : c[i - 1]; }
  std::int64_t a_at(int i) const { return k() - b_at(i) - c_at(i); }
  /// k_i = |S_i| from the recurrence k_{i+1} = k_i b_i / c_{i+1}.
  std::vector<std::int64_t> class_sizes() const;
  bool operator==(const IntersectionArray&) const = default;
  /// "{b_0,...,b_{d-1};c_1,...,c_d}"
  std::string to_string() const;
};

struct DrgCheck {
  DistancePartition partition;
  std::optional<IntersectionArray> array;
  /// When not distance-regular: first layer whose product S_i S breaks the
  /// pattern, and a description of the offending coefficient.
  int failed_layer = -1;
  std::string witness;
  bool distance_regular() const { return array.has_value(); }
};

/// Checks S_i S = b_{i-1} S_{i-1} + a_i S_i + c_{i+1} S_{i+1} for all i.
DrgCheck check_distance_regular(const CayleyGraph& g);
/// Same answer from distance counts between every pair of vertices.
std::optional<IntersectionArray> brute_force_distance_regular(const CayleyGraph& g, bool parallel = true);

struct Eigenvalue {
  CycInt exact;
  long double numeric = 0;
  int multiplicity = 0;
  ElementSet level_set;
};

/// Distinct eigenvalues in descending order.
struct Eigensystem {
  std::vector<Eigenvalue> values;
};

constexpr long double kSeparationGate = 1e-9L;

Eigensystem spectrum(const CayleyGraph& g);

struct Imprimitivity {
  bool bipartite = false;
  bool antipodal = false;
  /// S_0 + S_d when antipodal.
  std::optional<Subgroup> antipodal_class;
  /// Elements at even distance when bipartite.
  std::optional<Subgroup> bipartition;
};

Imprimitivity imprimitivity(const CayleyGraph& g, const DistancePartition& part, const IntersectionArray& a);

struct GraphOverQuotient {
  CayleyGraph graph;
  Quotient quotient;
};

/// Cay(G/H, S/H) for H = S_0 + S_d, re-verified distance-regular.
GraphOverQuotient antipodal_quotient(const CayleyGraph& g);

struct GraphOverSubgroup {
  CayleyGraph graph;
  Realization realization;
};

/// Cay(H, S_2) for the bipartition subgroup H, re-verified distance-regular.
GraphOverSubgroup halved_graph(const CayleyGraph& g);

struct QuotientPrediction {
  GraphOverQuotient quotient;
  IntersectionArray predicted;
  IntersectionArray actual;
};

/// For an antipodal non-bipartite DRG of diameter 3 with antipodal class H
/// and a subgroup K of H: the quotient by K and its predicted array.
QuotientPrediction quotient_by_subgroup(const CayleyGraph& g, const Subgroup& k);

bool is_integral(const Eigensystem& e);
/// S is a union of atoms of G.
bool in_atom_algebra(const AbelianGroup& g, const ElementSet& s);

/// Exact maximum clique size; |G| <= 200.
int clique_number(const CayleyGraph& g);
int delsarte_bound(const CayleyGraph& g, const Eigensystem& e);

struct Family {
  enum class Kind { complete, multipartite, crown, cycle, subgroup_union, paley, none };
  Kind kind = Kind::none;
  int t = 0, m = 0, r = 0;  // parameters, meaning per kind
  std::string label() const;
  bool operator==(const Family&) const = default;
};

/// First matching family in the order complete, complete-multipartite,
/// crown, cycle, union of order-p subgroups, Paley.
Family detect_family(const CayleyGraph& g, const DistancePartition& part, const IntersectionArray& a,
                     const Imprimitivity& imp);
Family parse_family(const std::string& label);

std::string to_graph6(const CayleyGraph& g);
std::string graph6_encode(int n, const std::vector<std::pair<int, int>>& edges);
/// Vertex count and sorted edge list (i < j).
std::pair<int, std::vector<std::pair<int, int>>> graph6_decode(const std::string& s);

}  // namespace drg
