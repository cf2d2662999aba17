#pragma once

#include <vector>

#include "drg/abelian.hpp"

namespace drg {

/// Aut(G) as explicit element permutations; maps[0] is the identity.
struct AutomorphismGroup {
  AbelianGroup group;
  std::vector<std::vector<Elem>> maps;
  int order() const { return static_cast<int>(maps.size()); }
};

/// Brute force over images of the coordinate generators; throws
/// aut_computation_limit when more than `limit` candidates would be tried.
AutomorphismGroup automorphism_group(const AbelianGroup& g, long long limit = 1000000);

ElementSet apply_automorphism(const std::vector<Elem>& map, const ElementSet& s);
/// Lexicographically smallest image of S (as a sorted element list).
ElementSet canonicalize(const AutomorphismGroup& aut, const ElementSet& s);
/// The distinct images of S, sorted.
std::vector<ElementSet> orbit(const AutomorphismGroup& aut, const ElementSet& s);

}  // namespace drg
