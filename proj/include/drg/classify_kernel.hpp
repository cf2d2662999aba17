#pragma once

// Enumeration of inverse-closed subsets and the two DRG search kernels: a
// bitset kernel for |G| <= 64 (OpenMP) and a serial reference built on the
// generic group-algebra test.

#include <cstdint>
#include <functional>
#include <vector>

#include "drg/abelian.hpp"
#include "drg/automorphism.hpp"

namespace drg {

/// Involutions {x} and inverse pairs {x, -x}, ordered by smallest member.
/// Bit j of a subset index selects atom j.
struct SubsetBasis {
  AbelianGroup group;
  std::vector<ElementSet> atoms;
  int size() const { return static_cast<int>(atoms.size()); }
  /// 2^size(); throws limit_exceeded above 2^62.
  long long count() const;
  ElementSet subset(long long index) const;
};

SubsetBasis subset_basis(const AbelianGroup& g);

/// Every inverse-closed S in G \ {0}, in subset-index order. Throws
/// limit_exceeded when there are more than `limit` of them.
void enumerate_connection_sets(const AbelianGroup& g, const std::function<void(const ElementSet&)>& visit,
                               long long limit = 1LL << 22);

struct KernelOptions {
  int jobs = 1;
  /// Skip S when one of these automorphisms maps it to a lexicographically
  /// smaller set. Never skips the canonical representative of an orbit.
  const AutomorphismGroup* prune = nullptr;
};

struct KernelResult {
  long long examined = 0;  // sets that reached the connectivity test
  long long pruned = 0;
  long long disconnected = 0;
  /// subset indices of distance-regular sets, ascending
  std::vector<long long> drg_indices;
};

/// Automorphisms used for pruning: all of them when |Aut| <= 64, else 32
/// spread evenly; the identity is left out.
std::vector<int> pruning_sample(const AutomorphismGroup& aut);

KernelResult run_bitset_kernel(const SubsetBasis& basis, KernelOptions opt = {});
KernelResult run_reference_kernel(const SubsetBasis& basis, const AutomorphismGroup* prune = nullptr);

}  // namespace drg
