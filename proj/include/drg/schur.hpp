#pragma once

// Schur rings over abelian groups, their duals and Krein parameters.

#include <optional>
#include <string>
#include <vector>

#include "drg/abelian.hpp"
#include "drg/cayley.hpp"

namespace drg {

struct Tensor3 {
  int n = 0;
  std::vector<std::int64_t> v;
  Tensor3() = default;
  explicit Tensor3(int size) : n(size), v(static_cast<size_t>(size) * size * size, 0) {}
  std::int64_t& operator()(int i, int j, int k) { return v[(static_cast<size_t>(i) * n + j) * n + k]; }
  std::int64_t operator()(int i, int j, int k) const { return v[(static_cast<size_t>(i) * n + j) * n + k]; }
  bool operator==(const Tensor3&) const = default;
  /// Same tensor with every index relabelled i -> perm[i].
  Tensor3 permuted(const std::vector<int>& perm) const;
};

struct SchurRing {
  AbelianGroup group;
  /// classes[0] = {0}
  std::vector<ElementSet> classes;
  /// p(i,j,k): N_i N_j = sum_k p(i,j,k) N_k
  Tensor3 p;
  /// inverse[i] = index of -N_i
  std::vector<int> inverse;

  int rank() const { return static_cast<int>(classes.size()); }
  bool symmetric() const;
  /// <N_i> = G for every i >= 1.
  bool primitive() const;
};

struct SchurViolation {
  /// axiom 1: N_0 != {0}; 2: inverse of a class is not a class; 3: product
  /// not constant on class k
  int axiom = 0;
  int i = -1, j = -1, k = -1;
  std::int64_t lo = 0, hi = 0;
  std::string to_string() const;
};

struct SchurCheck {
  std::optional<SchurRing> ring;
  std::optional<SchurViolation> violation;
};

/// The classes must partition G (precondition); the class containing 0 is
/// moved to the front, the rest keep their order.
SchurCheck verify_schur_ring(const AbelianGroup& g, std::vector<ElementSet> partition);

/// The Schur ring on the distance partition; throws not_distance_regular.
SchurRing distance_module(const CayleyGraph& g);

/// Classes of characters with equal values on every N_i, E_0 = {0} and the
/// rest ordered by (size, smallest element).
SchurRing dual_schur_ring(const SchurRing& sr);

/// The dual ring's tensor, asserted non-negative.
Tensor3 krein_parameters(const SchurRing& sr);

/// Krein parameters from the eigenmatrices in floating point, for
/// cross-checking; entry (i,j,k) as in krein_parameters.
std::vector<long double> krein_parameters_numeric(const SchurRing& sr);

/// Relabellings tau (tau[0] = 0) of the dual classes under which the Krein
/// tensor satisfies q_ij^k != 0 => k <= i+j and q_ij^{i+j} != 0 (i+j <= d).
std::vector<std::vector<int>> q_polynomial_orderings(const SchurRing& sr);
/// The same two conditions on p under the identity ordering.
bool is_p_polynomial(const SchurRing& sr);

/// Cay(G, E_tau(1)) for a Q-polynomial ordering tau, checked to be
/// distance-regular with distance classes E_tau(i) and p-tensor equal to the
/// Krein tensor under tau.
CayleyGraph dual_graph(const CayleyGraph& g, const std::vector<int>& tau);

}  // namespace drg
