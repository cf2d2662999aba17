#pragma once

// Relative difference sets, polynomial addition sets, Ma's decomposition,
// direction sets in AG(2,p) and eigenvalue level-set certificates.

#include <optional>
#include <set>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "drg/abelian.hpp"
#include "drg/cayley.hpp"
#include "drg/group_algebra.hpp"

namespace drg {

struct RdsParams {
  int m = 0;  // [G:N]
  int r = 0;  // |N|
  int k = 0;  // |D|
  std::int64_t mu = 0;
  bool operator==(const RdsParams&) const = default;
};

struct RdsCheck {
  std::optional<RdsParams> params;
  /// first element whose coefficient in D D^(-1) breaks the pattern
  Elem witness = -1;
  std::int64_t coefficient = 0;
};

/// D D^(-1) = k e + mu (G \ N) for a proper subgroup N.
RdsCheck is_relative_difference_set(const AbelianGroup& g, const ElementSet& d, const ElementSet& n);
/// For an (nm, n, nm, m)-RDS: every element order divides nm, or n = 2,
/// m = 1 and G is cyclic of order 4. Throws for non-RDS or other shapes.
bool rds_order_constraint(const AbelianGroup& g, const ElementSet& d, const ElementSet& n);

struct PasCheck {
  std::optional<std::int64_t> m;
  Elem residual = -1;
};

/// f(D) = m G; f lists coefficients from the highest degree down.
PasCheck is_polynomial_addition_set(const AbelianGroup& g, const ElementSet& d, std::span<const std::int64_t> f);

struct PasHit {
  ElementSet d;
  int k = 0;
  std::int64_t b = 0;
  bool operator==(const PasHit&) const = default;
  bool operator<(const PasHit& o) const { return std::tie(b, d) < std::tie(o.b, o.d); }
};

struct PasSearchOptions {
  /// also report |D| in {1, v-1, v} (0 is never reported)
  bool include_trivial_sizes = false;
};

/// All D in Z_v and |b| <= bound with D^n - b e a multiple of Z_v, found by
/// enumerating the possible character values chi(D), which are n-th roots of
/// b inside Z[zeta_d] for each d | v. v <= 40, 1 <= n <= 5. Hits with
/// 1 < |D| < v-1 are a bug trap unless include_trivial_sizes is set.
std::vector<PasHit> monomial_pas_search(int v, int n, std::int64_t bound, PasSearchOptions opt = {});
/// Reference search over every subset of Z_v (v <= 22).
std::vector<PasHit> monomial_pas_search_brute(int v, int n, std::int64_t bound, PasSearchOptions opt = {});

struct MaDecomposition {
  AlgebraElement x1;
  AlgebraElement x2;
  Subgroup p_subgroup;
};

/// Y = p^a X1 + P X2 with P the subgroup of order p; G must have a cyclic
/// Sylow p-subgroup and chi(Y) = 0 mod p^a for characters whose order is
/// divisible by the Sylow order.
MaDecomposition ma_decompose(const AlgebraElement& y, int p, int a);

/// Slopes in {0..p-1}, with p standing for the vertical direction.
std::set<int> directions(int p, const std::vector<std::pair<int, int>>& w);

enum class DirectionResult { collinear, bound_holds };

/// For 1 < |W| <= p: a single direction, or |Dir(W)| >= (|W|+3)/2. A
/// violation is a bug trap.
DirectionResult direction_bound_check(int p, const std::vector<std::pair<int, int>>& w);

struct LevelSetCertificate {
  int diameter = 0;  // 3 (antipodal, not bipartite) or 4 (antipodal, bipartite)
  int psi = 0;
  AbelianGroup m_group;
  /// r[i] = {m : (m, i) in S}
  std::vector<ElementSet> r_sets;
  ElementSet b;
  /// theta_1 and theta_3 for diameter 3; +sqrt(k) and -sqrt(k) for diameter 4
  CycInt theta_hi, theta_lo;
  /// per l in M: lhs - rhs of the chi_l(B) identity
  std::vector<CycInt> residual;
  /// per element: lhs - rhs of the (2 delta)^r B^r identity (diameter 3)
  std::vector<CycInt> power_residual;
  /// r = 2: Cay(M, B) or Cay(M, M \ B) is strongly regular
  bool srg_checked = false;
  bool valid() const;
};

/// Needs Cay(M + Z_r, S) distance-regular with antipodal class (0, Z_r), r
/// prime, of diameter 3 and not bipartite, or of diameter 4 and bipartite;
/// otherwise precondition_unmet. 1 <= psi < r. Nonzero residuals are a bug trap.
LevelSetCertificate level_set_certificate(const CayleyGraph& g, int psi);

/// Both sides of sum_g (sum_i psi(i) chi_g(R_i)) chi_l(g) = |M| sum_i psi(i) [-l in R_i]
/// for an arbitrary S in M + Z_r, computed independently for every l in M.
std::pair<std::vector<CycInt>, std::vector<CycInt>> level_set_fourier_sides(const AbelianGroup& g, const ElementSet& s,
                                                                            int psi);

}  // namespace drg
