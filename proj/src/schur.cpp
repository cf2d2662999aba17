#include "drg/schur.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <map>

#include "drg/group_algebra.hpp"

namespace drg {

Tensor3 Tensor3::permuted(const std::vector<int>& perm) const {
  Tensor3 out(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) out(i, j, k) = (*this)(perm[i], perm[j], perm[k]);
  return out;
}

bool SchurRing::symmetric() const {
  for (int i = 0; i < rank(); ++i)
    if (inverse[i] != i) return false;
  return true;
}

bool SchurRing::primitive() const {
  for (int i = 1; i < rank(); ++i)
    if (generated_subgroup(group, classes[i]).order() != group.order()) return false;
  return true;
}

std::string SchurViolation::to_string() const {
  switch (axiom) {
    case 1: return "class of the identity is not {0}";
    case 2: return "inverse of class " + std::to_string(i) + " is not a class";
    default:
      return "N_" + std::to_string(i) + "*N_" + std::to_string(j) + " takes values " + std::to_string(lo) + ".." +
             std::to_string(hi) + " on class " + std::to_string(k);
  }
}

SchurCheck verify_schur_ring(const AbelianGroup& g, std::vector<ElementSet> partition) {
  const int n = g.order();
  std::vector<int> cls(n, -1);
  for (auto& c : partition) c = normalized(std::move(c));
  for (size_t i = 0; i < partition.size(); ++i) {
    if (partition[i].empty()) throw Error(ErrorCode::precondition, "empty class in partition");
    for (Elem x : partition[i]) {
      if (x < 0 || x >= n || cls[x] >= 0) throw Error(ErrorCode::precondition, "classes do not partition the group");
      cls[x] = static_cast<int>(i);
    }
  }
  for (int x = 0; x < n; ++x)
    if (cls[x] < 0) throw Error(ErrorCode::precondition, "classes do not cover the group");
  if (cls[0] != 0) {
    std::rotate(partition.begin(), partition.begin() + cls[0], partition.begin() + cls[0] + 1);
    for (size_t i = 0; i < partition.size(); ++i)
      for (Elem x : partition[i]) cls[x] = static_cast<int>(i);
  }
  SchurCheck out;
  if (partition[0].size() != 1) {
    out.violation = SchurViolation{1, 0, -1, -1, 0, 0};
    return out;
  }
  const int r = static_cast<int>(partition.size());
  SchurRing sr{g, partition, Tensor3(r), std::vector<int>(r, -1)};
  for (int i = 0; i < r; ++i) {
    ElementSet neg;
    for (Elem x : partition[i]) neg.push_back(g.neg(x));
    neg = normalized(std::move(neg));
    int j = cls[neg[0]];
    if (partition[j] != neg) {
      out.violation = SchurViolation{2, i, -1, -1, 0, 0};
      return out;
    }
    sr.inverse[i] = j;
  }
  std::vector<AlgebraElement> basis;
  for (const auto& c : partition) basis.push_back(AlgebraElement::from_subset(g, c));
  std::vector<std::optional<SchurViolation>> bad(static_cast<size_t>(r) * r);
#pragma omp parallel for schedule(dynamic) if (static_cast<long long>(n) * r * r > 20000)
  for (int ij = 0; ij < r * r; ++ij) {
    const int i = ij / r, j = ij % r;
    AlgebraElement prod = convolve(basis[i], basis[j]);
    std::vector<std::int64_t> lo(r, INT64_MAX), hi(r, INT64_MIN);
    for (Elem x = 0; x < n; ++x) {
      lo[cls[x]] = std::min(lo[cls[x]], prod[x]);
      hi[cls[x]] = std::max(hi[cls[x]], prod[x]);
    }
    for (int k = 0; k < r; ++k) {
      if (lo[k] != hi[k]) {
        bad[ij] = SchurViolation{3, i, j, k, lo[k], hi[k]};
        break;
      }
      sr.p(i, j, k) = lo[k];
    }
  }
  for (auto& b : bad)
    if (b) {
      out.violation = b;
      return out;
    }
  out.ring = std::move(sr);
  return out;
}

SchurRing distance_module(const CayleyGraph& g) {
  DrgCheck chk = check_distance_regular(g);
  if (!chk.distance_regular()) throw Error(ErrorCode::not_distance_regular, chk.witness);
  SchurCheck sc = verify_schur_ring(g.group(), chk.partition.classes);
  if (!sc.ring) bug_trap("distance partition of a distance-regular Cayley graph is not a Schur ring: " +
                         sc.violation->to_string());
  return *sc.ring;
}

SchurRing dual_schur_ring(const SchurRing& sr) {
  const AbelianGroup& g = sr.group;
  std::vector<AlgebraElement> basis;
  for (const auto& c : sr.classes) basis.push_back(AlgebraElement::from_subset(g, c));
  std::map<std::vector<CycInt>, ElementSet> sig;
  for (Elem chi = 0; chi < g.order(); ++chi) {
    std::vector<CycInt> v;
    for (const auto& b : basis) v.push_back(apply_character(chi, b));
    sig[v].push_back(chi);
  }
  std::vector<ElementSet> classes;
  for (auto& [k, v] : sig) classes.push_back(v);
  std::sort(classes.begin(), classes.end(), [](const ElementSet& a, const ElementSet& b) {
    if ((a[0] == 0) != (b[0] == 0)) return a[0] == 0;
    if (a.size() != b.size()) return a.size() < b.size();
    return a[0] < b[0];
  });
  if (static_cast<int>(classes.size()) != sr.rank())
    bug_trap("dual Schur ring has rank " + std::to_string(classes.size()) + ", expected " +
             std::to_string(sr.rank()));
  SchurCheck sc = verify_schur_ring(g, classes);
  if (!sc.ring) bug_trap("dual partition is not a Schur ring: " + sc.violation->to_string());
  return *sc.ring;
}

Tensor3 krein_parameters(const SchurRing& sr) {
  Tensor3 q = dual_schur_ring(sr).p;
  for (auto v : q.v)
    if (v < 0) bug_trap("negative Krein parameter");
  return q;
}

std::vector<long double> krein_parameters_numeric(const SchurRing& sr) {
  SchurRing dual = dual_schur_ring(sr);
  const int r = sr.rank();
  const long double n = sr.group.order();
  using Mat = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;
  using Vec = Eigen::Matrix<long double, Eigen::Dynamic, 1>;
  Mat P(r, r);
  for (int j = 0; j < r; ++j) {
    Elem chi = dual.classes[j][0];
    for (int l = 0; l < r; ++l) {
      CycInt v = apply_character(chi, AlgebraElement::from_subset(sr.group, sr.classes[l]));
      P(j, l) = v.numeric().real();
    }
  }
  Mat Q = n * P.inverse();
  Eigen::PartialPivLU<Mat> lu(Q);
  std::vector<long double> out(static_cast<size_t>(r) * r * r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      Vec rhs(r);
      for (int l = 0; l < r; ++l) rhs(l) = Q(l, i) * Q(l, j);
      Vec c = lu.solve(rhs);
      for (int k = 0; k < r; ++k) out[(static_cast<size_t>(i) * r + j) * r + k] = c(k);
    }
  return out;
}

namespace {

bool polynomial_conditions(const Tensor3& t) {
  const int d = t.n - 1;
  for (int i = 0; i <= d; ++i)
    for (int j = 0; j <= d; ++j) {
      for (int k = 0; k <= d; ++k)
        if (t(i, j, k) != 0 && k > i + j) return false;
      if (i + j <= d && t(i, j, i + j) == 0) return false;
    }
  return true;
}

}  // namespace

std::vector<std::vector<int>> q_polynomial_orderings(const SchurRing& sr) {
  if (!sr.symmetric()) throw Error(ErrorCode::precondition, "Q-polynomial orderings need a symmetric Schur ring");
  if (sr.rank() > 64) throw Error(ErrorCode::size_limit_exceeded, "Q-polynomial search limited to rank 64");
  const Tensor3 q = krein_parameters(sr);
  const int n = sr.rank();
  std::vector<int> tau{0};
  std::vector<char> used(n, 0);
  used[0] = 1;
  std::vector<std::vector<int>> out;
  // both conditions only involve placed indices, so a bad prefix stays bad
  auto prefix_ok = [&](int t) {
    for (int i = 0; i <= t; ++i)
      for (int j = 0; j <= t; ++j) {
        for (int k = 0; k <= t; ++k)
          if (k > i + j && q(tau[i], tau[j], tau[k]) != 0) return false;
        if (i + j <= t && q(tau[i], tau[j], tau[i + j]) == 0) return false;
      }
    return true;
  };
  auto rec = [&](auto&& self) -> void {
    const int t = static_cast<int>(tau.size());
    if (t == n) {
      if (!polynomial_conditions(q.permuted(tau))) bug_trap("Q-polynomial prefix search accepted a bad ordering");
      out.push_back(tau);
      return;
    }
    for (int j = 1; j < n; ++j) {
      if (used[j]) continue;
      tau.push_back(j);
      used[j] = 1;
      if (prefix_ok(t)) self(self);
      used[j] = 0;
      tau.pop_back();
    }
  };
  rec(rec);
  return out;
}

bool is_p_polynomial(const SchurRing& sr) { return polynomial_conditions(sr.p); }

CayleyGraph dual_graph(const CayleyGraph& g, const std::vector<int>& tau) {
  SchurRing sr = distance_module(g);
  auto orderings = q_polynomial_orderings(sr);
  if (std::find(orderings.begin(), orderings.end(), tau) == orderings.end())
    throw Error(ErrorCode::not_q_polynomial, "ordering is not Q-polynomial");
  SchurRing dual = dual_schur_ring(sr);
  const int d = sr.rank() - 1;
  if (d == 0) return g;
  CayleyGraph h(g.group(), dual.classes[tau[1]]);
  DrgCheck chk = check_distance_regular(h);
  if (!chk.distance_regular()) bug_trap("dual graph is not distance-regular");
  if (chk.partition.diameter() != d) bug_trap("dual graph has the wrong diameter");
  for (int i = 0; i <= d; ++i)
    if (chk.partition.classes[i] != dual.classes[tau[i]]) bug_trap("dual graph distance classes differ from E_tau(i)");
  SchurRing hs = distance_module(h);
  if (!(hs.p == dual.p.permuted(tau))) bug_trap("dual graph intersection numbers differ from the Krein tensor");
  return h;
}

}  // namespace drg
