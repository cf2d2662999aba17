#include "drg/design_sets.hpp"

#include <algorithm>

#include "drg/numtheory.hpp"

namespace drg {

RdsCheck is_relative_difference_set(const AbelianGroup& g, const ElementSet& d, const ElementSet& n) {
  ElementSet nn = normalized(n);
  if (!is_subgroup(g, nn)) throw Error(ErrorCode::invalid_subgroup, "forbidden set N is not a subgroup");
  if (static_cast<int>(nn.size()) == g.order()) throw Error(ErrorCode::precondition, "N must be a proper subgroup");
  ElementSet dd = normalized(d);
  AlgebraElement dv = AlgebraElement::from_subset(g, dd);
  AlgebraElement prod = convolve(dv, involute(dv, -1));
  RdsCheck out;
  const std::int64_t k = static_cast<std::int64_t>(dd.size());
  std::int64_t mu = -1;
  for (Elem x = 0; x < g.order(); ++x) {
    std::int64_t want;
    if (x == 0) {
      want = k;
    } else if (contains(nn, x)) {
      want = 0;
    } else {
      if (mu < 0) mu = prod[x];
      want = mu;
    }
    if (prod[x] != want) {
      out.witness = x;
      out.coefficient = prod[x];
      return out;
    }
  }
  out.params = RdsParams{g.order() / static_cast<int>(nn.size()), static_cast<int>(nn.size()), static_cast<int>(k),
                         mu < 0 ? 0 : mu};
  return out;
}

bool rds_order_constraint(const AbelianGroup& g, const ElementSet& d, const ElementSet& n) {
  RdsCheck chk = is_relative_difference_set(g, d, n);
  if (!chk.params)
    throw Error(ErrorCode::precondition, "not a relative difference set: coefficient " +
                                             std::to_string(chk.coefficient) + " at (" +
                                             g.format_element(chk.witness) + ")");
  const RdsParams& p = *chk.params;
  // (nm, n, nm, m): |N| = n, mu = m, [G:N] = k = nm
  const std::int64_t nn = p.r, mm = p.mu;
  if (mm <= 0 || p.m != nn * mm || p.k != nn * mm)
    throw Error(ErrorCode::precondition, "RDS parameters are not of the shape (nm, n, nm, m)");
  bool all_divide = true;
  for (Elem x = 0; x < g.order(); ++x)
    if ((nn * mm) % g.order_of(x) != 0) all_divide = false;
  if (all_divide) return true;
  return nn == 2 && mm == 1 && g.order() == 4 && g.exponent() == 4;
}

PasCheck is_polynomial_addition_set(const AbelianGroup& g, const ElementSet& d, std::span<const std::int64_t> f) {
  AlgebraElement val = polynomial_eval(f, AlgebraElement::from_subset(g, normalized(d)));
  PasCheck out;
  for (Elem x = 1; x < g.order(); ++x)
    if (val[x] != val[0]) {
      out.residual = x;
      return out;
    }
  out.m = val[0];
  return out;
}

MaDecomposition ma_decompose(const AlgebraElement& y, int p, int a) {
  const AbelianGroup& g = y.group();
  if (!is_prime(p)) throw Error(ErrorCode::precondition, "p must be prime");
  if (a < 0) throw Error(ErrorCode::precondition, "a must be non-negative");
  if (g.order() % p != 0) throw Error(ErrorCode::precondition, "p does not divide |G|");
  ElementSet order_p;
  for (Elem x = 0; x < g.order(); ++x)
    if (g.order_of(x) == p) order_p.push_back(x);
  if (static_cast<int>(order_p.size()) != p - 1) throw Error(ErrorCode::precondition, "Sylow p-subgroup is not cyclic");
  Elem gen[1] = {order_p[0]};
  Subgroup pp = generated_subgroup(g, gen);
  int sylow = 1;
  while (g.order() % (sylow * p) == 0) sylow *= p;
  const std::int64_t pa = checked_pow(p, a);
  for (Elem chi = 0; chi < g.order(); ++chi) {
    if (g.order_of(chi) % sylow != 0) continue;
    if (!apply_character(chi, y).divisible_by(pa))
      throw Error(ErrorCode::precondition,
                  "character (" + g.format_element(chi) + ") of Y is not divisible by " + std::to_string(pa));
  }
  bool nonneg = true;
  for (auto v : y.coeffs())
    if (v < 0) nonneg = false;
  MaDecomposition out{AlgebraElement(g), AlgebraElement(g), pp};
  std::vector<char> done(g.order(), 0);
  for (Elem x = 0; x < g.order(); ++x) {
    if (done[x]) continue;
    // coset x + P; its smallest member is x
    std::int64_t c = mod(y[x], pa);
    std::int64_t low = y[x];
    for (Elem h : pp.elements) {
      Elem z = g.add(x, h);
      done[z] = 1;
      if (mod(y[z], pa) != c) bug_trap("coset coefficients disagree mod p^a although the character condition holds");
      low = std::min(low, y[z]);
    }
    if (nonneg && c > low) bug_trap("no non-negative decomposition on a coset");
    out.x2[x] = c;
    for (Elem h : pp.elements) {
      Elem z = g.add(x, h);
      out.x1[z] = (y[z] - c) / pa;
    }
  }
  AlgebraElement back = pa * out.x1 + convolve(AlgebraElement::from_subset(g, pp.elements), out.x2);
  if (!(back == y)) bug_trap("decomposition does not recombine to Y");
  return out;
}

std::set<int> directions(int p, const std::vector<std::pair<int, int>>& w) {
  if (!is_prime(p)) throw Error(ErrorCode::precondition, "p must be prime");
  std::set<int> out;
  for (size_t j = 0; j < w.size(); ++j)
    for (size_t k = j + 1; k < w.size(); ++k) {
      long long da = mod(w[j].first - w[k].first, p);
      long long db = mod(w[j].second - w[k].second, p);
      if (da == 0) {
        if (db == 0) throw Error(ErrorCode::precondition, "repeated point");
        out.insert(p);
        continue;
      }
      long long inv = 1;
      for (int e = 0; e < p - 2; ++e) inv = inv * da % p;
      out.insert(static_cast<int>(db * inv % p));
    }
  return out;
}

DirectionResult direction_bound_check(int p, const std::vector<std::pair<int, int>>& w) {
  const int n = static_cast<int>(w.size());
  if (n <= 1 || n > p)
    throw Error(ErrorCode::precondition, "direction bound needs 1 < |W| <= p, got " + std::to_string(n));
  auto dir = directions(p, w);
  if (dir.size() == 1) return DirectionResult::collinear;
  if (2 * static_cast<int>(dir.size()) < n + 3)
    bug_trap("non-collinear set with " + std::to_string(n) + " points determines only " + std::to_string(dir.size()) +
             " directions");
  return DirectionResult::bound_holds;
}

bool LevelSetCertificate::valid() const {
  for (const auto& r : residual)
    if (!r.is_zero()) return false;
  for (const auto& r : power_residual)
    if (!r.is_zero()) return false;
  return true;
}

namespace {

AbelianGroup drop_last(const AbelianGroup& g) {
  std::vector<int> m = g.moduli();
  m.pop_back();
  return AbelianGroup(m);
}

}  // namespace

std::pair<std::vector<CycInt>, std::vector<CycInt>> level_set_fourier_sides(const AbelianGroup& g, const ElementSet& s,
                                                                            int psi) {
  if (g.rank() < 1) throw Error(ErrorCode::precondition, "group needs a last cyclic factor");
  const int r = g.moduli().back();
  AbelianGroup m = drop_last(g);
  std::vector<ElementSet> rs(r);
  for (Elem x : s) rs[x % r].push_back(x / r);
  std::vector<CycInt> lhs, rhs;
  std::vector<CycInt> coeff;  // per g in M: sum_i psi(i) chi_g(R_i)
  for (Elem gg = 0; gg < m.order(); ++gg) {
    CycInt v;
    for (int i = 0; i < r; ++i)
      v += CycInt::root(r, static_cast<long long>(psi) * i) *
           apply_character(gg, AlgebraElement::from_subset(m, rs[i]));
    coeff.push_back(v);
  }
  for (Elem l = 0; l < m.order(); ++l) {
    CycInt a;
    for (Elem gg = 0; gg < m.order(); ++gg) a += coeff[gg] * character_value(m, l, gg);
    lhs.push_back(a);
    CycInt b;
    Elem neg = m.neg(l);
    for (int i = 0; i < r; ++i)
      if (contains(rs[i], neg)) b += CycInt::root(r, static_cast<long long>(psi) * i) * m.order();
    rhs.push_back(b);
  }
  return {lhs, rhs};
}

LevelSetCertificate level_set_certificate(const CayleyGraph& g, int psi) {
  const AbelianGroup& grp = g.group();
  if (grp.rank() < 1 || !is_prime(grp.moduli().back()))
    throw Error(ErrorCode::precondition, "group must end with a cyclic factor of prime order");
  const int r = grp.moduli().back();
  if (psi <= 0 || psi >= r) throw Error(ErrorCode::precondition, "psi must be a nontrivial character of Z_r");
  DrgCheck chk = check_distance_regular(g);
  if (!chk.distance_regular()) throw Error(ErrorCode::precondition, "graph is not distance-regular");
  const IntersectionArray& arr = *chk.array;
  Imprimitivity imp = imprimitivity(g, chk.partition, arr);
  const int d = arr.diameter();
  const bool d3 = d == 3 && imp.antipodal && !imp.bipartite;
  const bool d4 = d == 4 && imp.antipodal && imp.bipartite;
  if (!d3 && !d4)
    throw Error(ErrorCode::precondition,
                "needs an antipodal non-bipartite graph of diameter 3 or an antipodal bipartite graph of diameter 4");
  ElementSet h;
  for (int i = 0; i < r; ++i) h.push_back(i);
  if (imp.antipodal_class->elements != h)
    throw Error(ErrorCode::precondition, "antipodal class is not (0, Z_r)");

  LevelSetCertificate cert;
  cert.diameter = d;
  cert.psi = psi;
  cert.m_group = drop_last(grp);
  const AbelianGroup& m = cert.m_group;
  const int mo = m.order();
  cert.r_sets.assign(r, {});
  for (Elem x : g.connection()) cert.r_sets[x % r].push_back(x / r);

  // the R_i partition M \ {0} (diameter 3) or M \ M_1 (diameter 4)
  std::vector<int> hits(mo, 0);
  for (const auto& ri : cert.r_sets)
    for (Elem x : ri) hits[x]++;
  for (Elem x = 0; x < mo; ++x) {
    bool in_m1 = d3 ? x == 0 : imp.bipartition->contains(x * r);
    if (hits[x] != (in_m1 ? 0 : 1)) bug_trap("the sets R_i do not partition the expected part of M");
  }

  AlgebraElement sv = AlgebraElement::from_subset(grp, g.connection());
  std::vector<CycInt> lambda;
  for (Elem x = 0; x < mo; ++x) lambda.push_back(apply_character(x * r + psi, sv));
  if (d3) {
    Eigensystem es = spectrum(g);
    cert.theta_hi = es.values[1].exact;
    cert.theta_lo = es.values[3].exact;
    for (const auto& v : lambda)
      if (!(v == cert.theta_hi) && !(v == cert.theta_lo)) bug_trap("character value outside {theta_1, theta_3}");
  } else {
    std::vector<CycInt> distinct;
    for (const auto& v : lambda)
      if (std::find(distinct.begin(), distinct.end(), v) == distinct.end()) distinct.push_back(v);
    if (distinct.size() != 2) bug_trap("expected exactly the two values +-sqrt(k)");
    if (distinct[0].numeric().real() < 0) std::swap(distinct[0], distinct[1]);
    cert.theta_hi = distinct[0];
    cert.theta_lo = distinct[1];
    if (!(cert.theta_hi * cert.theta_hi == CycInt(1, arr.k())) || !(cert.theta_hi + cert.theta_lo).is_zero())
      bug_trap("character values are not +-sqrt(k)");
  }
  for (Elem x = 0; x < mo; ++x)
    if (lambda[x] == cert.theta_hi) cert.b.push_back(x);

  const CycInt two_delta = cert.theta_hi - cert.theta_lo;
  AlgebraElement bv = AlgebraElement::from_subset(m, cert.b);
  for (Elem l = 0; l < mo; ++l) {
    CycInt lhs = two_delta * apply_character(l, bv);
    CycInt rhs;
    Elem neg = m.neg(l);
    for (int i = 0; i < r; ++i)
      if (contains(cert.r_sets[i], neg)) rhs += CycInt::root(r, static_cast<long long>(psi) * i);
    if (l == 0) rhs -= cert.theta_lo;
    rhs = rhs * static_cast<std::int64_t>(mo);
    cert.residual.push_back(lhs - rhs);
  }
  if (d3) {
    AlgebraElement pw = bv;
    for (int i = 1; i < r; ++i) pw = convolve(pw, bv);
    const CycInt scale = two_delta.pow(r);
    const CycInt neg_lo_r = (-cert.theta_lo).pow(r);
    const std::int64_t mpow = checked_pow(mo, r - 1);
    for (Elem x = 0; x < mo; ++x) {
      CycInt lhs = scale * pw[x];
      CycInt rhs = (neg_lo_r - CycInt(1, 1)) * mpow;
      if (x == 0) rhs += CycInt(1, checked_mul(mpow, mo));
      cert.power_residual.push_back(lhs - rhs);
    }
    if (r == 2) {
      ElementSet negb;
      for (Elem x : cert.b) negb.push_back(m.neg(x));
      if (normalized(negb) != cert.b) bug_trap("level set B is not inverse closed for r = 2");
      ElementSet conn;
      const bool zero_in_b = contains(cert.b, 0);
      for (Elem x = 1; x < mo; ++x)
        if (contains(cert.b, x) != zero_in_b) conn.push_back(x);
      CayleyGraph srg(m, conn);
      if (!srg.connected() || !check_distance_regular(srg).distance_regular())
        bug_trap("level set does not give a strongly regular Cayley graph");
      cert.srg_checked = true;
    }
  }
  if (!cert.valid()) bug_trap("level-set identity has a nonzero residual");
  return cert;
}

}  // namespace drg
