#include "drg/constructions.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "drg/numtheory.hpp"

namespace drg {

namespace {

IntersectionArray srg_array(std::int64_t k, std::int64_t lambda, std::int64_t mu) {
  return IntersectionArray{{k, k - lambda - 1}, {1, mu}};
}

ElementSet complement_in_group(const AbelianGroup& g, const ElementSet& h) {
  ElementSet s;
  for (Elem x = 0; x < g.order(); ++x)
    if (!contains(h, x)) s.push_back(x);
  return s;
}

}  // namespace

Construction complete_graph(const AbelianGroup& g) {
  if (g.order() < 2) throw Error(ErrorCode::precondition, "complete graph needs at least 2 vertices");
  ElementSet s;
  for (Elem x = 1; x < g.order(); ++x) s.push_back(x);
  return {CayleyGraph(g, s), IntersectionArray{{g.order() - 1}, {1}}, Family{Family::Kind::complete}};
}

Construction complete_multipartite(const AbelianGroup& g, const Subgroup& h) {
  if (!(h.parent == g) || !is_subgroup(g, h.elements)) throw Error(ErrorCode::invalid_subgroup, "H is not a subgroup");
  if (h.order() == 1 || h.order() == g.order())
    throw Error(ErrorCode::precondition, "H must be a proper nontrivial subgroup");
  const int m = h.order(), t = g.order() / m;
  return {CayleyGraph(g, complement_in_group(g, h.elements)),
          srg_array(static_cast<std::int64_t>(t - 1) * m, static_cast<std::int64_t>(t - 2) * m,
                    static_cast<std::int64_t>(t - 1) * m),
          Family{Family::Kind::multipartite, t, m, 0}};
}

Construction crown(const AbelianGroup& g, const Subgroup& h, Elem a) {
  if (!(h.parent == g) || !is_subgroup(g, h.elements)) throw Error(ErrorCode::invalid_subgroup, "H is not a subgroup");
  if (2 * h.order() != g.order()) throw Error(ErrorCode::precondition, "crown needs a subgroup of index 2");
  if (a < 0 || a >= g.order() || g.order_of(a) != 2) throw Error(ErrorCode::precondition, "a must be an involution");
  if (h.contains(a)) throw Error(ErrorCode::precondition, "the involution a must lie outside H");
  if (g.order() < 6) throw Error(ErrorCode::precondition, "crown graph needs at least 6 vertices");
  ElementSet s = complement_in_group(g, h.elements);
  s.erase(std::find(s.begin(), s.end(), a));
  const std::int64_t k = g.order() / 2 - 1;
  return {CayleyGraph(g, s), IntersectionArray{{k, k - 1, 1}, {1, k - 1, k}},
          Family{Family::Kind::crown, 0, g.order() / 2, 0}};
}

Construction cycle(const AbelianGroup& g, Elem gen) {
  const int n = g.order();
  if (n < 3) throw Error(ErrorCode::precondition, "cycle needs at least 3 vertices");
  if (gen < 0 || gen >= n || g.order_of(gen) != n) throw Error(ErrorCode::precondition, "cycle needs a generator");
  IntersectionArray a;
  const int d = n / 2;
  for (int i = 0; i < d; ++i) a.b.push_back(i == 0 ? 2 : 1);
  for (int i = 1; i <= d; ++i) a.c.push_back(i == d && n % 2 == 0 ? 2 : 1);
  return {CayleyGraph(g, normalized({gen, g.neg(gen)})), a, Family{Family::Kind::cycle, 0, n, 0}};
}

std::vector<Subgroup> standard_order_p_subgroups(int p, int r) {
  AbelianGroup g({p, p});
  if (r < 0 || r > p + 1) throw Error(ErrorCode::precondition, "at most p+1 subgroups of order p");
  std::vector<Subgroup> out;
  for (int i = 0; i < r; ++i) {
    GroupElement e{{i == 0 ? 1 : i == 1 ? 0 : 1, i == 0 ? 0 : i == 1 ? 1 : i - 1}};
    Elem gen[1] = {g.index_of(e)};
    out.push_back(generated_subgroup(g, gen));
  }
  return out;
}

Construction td_line_graph(int p, const std::vector<Subgroup>& subgroups) {
  if (!is_prime(p) || p == 2) throw Error(ErrorCode::precondition, "p must be an odd prime");
  AbelianGroup g({p, p});
  const int r = static_cast<int>(subgroups.size());
  if (r < 2 || r > p + 1) throw Error(ErrorCode::precondition, "need 2 <= r <= p+1 subgroups");
  ElementSet s;
  for (int i = 0; i < r; ++i) {
    if (!(subgroups[i].parent == g) || subgroups[i].order() != p || !is_subgroup(g, subgroups[i].elements))
      throw Error(ErrorCode::precondition, "each H_i must be a subgroup of order p of Z_p + Z_p");
    for (int j = 0; j < i; ++j)
      if (subgroups[i] == subgroups[j]) throw Error(ErrorCode::precondition, "duplicate subgroup");
    for (Elem x : subgroups[i].elements)
      if (x) s.push_back(x);
  }
  std::int64_t pp = p, rr = r;
  Construction c{CayleyGraph(g, normalized(s)), {}, Family{Family::Kind::subgroup_union, 0, 0, r}};
  if (r == p + 1) {
    c.predicted = IntersectionArray{{pp * pp - 1}, {1}};
    c.family = Family{Family::Kind::complete};
  } else {
    c.predicted = srg_array(rr * (pp - 1), pp + rr * rr - 3 * rr, rr * rr - rr);
    if (r == p) c.family = Family{Family::Kind::multipartite, p, p, 0};
  }
  return c;
}

TransversalDesign td_from_subgroups(int p, const std::vector<Subgroup>& subgroups) {
  Construction lg = td_line_graph(p, subgroups);
  const int r = static_cast<int>(subgroups.size());
  if (r > p) throw Error(ErrorCode::precondition, "transversal design needs r <= p");
  const AbelianGroup& g = lg.graph.group();
  TransversalDesign td;
  td.r = r;
  td.v = p;
  std::map<std::pair<int, Elem>, int> point_id;
  td.groups.resize(r);
  auto coset_rep = [&](int i, Elem x) {
    Elem best = g.order();
    for (Elem h : subgroups[i].elements) best = std::min(best, g.add(x, h));
    return best;
  };
  for (int i = 0; i < r; ++i)
    for (Elem x = 0; x < g.order(); ++x) {
      auto key = std::make_pair(i, coset_rep(i, x));
      if (point_id.emplace(key, static_cast<int>(td.points.size())).second) {
        td.groups[i].push_back(static_cast<int>(td.points.size()));
        td.points.push_back(key);
      }
    }
  td.lines.resize(g.order());
  for (Elem x = 0; x < g.order(); ++x)
    for (int i = 0; i < r; ++i) td.lines[x].push_back(point_id.at({i, coset_rep(i, x)}));

  // axioms
  if (static_cast<int>(td.points.size()) != r * p) bug_trap("transversal design has the wrong number of points");
  for (const auto& grp : td.groups)
    if (static_cast<int>(grp.size()) != p) bug_trap("transversal design group has the wrong size");
  const int npts = static_cast<int>(td.points.size());
  std::vector<int> together(static_cast<size_t>(npts) * npts, 0);
  for (const auto& line : td.lines) {
    std::set<int> groups_hit;
    for (int pt : line) groups_hit.insert(td.points[pt].first);
    if (static_cast<int>(line.size()) != r || static_cast<int>(groups_hit.size()) != r)
      bug_trap("a line does not meet every group exactly once");
    for (int a : line)
      for (int b : line)
        if (a != b) together[static_cast<size_t>(a) * npts + b]++;
  }
  for (int a = 0; a < npts; ++a)
    for (int b = 0; b < npts; ++b) {
      if (a == b) continue;
      int want = td.points[a].first == td.points[b].first ? 0 : 1;
      if (together[static_cast<size_t>(a) * npts + b] != want) bug_trap("pair of points on the wrong number of lines");
    }
  // line graph edge set equals the Cayley graph's
  for (Elem x = 0; x < g.order(); ++x)
    for (Elem y = x + 1; y < g.order(); ++y) {
      bool meet = false;
      for (int i = 0; i < r; ++i) meet = meet || td.lines[x][i] == td.lines[y][i];
      if (meet != lg.graph.adjacent(x, y)) bug_trap("line graph differs from the Cayley graph");
    }
  return td;
}

Construction paley(int q) {
  if (!is_prime(q) || q % 4 != 1) throw Error(ErrorCode::precondition, "Paley graph needs a prime q = 1 (mod 4)");
  AbelianGroup g({q});
  ElementSet s;
  for (long long x = 1; x < q; ++x) s.push_back(static_cast<Elem>(x * x % q));
  const std::int64_t n = q;
  return {CayleyGraph(g, normalized(s)), srg_array((n - 1) / 2, (n - 5) / 4, (n - 1) / 4),
          Family{Family::Kind::paley, 0, q, 0}};
}

Construction hamming2(int q) {
  if (q < 2) throw Error(ErrorCode::invalid_modulus, "q must be at least 2");
  AbelianGroup g({q, q});
  ElementSet s;
  for (int a = 1; a < q; ++a) {
    s.push_back(g.index_of(GroupElement{{a, 0}}));
    s.push_back(g.index_of(GroupElement{{0, a}}));
  }
  const std::int64_t qq = q;
  Family f;
  if (q == 2) f = Family{Family::Kind::multipartite, 2, 2, 0};
  else if (is_prime(q)) f = Family{Family::Kind::subgroup_union, 0, 0, 2};
  return {CayleyGraph(g, normalized(s)), srg_array(2 * (qq - 1), qq - 2, 2), f};
}

namespace {

// When two constructions give the same set the earlier family kind wins,
// matching the order used by detect_family.
void add_entry(std::map<ElementSet, Family>& m, ElementSet s, Family f) {
  auto [it, fresh] = m.emplace(std::move(s), f);
  if (!fresh && static_cast<int>(f.kind) < static_cast<int>(it->second.kind)) it->second = f;
}

std::vector<CatalogEntry> flatten(const std::map<ElementSet, Family>& m) {
  std::vector<CatalogEntry> out;
  for (const auto& [s, f] : m) out.push_back({s, f});
  return out;
}

void add_common(std::map<ElementSet, Family>& m, const AbelianGroup& g) {
  Construction k = complete_graph(g);
  add_entry(m, k.graph.connection(), k.family);
  for (const Subgroup& h : all_subgroups(g)) {
    if (h.order() == 1 || h.order() == g.order()) continue;
    Construction c = complete_multipartite(g, h);
    add_entry(m, c.graph.connection(), c.family);
    if (2 * h.order() == g.order() && g.order() >= 6)
      for (Elem a = 1; a < g.order(); ++a)
        if (g.order_of(a) == 2 && !h.contains(a)) {
          Construction cr = crown(g, h, a);
          add_entry(m, cr.graph.connection(), cr.family);
        }
  }
}

}  // namespace

std::vector<CatalogEntry> expected_catalog(const AbelianGroup& g) {
  if (g.rank() != 2) throw Error(ErrorCode::precondition, "expected catalog needs Z_n + Z_p");
  const int n = g.moduli()[0], p = g.moduli()[1];
  if (!is_prime(p) || p == 2) throw Error(ErrorCode::precondition, "p must be an odd prime");
  if (n % p != 0) throw Error(ErrorCode::precondition, "p must divide n");
  std::map<ElementSet, Family> m;
  add_common(m, g);
  if (n == p) {
    std::vector<Subgroup> lines = subgroups_of_order(g, p);
    const int total = static_cast<int>(lines.size());
    for (unsigned mask = 0; mask < (1u << total); ++mask) {
      int r = __builtin_popcount(mask);
      if (r < 2 || r > p - 1) continue;
      std::vector<Subgroup> pick;
      for (int i = 0; i < total; ++i)
        if (mask >> i & 1) pick.push_back(lines[i]);
      Construction c = td_line_graph(p, pick);
      add_entry(m, c.graph.connection(), c.family);
    }
  }
  return flatten(m);
}

std::vector<CatalogEntry> expected_circulant_catalog(int n) {
  if (n < 2) throw Error(ErrorCode::invalid_modulus, "n must be at least 2");
  AbelianGroup g({n});
  std::map<ElementSet, Family> m;
  add_common(m, g);
  if (n >= 3)
    for (Elem x = 1; x < n; ++x)
      if (std::gcd(x, n) == 1) {
        Construction c = cycle(g, x);
        add_entry(m, c.graph.connection(), c.family);
      }
  if (is_prime(n) && n % 4 == 1) {
    Construction c = paley(n);
    add_entry(m, c.graph.connection(), c.family);
    ElementSet non;
    for (Elem x = 1; x < n; ++x)
      if (!contains(c.graph.connection(), x)) non.push_back(x);
    add_entry(m, non, c.family);
  }
  return flatten(m);
}

}  // namespace drg
