#include "drg/cayley.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <regex>

#include "drg/numtheory.hpp"

namespace drg {

CayleyGraph::CayleyGraph(AbelianGroup g, ElementSet s) : g_(std::move(g)), s_(normalized(std::move(s))) {
  for (Elem x : s_) {
    if (x < 0 || x >= g_.order()) throw Error(ErrorCode::invalid_element, "connection set element outside the group");
    if (x == 0) throw Error(ErrorCode::identity_in_set, "connection set contains the identity");
  }
  for (Elem x : s_)
    if (!contains(s_, g_.neg(x)))
      throw Error(ErrorCode::not_inverse_closed,
                  "connection set is not inverse closed: missing -(" + g_.format_element(x) + ")");
}

bool CayleyGraph::adjacent(Elem x, Elem y) const { return contains(s_, g_.sub(y, x)); }

bool CayleyGraph::connected() const { return generated_subgroup(g_, s_).order() == g_.order(); }

DistancePartition distance_partition(const CayleyGraph& g) {
  const AbelianGroup& grp = g.group();
  std::vector<int> dist(grp.order(), -1);
  dist[0] = 0;
  DistancePartition p;
  p.classes.push_back({0});
  int reached = 1;
  while (true) {
    ElementSet next;
    for (Elem x : p.classes.back())
      for (Elem s : g.connection()) {
        Elem y = grp.add(x, s);
        if (dist[y] < 0) {
          dist[y] = static_cast<int>(p.classes.size());
          next.push_back(y);
        }
      }
    if (next.empty()) break;
    reached += static_cast<int>(next.size());
    std::sort(next.begin(), next.end());
    p.classes.push_back(std::move(next));
  }
  if (reached != grp.order()) throw Error(ErrorCode::not_connected, "Cayley graph is not connected");
  return p;
}

std::vector<std::int64_t> IntersectionArray::class_sizes() const {
  std::vector<std::int64_t> k{1};
  for (int i = 0; i < diameter(); ++i) k.push_back(k.back() * b[i] / c[i]);
  return k;
}

std::string IntersectionArray::to_string() const {
  std::string out = "{";
  for (size_t i = 0; i < b.size(); ++i) out += (i ? "," : "") + std::to_string(b[i]);
  out += ";";
  for (size_t i = 0; i < c.size(); ++i) out += (i ? "," : "") + std::to_string(c[i]);
  return out + "}";
}

DrgCheck check_distance_regular(const CayleyGraph& g) {
  DrgCheck out;
  out.partition = distance_partition(g);
  const auto& cls = out.partition.classes;
  const AbelianGroup& grp = g.group();
  const int d = out.partition.diameter();
  std::vector<int> layer(grp.order());
  for (int i = 0; i <= d; ++i)
    for (Elem x : cls[i]) layer[x] = i;

  AlgebraElement conn = AlgebraElement::from_subset(grp, g.connection());
  IntersectionArray a;
  for (int i = 0; i <= d; ++i) {
    AlgebraElement prod = convolve(AlgebraElement::from_subset(grp, cls[i]), conn);
    // expected value per neighbouring layer i-1, i, i+1
    std::int64_t val[3] = {-1, -1, -1};
    for (Elem y = 0; y < grp.order(); ++y) {
      int off = layer[y] - i + 1;
      if (off < 0 || off > 2) {
        if (prod[y] != 0) bug_trap("product of distance layers reaches a non-adjacent layer");
        continue;
      }
      if (val[off] < 0) {
        val[off] = prod[y];
      } else if (val[off] != prod[y]) {
        out.failed_layer = i;
        out.witness = "coefficient of (" + grp.format_element(y) + ") in S_" + std::to_string(i) + "*S is " +
                      std::to_string(prod[y]) + ", expected " + std::to_string(val[off]);
        return out;
      }
    }
    if (i > 0) a.b.push_back(val[0]);
    if (i < d) a.c.push_back(val[2]);
  }
  // the coefficient of S_i S on y in S_{i-1} counts neighbours of y inside
  // S_i, i.e. b_{i-1}; on S_{i+1} it is c_{i+1}
  const IntersectionArray& arr = a;
  if (d >= 1 && (arr.c[0] != 1 || arr.b[0] != g.valency())) bug_trap("c_1 != 1 or b_0 != k");
  auto ks = arr.class_sizes();
  for (int i = 0; i <= d; ++i)
    if (ks[i] != static_cast<std::int64_t>(cls[i].size())) bug_trap("k_i mismatch with layer sizes");
  for (int i = 0; i < d; ++i)
    if (ks[i] * arr.b[i] != ks[i + 1] * arr.c[i]) bug_trap("k_i b_i != k_{i+1} c_{i+1}");
  out.array = arr;
  return out;
}

std::optional<IntersectionArray> brute_force_distance_regular(const CayleyGraph& g, bool parallel) {
  const AbelianGroup& grp = g.group();
  const int n = grp.order();
  const auto& conn = g.connection();
  // per source vertex: b/a/c tables or failure
  std::vector<std::vector<std::int64_t>> tables(n);
  std::vector<char> ok(n, 1);
  std::vector<int> diam(n, 0);
#pragma omp parallel for schedule(static) if (parallel)
  for (int x = 0; x < n; ++x) {
    std::vector<int> dist(n, -1);
    std::vector<int> queue{x};
    dist[x] = 0;
    for (size_t h = 0; h < queue.size(); ++h)
      for (Elem s : conn) {
        int y = grp.add(queue[h], s);
        if (dist[y] < 0) {
          dist[y] = dist[queue[h]] + 1;
          queue.push_back(y);
        }
      }
    if (static_cast<int>(queue.size()) != n) {
      ok[x] = 0;
      continue;
    }
    int d = dist[queue.back()];
    diam[x] = d;
    std::vector<std::int64_t> t(3 * (d + 1), -1);  // (c_i, a_i, b_i) per i
    for (int y = 0; y < n && ok[x]; ++y) {
      std::int64_t cnt[3] = {0, 0, 0};
      for (Elem s : conn) {
        int z = grp.add(y, s);
        int off = dist[z] - dist[y] + 1;
        cnt[off]++;
      }
      int i = dist[y];
      for (int j = 0; j < 3; ++j) {
        auto& slot = t[3 * i + j];
        if (slot < 0)
          slot = cnt[j];
        else if (slot != cnt[j])
          ok[x] = 0;
      }
    }
    tables[x] = std::move(t);
  }
  for (int x = 0; x < n; ++x)
    if (!ok[x] || diam[x] != diam[0] || tables[x] != tables[0]) return std::nullopt;
  IntersectionArray a;
  const int d = diam[0];
  for (int i = 0; i < d; ++i) a.b.push_back(tables[0][3 * i + 2]);
  for (int i = 1; i <= d; ++i) a.c.push_back(tables[0][3 * i]);
  return a;
}

Eigensystem spectrum(const CayleyGraph& g) {
  const AbelianGroup& grp = g.group();
  AlgebraElement conn = AlgebraElement::from_subset(grp, g.connection());
  std::map<CycInt, ElementSet> groups;
  for (Elem chi = 0; chi < grp.order(); ++chi) groups[apply_character(chi, conn)].push_back(chi);
  Eigensystem e;
  for (auto& [val, set] : groups) {
    Eigenvalue ev;
    ev.exact = val;
    auto z = val.numeric();
    if (std::fabs(z.imag()) > 1e-9L) bug_trap("non-real eigenvalue of an undirected Cayley graph");
    ev.numeric = z.real();
    ev.multiplicity = static_cast<int>(set.size());
    ev.level_set = set;
    e.values.push_back(std::move(ev));
  }
  std::sort(e.values.begin(), e.values.end(),
            [](const Eigenvalue& a, const Eigenvalue& b) { return a.numeric > b.numeric; });
  for (size_t i = 1; i < e.values.size(); ++i)
    if (e.values[i - 1].numeric - e.values[i].numeric < kSeparationGate)
      throw Error(ErrorCode::numeric_separation_failure,
                  "eigenvalues " + e.values[i - 1].exact.to_string() + " and " + e.values[i].exact.to_string() +
                      " are closer than the separation gate");
  return e;
}

Imprimitivity imprimitivity(const CayleyGraph& g, const DistancePartition& part, const IntersectionArray& a) {
  Imprimitivity imp;
  const int d = a.diameter();
  const AbelianGroup& grp = g.group();
  imp.bipartite = true;
  for (int i = 0; i <= d; ++i)
    if (a.a_at(i) != 0) imp.bipartite = false;
  if (d >= 2) {
    imp.antipodal = true;
    for (int i = 0; i <= d; ++i)
      if (i != d / 2 && a.b_at(i) != a.c_at(d - i)) imp.antipodal = false;
  }
  if (imp.antipodal) {
    ElementSet h = part.classes[0];
    h.insert(h.end(), part.classes[d].begin(), part.classes[d].end());
    h = normalized(std::move(h));
    if (!is_subgroup(grp, h)) bug_trap("antipodal class S_0 + S_d is not a subgroup");
    imp.antipodal_class = as_subgroup(grp, h);
  }
  if (imp.bipartite) {
    ElementSet h;
    for (int i = 0; i <= d; i += 2) h.insert(h.end(), part.classes[i].begin(), part.classes[i].end());
    h = normalized(std::move(h));
    if (!is_subgroup(grp, h) || 2 * static_cast<int>(h.size()) != grp.order())
      bug_trap("even-distance elements of a bipartite Cayley graph do not form an index-2 subgroup");
    imp.bipartition = as_subgroup(grp, h);
  }
  return imp;
}

namespace {

GraphOverQuotient quotient_graph(const CayleyGraph& g, const Subgroup& h) {
  Quotient q = quotient_group(g.group(), h);
  ElementSet s;
  for (Elem x : g.connection()) s.push_back(q.projection[x]);
  s = normalized(std::move(s));
  if (contains(s, 0)) throw Error(ErrorCode::precondition, "connection set meets the subgroup");
  return GraphOverQuotient{CayleyGraph(q.group, s), q};
}

}  // namespace

GraphOverQuotient antipodal_quotient(const CayleyGraph& g) {
  DrgCheck chk = check_distance_regular(g);
  if (!chk.distance_regular()) throw Error(ErrorCode::not_distance_regular, chk.witness);
  Imprimitivity imp = imprimitivity(g, chk.partition, *chk.array);
  if (!imp.antipodal) throw Error(ErrorCode::not_antipodal, "graph is not antipodal");
  GraphOverQuotient out = quotient_graph(g, *imp.antipodal_class);
  if (!check_distance_regular(out.graph).distance_regular())
    bug_trap("antipodal quotient is not distance-regular");
  return out;
}

GraphOverSubgroup halved_graph(const CayleyGraph& g) {
  DrgCheck chk = check_distance_regular(g);
  if (!chk.distance_regular()) throw Error(ErrorCode::not_distance_regular, chk.witness);
  Imprimitivity imp = imprimitivity(g, chk.partition, *chk.array);
  if (!imp.bipartite) throw Error(ErrorCode::not_bipartite, "graph is not bipartite");
  Realization r = realize_subgroup(*imp.bipartition);
  ElementSet s;
  if (chk.partition.diameter() >= 2)
    for (int i = 0; i < r.group.order(); ++i)
      if (contains(chk.partition.classes[2], r.embedding[i])) s.push_back(i);
  CayleyGraph halved(r.group, s);
  if (!check_distance_regular(halved).distance_regular()) bug_trap("halved graph is not distance-regular");
  return GraphOverSubgroup{halved, r};
}

QuotientPrediction quotient_by_subgroup(const CayleyGraph& g, const Subgroup& k) {
  DrgCheck chk = check_distance_regular(g);
  if (!chk.distance_regular()) throw Error(ErrorCode::not_distance_regular, chk.witness);
  const IntersectionArray& a = *chk.array;
  Imprimitivity imp = imprimitivity(g, chk.partition, a);
  if (!imp.antipodal || imp.bipartite || a.diameter() != 3)
    throw Error(ErrorCode::precondition, "needs an antipodal non-bipartite graph of diameter 3");
  const Subgroup& h = *imp.antipodal_class;
  for (Elem x : k.elements)
    if (!h.contains(x)) throw Error(ErrorCode::precondition, "subgroup is not inside the antipodal class");
  if (!is_subgroup(g.group(), k.elements)) throw Error(ErrorCode::invalid_subgroup, "not a subgroup");
  const std::int64_t kk = a.k(), mu = a.c_at(2), r = h.order(), ks = k.order();
  QuotientPrediction out{quotient_graph(g, k), {}, {}};
  if (ks == r) {
    out.predicted.b = {kk};
    out.predicted.c = {1};
  } else {
    out.predicted.b = {kk, mu * ks * (r / ks - 1), 1};
    out.predicted.c = {1, mu * ks, kk};
  }
  DrgCheck qc = check_distance_regular(out.quotient.graph);
  if (!qc.distance_regular()) bug_trap("quotient by an antipodal subgroup is not distance-regular");
  out.actual = *qc.array;
  if (out.actual != out.predicted)
    bug_trap("quotient array " + out.actual.to_string() + " differs from prediction " + out.predicted.to_string());
  return out;
}

bool is_integral(const Eigensystem& e) {
  for (const auto& v : e.values)
    if (!v.exact.is_rational_integer()) return false;
  return true;
}

bool in_atom_algebra(const AbelianGroup& g, const ElementSet& s) {
  for (const ElementSet& atom : atoms(g)) {
    bool in = contains(s, atom[0]);
    for (Elem x : atom)
      if (contains(s, x) != in) return false;
  }
  return true;
}

int delsarte_bound(const CayleyGraph& g, const Eigensystem& e) {
  const Eigenvalue& low = e.values.back();
  if (!(low.numeric < 0)) throw Error(ErrorCode::precondition, "smallest eigenvalue is not negative");
  const std::int64_t k = g.valency();
  if (low.exact.is_rational_integer()) {
    // floor(1 + k / |theta|)
    std::int64_t t = -low.exact.rational_value();
    return static_cast<int>(1 + k / t);
  }
  return static_cast<int>(std::floor(1.0L - k / low.numeric + 1e-12L));
}

std::string Family::label() const {
  switch (kind) {
    case Kind::complete: return "complete";
    case Kind::multipartite: return "complete-multipartite(" + std::to_string(t) + "," + std::to_string(m) + ")";
    case Kind::crown: return "crown(" + std::to_string(m) + ")";
    case Kind::cycle: return "cycle(" + std::to_string(m) + ")";
    case Kind::subgroup_union: return "union-of-order-p-subgroups(" + std::to_string(r) + ")";
    case Kind::paley: return "paley(" + std::to_string(m) + ")";
    case Kind::none: return "none";
  }
  return "none";
}

Family parse_family(const std::string& label) {
  static const std::regex re(R"(([a-z-]+)(?:\((\d+)(?:,(\d+))?\))?)");
  std::smatch mt;
  if (!std::regex_match(label, mt, re)) throw Error(ErrorCode::usage, "unknown family label '" + label + "'");
  const std::string name = mt[1];
  int x = mt[2].matched ? std::stoi(mt[2]) : 0;
  int y = mt[3].matched ? std::stoi(mt[3]) : 0;
  Family f;
  if (name == "complete") f.kind = Family::Kind::complete;
  else if (name == "complete-multipartite") f = {Family::Kind::multipartite, x, y, 0};
  else if (name == "crown") f = {Family::Kind::crown, 0, x, 0};
  else if (name == "cycle") f = {Family::Kind::cycle, 0, x, 0};
  else if (name == "union-of-order-p-subgroups") f = {Family::Kind::subgroup_union, 0, 0, x};
  else if (name == "paley") f = {Family::Kind::paley, 0, x, 0};
  else if (name == "none") f.kind = Family::Kind::none;
  else throw Error(ErrorCode::usage, "unknown family label '" + label + "'");
  return f;
}

Family detect_family(const CayleyGraph& g, const DistancePartition& part, const IntersectionArray& a,
                     const Imprimitivity& imp) {
  const AbelianGroup& grp = g.group();
  const int n = grp.order();
  const ElementSet& s = g.connection();
  Family f;
  if (g.valency() == n - 1) {
    f.kind = Family::Kind::complete;
    return f;
  }
  ElementSet rest;
  for (Elem x = 0; x < n; ++x)
    if (!contains(s, x)) rest.push_back(x);
  if (rest.size() > 1 && is_subgroup(grp, rest)) {
    f = {Family::Kind::multipartite, n / static_cast<int>(rest.size()), static_cast<int>(rest.size()), 0};
    return f;
  }
  if (imp.bipartite && imp.antipodal && a.diameter() == 3 && part.classes[3].size() == 1) {
    f = {Family::Kind::crown, 0, n / 2, 0};
    return f;
  }
  if (g.valency() == 2) {
    f = {Family::Kind::cycle, 0, n, 0};
    return f;
  }
  const int p = grp.exponent();
  if (is_prime(p) && n == p * p) {
    // S + 0 as a union of order-p subgroups: every cyclic subgroup <x>, x in S,
    // must lie inside S + 0
    std::vector<ElementSet> lines;
    bool ok = true;
    for (Elem x : s) {
      Elem gen[1] = {x};
      Subgroup c = generated_subgroup(grp, gen);
      for (Elem y : c.elements)
        if (y != 0 && !contains(s, y)) ok = false;
      if (std::find(lines.begin(), lines.end(), c.elements) == lines.end()) lines.push_back(c.elements);
    }
    if (ok) {
      f = {Family::Kind::subgroup_union, 0, 0, static_cast<int>(lines.size())};
      return f;
    }
  }
  if (grp.rank() == 1 && is_prime(n) && n % 4 == 1) {
    ElementSet squares;
    for (long long x = 1; x < n; ++x) squares.push_back(static_cast<Elem>(x * x % n));
    squares = normalized(std::move(squares));
    ElementSet non;
    for (Elem x = 1; x < n; ++x)
      if (!contains(squares, x)) non.push_back(x);
    if (s == squares || s == non) {
      f = {Family::Kind::paley, 0, n, 0};
      return f;
    }
  }
  return f;
}

}  // namespace drg
