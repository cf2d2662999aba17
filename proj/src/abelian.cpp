#include "drg/abelian.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "drg/numtheory.hpp"

namespace drg {

struct AbelianGroup::Data {
  std::vector<int> moduli;
  std::vector<int> strides;
  std::vector<int> char_weight;  // exponent / n_i
  int order = 1;
  int exponent = 1;
  std::vector<int> coords;  // order * rank, row-major
  std::vector<Elem> neg;
};

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  size_t start = 0;
  while (true) {
    size_t pos = text.find(sep, start);
    out.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

long long parse_int(std::string_view s, ErrorCode code) {
  s = trim(s);
  long long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw Error(code, "not an integer: '" + std::string(s) + "'");
  return v;
}

}  // namespace

AbelianGroup::AbelianGroup() : AbelianGroup(std::vector<int>{}) {}

AbelianGroup::AbelianGroup(std::vector<int> moduli) {
  auto d = std::make_shared<Data>();
  for (int n : moduli)
    if (n < 2) throw Error(ErrorCode::invalid_modulus, "modulus " + std::to_string(n) + " < 2");
  d->moduli = std::move(moduli);
  const int r = static_cast<int>(d->moduli.size());
  long long order = 1;
  long long exponent = 1;
  for (int n : d->moduli) {
    order *= n;
    exponent = std::lcm(exponent, static_cast<long long>(n));
    if (order > (1 << 22)) throw Error(ErrorCode::size_limit_exceeded, "group order too large");
  }
  d->order = static_cast<int>(order);
  d->exponent = static_cast<int>(exponent);
  d->strides.assign(r, 1);
  for (int i = r - 2; i >= 0; --i) d->strides[i] = d->strides[i + 1] * d->moduli[i + 1];
  for (int n : d->moduli) d->char_weight.push_back(d->exponent / n);
  d->coords.resize(static_cast<size_t>(d->order) * r);
  d->neg.resize(d->order);
  for (int x = 0; x < d->order; ++x) {
    int rest = x;
    Elem neg = 0;
    for (int i = 0; i < r; ++i) {
      int c = rest / d->strides[i];
      rest %= d->strides[i];
      d->coords[static_cast<size_t>(x) * r + i] = c;
      neg += ((d->moduli[i] - c) % d->moduli[i]) * d->strides[i];
    }
    d->neg[x] = neg;
  }
  d_ = std::move(d);
}

AbelianGroup AbelianGroup::parse(std::string_view spec) {
  spec = trim(spec);
  if (spec.empty()) return AbelianGroup();
  std::vector<int> moduli;
  for (auto part : split(spec, ',')) {
    long long v = parse_int(part, ErrorCode::usage);
    if (v < 2) throw Error(ErrorCode::invalid_modulus, "modulus " + std::to_string(v) + " < 2");
    if (v > (1 << 22)) throw Error(ErrorCode::size_limit_exceeded, "modulus too large");
    moduli.push_back(static_cast<int>(v));
  }
  return AbelianGroup(std::move(moduli));
}

const std::vector<int>& AbelianGroup::moduli() const { return d_->moduli; }
int AbelianGroup::rank() const { return static_cast<int>(d_->moduli.size()); }
int AbelianGroup::order() const { return d_->order; }
int AbelianGroup::exponent() const { return d_->exponent; }

std::string AbelianGroup::to_string() const {
  std::string out;
  for (size_t i = 0; i < d_->moduli.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(d_->moduli[i]);
  }
  return out;
}

void AbelianGroup::check(const GroupElement& g) const {
  if (static_cast<int>(g.coords.size()) != rank())
    throw Error(ErrorCode::group_mismatch, "element arity does not match group rank");
  for (int i = 0; i < rank(); ++i)
    if (g.coords[i] < 0 || g.coords[i] >= d_->moduli[i])
      throw Error(ErrorCode::group_mismatch, "coordinate out of range for this group");
}

Elem AbelianGroup::index_of(const GroupElement& g) const {
  check(g);
  Elem x = 0;
  for (int i = 0; i < rank(); ++i) x += g.coords[i] * d_->strides[i];
  return x;
}

GroupElement AbelianGroup::element(Elem x) const {
  GroupElement g;
  g.coords.assign(d_->coords.begin() + static_cast<size_t>(x) * rank(),
                  d_->coords.begin() + static_cast<size_t>(x + 1) * rank());
  return g;
}

int AbelianGroup::coord(Elem x, int i) const { return d_->coords[static_cast<size_t>(x) * rank() + i]; }

Elem AbelianGroup::add(Elem a, Elem b) const {
  const int r = rank();
  const int* ca = &d_->coords[static_cast<size_t>(a) * r];
  const int* cb = &d_->coords[static_cast<size_t>(b) * r];
  Elem out = 0;
  for (int i = 0; i < r; ++i) {
    int s = ca[i] + cb[i];
    if (s >= d_->moduli[i]) s -= d_->moduli[i];
    out += s * d_->strides[i];
  }
  return out;
}

Elem AbelianGroup::neg(Elem a) const { return d_->neg[a]; }
Elem AbelianGroup::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem AbelianGroup::mul(long long k, Elem a) const {
  const int r = rank();
  Elem out = 0;
  for (int i = 0; i < r; ++i) {
    long long c = mod(k % d_->moduli[i] * coord(a, i), d_->moduli[i]);
    out += static_cast<Elem>(c) * d_->strides[i];
  }
  return out;
}

int AbelianGroup::order_of(Elem a) const {
  long long o = 1;
  for (int i = 0; i < rank(); ++i) {
    int n = d_->moduli[i];
    o = std::lcm(o, static_cast<long long>(n / std::gcd(n, coord(a, i))));
  }
  return static_cast<int>(o);
}

GroupElement AbelianGroup::add(const GroupElement& a, const GroupElement& b) const {
  return element(add(index_of(a), index_of(b)));
}
GroupElement AbelianGroup::neg(const GroupElement& a) const { return element(neg(index_of(a))); }
int AbelianGroup::order_of(const GroupElement& a) const { return order_of(index_of(a)); }

int AbelianGroup::character_exponent(Elem g, Elem x) const {
  const int r = rank();
  long long e = 0;
  for (int i = 0; i < r; ++i)
    e += static_cast<long long>(d_->char_weight[i]) * coord(g, i) * coord(x, i);
  return static_cast<int>(e % d_->exponent);
}

Elem AbelianGroup::parse_element(std::string_view text) const {
  text = trim(text);
  GroupElement g;
  if (rank() == 0) {
    if (!text.empty() && text != "0") throw Error(ErrorCode::invalid_element, "trivial group has only 0");
    return 0;
  }
  for (auto part : split(text, ',')) {
    long long v = parse_int(part, ErrorCode::invalid_element);
    g.coords.push_back(static_cast<int>(v));
  }
  if (static_cast<int>(g.coords.size()) != rank())
    throw Error(ErrorCode::invalid_element, "element '" + std::string(text) + "' has wrong arity");
  for (int i = 0; i < rank(); ++i)
    if (g.coords[i] < 0 || g.coords[i] >= d_->moduli[i])
      throw Error(ErrorCode::invalid_element, "residue out of range in '" + std::string(text) + "'");
  return index_of(g);
}

std::string AbelianGroup::format_element(Elem x) const {
  if (rank() == 0) return "0";
  std::string out;
  for (int i = 0; i < rank(); ++i) {
    if (i) out += ',';
    out += std::to_string(coord(x, i));
  }
  return out;
}

ElementSet AbelianGroup::parse_set(std::string_view text) const {
  text = trim(text);
  ElementSet out;
  if (text.empty()) return out;
  for (auto part : split(text, ';')) {
    if (trim(part).empty()) continue;
    out.push_back(parse_element(part));
  }
  return normalized(std::move(out));
}

std::string AbelianGroup::format_set(std::span<const Elem> s) const {
  std::string out;
  for (size_t i = 0; i < s.size(); ++i) {
    if (i) out += ';';
    out += format_element(s[i]);
  }
  return out;
}

ElementSet normalized(ElementSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

bool contains(std::span<const Elem> sorted, Elem x) { return std::binary_search(sorted.begin(), sorted.end(), x); }

bool Subgroup::contains(Elem x) const { return drg::contains(elements, x); }

Subgroup generated_subgroup(const AbelianGroup& g, std::span<const Elem> gens) {
  std::vector<char> seen(g.order(), 0);
  std::vector<Elem> members{0};
  seen[0] = 1;
  for (size_t head = 0; head < members.size(); ++head) {
    for (Elem s : gens) {
      if (s < 0 || s >= g.order()) throw Error(ErrorCode::invalid_element, "generator outside the group");
      Elem y = g.add(members[head], s);
      if (!seen[y]) {
        seen[y] = 1;
        members.push_back(y);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return Subgroup{g, std::move(members), std::vector<Elem>(gens.begin(), gens.end())};
}

std::vector<Subgroup> all_subgroups(const AbelianGroup& g) {
  std::map<ElementSet, Subgroup> found;
  std::vector<Subgroup> cyclic;
  for (Elem x = 0; x < g.order(); ++x) {
    Elem gen[1] = {x};
    Subgroup c = generated_subgroup(g, gen);
    if (found.emplace(c.elements, c).second) cyclic.push_back(c);
  }
  std::vector<Subgroup> work = cyclic;
  for (size_t i = 0; i < work.size(); ++i) {
    for (const Subgroup& c : cyclic) {
      if (std::includes(work[i].elements.begin(), work[i].elements.end(), c.elements.begin(), c.elements.end()))
        continue;
      std::vector<Elem> gens = work[i].generators;
      gens.insert(gens.end(), c.generators.begin(), c.generators.end());
      Subgroup j = generated_subgroup(g, gens);
      if (found.emplace(j.elements, j).second) work.push_back(j);
    }
  }
  std::vector<Subgroup> out;
  for (auto& [k, v] : found) out.push_back(v);
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements < b.elements;
  });
  return out;
}

std::vector<Subgroup> subgroups_of_order(const AbelianGroup& g, int k) {
  if (k <= 0 || g.order() % k != 0)
    throw Error(ErrorCode::no_such_order, std::to_string(k) + " does not divide " + std::to_string(g.order()));
  std::vector<Subgroup> out;
  for (auto& h : all_subgroups(g))
    if (h.order() == k) out.push_back(std::move(h));
  return out;
}

bool is_subgroup(const AbelianGroup& g, std::span<const Elem> s) {
  if (s.empty() || !contains(s, 0)) return false;
  for (Elem a : s) {
    if (a < 0 || a >= g.order()) return false;
    if (!contains(s, g.neg(a))) return false;
    for (Elem b : s)
      if (!contains(s, g.add(a, b))) return false;
  }
  return true;
}

Subgroup as_subgroup(const AbelianGroup& g, ElementSet s) {
  s = normalized(std::move(s));
  if (!is_subgroup(g, s)) throw Error(ErrorCode::invalid_subgroup, "set is not a subgroup");
  Subgroup h{g, s, {}};
  // a small generating set: greedily add elements outside the current span
  std::vector<char> in(g.order(), 0);
  in[0] = 1;
  size_t covered = 1;
  for (Elem x : s) {
    if (in[x]) continue;
    h.generators.push_back(x);
    Subgroup span = generated_subgroup(g, h.generators);
    for (Elem y : span.elements) in[y] = 1;
    covered = span.elements.size();
    if (covered == s.size()) break;
  }
  return h;
}

namespace {

// Decomposes an abstract abelian group (elements 0..n-1, 0 the identity) into
// cyclic factors: returns invariant factors d_1 >= d_2 >= ... and basis
// elements b_i of order d_i with the span of distinct size prod d_i.
struct Decomposition {
  std::vector<int> moduli;
  std::vector<int> basis;
};

Decomposition decompose(int n, const std::function<int(int, int)>& add) {
  std::vector<int> ord(n, 1);
  for (int x = 1; x < n; ++x) {
    int y = x, k = 1;
    while (y != 0) {
      y = add(y, x);
      ++k;
    }
    ord[x] = k;
  }
  // per prime, exponents of the cyclic factors from counts of p^j-torsion
  std::vector<std::vector<int>> prime_parts;  // list of p^e, descending
  for (long long p : prime_factors(n)) {
    std::vector<int> s;  // s[j-1] = #factors with exponent >= j
    long long prev = 1;
    for (long long pj = p;; pj *= p) {
      long long c = 0;
      for (int x = 0; x < n; ++x)
        if (pj % ord[x] == 0) ++c;
      long long ratio = c / prev;
      if (ratio == 1) break;
      int t = 0;
      while (ratio > 1) {
        ratio /= p;
        ++t;
      }
      s.push_back(t);
      prev = c;
    }
    std::vector<int> powers;
    for (int i = 1; !s.empty() && i <= s[0]; ++i) {
      int e = 0;
      for (int sj : s)
        if (sj >= i) ++e;
      int pe = 1;
      for (int k = 0; k < e; ++k) pe *= static_cast<int>(p);
      powers.push_back(pe);
    }
    prime_parts.push_back(powers);
  }
  Decomposition out;
  for (size_t i = 0;; ++i) {
    int d = 1;
    bool any = false;
    for (auto& pp : prime_parts)
      if (i < pp.size()) {
        d *= pp[i];
        any = true;
      }
    if (!any) break;
    out.moduli.push_back(d);
  }
  // backtracking basis search
  const int t = static_cast<int>(out.moduli.size());
  std::vector<int> chosen;
  std::function<bool(const std::vector<char>&)> search = [&](const std::vector<char>& span) -> bool {
    const int i = static_cast<int>(chosen.size());
    if (i == t) return true;
    const int d = out.moduli[i];
    for (int x = 1; x < n; ++x) {
      if (ord[x] != d) continue;
      bool trivial_meet = true;
      for (int y = x; y != 0; y = add(y, x))
        if (span[y]) {
          trivial_meet = false;
          break;
        }
      if (!trivial_meet) continue;
      std::vector<char> next(span);
      std::vector<int> members;
      for (int z = 0; z < n; ++z)
        if (span[z]) members.push_back(z);
      for (int z : members)
        for (int y = add(z, x); y != z; y = add(y, x)) next[y] = 1;
      chosen.push_back(x);
      if (search(next)) return true;
      chosen.pop_back();
    }
    return false;
  };
  std::vector<char> span(n, 0);
  span[0] = 1;
  if (!search(span)) bug_trap("no basis found for a finite abelian group");
  out.basis = chosen;
  return out;
}

// Maps each element of the realized group (lexicographic order over
// `moduli`) to the abstract element sum c_i * basis_i.
std::vector<int> realize_table(const Decomposition& dec, int n, const std::function<int(int, int)>& add) {
  AbelianGroup g(dec.moduli);
  std::vector<int> table(g.order(), 0);
  const int r = g.rank();
  std::vector<int> strides(r, 1);
  for (int i = r - 2; i >= 0; --i) strides[i] = strides[i + 1] * dec.moduli[i + 1];
  for (int x = 1; x < g.order(); ++x) {
    int last = r - 1;
    while (g.coord(x, last) == 0) --last;
    table[x] = add(table[x - strides[last]], dec.basis[last]);
  }
  if (static_cast<int>(table.size()) != n) bug_trap("realization has the wrong order");
  return table;
}

}  // namespace

Realization realize_subgroup(const Subgroup& h) {
  const AbelianGroup& g = h.parent;
  std::vector<int> pos(g.order(), -1);
  for (size_t i = 0; i < h.elements.size(); ++i) pos[h.elements[i]] = static_cast<int>(i);
  auto add = [&](int a, int b) { return pos[g.add(h.elements[a], h.elements[b])]; };
  const int n = h.order();
  Decomposition dec = decompose(n, add);
  std::vector<int> table = realize_table(dec, n, add);
  Realization out{AbelianGroup(dec.moduli), {}};
  out.embedding.resize(n);
  for (int x = 0; x < n; ++x) out.embedding[x] = h.elements[table[x]];
  return out;
}

Quotient quotient_group(const AbelianGroup& g, const Subgroup& h) {
  if (!(h.parent == g) || !is_subgroup(g, h.elements))
    throw Error(ErrorCode::invalid_subgroup, "not a subgroup of this group");
  std::vector<int> coset(g.order(), -1);
  std::vector<Elem> reps;
  for (Elem x = 0; x < g.order(); ++x) {
    if (coset[x] >= 0) continue;
    int id = static_cast<int>(reps.size());
    reps.push_back(x);
    for (Elem y : h.elements) coset[g.add(x, y)] = id;
  }
  const int n = static_cast<int>(reps.size());
  auto add = [&](int a, int b) { return coset[g.add(reps[a], reps[b])]; };
  Decomposition dec = decompose(n, add);
  std::vector<int> table = realize_table(dec, n, add);
  Quotient out{AbelianGroup(dec.moduli), {}, {}};
  std::vector<Elem> coset_to_q(n);
  for (int x = 0; x < n; ++x) coset_to_q[table[x]] = x;
  out.projection.resize(g.order());
  for (Elem x = 0; x < g.order(); ++x) out.projection[x] = coset_to_q[coset[x]];
  out.lift.resize(n);
  for (int c = 0; c < n; ++c) out.lift[coset_to_q[c]] = reps[c];
  return out;
}

std::vector<ElementSet> atoms(const AbelianGroup& g) {
  std::vector<char> done(g.order(), 0);
  std::vector<ElementSet> out;
  for (Elem x = 0; x < g.order(); ++x) {
    if (done[x]) continue;
    int o = g.order_of(x);
    ElementSet cls;
    for (int u = 1; u <= o; ++u) {
      if (std::gcd(u, o) != 1) continue;
      Elem y = g.mul(u, x);
      if (!done[y]) {
        done[y] = 1;
        cls.push_back(y);
      }
    }
    std::sort(cls.begin(), cls.end());
    out.push_back(std::move(cls));
  }
  return out;
}

}  // namespace drg
