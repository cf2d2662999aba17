#include <doctest.h>

#include "drg/abelian.hpp"
#include "drg/group_algebra.hpp"
#include "oracles.hpp"

using namespace drg;

namespace {

Elem el(const AbelianGroup& g, std::vector<int> c) { return g.index_of(GroupElement{std::move(c)}); }

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::internal_inconsistency;
}

}  // namespace

TEST_CASE("group construction") {
  AbelianGroup g = AbelianGroup::parse("6,3");
  CHECK(g.order() == 18);
  CHECK(g.exponent() == 6);
  CHECK(AbelianGroup({3, 3}).exponent() == 3);
  CHECK(AbelianGroup({5}).order() == 5);
  CHECK(AbelianGroup().order() == 1);
  CHECK(AbelianGroup::parse("").order() == 1);
  CHECK(code_of([] { AbelianGroup({1}); }) == ErrorCode::invalid_modulus);
  CHECK(code_of([] { AbelianGroup::parse("4,x"); }) == ErrorCode::usage);
}

TEST_CASE("element order is lexicographic") {
  std::vector<int> mod{6, 3};
  AbelianGroup g(mod);
  auto tuples = oracle::elements(mod);
  for (Elem x = 0; x < g.order(); ++x) CHECK(g.element(x).coords == tuples[x]);
  CHECK(g.format_element(el(g, {4, 2})) == "4,2");
  CHECK(g.parse_element("4,2") == el(g, {4, 2}));
  CHECK(g.format_set(g.parse_set("2,0;1,0")) == "1,0;2,0");
}

TEST_CASE("element arithmetic") {
  AbelianGroup g({6, 3});
  CHECK(g.add(el(g, {3, 0}), el(g, {3, 0})) == 0);
  CHECK(g.order_of(el(g, {3, 0})) == 2);
  CHECK(g.order_of(el(g, {1, 1})) == 6);
  CHECK(code_of([&] { g.add(GroupElement{{1, 0}}, GroupElement{{1}}); }) == ErrorCode::group_mismatch);
  CHECK(code_of([&] { g.parse_element("7,0"); }) == ErrorCode::invalid_element);

  // against tuple arithmetic for several groups
  for (std::vector<int> mod : {std::vector<int>{4, 2}, {9, 3}, {2, 2, 2}, {12}}) {
    AbelianGroup h(mod);
    auto t = oracle::elements(mod);
    for (Elem a = 0; a < h.order(); ++a) {
      CHECK(h.neg(a) == oracle::index(mod, oracle::neg(mod, t[a])));
      for (Elem b = 0; b < h.order(); ++b) CHECK(h.add(a, b) == oracle::index(mod, oracle::add(mod, t[a], t[b])));
      CHECK(h.order_of(a) == static_cast<int>(oracle::closure(mod, {a}).size()));
    }
  }
}

TEST_CASE("generated subgroups") {
  AbelianGroup g({6, 3});
  CHECK(generated_subgroup(g, std::vector<Elem>{el(g, {1, 0}), el(g, {0, 1})}).order() == 18);
  AbelianGroup h({3, 3});
  CHECK(generated_subgroup(h, std::vector<Elem>{el(h, {1, 1})}).elements ==
        ElementSet{0, el(h, {1, 1}), el(h, {2, 2})});
  CHECK(generated_subgroup(g, std::vector<Elem>{}).elements == ElementSet{0});
}

TEST_CASE("subgroups of a given order match the closure oracle") {
  struct Case {
    std::vector<int> mod;
    int k;
    size_t count;
  };
  for (const Case& c : {Case{{3, 3}, 3, 4}, Case{{5, 5}, 5, 6}, Case{{6, 3}, 9, 1}}) {
    AbelianGroup g(c.mod);
    auto subs = subgroups_of_order(g, c.k);
    CHECK(subs.size() == c.count);
    std::set<std::set<int>> want;
    for (const auto& s : oracle::two_generated_subgroups(c.mod))
      if (static_cast<int>(s.size()) == c.k) want.insert(s);
    std::set<std::set<int>> got;
    for (const auto& s : subs) got.insert(std::set<int>(s.elements.begin(), s.elements.end()));
    CHECK(got == want);
  }
  AbelianGroup g({6, 3});
  CHECK(code_of([&] { subgroups_of_order(g, 4); }) == ErrorCode::no_such_order);
}

TEST_CASE("all subgroups of rank-2 groups") {
  for (std::vector<int> mod : {std::vector<int>{6, 3}, {4, 2}, {9, 3}, {12, 3}}) {
    AbelianGroup g(mod);
    std::set<std::set<int>> got;
    for (const auto& s : all_subgroups(g)) {
      CHECK(is_subgroup(g, s.elements));
      CHECK(generated_subgroup(g, s.generators) == s);
      got.insert(std::set<int>(s.elements.begin(), s.elements.end()));
    }
    CHECK(got == oracle::two_generated_subgroups(mod));
  }
  AbelianGroup g({3, 3});
  CHECK(code_of([&] { as_subgroup(g, ElementSet{0, 1}); }) == ErrorCode::invalid_subgroup);
}

TEST_CASE("quotients") {
  AbelianGroup g({6, 3});
  Subgroup h = generated_subgroup(g, std::vector<Elem>{el(g, {3, 0})});
  Quotient q = quotient_group(g, h);
  CHECK(q.group.order() == 9);
  AbelianGroup k({3, 3});
  CHECK(quotient_group(k, generated_subgroup(k, std::vector<Elem>{el(k, {1, 0})})).group.order() == 3);
  Subgroup whole = generated_subgroup(g, std::vector<Elem>{1, 3});
  CHECK(quotient_group(g, whole).group.order() == 1);

  // projection is a homomorphism with kernel H; lifts are coset minima
  for (const Subgroup& s : all_subgroups(AbelianGroup({12, 2}))) {
    const AbelianGroup& p = s.parent;
    Quotient qq = quotient_group(p, s);
    CHECK(qq.group.order() * s.order() == p.order());
    for (Elem a = 0; a < p.order(); ++a) {
      CHECK((qq.projection[a] == 0) == s.contains(a));
      for (Elem b = 0; b < p.order(); ++b) CHECK(qq.projection[p.add(a, b)] == qq.group.add(qq.projection[a], qq.projection[b]));
    }
    for (Elem c = 0; c < qq.group.order(); ++c) {
      Elem lo = p.order();
      for (Elem a = 0; a < p.order(); ++a)
        if (qq.projection[a] == c) lo = std::min(lo, a);
      CHECK(qq.lift[c] == lo);
    }
  }
}

TEST_CASE("realized subgroups") {
  AbelianGroup g({12, 3});
  for (const Subgroup& s : all_subgroups(g)) {
    Realization r = realize_subgroup(s);
    CHECK(r.group.order() == s.order());
    ElementSet img(r.embedding.begin(), r.embedding.end());
    CHECK(normalized(img) == s.elements);
    for (Elem a = 0; a < r.group.order(); ++a)
      for (Elem b = 0; b < r.group.order(); ++b) CHECK(r.embedding[r.group.add(a, b)] == g.add(r.embedding[a], r.embedding[b]));
  }
}

TEST_CASE("atoms") {
  auto a5 = atoms(AbelianGroup({5}));
  CHECK(a5 == std::vector<ElementSet>{{0}, {1, 2, 3, 4}});
  auto a6 = atoms(AbelianGroup({6}));
  CHECK(a6 == std::vector<ElementSet>{{0}, {1, 5}, {2, 4}, {3}});
  CHECK(atoms(AbelianGroup({3, 3})).size() == 5);

  // every subgroup is a union of atoms, atoms partition G
  for (std::vector<int> mod : {std::vector<int>{6, 3}, {8, 2}, {5, 5}}) {
    AbelianGroup g(mod);
    auto at = atoms(g);
    std::vector<int> owner(g.order(), -1);
    for (size_t i = 0; i < at.size(); ++i)
      for (Elem x : at[i]) {
        CHECK(owner[x] == -1);
        owner[x] = static_cast<int>(i);
      }
    CHECK(std::count(owner.begin(), owner.end(), -1) == 0);
    for (const auto& s : all_subgroups(g))
      for (Elem x : s.elements)
        for (Elem y : at[owner[x]]) CHECK(s.contains(y));
  }
}

TEST_CASE("characters") {
  AbelianGroup g({6, 3});
  CHECK(character_value(g, el(g, {1, 0}), el(g, {3, 0})) == CycInt(6, -1));
  CHECK(character_value(g, 0, el(g, {4, 2})) == CycInt(6, 1));
  AbelianGroup h({3, 3});
  CHECK(character_value(h, el(h, {1, 0}), el(h, {1, 0})) == CycInt::root(3, 1));

  // numeric agreement, symmetry and the homomorphism law, exhaustively
  for (std::vector<int> mod : {std::vector<int>{6, 3}, {4, 4}, {10}, {2, 2, 2}, {9, 3}}) {
    AbelianGroup G(mod);
    auto t = oracle::elements(mod);
    const int n = G.order();
    for (Elem a = 0; a < n; ++a)
      for (Elem x = 0; x < n; ++x) {
        CycInt v = character_value(G, a, x);
        CHECK(std::abs(std::complex<double>(v.numeric()) - oracle::character(mod, t[a], t[x])) < 1e-12);
        CHECK(v == character_value(G, x, a));
        for (Elem y = 0; y < n; y += 3) CHECK(character_value(G, a, G.add(x, y)) == v * character_value(G, a, y));
      }
  }
}

TEST_CASE("character orthogonality") {
  for (std::vector<int> mod : {std::vector<int>{6, 3}, {5, 5}, {12, 2}, {7}}) {
    AbelianGroup g(mod);
    for (Elem h = 0; h < g.order(); ++h) {
      CycInt sum(g.exponent(), 0);
      for (Elem psi = 0; psi < g.order(); ++psi) sum += character_value(g, psi, h);
      CHECK(sum == CycInt(g.exponent(), h == 0 ? g.order() : 0));
    }
  }
}
