#include <doctest.h>

#include <random>

#include "drg/group_algebra.hpp"
#include "oracles.hpp"

using namespace drg;

namespace {

Elem el(const AbelianGroup& g, std::vector<int> c) { return g.index_of(GroupElement{std::move(c)}); }

AlgebraElement random_element(const AbelianGroup& g, std::mt19937_64& rng, int lo = -5, int hi = 5) {
  std::uniform_int_distribution<int> d(lo, hi);
  std::vector<std::int64_t> c(g.order());
  for (auto& x : c) x = d(rng);
  return AlgebraElement(g, c);
}

// coefficient of t is sum over g + h = t, on tuples
std::vector<std::int64_t> oracle_convolve(const std::vector<int>& mod, const std::vector<std::int64_t>& a,
                                          const std::vector<std::int64_t>& b) {
  auto t = oracle::elements(mod);
  std::vector<std::int64_t> c(a.size(), 0);
  for (size_t g = 0; g < a.size(); ++g)
    for (size_t h = 0; h < b.size(); ++h) c[oracle::index(mod, oracle::add(mod, t[g], t[h]))] += a[g] * b[h];
  return c;
}

const std::vector<std::vector<int>> kGroups{{3, 3}, {6, 3}, {4, 2}, {10}, {2, 2, 2}, {5, 5}, {7}, {12, 3}};

}  // namespace

TEST_CASE("indicator elements") {
  AbelianGroup g({6, 3});
  CHECK(AlgebraElement::from_subset(g, ElementSet{}).is_zero());
  AlgebraElement e = AlgebraElement::from_subset(g, ElementSet{0});
  CHECK(e == AlgebraElement::identity(g));
  AlgebraElement all = AlgebraElement::from_subset(g, normalized([&] {
                                                      ElementSet s;
                                                      for (Elem x = 0; x < 18; ++x) s.push_back(x);
                                                      return s;
                                                    }()));
  CHECK(all.multiple_of_group() == 1);
  CHECK((all * all).multiple_of_group() == 18);
  CHECK(AlgebraElement(g, std::vector<std::int64_t>(18, 0)).to_string() == "0");
}

TEST_CASE("convolution examples") {
  AbelianGroup g({3, 3});
  Subgroup h = generated_subgroup(g, std::vector<Elem>{el(g, {1, 0})});
  AlgebraElement H = AlgebraElement::from_subset(g, h.elements);
  CHECK(H * H == 3 * H);
  AbelianGroup z4({4});
  AlgebraElement d = AlgebraElement::from_subset(z4, ElementSet{0, 1});
  CHECK((d * involute(d, -1)).coeffs() == std::vector<std::int64_t>{2, 1, 0, 1});
  CHECK((d * involute(d, -1)).to_string() == "2*(0) + 1*(1) + 1*(3)");
}

TEST_CASE("convolution against the tuple oracle and the character route") {
  std::mt19937_64 rng(7);
  for (const auto& mod : kGroups) {
    AbelianGroup g(mod);
    for (int t = 0; t < 5; ++t) {
      AlgebraElement a = random_element(g, rng), b = random_element(g, rng), c = random_element(g, rng);
      AlgebraElement ab = convolve(a, b);
      CHECK(ab.coeffs() == oracle_convolve(mod, a.coeffs(), b.coeffs()));
      CHECK(ab == convolve(b, a));
      CHECK(convolve(ab, c) == convolve(a, convolve(b, c)));
      CHECK(convolve_via_characters(a, b) == ab);
      CHECK(a * AlgebraElement::identity(g) == a);
    }
  }
  CHECK_THROWS_AS(convolve(AlgebraElement(AbelianGroup({3})), AlgebraElement(AbelianGroup({5}))), Error);
}

TEST_CASE("involution") {
  AbelianGroup z5({5});
  AlgebraElement one = AlgebraElement::from_subset(z5, ElementSet{1});
  CHECK(involute(one, 2) == AlgebraElement::from_subset(z5, ElementSet{2}));
  std::mt19937_64 rng(11);
  for (const auto& mod : kGroups) {
    AbelianGroup g(mod);
    AlgebraElement a = random_element(g, rng), b = random_element(g, rng);
    CHECK(involute(a, 1) == a);
    CHECK(involute(involute(a, -1), -1) == a);
    CHECK(involute(a * b, -1) == involute(a, -1) * involute(b, -1));
    // an inverse-closed set is fixed
    ElementSet s;
    for (Elem x = 1; x < g.order(); ++x)
      if (x % 3 == 0 || g.neg(x) % 3 == 0) s.push_back(x);
    AlgebraElement S = AlgebraElement::from_subset(g, s);
    CHECK(involute(S, -1) == S);
  }
}

TEST_CASE("character application") {
  AbelianGroup g({6, 3});
  ElementSet h9 = subgroups_of_order(g, 9).front().elements;
  h9.erase(h9.begin());
  AlgebraElement S = AlgebraElement::from_subset(g, h9);
  CHECK(apply_character(0, S) == CycInt(6, 8));
  CHECK(apply_character(el(g, {1, 0}), S) == CycInt(6, -1));
  ElementSet all;
  for (Elem x = 0; x < g.order(); ++x) all.push_back(x);
  AlgebraElement G = AlgebraElement::from_subset(g, all);
  for (Elem x = 1; x < g.order(); ++x) CHECK(apply_character(x, G).is_zero());

  // multiplicative over convolution, exhaustively over characters
  std::mt19937_64 rng(3);
  for (const auto& mod : kGroups) {
    AbelianGroup a(mod);
    AlgebraElement k = random_element(a, rng), l = random_element(a, rng);
    auto tk = character_transform(k), tl = character_transform(l), tkl = character_transform(k * l);
    for (Elem x = 0; x < a.order(); ++x) CHECK(tkl[x] == tk[x] * tl[x]);
  }
}

TEST_CASE("fourier inversion") {
  AbelianGroup z5({5});
  AlgebraElement e = AlgebraElement::identity(z5);
  CHECK(fourier_inverse(z5, character_transform(e)) == e);
  AlgebraElement paley = AlgebraElement::from_subset(z5, ElementSet{1, 4});
  CHECK(fourier_inverse(z5, character_transform(paley)) == paley);
  std::vector<CycInt> constant(5, CycInt(5, 7));
  CHECK(fourier_inverse(z5, constant) == 7 * e);
  std::vector<CycInt> bad(5, CycInt(5, 0));
  bad[1] = CycInt(5, 1);
  try {
    fourier_inverse(z5, bad);
    FAIL("inconsistent values accepted");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::not_a_group_algebra_element);
  }
  std::mt19937_64 rng(5);
  for (const auto& mod : kGroups) {
    AbelianGroup g(mod);
    for (int t = 0; t < 20; ++t) {
      AlgebraElement k = random_element(g, rng);
      CHECK(fourier_inverse(g, character_transform(k)) == k);
    }
  }
}

TEST_CASE("polynomial evaluation") {
  AbelianGroup g({6, 3});
  for (const auto& h : all_subgroups(g)) {
    AlgebraElement H = AlgebraElement::from_subset(g, h.elements);
    std::int64_t f[] = {1, -h.order(), 0};
    CHECK(polynomial_eval(f, H).is_zero());
  }
  ElementSet all;
  for (Elem x = 0; x < g.order(); ++x) all.push_back(x);
  std::int64_t id[] = {1, 0};
  CHECK(polynomial_eval(id, AlgebraElement::from_subset(g, all)).multiple_of_group() == 1);
  AbelianGroup z5({5});
  std::int64_t sq[] = {1, 0, 0};
  AlgebraElement r = polynomial_eval(sq, AlgebraElement::from_subset(z5, ElementSet{1, 4}));
  CHECK(r.coeffs() == std::vector<std::int64_t>{2, 0, 1, 1, 0});
  CHECK_FALSE(r.multiple_of_group().has_value());
  std::int64_t constant[] = {4};
  CHECK_THROWS_AS(polynomial_eval(constant, r), Error);
  // Horner agrees with repeated convolution
  std::mt19937_64 rng(9);
  AlgebraElement d = random_element(g, rng, 0, 1);
  std::int64_t cubic[] = {2, -1, 0, 3};
  AlgebraElement want = 2 * (d * d * d) - d * d + 3 * AlgebraElement::identity(g);
  CHECK(polynomial_eval(cubic, d) == want);
}
