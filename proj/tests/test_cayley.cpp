#include <doctest.h>

#include <random>

#include "drg/cayley.hpp"
#include "drg/classify_kernel.hpp"
#include "drg/constructions.hpp"
#include "oracles.hpp"

using namespace drg;

namespace {

Elem el(const AbelianGroup& g, std::vector<int> c) { return g.index_of(GroupElement{std::move(c)}); }

ElementSet all_but(const AbelianGroup& g, const ElementSet& drop) {
  ElementSet s;
  for (Elem x = 0; x < g.order(); ++x)
    if (!contains(drop, x)) s.push_back(x);
  return s;
}

CayleyGraph crown_6_3() {
  AbelianGroup g({6, 3});
  return crown(g, subgroups_of_order(g, 9).front(), el(g, {3, 0})).graph;
}

// halved 6-cube on Z_2^5: even-weight words of length 6, S = weight-2 words
CayleyGraph halved_6cube() {
  AbelianGroup g({2, 2, 2, 2, 2});
  ElementSet s;
  for (Elem x = 1; x < g.order(); ++x) {
    int w = 0;
    for (int i = 0; i < 5; ++i) w += g.coord(x, i);
    if (w <= 2) s.push_back(x);
  }
  return CayleyGraph(g, s);
}

CayleyGraph cube4() {
  AbelianGroup g({2, 2, 2, 2});
  return CayleyGraph(g, normalized({el(g, {1, 0, 0, 0}), el(g, {0, 1, 0, 0}), el(g, {0, 0, 1, 0}), el(g, {0, 0, 0, 1})}));
}

oracle::Array to_oracle(const IntersectionArray& a) { return {a.b, a.c}; }

std::vector<std::vector<char>> adjacency(const CayleyGraph& g) {
  return oracle::adjacency(g.group().moduli(), std::vector<int>(g.connection().begin(), g.connection().end()));
}

IntersectionArray array_of(const CayleyGraph& g) {
  DrgCheck c = check_distance_regular(g);
  REQUIRE(c.distance_regular());
  return *c.array;
}

}  // namespace

TEST_CASE("building graphs") {
  AbelianGroup g({3, 3});
  CayleyGraph k9(g, all_but(g, {0}));
  CHECK(k9.valency() == 8);
  CHECK(k9.connected());
  AbelianGroup h({6, 3});
  try {
    CayleyGraph bad(h, ElementSet{el(h, {1, 1})});
    FAIL("accepted a set that is not inverse closed");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::not_inverse_closed);
  }
  try {
    CayleyGraph bad(h, ElementSet{0});
    FAIL("accepted the identity");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::identity_in_set);
  }
  CayleyGraph c5(AbelianGroup({5}), ElementSet{1, 4});
  CHECK(c5.adjacent(0, 1));
  CHECK(c5.adjacent(2, 1));
  CHECK_FALSE(c5.adjacent(0, 2));
  CHECK_FALSE(CayleyGraph(h, ElementSet{el(h, {1, 0}), el(h, {5, 0})}).connected());
}

TEST_CASE("distance partitions") {
  CayleyGraph c5(AbelianGroup({5}), ElementSet{1, 4});
  CHECK(distance_partition(c5).classes == std::vector<ElementSet>{{0}, {1, 4}, {2, 3}});
  DistancePartition cp = distance_partition(crown_6_3());
  CHECK(cp.diameter() == 3);
  CHECK(cp.classes[3].size() == 1);
  // against BFS on the explicit adjacency matrix
  auto d = oracle::distances(adjacency(crown_6_3()));
  for (int i = 0; i <= 3; ++i)
    for (Elem x : cp.classes[i]) CHECK(d[0][x] == i);
  AbelianGroup g({3, 3});
  CHECK(distance_partition(CayleyGraph(g, all_but(g, {0}))).diameter() == 1);
  AbelianGroup h({6, 3});
  CHECK_THROWS_AS(distance_partition(CayleyGraph(h, ElementSet{el(h, {1, 0}), el(h, {5, 0})})), Error);
}

TEST_CASE("distance-regularity examples") {
  Construction td = td_line_graph(3, standard_order_p_subgroups(3, 2));
  CHECK(array_of(td.graph).to_string() == "{4,2;1,2}");
  CHECK(array_of(crown_6_3()).to_string() == "{8,7,1;1,7,8}");
  AbelianGroup h({6, 3});
  try {
    check_distance_regular(CayleyGraph(h, ElementSet{el(h, {1, 0}), el(h, {5, 0})}));
    FAIL("disconnected graph accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::not_connected);
  }
  // a connected graph that is not distance-regular reports a layer
  AbelianGroup z8({8});
  DrgCheck c = check_distance_regular(CayleyGraph(z8, ElementSet{1, 2, 6, 7}));
  CHECK_FALSE(c.distance_regular());
  CHECK(c.failed_layer >= 1);
  CHECK_FALSE(c.witness.empty());
}

TEST_CASE("algebraic test agrees with both vertex-pair oracles on every connection set") {
  for (std::vector<int> mod : {std::vector<int>{3, 3}, {6, 3}, {4, 2}, {2, 2, 2}, {8}, {10}, {12}, {9}, {4, 4}}) {
    AbelianGroup g(mod);
    SubsetBasis b = subset_basis(g);
    int drgs = 0;
    for (long long i = 0; i < b.count(); ++i) {
      ElementSet s = b.subset(i);
      CayleyGraph graph(g, s);
      auto want = oracle::drg_array(oracle::adjacency(mod, std::vector<int>(s.begin(), s.end())));
      if (!graph.connected()) {
        CHECK_FALSE(want.has_value());
        continue;
      }
      DrgCheck chk = check_distance_regular(graph);
      auto brute = brute_force_distance_regular(graph);
      CHECK(chk.distance_regular() == want.has_value());
      CHECK(brute.has_value() == want.has_value());
      if (!want) continue;
      ++drgs;
      CHECK(to_oracle(*chk.array) == *want);
      CHECK(*brute == *chk.array);
      CHECK(brute_force_distance_regular(graph, false) == brute);
      // counting identities
      const auto& a = *chk.array;
      auto k = a.class_sizes();
      std::int64_t total = 0;
      for (size_t j = 0; j < k.size(); ++j) {
        total += k[j];
        CHECK(k[j] == static_cast<std::int64_t>(chk.partition.classes[j].size()));
        if (j + 1 < k.size()) CHECK(k[j] * a.b_at(static_cast<int>(j)) == k[j + 1] * a.c_at(static_cast<int>(j) + 1));
      }
      CHECK(total == g.order());
    }
    CHECK(drgs > 0);
  }
}

TEST_CASE("spectrum examples") {
  Eigensystem td = spectrum(td_line_graph(3, standard_order_p_subgroups(3, 2)).graph);
  REQUIRE(td.values.size() == 3);
  CHECK(td.values[0].exact == CycInt(1, 4));
  CHECK(td.values[1].exact == CycInt(1, 1));
  CHECK(td.values[2].exact == CycInt(1, -2));
  CHECK(td.values[0].multiplicity == 1);
  CHECK(td.values[1].multiplicity == 4);
  CHECK(td.values[2].multiplicity == 4);
  AbelianGroup g({3, 3});
  Eigensystem k9 = spectrum(CayleyGraph(g, all_but(g, {0})));
  REQUIRE(k9.values.size() == 2);
  CHECK(k9.values[0].exact == CycInt(1, 8));
  CHECK(k9.values[1].multiplicity == 8);
  Eigensystem p5 = spectrum(CayleyGraph(AbelianGroup({5}), ElementSet{1, 4}));
  REQUIRE(p5.values.size() == 3);
  CHECK(std::abs(static_cast<double>(p5.values[1].numeric) - 2 * std::cos(2 * M_PI / 5)) < 1e-12);
  CHECK(std::abs(static_cast<double>(p5.values[2].numeric) - 2 * std::cos(4 * M_PI / 5)) < 1e-12);
  CHECK(p5.values[1].multiplicity == 2);
  CHECK(p5.values[2].level_set == ElementSet{2, 3});
}

TEST_CASE("spectra agree with dense eigenvalues") {
  std::mt19937_64 rng(42);
  for (std::vector<int> mod : {std::vector<int>{6, 3}, {2, 2, 2, 2}, {5, 5}, {12}, {15}, {4, 2, 2}}) {
    AbelianGroup g(mod);
    SubsetBasis b = subset_basis(g);
    for (int t = 0; t < 15; ++t) {
      ElementSet s = b.subset(static_cast<long long>(rng() % b.count()));
      CayleyGraph graph(g, s);
      Eigensystem e = spectrum(graph);
      auto want = oracle::grouped(oracle::eigenvalues(oracle::adjacency(mod, std::vector<int>(s.begin(), s.end()))));
      REQUIRE(e.values.size() == want.size());
      long double sum = 0, sq = 0;
      int mult = 0;
      std::vector<int> owner(g.order(), 0);
      for (size_t i = 0; i < want.size(); ++i) {
        CHECK(std::abs(static_cast<double>(e.values[i].numeric) - want[i].first) < 1e-6);
        CHECK(e.values[i].multiplicity == want[i].second);
        CHECK(static_cast<int>(e.values[i].level_set.size()) == e.values[i].multiplicity);
        for (Elem x : e.values[i].level_set) {
          ++owner[x];
          CHECK(contains(e.values[i].level_set, g.neg(x)));
        }
        sum += e.values[i].multiplicity * e.values[i].numeric;
        sq += e.values[i].multiplicity * e.values[i].numeric * e.values[i].numeric;
        mult += e.values[i].multiplicity;
      }
      CHECK(mult == g.order());
      CHECK(std::count(owner.begin(), owner.end(), 1) == g.order());
      CHECK(std::abs(static_cast<double>(sum)) < 1e-9);
      CHECK(std::abs(static_cast<double>(sq) - static_cast<double>(s.size()) * g.order()) < 1e-6);
    }
  }
}

TEST_CASE("imprimitivity") {
  CayleyGraph cr = crown_6_3();
  DistancePartition part = distance_partition(cr);
  Imprimitivity imp = imprimitivity(cr, part, array_of(cr));
  AbelianGroup g({6, 3});
  CHECK(imp.bipartite);
  CHECK(imp.antipodal);
  CHECK(imp.antipodal_class->elements == ElementSet{0, el(g, {3, 0})});
  CHECK(imp.bipartition->order() == 9);

  AbelianGroup h({3, 3});
  CayleyGraph k33(h, all_but(h, subgroups_of_order(h, 3).front().elements));
  Imprimitivity i2 = imprimitivity(k33, distance_partition(k33), array_of(k33));
  CHECK(i2.antipodal);
  CHECK_FALSE(i2.bipartite);

  CayleyGraph td = td_line_graph(5, standard_order_p_subgroups(5, 2)).graph;
  Imprimitivity i3 = imprimitivity(td, distance_partition(td), array_of(td));
  CHECK_FALSE(i3.antipodal);
  CHECK_FALSE(i3.bipartite);
}

TEST_CASE("antipodal quotients") {
  GraphOverQuotient q = antipodal_quotient(crown_6_3());
  CHECK(q.graph.order() == 9);
  CHECK(q.graph.valency() == 8);
  AbelianGroup h({3, 3});
  CayleyGraph k33(h, all_but(h, subgroups_of_order(h, 3).front().elements));
  GraphOverQuotient q2 = antipodal_quotient(k33);
  CHECK(q2.graph.order() == 3);
  CHECK(q2.graph.valency() == 2);
  GraphOverQuotient q3 = antipodal_quotient(CayleyGraph(AbelianGroup({6}), ElementSet{1, 5}));
  CHECK(array_of(q3.graph).to_string() == "{2;1}");
  try {
    antipodal_quotient(td_line_graph(3, standard_order_p_subgroups(3, 2)).graph);
    FAIL("quotient of a primitive graph");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::not_antipodal);
  }
}

TEST_CASE("halved graphs") {
  GraphOverSubgroup h = halved_graph(crown_6_3());
  CHECK(h.graph.order() == 9);
  CHECK(h.graph.valency() == 8);
  GraphOverSubgroup c = halved_graph(cube4());
  CHECK(c.graph.order() == 8);
  CHECK(array_of(c.graph).to_string() == "{6,1;1,6}");
  GraphOverSubgroup c6 = halved_graph(CayleyGraph(AbelianGroup({6}), ElementSet{1, 5}));
  CHECK(array_of(c6.graph).to_string() == "{2;1}");
  try {
    halved_graph(CayleyGraph(AbelianGroup({5}), ElementSet{1, 4}));
    FAIL("halved graph of an odd cycle");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::not_bipartite);
  }
}

TEST_CASE("antipodal covers of complete graphs") {
  CayleyGraph t = halved_6cube();
  IntersectionArray a = array_of(t);
  CHECK(a.to_string() == "{15,6,1;1,6,15}");
  DistancePartition part = distance_partition(t);
  Imprimitivity imp = imprimitivity(t, part, a);
  REQUIRE(imp.antipodal);
  CHECK_FALSE(imp.bipartite);
  const std::int64_t k = a.k(), mu = a.c_at(2), r = imp.antipodal_class->order();
  CHECK(a.b_at(1) == mu * (r - 1));
  // theta_1, theta_3 are the roots of x^2 - (lambda - mu) x - k
  Eigensystem e = spectrum(t);
  REQUIRE(e.values.size() == 4);
  const long double lam = a.a_at(1);
  const long double th1 = e.values[1].numeric, th3 = e.values[3].numeric;
  CHECK(std::abs(static_cast<double>(th1 * th1 - (lam - mu) * th1 - k)) < 1e-9);
  CHECK(std::abs(static_cast<double>(th3 * th3 - (lam - mu) * th3 - k)) < 1e-9);
  CHECK(e.values[2].exact == CycInt(1, -1));
  const long double m1 = -th3 * (r - 1) * (k + 1) / (th1 - th3);
  CHECK(std::abs(static_cast<double>(m1) - e.values[1].multiplicity) < 1e-9);

  // quotients by subgroups of the antipodal class
  QuotientPrediction full = quotient_by_subgroup(t, *imp.antipodal_class);
  CHECK(full.actual.to_string() == "{15;1}");
  CHECK(full.predicted == full.actual);
  QuotientPrediction none = quotient_by_subgroup(t, generated_subgroup(t.group(), std::vector<Elem>{}));
  CHECK(none.actual == a);
  CHECK(none.predicted == a);
  CHECK_THROWS_AS(quotient_by_subgroup(crown_6_3(), generated_subgroup(AbelianGroup({6, 3}), std::vector<Elem>{9})), Error);
}

TEST_CASE("bipartite spectra are symmetric") {
  for (const CayleyGraph& g : {crown_6_3(), cube4(), CayleyGraph(AbelianGroup({6}), ElementSet{1, 5})}) {
    Eigensystem e = spectrum(g);
    const size_t d = e.values.size() - 1;
    for (size_t i = 0; i <= d; ++i) {
      CHECK(e.values[i].exact == -e.values[d - i].exact);
      CHECK(e.values[i].multiplicity == e.values[d - i].multiplicity);
    }
  }
  // antipodal bipartite diameter 4: n = 2 r^2 mu and k = r mu
  CayleyGraph q = cube4();
  IntersectionArray a = array_of(q);
  Imprimitivity imp = imprimitivity(q, distance_partition(q), a);
  REQUIRE(a.diameter() == 4);
  const std::int64_t r = imp.antipodal_class->order(), mu = a.c_at(2);
  CHECK(q.order() == 2 * r * r * mu);
  CHECK(a.k() == r * mu);
}

TEST_CASE("integrality matches the atom algebra") {
  CayleyGraph td = td_line_graph(3, standard_order_p_subgroups(3, 2)).graph;
  CHECK(is_integral(spectrum(td)));
  CHECK(in_atom_algebra(td.group(), td.connection()));
  CayleyGraph p5(AbelianGroup({5}), ElementSet{1, 4});
  CHECK_FALSE(is_integral(spectrum(p5)));
  CHECK_FALSE(in_atom_algebra(p5.group(), p5.connection()));
  for (std::vector<int> mod : {std::vector<int>{6, 3}, {12}, {4, 2}, {5}}) {
    AbelianGroup g(mod);
    SubsetBasis b = subset_basis(g);
    for (long long i = 0; i < b.count(); ++i) {
      CayleyGraph graph(g, b.subset(i));
      CHECK(is_integral(spectrum(graph)) == in_atom_algebra(g, graph.connection()));
    }
  }
}

TEST_CASE("cliques and the Delsarte bound") {
  CayleyGraph td = td_line_graph(5, standard_order_p_subgroups(5, 3)).graph;
  CHECK(clique_number(td) == 5);
  CHECK(delsarte_bound(td, spectrum(td)) == 5);
  AbelianGroup g({3, 3});
  CayleyGraph k9(g, all_but(g, {0}));
  CHECK(clique_number(k9) == 9);
  CayleyGraph c6(AbelianGroup({6}), ElementSet{1, 5});
  CHECK(clique_number(c6) == 2);
  // against exhaustive search
  std::mt19937_64 rng(1);
  for (std::vector<int> mod : {std::vector<int>{6, 3}, {4, 4}, {2, 2, 2, 2}, {15}}) {
    AbelianGroup h(mod);
    SubsetBasis b = subset_basis(h);
    for (int t = 0; t < 10; ++t) {
      CayleyGraph graph(h, b.subset(static_cast<long long>(rng() % b.count())));
      CHECK(clique_number(graph) == oracle::max_clique(adjacency(graph)));
    }
  }
  AbelianGroup big({2, 2, 2, 2, 2, 2, 2, 2});
  try {
    clique_number(CayleyGraph(big, ElementSet{1, 2, 4, 8, 16, 32, 64, 128}));
    FAIL("no size limit");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::size_limit_exceeded);
  }
}

TEST_CASE("family detection") {
  auto family = [](const CayleyGraph& g) {
    DistancePartition part = distance_partition(g);
    IntersectionArray a = array_of(g);
    return detect_family(g, part, a, imprimitivity(g, part, a)).label();
  };
  AbelianGroup g({6, 3});
  CHECK(family(CayleyGraph(g, all_but(g, {0}))) == "complete");
  CHECK(family(CayleyGraph(g, all_but(g, subgroups_of_order(g, 6).front().elements))) == "complete-multipartite(3,6)");
  CHECK(family(crown_6_3()) == "crown(9)");
  CHECK(family(CayleyGraph(AbelianGroup({7}), ElementSet{1, 6})) == "cycle(7)");
  CHECK(family(td_line_graph(3, standard_order_p_subgroups(3, 2)).graph) == "union-of-order-p-subgroups(2)");
  CHECK(family(CayleyGraph(AbelianGroup({13}), ElementSet{1, 3, 4, 9, 10, 12})) == "paley(13)");
  CHECK(family(halved_6cube()) == "none");
  for (const char* label : {"complete", "complete-multipartite(3,6)", "crown(9)", "cycle(7)",
                            "union-of-order-p-subgroups(2)", "paley(13)", "none"})
    CHECK(parse_family(label).label() == label);
  CHECK_THROWS_AS(parse_family("petersen"), Error);
}

namespace {

// graph6 written out bit by bit from the format description
std::string graph6_reference(int n, const std::vector<std::vector<char>>& a) {
  std::string out;
  if (n <= 62) {
    out += static_cast<char>(n + 63);
  } else {
    out += '~';
    for (int shift : {12, 6, 0}) out += static_cast<char>(((n >> shift) & 63) + 63);
  }
  std::vector<int> bits;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) bits.push_back(a[i][j]);
  while (bits.size() % 6) bits.push_back(0);
  for (size_t k = 0; k < bits.size(); k += 6) {
    int v = 0;
    for (int t = 0; t < 6; ++t) v = v * 2 + bits[k + t];
    out += static_cast<char>(v + 63);
  }
  return out;
}

}  // namespace

TEST_CASE("graph6") {
  CHECK(to_graph6(CayleyGraph(AbelianGroup({3}), ElementSet{1, 2})) == "Bw");
  CayleyGraph c5(AbelianGroup({5}), ElementSet{1, 4});
  auto [n, edges] = graph6_decode(to_graph6(c5));
  CHECK(n == 5);
  CHECK(edges == std::vector<std::pair<int, int>>{{0, 1}, {0, 4}, {1, 2}, {2, 3}, {3, 4}});
  std::mt19937_64 rng(6);
  for (int t = 0; t < 100; ++t) {
    int v = 1 + static_cast<int>(rng() % 90);
    std::vector<std::vector<char>> a(v, std::vector<char>(v, 0));
    std::vector<std::pair<int, int>> e;
    for (int j = 1; j < v; ++j)
      for (int i = 0; i < j; ++i)
        if (rng() % 3 == 0) {
          a[i][j] = a[j][i] = 1;
          e.push_back({i, j});
        }
    std::string s = graph6_encode(v, e);
    CHECK(s == graph6_reference(v, a));
    auto [m, back] = graph6_decode(s);
    std::sort(e.begin(), e.end());
    CHECK(m == v);
    CHECK(back == e);
  }
  CayleyGraph big = CayleyGraph(AbelianGroup({8, 8}), ElementSet{1, 7, 8, 56});
  CHECK(to_graph6(big) == graph6_reference(64, adjacency(big)));
}
