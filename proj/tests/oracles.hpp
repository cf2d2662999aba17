#pragma once

// Independent reference computations for the tests. Nothing here calls the
// library's algorithms; it works on coordinate tuples and dense matrices.

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <optional>
#include <queue>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using Tuple = std::vector<int>;

inline std::vector<Tuple> elements(const std::vector<int>& mod) {
  std::vector<Tuple> out{Tuple{}};
  for (int n : mod) {
    std::vector<Tuple> next;
    for (const auto& t : out)
      for (int v = 0; v < n; ++v) {
        Tuple u = t;
        u.push_back(v);
        next.push_back(u);
      }
    out = next;
  }
  return out;
}

// position in the lexicographic order, first coordinate most significant
inline int index(const std::vector<int>& mod, const Tuple& t) {
  int idx = 0;
  for (size_t i = 0; i < mod.size(); ++i) idx = idx * mod[i] + t[i];
  return idx;
}

inline Tuple add(const std::vector<int>& mod, const Tuple& a, const Tuple& b) {
  Tuple c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = (a[i] + b[i]) % mod[i];
  return c;
}

inline Tuple neg(const std::vector<int>& mod, const Tuple& a) {
  Tuple c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = (mod[i] - a[i]) % mod[i];
  return c;
}

inline int order(const std::vector<int>& mod) {
  return std::accumulate(mod.begin(), mod.end(), 1, std::multiplies<int>());
}

// closure of a set of indices under addition
inline std::set<int> closure(const std::vector<int>& mod, std::set<int> s) {
  auto el = elements(mod);
  s.insert(0);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<int> cur(s.begin(), s.end());
    for (int a : cur)
      for (int b : cur) {
        int c = index(mod, add(mod, el[a], el[b]));
        if (s.insert(c).second) grew = true;
      }
  }
  return s;
}

// subgroups generated by at most two elements (all of them for rank <= 2)
inline std::set<std::set<int>> two_generated_subgroups(const std::vector<int>& mod) {
  const int n = order(mod);
  std::set<std::set<int>> out;
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b) out.insert(closure(mod, {a, b}));
  return out;
}

inline std::complex<double> character(const std::vector<int>& mod, const Tuple& g, const Tuple& x) {
  double phase = 0;
  for (size_t i = 0; i < mod.size(); ++i) phase += static_cast<double>(g[i] * x[i] % mod[i]) / mod[i];
  return std::polar(1.0, 2 * M_PI * phase);
}

// adjacency of Cay(G, S) on lexicographic indices
inline std::vector<std::vector<char>> adjacency(const std::vector<int>& mod, const std::vector<int>& s) {
  auto el = elements(mod);
  const int n = static_cast<int>(el.size());
  std::vector<std::vector<char>> a(n, std::vector<char>(n, 0));
  for (int x = 0; x < n; ++x)
    for (int t : s) a[x][index(mod, add(mod, el[x], el[t]))] = 1;
  return a;
}

inline std::vector<std::vector<int>> distances(const std::vector<std::vector<char>>& a) {
  const int n = static_cast<int>(a.size());
  std::vector<std::vector<int>> d(n, std::vector<int>(n, -1));
  for (int s = 0; s < n; ++s) {
    std::queue<int> q;
    q.push(s);
    d[s][s] = 0;
    while (!q.empty()) {
      int x = q.front();
      q.pop();
      for (int y = 0; y < n; ++y)
        if (a[x][y] && d[s][y] < 0) {
          d[s][y] = d[s][x] + 1;
          q.push(y);
        }
    }
  }
  return d;
}

struct Array {
  std::vector<std::int64_t> b, c;
  bool operator==(const Array&) const = default;
};

// intersection array from every vertex pair, or nothing
inline std::optional<Array> drg_array(const std::vector<std::vector<char>>& a) {
  const int n = static_cast<int>(a.size());
  auto d = distances(a);
  int diam = 0;
  for (auto& row : d)
    for (int v : row) {
      if (v < 0) return std::nullopt;
      diam = std::max(diam, v);
    }
  std::vector<std::int64_t> b(diam + 1, -1), c(diam + 1, -1);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int i = d[x][y];
      std::int64_t bi = 0, ci = 0;
      for (int z = 0; z < n; ++z)
        if (a[y][z]) {
          if (d[x][z] == i + 1) ++bi;
          if (d[x][z] == i - 1) ++ci;
        }
      if (b[i] < 0) b[i] = bi, c[i] = ci;
      if (b[i] != bi || c[i] != ci) return std::nullopt;
    }
  Array out;
  out.b.assign(b.begin(), b.begin() + diam);
  out.c.assign(c.begin() + 1, c.end());
  return out;
}

// eigenvalues of a symmetric 0/1 matrix, ascending
inline std::vector<double> eigenvalues(const std::vector<std::vector<char>>& a) {
  const int n = static_cast<int>(a.size());
  Eigen::MatrixXd m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = a[i][j];
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
  auto v = es.eigenvalues();
  return std::vector<double>(v.data(), v.data() + n);
}

// (value, multiplicity) after merging values closer than tol, descending
inline std::vector<std::pair<double, int>> grouped(std::vector<double> v, double tol = 1e-6) {
  std::sort(v.rbegin(), v.rend());
  std::vector<std::pair<double, int>> out;
  for (double x : v) {
    if (!out.empty() && std::abs(out.back().first - x) < tol)
      ++out.back().second;
    else
      out.push_back({x, 1});
  }
  return out;
}

// brute-force maximum clique on a small graph
inline int max_clique(const std::vector<std::vector<char>>& a) {
  const int n = static_cast<int>(a.size());
  int best = 0;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    best = std::max(best, static_cast<int>(cur.size()));
    for (int v = start; v < n; ++v) {
      bool ok = true;
      for (int u : cur)
        if (!a[u][v]) {
          ok = false;
          break;
        }
      if (!ok) continue;
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return best;
}

// every inverse-closed S in G \ {0} giving a DRG, as sorted index lists
inline std::set<std::vector<int>> drg_sets(const std::vector<int>& mod) {
  auto t = elements(mod);
  std::vector<std::vector<int>> atoms;
  for (int x = 1; x < static_cast<int>(t.size()); ++x) {
    int y = index(mod, neg(mod, t[x]));
    if (x <= y) atoms.push_back(x == y ? std::vector<int>{x} : std::vector<int>{x, y});
  }
  std::set<std::vector<int>> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << atoms.size()); ++mask) {
    std::vector<int> s;
    for (size_t j = 0; j < atoms.size(); ++j)
      if (mask >> j & 1) s.insert(s.end(), atoms[j].begin(), atoms[j].end());
    std::sort(s.begin(), s.end());
    if (drg_array(adjacency(mod, s))) out.insert(s);
  }
  return out;
}

}  // namespace oracle
