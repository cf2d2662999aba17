#include <algorithm>

#include "drg/cayley.hpp"

namespace drg {

std::string graph6_encode(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n < 0 || n > 258047) throw Error(ErrorCode::size_limit_exceeded, "graph6 supports at most 258047 vertices");
  std::string out;
  if (n <= 62) {
    out += static_cast<char>(n + 63);
  } else {
    out += '~';
    for (int shift : {12, 6, 0}) out += static_cast<char>(((n >> shift) & 63) + 63);
  }
  // upper triangle, column by column: (0,1),(0,2),(1,2),(0,3),...
  const long long bits = static_cast<long long>(n) * (n - 1) / 2;
  std::vector<char> bit(bits, 0);
  for (auto [a, b] : edges) {
    int i = std::min(a, b), j = std::max(a, b);
    if (i == j || i < 0 || j >= n) throw Error(ErrorCode::precondition, "bad edge for graph6");
    bit[static_cast<long long>(j) * (j - 1) / 2 + i] = 1;
  }
  for (long long k = 0; k < bits; k += 6) {
    int v = 0;
    for (int t = 0; t < 6; ++t) v = (v << 1) | (k + t < bits ? bit[k + t] : 0);
    out += static_cast<char>(v + 63);
  }
  return out;
}

std::pair<int, std::vector<std::pair<int, int>>> graph6_decode(const std::string& s) {
  if (s.empty()) throw Error(ErrorCode::usage, "empty graph6 string");
  size_t pos = 0;
  int n;
  if (s[0] != '~') {
    n = s[0] - 63;
    pos = 1;
  } else {
    if (s.size() < 4 || s[1] == '~') throw Error(ErrorCode::usage, "unsupported graph6 size header");
    n = ((s[1] - 63) << 12) | ((s[2] - 63) << 6) | (s[3] - 63);
    pos = 4;
  }
  const long long bits = static_cast<long long>(n) * (n - 1) / 2;
  if (static_cast<long long>(s.size() - pos) != (bits + 5) / 6) throw Error(ErrorCode::usage, "graph6 length mismatch");
  std::vector<std::pair<int, int>> edges;
  long long k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k) {
      int v = s[pos + k / 6] - 63;
      if (v < 0 || v > 63) throw Error(ErrorCode::usage, "invalid graph6 character");
      if ((v >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  std::sort(edges.begin(), edges.end());
  return {n, edges};
}

std::string to_graph6(const CayleyGraph& g) {
  std::vector<std::pair<int, int>> edges;
  const AbelianGroup& grp = g.group();
  for (int x = 0; x < g.order(); ++x)
    for (Elem s : g.connection()) {
      int y = grp.add(x, s);
      if (x < y) edges.emplace_back(x, y);
    }
  return graph6_encode(g.order(), edges);
}

}  // namespace drg
