#include <bitset>

#include "drg/cayley.hpp"

namespace drg {

namespace {

constexpr int kMaxVertices = 256;
using Bits = std::bitset<kMaxVertices>;

struct CliqueSearch {
  std::vector<Bits> adj;
  int best = 0;

  // Greedy colouring of P gives an upper bound per vertex (Tomita-style).
  void expand(int size, Bits p) {
    while (p.any()) {
      std::vector<int> order, colour;
      Bits uncoloured = p;
      int c = 0;
      while (uncoloured.any()) {
        ++c;
        Bits q = uncoloured;
        while (q.any()) {
          int v = static_cast<int>(q._Find_first());
          q.reset(v);
          q &= ~adj[v];
          uncoloured.reset(v);
          order.push_back(v);
          colour.push_back(c);
        }
      }
      for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
        if (size + colour[i] <= best) return;
        int v = order[i];
        Bits np = p & adj[v];
        if (np.none()) {
          if (size + 1 > best) best = size + 1;
        } else {
          expand(size + 1, np);
        }
        p.reset(v);
      }
    }
  }
};

}  // namespace

int clique_number(const CayleyGraph& g) {
  const int n = g.order();
  if (n > 200) throw Error(ErrorCode::size_limit_exceeded, "clique search limited to 200 vertices");
  if (n == 1) return 1;
  CliqueSearch cs;
  cs.adj.resize(n);
  const AbelianGroup& grp = g.group();
  for (int x = 0; x < n; ++x)
    for (Elem s : g.connection()) cs.adj[x].set(grp.add(x, s));
  // vertex-transitive: some maximum clique contains 0
  Bits p;
  for (Elem s : g.connection()) p.set(s);
  cs.best = 1;
  cs.expand(1, p);
  return cs.best;
}

}  // namespace drg
