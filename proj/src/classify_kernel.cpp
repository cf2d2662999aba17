#include "drg/classify_kernel.hpp"

#include <omp.h>

#include <algorithm>
#include <array>
#include <bit>

#include "drg/cayley.hpp"

namespace drg {

long long SubsetBasis::count() const {
  if (size() > 62) throw Error(ErrorCode::limit_exceeded, "more than 2^62 connection sets");
  return 1LL << size();
}

ElementSet SubsetBasis::subset(long long index) const {
  ElementSet s;
  for (int j = 0; j < size(); ++j)
    if (index >> j & 1) s.insert(s.end(), atoms[j].begin(), atoms[j].end());
  std::sort(s.begin(), s.end());
  return s;
}

SubsetBasis subset_basis(const AbelianGroup& g) {
  SubsetBasis b{g, {}};
  for (Elem x = 1; x < g.order(); ++x) {
    Elem y = g.neg(x);
    if (y == x)
      b.atoms.push_back({x});
    else if (x < y)
      b.atoms.push_back({x, y});
  }
  return b;
}

void enumerate_connection_sets(const AbelianGroup& g, const std::function<void(const ElementSet&)>& visit,
                               long long limit) {
  SubsetBasis b = subset_basis(g);
  if (b.size() > 62 || b.count() > limit)
    throw Error(ErrorCode::limit_exceeded, "2^" + std::to_string(b.size()) + " connection sets exceed the limit of " +
                                               std::to_string(limit));
  for (long long i = 0; i < b.count(); ++i) visit(b.subset(i));
}

std::vector<int> pruning_sample(const AutomorphismGroup& aut) {
  std::vector<int> out;
  const int n = aut.order();
  if (n <= 64) {
    for (int i = 1; i < n; ++i) out.push_back(i);
  } else {
    for (int i = 0; i < 32; ++i) out.push_back(1 + static_cast<int>(static_cast<long long>(i) * (n - 1) / 32));
  }
  return out;
}

namespace {

using Mask = std::uint64_t;
// 8 byte-indexed lookup tables; image of a mask is the OR of 8 lookups
using ByteTable = std::array<std::array<Mask, 256>, 8>;

ByteTable make_table(const std::vector<Elem>& image) {
  ByteTable t{};
  for (int c = 0; c < 8; ++c)
    for (int byte = 0; byte < 256; ++byte) {
      Mask m = 0;
      for (int j = 0; j < 8; ++j) {
        int x = 8 * c + j;
        if (byte >> j & 1 && x < static_cast<int>(image.size())) m |= Mask{1} << image[x];
      }
      t[c][byte] = m;
    }
  return t;
}

inline Mask apply(const ByteTable& t, Mask m) {
  Mask out = 0;
  for (int c = 0; c < 8; ++c) out |= t[c][(m >> (8 * c)) & 0xff];
  return out;
}

// A < B as sorted element lists
inline bool lex_less(Mask a, Mask b) {
  Mask diff = a ^ b;
  if (!diff) return false;
  Mask low = diff & -diff;
  Mask above = ~((low << 1) - 1);
  if (a & low) return (b & above) != 0;
  return (a & above) == 0;
}

struct Tables {
  int n = 0;
  Mask full = 0;
  std::vector<ByteTable> translate;  // per element x: s -> s + x
  std::vector<ByteTable> autos;      // pruning automorphisms
  std::vector<std::vector<Mask>> index_chunks;  // 11-bit pieces of the subset index
};

Tables build_tables(const SubsetBasis& basis, const AutomorphismGroup* prune) {
  const AbelianGroup& g = basis.group;
  Tables t;
  t.n = g.order();
  if (t.n > 64) throw Error(ErrorCode::size_limit_exceeded, "bitset kernel needs |G| <= 64");
  t.full = t.n == 64 ? ~Mask{0} : (Mask{1} << t.n) - 1;
  std::vector<Elem> image(t.n);
  for (Elem x = 0; x < t.n; ++x) {
    for (Elem y = 0; y < t.n; ++y) image[y] = g.add(y, x);
    t.translate.push_back(make_table(image));
  }
  if (prune)
    for (int i : pruning_sample(*prune)) t.autos.push_back(make_table(prune->maps[i]));
  for (int lo = 0; lo < basis.size(); lo += 11) {
    int width = std::min(11, basis.size() - lo);
    std::vector<Mask> chunk(size_t{1} << width, 0);
    for (size_t v = 0; v < chunk.size(); ++v)
      for (int j = 0; j < width; ++j)
        if (v >> j & 1)
          for (Elem x : basis.atoms[lo + j]) chunk[v] |= Mask{1} << x;
    t.index_chunks.push_back(std::move(chunk));
  }
  return t;
}

enum class Verdict { disconnected, not_drg, drg };

Verdict test_mask(const Tables& t, Mask s) {
  Mask prev = 0, cur = 1, visited = 1;
  bool regular = true;
  std::array<Mask, 64> nb;
  while (cur) {
    Mask next = 0;
    int cnt = 0;
    for (Mask m = cur; m; m &= m - 1) {
      Mask row = apply(t.translate[std::countr_zero(m)], s);
      nb[cnt++] = row;
      next |= row;
    }
    next &= ~visited;
    if (regular) {
      int c0 = std::popcount(nb[0] & prev), a0 = std::popcount(nb[0] & cur), b0 = std::popcount(nb[0] & next);
      for (int i = 1; i < cnt && regular; ++i)
        regular = std::popcount(nb[i] & prev) == c0 && std::popcount(nb[i] & cur) == a0 &&
                  std::popcount(nb[i] & next) == b0;
    }
    visited |= next;
    prev = cur;
    cur = next;
  }
  if (visited != t.full) return Verdict::disconnected;
  return regular ? Verdict::drg : Verdict::not_drg;
}

}  // namespace

KernelResult run_bitset_kernel(const SubsetBasis& basis, KernelOptions opt) {
  const long long total = basis.count();
  const Tables t = build_tables(basis, opt.prune);
  const int jobs = std::max(1, opt.jobs);
  std::vector<KernelResult> part(jobs);

#pragma omp parallel for schedule(static, 1) num_threads(jobs)
  for (int w = 0; w < jobs; ++w) {
    const long long lo = total * w / jobs, hi = total * (w + 1) / jobs;
    KernelResult& r = part[w];
    for (long long idx = lo; idx < hi; ++idx) {
      Mask s = 0;
      for (size_t c = 0; c < t.index_chunks.size(); ++c) s |= t.index_chunks[c][(idx >> (11 * c)) & 0x7ff];
      bool skip = false;
      for (const ByteTable& a : t.autos)
        if (lex_less(apply(a, s), s)) {
          skip = true;
          break;
        }
      if (skip) {
        ++r.pruned;
        continue;
      }
      ++r.examined;
      Verdict v = test_mask(t, s);
      if (v == Verdict::disconnected)
        ++r.disconnected;
      else if (v == Verdict::drg)
        r.drg_indices.push_back(idx);
    }
  }

  KernelResult out;
  for (auto& r : part) {
    out.examined += r.examined;
    out.pruned += r.pruned;
    out.disconnected += r.disconnected;
    out.drg_indices.insert(out.drg_indices.end(), r.drg_indices.begin(), r.drg_indices.end());
  }
  return out;
}

KernelResult run_reference_kernel(const SubsetBasis& basis, const AutomorphismGroup* prune) {
  const long long total = basis.count();
  std::vector<int> sample;
  if (prune) sample = pruning_sample(*prune);
  KernelResult out;
  for (long long idx = 0; idx < total; ++idx) {
    ElementSet s = basis.subset(idx);
    bool skip = false;
    for (int i : sample)
      if (apply_automorphism(prune->maps[i], s) < s) {
        skip = true;
        break;
      }
    if (skip) {
      ++out.pruned;
      continue;
    }
    ++out.examined;
    CayleyGraph g(basis.group, s);
    if (!g.connected()) {
      ++out.disconnected;
      continue;
    }
    if (check_distance_regular(g).distance_regular()) out.drg_indices.push_back(idx);
  }
  return out;
}

}  // namespace drg
