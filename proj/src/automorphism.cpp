#include "drg/automorphism.hpp"

#include <algorithm>

namespace drg {

AutomorphismGroup automorphism_group(const AbelianGroup& g, long long limit) {
  const int r = g.rank();
  const int n = g.order();
  std::vector<std::vector<Elem>> images(r);
  long long candidates = 1;
  for (int i = 0; i < r; ++i) {
    for (Elem x = 0; x < n; ++x)
      if (g.mul(g.moduli()[i], x) == 0) images[i].push_back(x);
    candidates *= static_cast<long long>(images[i].size());
    if (candidates > limit)
      throw Error(ErrorCode::aut_computation_limit, "automorphism search would try more than " +
                                                        std::to_string(limit) + " candidates");
  }
  std::vector<Elem> basis(r);
  for (int i = 0; i < r; ++i) {
    GroupElement e;
    e.coords.assign(r, 0);
    e.coords[i] = 1;
    basis[i] = g.index_of(e);
  }
  AutomorphismGroup out{g, {}};
  std::vector<size_t> pick(r, 0);
  std::vector<Elem> map(n);
  std::vector<char> seen(n);
  while (true) {
    // x = sum x_i e_i  ->  sum x_i b_i, built along the lexicographic order
    map[0] = 0;
    std::fill(seen.begin(), seen.end(), 0);
    seen[0] = 1;
    bool bijective = true;
    for (Elem x = 1; x < n && bijective; ++x) {
      int last = r - 1;
      while (g.coord(x, last) == 0) --last;
      Elem prev = g.sub(x, basis[last]);
      map[x] = g.add(map[prev], images[last][pick[last]]);
      if (seen[map[x]]) bijective = false;
      seen[map[x]] = 1;
    }
    if (bijective) out.maps.push_back(map);
    int t = r - 1;
    while (t >= 0 && ++pick[t] == images[t].size()) pick[t--] = 0;
    if (t < 0) break;
  }
  // identity first
  auto id = std::find_if(out.maps.begin(), out.maps.end(), [](const std::vector<Elem>& m) {
    for (size_t i = 0; i < m.size(); ++i)
      if (m[i] != static_cast<Elem>(i)) return false;
    return true;
  });
  if (id == out.maps.end()) bug_trap("identity automorphism missing");
  std::iter_swap(out.maps.begin(), id);
  return out;
}

ElementSet apply_automorphism(const std::vector<Elem>& map, const ElementSet& s) {
  ElementSet out;
  out.reserve(s.size());
  for (Elem x : s) out.push_back(map[x]);
  std::sort(out.begin(), out.end());
  return out;
}

ElementSet canonicalize(const AutomorphismGroup& aut, const ElementSet& s) {
  ElementSet best = s;
  for (const auto& m : aut.maps) {
    ElementSet img = apply_automorphism(m, s);
    if (img < best) best = std::move(img);
  }
  return best;
}

std::vector<ElementSet> orbit(const AutomorphismGroup& aut, const ElementSet& s) {
  std::vector<ElementSet> out;
  for (const auto& m : aut.maps) out.push_back(apply_automorphism(m, s));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace drg
