#include "drg/classifier.hpp"

#include <chrono>
#include <set>
#include <sstream>

#include "drg/numtheory.hpp"

namespace drg {

std::optional<AutomorphismGroup> try_automorphism_group(const AbelianGroup& g) {
  if (g.order() > 200) return std::nullopt;
  try {
    return automorphism_group(g);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::aut_computation_limit) throw;
    return std::nullopt;
  }
}

DrgRecord make_record(const CayleyGraph& g, const std::optional<AutomorphismGroup>& aut) {
  DrgCheck chk = check_distance_regular(g);
  if (!chk.distance_regular()) bug_trap("record requested for a set that is not distance-regular: " +
                                        g.group().format_set(g.connection()));
  DrgRecord r;
  r.connection = g.connection();
  r.canonical = aut ? canonicalize(*aut, r.connection) : r.connection;
  r.array = *chk.array;
  r.spectrum = spectrum(g);
  Imprimitivity imp = imprimitivity(g, chk.partition, r.array);
  r.bipartite = imp.bipartite;
  r.antipodal = imp.antipodal;
  r.family = detect_family(g, chk.partition, r.array, imp);
  r.primitive = true;
  for (int i = 1; i <= chk.partition.diameter(); ++i)
    if (generated_subgroup(g.group(), chk.partition.classes[i]).order() != g.order()) r.primitive = false;
  return r;
}

ClassificationReport classify_group(const SearchSpec& spec) {
  const auto start = std::chrono::steady_clock::now();
  const AbelianGroup& g = spec.group;
  if (g.order() < 2) throw Error(ErrorCode::precondition, "classification needs |G| >= 2");
  SubsetBasis basis = subset_basis(g);
  if (basis.size() > 62 || basis.count() > spec.max_subsets)
    throw Error(ErrorCode::limit_exceeded, "2^" + std::to_string(basis.size()) +
                                               " connection sets exceed the limit of " +
                                               std::to_string(spec.max_subsets));

  ClassificationReport rep;
  rep.group = g;
  rep.subsets = basis.count();
  std::optional<AutomorphismGroup> aut = try_automorphism_group(g);
  rep.aut_order = aut ? aut->order() : 0;
  rep.aut_reduced = spec.use_aut_reduction && aut.has_value();
  const AutomorphismGroup* prune = rep.aut_reduced ? &*aut : nullptr;

  KernelResult kr = (g.order() <= 64 && !spec.reference) ? run_bitset_kernel(basis, {spec.jobs, prune})
                                                         : run_reference_kernel(basis, prune);
  rep.examined = kr.examined;
  rep.pruned = kr.pruned;
  rep.disconnected = kr.disconnected;
  rep.connected = kr.examined - kr.disconnected;

  std::set<ElementSet> sets;
  for (long long idx : kr.drg_indices) {
    ElementSet s = basis.subset(idx);
    if (prune) {
      for (auto& t : orbit(*aut, s)) sets.insert(std::move(t));
    } else {
      sets.insert(std::move(s));
    }
  }
  for (const ElementSet& s : sets) {
    rep.drgs.push_back(make_record(CayleyGraph(g, s), aut));
    const DrgRecord& r = rep.drgs.back();
    ++rep.family_counts[r.family.label()];
    if (r.family.kind == Family::Kind::none) rep.anomalies.push_back(static_cast<int>(rep.drgs.size()) - 1);
  }
  rep.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

CatalogDiff diff_catalog(const std::vector<CatalogEntry>& found, const std::vector<CatalogEntry>& expected) {
  std::map<std::pair<ElementSet, std::string>, int> balance;
  for (const auto& e : found) ++balance[{e.connection, e.family.label()}];
  for (const auto& e : expected) --balance[{e.connection, e.family.label()}];
  CatalogDiff d;
  for (const auto& [key, n] : balance) {
    CatalogEntry e{key.first, parse_family(key.second)};
    for (int i = 0; i < n; ++i) d.unexpected.push_back(e);
    for (int i = 0; i < -n; ++i) d.missing.push_back(e);
  }
  return d;
}

namespace {

std::vector<CatalogEntry> found_entries(const ClassificationReport& rep) {
  std::vector<CatalogEntry> out;
  for (const auto& r : rep.drgs) out.push_back({r.connection, r.family});
  return out;
}

}  // namespace

TheoremCheck verify_main_theorem(const SearchSpec& spec) {
  TheoremCheck t;
  t.expected = expected_catalog(spec.group);
  t.report = classify_group(spec);
  t.diff = diff_catalog(found_entries(t.report), t.expected);
  const int n = spec.group.moduli()[0];
  for (const auto& r : t.report.drgs)
    if (r.family.kind == Family::Kind::crown && n % 4 != 2) t.diff.crown_congruence.push_back({r.connection, r.family});
  return t;
}

TheoremCheck verify_circulant_theorem(const SearchSpec& spec) {
  if (spec.group.rank() != 1 || spec.group.order() > 33)
    throw Error(ErrorCode::precondition, "circulant check needs Z_n with n <= 33");
  TheoremCheck t;
  t.expected = expected_circulant_catalog(spec.group.order());
  t.report = classify_group(spec);
  t.diff = diff_catalog(found_entries(t.report), t.expected);
  return t;
}

NonexistenceReport nonexistence_report(const ClassificationReport& report) {
  const AbelianGroup& g = report.group;
  if (g.rank() != 2 || !is_prime(g.moduli()[1]) || g.moduli()[0] % g.moduli()[1] != 0)
    throw Error(ErrorCode::precondition, "nonexistence report needs Z_n + Z_p with p | n");
  NonexistenceReport out;
  out.pp_exempt = g.moduli()[0] == g.moduli()[1];
  auto dump = [&](const DrgRecord& r, const std::string& what) {
    std::ostringstream os;
    os << what << " over " << g.to_string() << ": S = " << g.format_set(r.connection) << ", array "
       << r.array.to_string() << ", family " << r.family.label() << (r.bipartite ? ", bipartite" : "")
       << (r.antipodal ? ", antipodal" : "");
    bug_trap(os.str());
  };
  for (const auto& r : report.drgs) {
    ++out.drgs;
    const int d = r.array.diameter();
    if (r.antipodal && !r.bipartite && d == 3) {
      ++out.antipodal_d3;
      dump(r, "antipodal non-bipartite diameter-3 DRG");
    }
    if (r.antipodal && r.bipartite && d == 4) {
      ++out.antipodal_bipartite_d4;
      dump(r, "antipodal bipartite diameter-4 DRG");
    }
    if (r.primitive) {
      ++out.primitive;
      if (r.family.kind != Family::Kind::complete) {
        ++out.primitive_noncomplete;
        if (!out.pp_exempt) dump(r, "primitive non-complete DRG");
      }
    }
  }
  return out;
}

}  // namespace drg
