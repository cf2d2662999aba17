#include "drg/cli.hpp"

#include <omp.h>

#include <CLI11.hpp>
#include <cctype>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

#include "drg/classifier.hpp"
#include "drg/constructions.hpp"
#include "drg/design_sets.hpp"
#include "drg/numtheory.hpp"
#include "drg/report.hpp"
#include "drg/schur.hpp"

namespace drg {

namespace {

constexpr int kOk = 0, kFalse = 1, kUsage = 2, kBug = 3;

struct Options {
  std::string group;
  std::string set;
  std::string format = "text";
  int jobs = 0;
  long long limit = 1LL << 22;
  bool no_aut = false;
  int precision = 12;
  // subcommand specific
  std::string partition, ordering, subgroup, poly, points, input;
  int p = 0, v = 0, n = 0, max_n = 30, psi = 1;
  long long bound = 0;
  bool trivial = false;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) out.push_back(cur);
  return out;
}

// "kind:key=value:key=value"
std::map<std::string, std::string> shorthand_args(const std::vector<std::string>& parts) {
  std::map<std::string, std::string> kv;
  for (size_t i = 1; i < parts.size(); ++i) {
    auto eq = parts[i].find('=');
    if (eq == std::string::npos) throw Error(ErrorCode::usage, "expected key=value in '" + parts[i] + "'");
    kv[parts[i].substr(0, eq)] = parts[i].substr(eq + 1);
  }
  return kv;
}

Subgroup subgroup_from(const AbelianGroup& g, const std::string& gens) {
  ElementSet e = g.parse_set(gens);
  return generated_subgroup(g, e);
}

// Returns the graph and, for family shorthands, the predicted array.
std::pair<CayleyGraph, std::optional<Construction>> build_graph(const AbelianGroup& g, const std::string& spec) {
  if (spec.empty() || !std::isalpha(static_cast<unsigned char>(spec[0])))
    return {CayleyGraph(g, g.parse_set(spec)), std::nullopt};
  auto parts = split(spec, ':');
  auto kv = shorthand_args(parts);
  const std::string& kind = parts[0];
  auto need_rank2_pp = [&] {
    if (g.rank() != 2 || g.moduli()[0] != g.moduli()[1] || !is_prime(g.moduli()[0]))
      throw Error(ErrorCode::usage, kind + " needs the group p,p");
    return g.moduli()[0];
  };
  std::optional<Construction> c;
  if (kind == "complete") {
    c = complete_graph(g);
  } else if (kind == "multipartite") {
    if (!kv.count("H")) throw Error(ErrorCode::usage, "multipartite needs H=<generators>");
    c = complete_multipartite(g, subgroup_from(g, kv["H"]));
  } else if (kind == "crown") {
    if (!kv.count("a")) throw Error(ErrorCode::usage, "crown needs a=<element>");
    Elem a = g.parse_element(kv["a"]);
    if (kv.count("H")) {
      c = crown(g, subgroup_from(g, kv["H"]), a);
    } else {
      if (g.order() % 2 != 0) throw Error(ErrorCode::usage, "crown needs a group of even order");
      for (const auto& h : subgroups_of_order(g, g.order() / 2))
        if (!h.contains(a)) {
          c = crown(g, h, a);
          break;
        }
      if (!c) throw Error(ErrorCode::usage, "no index-2 subgroup avoids a");
    }
  } else if (kind == "tdlg") {
    int p = need_rank2_pp();
    if (!kv.count("r")) throw Error(ErrorCode::usage, "tdlg needs r=<count>");
    c = td_line_graph(p, standard_order_p_subgroups(p, std::stoi(kv["r"])));
  } else if (kind == "cycle") {
    Elem gen = kv.count("g") ? g.parse_element(kv["g"]) : (g.rank() == 1 ? 1 : -1);
    if (gen < 0) throw Error(ErrorCode::usage, "cycle needs g=<element> outside cyclic groups");
    c = cycle(g, gen);
  } else if (kind == "paley") {
    if (g.rank() != 1) throw Error(ErrorCode::usage, "paley needs a cyclic group of prime order");
    c = paley(g.order());
  } else if (kind == "hamming2") {
    c = hamming2(need_rank2_pp());
  } else {
    throw Error(ErrorCode::usage, "unknown connection shorthand '" + kind + "'");
  }
  if (!(c->graph.group() == g)) throw Error(ErrorCode::group_mismatch, "shorthand built over " + c->graph.group().to_string());
  DrgCheck chk = check_distance_regular(c->graph);
  if (!chk.distance_regular() || !(*chk.array == c->predicted))
    bug_trap("construction " + spec + " does not have its predicted array " + c->predicted.to_string());
  return {c->graph, c};
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

int exit_for(const Error& e) {
  if (e.is_bug_trap()) return kBug;
  switch (e.code()) {
    case ErrorCode::not_connected:
    case ErrorCode::not_distance_regular:
    case ErrorCode::not_q_polynomial:
    case ErrorCode::not_antipodal:
    case ErrorCode::not_bipartite:
      return kFalse;
    default:
      return kUsage;
  }
}

SearchSpec search_spec(const Options& o, AbelianGroup g) {
  SearchSpec s;
  s.group = std::move(g);
  s.use_aut_reduction = !o.no_aut;
  s.jobs = o.jobs > 0 ? o.jobs : omp_get_max_threads();
  s.max_subsets = o.limit;
  return s;
}

int cmd_graph(const Options& o, std::ostream& out, bool verify) {
  AbelianGroup g = AbelianGroup::parse(o.group);
  auto [graph, con] = build_graph(g, o.set);
  ReportOptions ro{o.precision};
  if (o.format == "graph6")
    out << to_graph6(graph) << "\n";
  else if (o.format == "json")
    emit(out, graph_report(graph, ro));
  else
    out << graph_text(graph);
  if (!verify) return kOk;
  return graph.connected() && check_distance_regular(graph).distance_regular() ? kOk : kFalse;
}

int cmd_spectrum(const Options& o, std::ostream& out) {
  AbelianGroup g = AbelianGroup::parse(o.group);
  CayleyGraph graph = build_graph(g, o.set).first;
  Eigensystem e = spectrum(graph);
  if (o.format == "json") {
    Json j;
    j["group"] = o.group;
    j["connection"] = set_json(g, graph.connection());
    j["spectrum"] = spectrum_json(e, {o.precision});
    j["integral"] = is_integral(e);
    emit(out, j);
  } else {
    for (const auto& v : e.values)
      out << std::setprecision(o.precision) << static_cast<double>(v.numeric) << "  x" << v.multiplicity << "  "
          << v.exact.to_string() << "\n";
  }
  return kOk;
}

int cmd_schur(const Options& o, std::ostream& out) {
  AbelianGroup g = AbelianGroup::parse(o.group);
  if (!o.partition.empty()) {
    std::vector<ElementSet> classes;
    for (const auto& c : split(o.partition, '|')) classes.push_back(g.parse_set(c));
    SchurCheck chk = verify_schur_ring(g, classes);
    if (o.format == "json") {
      Json j = chk.ring ? schur_json(*chk.ring) : Json{{"group", o.group}};
      j["schur_ring"] = chk.ring.has_value();
      j["violation"] = chk.violation ? Json(chk.violation->to_string()) : Json(nullptr);
      emit(out, j);
    } else {
      out << (chk.ring ? "Schur ring of rank " + std::to_string(chk.ring->rank()) : "not a Schur ring: " + chk.violation->to_string())
          << "\n";
    }
    return chk.ring ? kOk : kFalse;
  }
  CayleyGraph graph = build_graph(g, o.set).first;
  SchurRing sr = distance_module(graph);
  if (o.format == "json") {
    emit(out, schur_json(sr));
  } else {
    out << "distance module, rank " << sr.rank() << (sr.primitive() ? ", primitive" : "") << "\n";
    for (int i = 0; i < sr.rank(); ++i) out << "  N_" << i << " = " << g.format_set(sr.classes[i]) << "\n";
  }
  return kOk;
}

int cmd_krein(const Options& o, std::ostream& out) {
  AbelianGroup g = AbelianGroup::parse(o.group);
  CayleyGraph graph = build_graph(g, o.set).first;
  SchurRing sr = distance_module(graph);
  SchurRing dual = dual_schur_ring(sr);
  Tensor3 q = krein_parameters(sr);
  std::vector<long double> qn = krein_parameters_numeric(sr);
  long double dev = 0;
  for (size_t i = 0; i < qn.size(); ++i) dev = std::max(dev, std::abs(qn[i] - static_cast<long double>(q.v[i])));
  if (o.format == "json") {
    Json j;
    j["group"] = o.group;
    j["connection"] = set_json(g, graph.connection());
    Json cls = Json::array();
    for (const auto& c : dual.classes) cls.push_back(set_json(g, c));
    j["dual_classes"] = cls;
    j["q"] = tensor_json(q);
    j["numeric_max_deviation"] = static_cast<double>(dev);
    emit(out, j);
  } else {
    const int d = q.n;
    for (int k = 0; k < d; ++k) {
      out << "q^" << k << ":\n";
      for (int i = 0; i < d; ++i) {
        out << "  ";
        for (int j = 0; j < d; ++j) out << std::setw(5) << q(i, j, k);
        out << "\n";
      }
    }
    out << "numeric deviation " << static_cast<double>(dev) << "\n";
  }
  return kOk;
}

int cmd_dual(const Options& o, std::ostream& out) {
  AbelianGroup g = AbelianGroup::parse(o.group);
  CayleyGraph graph = build_graph(g, o.set).first;
  SchurRing sr = distance_module(graph);
  std::vector<std::vector<int>> orderings;
  if (!o.ordering.empty()) {
    std::vector<int> tau;
    for (const auto& t : split(o.ordering, ',')) tau.push_back(std::stoi(t));
    orderings.push_back(tau);
  } else {
    orderings = q_polynomial_orderings(sr);
  }
  Json list = Json::array();
  for (const auto& tau : orderings) {
    CayleyGraph h = dual_graph(graph, tau);
    if (o.format == "json") {
      Json j = graph_report(h, {o.precision});
      j["ordering"] = tau;
      list.push_back(j);
    } else if (o.format == "graph6") {
      out << to_graph6(h) << "\n";
    } else {
      out << "ordering";
      for (int t : tau) out << " " << t;
      out << "\n" << graph_text(h);
    }
  }
  if (o.format == "json") emit(out, list);
  if (orderings.empty() && o.format == "text") out << "not Q-polynomial\n";
  return orderings.empty() ? kFalse : kOk;
}

int cmd_design(const std::string& which, const Options& o, std::ostream& out) {
  Json j;
  int code = kOk;
  if (which == "rds") {
    AbelianGroup g = AbelianGroup::parse(o.group);
    ElementSet d = g.parse_set(o.set), n = g.parse_set(o.subgroup);
    RdsCheck chk = is_relative_difference_set(g, d, n);
    if (chk.params) {
      j["rds"] = true;
      j["m"] = chk.params->m;
      j["r"] = chk.params->r;
      j["k"] = chk.params->k;
      j["mu"] = chk.params->mu;
    } else {
      j["rds"] = false;
      j["witness"] = g.format_element(chk.witness);
      j["coefficient"] = chk.coefficient;
      code = kFalse;
    }
  } else if (which == "pas") {
    AbelianGroup g = AbelianGroup::parse(o.group);
    std::vector<std::int64_t> f;
    for (const auto& t : split(o.poly, ',')) f.push_back(std::stoll(t));
    PasCheck chk = is_polynomial_addition_set(g, g.parse_set(o.set), f);
    j["pas"] = chk.m.has_value();
    if (chk.m)
      j["m"] = *chk.m;
    else
      j["residual"] = g.format_element(chk.residual);
    code = chk.m ? kOk : kFalse;
  } else if (which == "directions") {
    std::vector<std::pair<int, int>> w;
    for (const auto& pt : split(o.points, ';')) {
      auto c = split(pt, ',');
      if (c.size() != 2) throw Error(ErrorCode::usage, "points are x,y pairs separated by ';'");
      w.push_back({std::stoi(c[0]), std::stoi(c[1])});
    }
    auto dir = directions(o.p, w);
    j["directions"] = std::vector<int>(dir.begin(), dir.end());
    j["count"] = dir.size();
    if (w.size() >= 2 && static_cast<int>(w.size()) <= o.p)
      j["result"] = direction_bound_check(o.p, w) == DirectionResult::collinear ? "collinear" : "bound_holds";
  } else if (which == "pas-search") {
    auto hits = monomial_pas_search(o.v, o.n, o.bound, {o.trivial});
    Json a = Json::array();
    for (const auto& h : hits) a.push_back({{"d", h.d}, {"k", h.k}, {"b", h.b}});
    j["hits"] = a;
    code = hits.empty() ? kOk : kFalse;
  } else if (which == "level-set") {
    AbelianGroup g = AbelianGroup::parse(o.group);
    CayleyGraph graph = build_graph(g, o.set).first;
    LevelSetCertificate c = level_set_certificate(graph, o.psi);
    j["diameter"] = c.diameter;
    j["psi"] = c.psi;
    j["b"] = set_json(c.m_group, c.b);
    j["theta_hi"] = c.theta_hi.to_string();
    j["theta_lo"] = c.theta_lo.to_string();
    j["srg_checked"] = c.srg_checked;
    j["valid"] = c.valid();
    code = c.valid() ? kOk : kFalse;
  }
  if (o.format == "json") {
    emit(out, j);
  } else {
    for (const auto& [k, v] : j.items()) out << k << ": " << v.dump() << "\n";
  }
  return code;
}

int cmd_classify(const Options& o, std::ostream& out) {
  ClassificationReport r = classify_group(search_spec(o, AbelianGroup::parse(o.group)));
  if (o.format == "json")
    emit(out, classification_json(r, {o.precision}));
  else
    out << summary_table({r});
  return kOk;
}

void theorem_text(std::ostream& out, const TheoremCheck& t) {
  const AbelianGroup& g = t.report.group;
  out << g.to_string() << ": " << t.report.drgs.size() << " DRG sets, " << t.expected.size() << " expected, "
      << (t.verified() ? "verified" : "DIFF") << "\n";
  for (const auto& e : t.diff.missing) out << "  missing    " << e.family.label() << "  " << g.format_set(e.connection) << "\n";
  for (const auto& e : t.diff.unexpected) out << "  unexpected " << e.family.label() << "  " << g.format_set(e.connection) << "\n";
  for (const auto& e : t.diff.crown_congruence) out << "  crown with n != 2 mod 4  " << g.format_set(e.connection) << "\n";
  for (int i : t.report.anomalies) out << "  anomaly    " << g.format_set(t.report.drgs[i].connection) << "\n";
}

int cmd_verify_theorem(const Options& o, std::ostream& out) {
  TheoremCheck t = verify_main_theorem(search_spec(o, AbelianGroup::parse(o.group)));
  NonexistenceReport ne = nonexistence_report(t.report);
  if (o.format == "json") {
    Json j = theorem_json(t, {o.precision});
    j["nonexistence"] = {{"antipodal_d3", ne.antipodal_d3},
                         {"antipodal_bipartite_d4", ne.antipodal_bipartite_d4},
                         {"primitive_noncomplete", ne.primitive_noncomplete},
                         {"holds", ne.holds()}};
    emit(out, j);
  } else {
    theorem_text(out, t);
    out << summary_table({t.report});
  }
  return t.verified() ? kOk : kFalse;
}

int cmd_verify_circulant(const Options& o, std::ostream& out) {
  std::vector<int> ns;
  if (!o.group.empty()) {
    AbelianGroup g = AbelianGroup::parse(o.group);
    if (g.rank() != 1) throw Error(ErrorCode::usage, "verify-circulant needs a cyclic group");
    ns.push_back(g.order());
  } else {
    for (int n = 2; n <= o.max_n; ++n) ns.push_back(n);
  }
  bool all = true;
  Json list = Json::array();
  std::vector<ClassificationReport> reps;
  for (int n : ns) {
    TheoremCheck t = verify_circulant_theorem(search_spec(o, AbelianGroup({n})));
    all = all && t.verified();
    if (o.format == "json")
      list.push_back(theorem_json(t, {o.precision}));
    else
      theorem_text(out, t);
    reps.push_back(std::move(t.report));
  }
  if (o.format == "json")
    emit(out, list);
  else
    out << summary_table(reps);
  return all ? kOk : kFalse;
}

int cmd_recheck(const Options& o, std::ostream& out) {
  Json j;
  try {
    if (o.input == "-") {
      j = Json::parse(std::cin);
    } else {
      std::ifstream in(o.input);
      if (!in) throw Error(ErrorCode::usage, "cannot open " + o.input);
      j = Json::parse(in);
    }
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::usage, std::string("malformed JSON: ") + e.what());
  }
  std::vector<Json> reports = j.is_array() ? std::vector<Json>(j.begin(), j.end()) : std::vector<Json>{j};
  RecheckResult total;
  for (const auto& r : reports) {
    RecheckResult one = recheck(r);
    total.records += one.records;
    total.mismatches.insert(total.mismatches.end(), one.mismatches.begin(), one.mismatches.end());
  }
  if (o.format == "json") {
    emit(out, {{"records", total.records}, {"mismatches", total.mismatches}, {"ok", total.ok()}});
  } else {
    out << total.records << " records rechecked, " << total.mismatches.size() << " mismatches\n";
    for (const auto& m : total.mismatches) out << "  " << m << "\n";
  }
  return total.ok() ? kOk : kFalse;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"drgtool: distance-regular Cayley graphs over finite abelian groups"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  app.add_option("--format", o.format, "json, text or graph6")->check(CLI::IsMember({"json", "text", "graph6"}));
  app.add_option("--jobs", o.jobs, "worker threads (0: OpenMP default)")->check(CLI::NonNegativeNumber);
  app.add_option("--limit", o.limit, "maximum number of connection sets to enumerate")->check(CLI::PositiveNumber);
  app.add_flag("--no-aut-reduction", o.no_aut, "enumerate without automorphism pruning");
  app.add_option("--precision", o.precision, "decimal digits of numeric eigenvalues")->check(CLI::Range(1, 18));

  auto graph_cmd = [&](const char* name, const char* help) {
    auto* c = app.add_subcommand(name, help);
    c->add_option("--group", o.group, "moduli, e.g. 6,3")->required();
    c->add_option("--set", o.set, "elements '1,0;2,0' or a shorthand")->required();
    return c;
  };
  auto* construct = graph_cmd("construct", "build a Cayley graph");
  auto* check = graph_cmd("check", "test distance-regularity");
  auto* spec = graph_cmd("spectrum", "exact spectrum with multiplicities");
  auto* schur = app.add_subcommand("schur", "distance module, or check a partition");
  schur->add_option("--group", o.group)->required();
  schur->add_option("--set", o.set);
  schur->add_option("--partition", o.partition, "classes separated by '|'");
  auto* krein = graph_cmd("krein", "Krein parameters of the distance module");
  auto* dual = graph_cmd("dual", "dual graphs under Q-polynomial orderings");
  dual->add_option("--ordering", o.ordering, "dual class order, e.g. 0,2,1");

  auto* design = app.add_subcommand("design", "design-set checks");
  design->require_subcommand(1, 1);
  auto* rds = design->add_subcommand("rds", "relative difference set");
  rds->add_option("--group", o.group)->required();
  rds->add_option("--set", o.set)->required();
  rds->add_option("--subgroup", o.subgroup, "forbidden subgroup elements")->required();
  auto* pas = design->add_subcommand("pas", "polynomial addition set");
  pas->add_option("--group", o.group)->required();
  pas->add_option("--set", o.set)->required();
  pas->add_option("--poly", o.poly, "coefficients from the highest degree, e.g. 1,0,-2")->required();
  auto* dirs = design->add_subcommand("directions", "directions of a point set in AG(2,p)");
  dirs->add_option("--p", o.p)->required()->check(CLI::PositiveNumber);
  dirs->add_option("--points", o.points, "x,y;x,y;...")->required();
  auto* pss = design->add_subcommand("pas-search", "monomial polynomial addition sets in Z_v");
  pss->add_option("--v", o.v)->required();
  pss->add_option("--n", o.n)->required();
  pss->add_option("--bound", o.bound)->required();
  pss->add_flag("--include-trivial", o.trivial);
  auto* lvl = design->add_subcommand("level-set", "eigenvalue level-set certificate");
  lvl->add_option("--group", o.group)->required();
  lvl->add_option("--set", o.set)->required();
  lvl->add_option("--psi", o.psi)->check(CLI::PositiveNumber);

  auto* classify = app.add_subcommand("classify", "exhaustive DRG classification");
  classify->add_option("--group", o.group)->required();
  auto* vthm = app.add_subcommand("verify-theorem", "compare the classification of Z_n + Z_p with the catalog");
  vthm->add_option("--group", o.group)->required();
  auto* vcirc = app.add_subcommand("verify-circulant", "compare circulant classifications with the catalog");
  vcirc->add_option("--group", o.group, "a single cyclic group");
  vcirc->add_option("--max-n", o.max_n, "check Z_2 .. Z_max-n")->check(CLI::Range(2, 33));
  auto* rchk = app.add_subcommand("recheck", "re-verify a saved JSON report");
  rchk->add_option("--input", o.input, "file, or - for stdin")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    if (o.format == "json")
      emit(err, {{"error", "usage"}, {"bug_trap", false}, {"message", e.what()}});
    else
      err << "usage error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (construct->parsed()) return cmd_graph(o, out, false);
    if (check->parsed()) return cmd_graph(o, out, true);
    if (spec->parsed()) return cmd_spectrum(o, out);
    if (schur->parsed()) {
      if (o.set.empty() == o.partition.empty()) throw Error(ErrorCode::usage, "schur needs exactly one of --set and --partition");
      return cmd_schur(o, out);
    }
    if (krein->parsed()) return cmd_krein(o, out);
    if (dual->parsed()) return cmd_dual(o, out);
    if (design->parsed()) {
      for (auto* s : {rds, pas, dirs, pss, lvl})
        if (s->parsed()) return cmd_design(s->get_name(), o, out);
    }
    if (classify->parsed()) return cmd_classify(o, out);
    if (vthm->parsed()) return cmd_verify_theorem(o, out);
    if (vcirc->parsed()) return cmd_verify_circulant(o, out);
    if (rchk->parsed()) return cmd_recheck(o, out);
    throw Error(ErrorCode::usage, "no subcommand");
  } catch (const Error& e) {
    if (o.format == "json")
      emit(err, error_json(e));
    else
      err << (e.is_bug_trap() ? "BUG TRAP: " : "error: ") << e.what() << "\n";
    return exit_for(e);
  } catch (const std::invalid_argument& e) {
    err << "usage error: bad number (" << e.what() << ")\n";
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "usage error: number out of range (" << e.what() << ")\n";
    return kUsage;
  } catch (const nlohmann::json::exception& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace drg
