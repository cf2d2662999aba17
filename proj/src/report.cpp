#include "drg/report.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

namespace drg {

namespace {

std::string group_spec(const AbelianGroup& g) {
  std::string s;
  for (int n : g.moduli()) s += (s.empty() ? "" : ",") + std::to_string(n);
  return s;
}

Json rounded(long double v, int precision) {
  const long double scale = std::pow(10.0L, precision);
  double r = static_cast<double>(std::round(v * scale) / scale);
  if (r == 0) r = 0;  // no negative zero in the output
  return r;
}

Json flags_json(bool drg, int diameter, bool bipartite, bool antipodal, bool primitive) {
  Json f;
  f["connected"] = true;
  f["distance_regular"] = drg;
  f["diameter"] = diameter;
  f["bipartite"] = bipartite;
  f["antipodal"] = antipodal;
  f["primitive"] = primitive;
  return f;
}

}  // namespace

Json set_json(const AbelianGroup& g, const ElementSet& s) {
  Json a = Json::array();
  for (Elem x : s) a.push_back(g.element(x).coords);
  return a;
}

ElementSet set_from_json(const AbelianGroup& g, const Json& j) {
  if (!j.is_array()) throw Error(ErrorCode::usage, "connection must be a list of elements");
  ElementSet s;
  for (const auto& e : j) {
    if (!e.is_array()) throw Error(ErrorCode::usage, "element must be a list of coordinates");
    s.push_back(g.index_of(GroupElement{e.get<std::vector<int>>()}));
  }
  return normalized(s);
}

Json array_json(const IntersectionArray& a) {
  Json j;
  j["b"] = a.b;
  j["c"] = a.c;
  j["text"] = a.to_string();
  return j;
}

Json spectrum_json(const Eigensystem& e, ReportOptions opt) {
  Json a = Json::array();
  for (const auto& v : e.values) {
    Json x;
    x["value_exact"] = v.exact.to_string();
    x["value_numeric"] = rounded(v.numeric, opt.precision);
    x["multiplicity"] = v.multiplicity;
    a.push_back(x);
  }
  return a;
}

Json family_json(const Family& f) {
  Json j;
  j["label"] = f.label();
  j["parameters"] = {{"t", f.t}, {"m", f.m}, {"r", f.r}};
  return j;
}

Json graph_report(const CayleyGraph& g, ReportOptions opt) {
  Json j;
  j["group"] = group_spec(g.group());
  j["connection"] = set_json(g.group(), g.connection());
  if (!g.connected()) {
    j["array"] = nullptr;
    j["spectrum"] = nullptr;
    j["flags"] = {{"connected", false}, {"distance_regular", false}};
    j["family"] = nullptr;
    return j;
  }
  DrgCheck chk = check_distance_regular(g);
  if (!chk.distance_regular()) {
    j["array"] = nullptr;
    j["spectrum"] = spectrum_json(spectrum(g), opt);
    Json f = flags_json(false, chk.partition.diameter(), false, false, false);
    f.erase("bipartite");
    f.erase("antipodal");
    f.erase("primitive");
    f["failed_layer"] = chk.failed_layer;
    f["witness"] = chk.witness;
    j["flags"] = f;
    j["family"] = nullptr;
    return j;
  }
  DrgRecord r = make_record(g, std::nullopt);
  Json rec = record_json(g.group(), r, opt);
  rec.erase("canonical");
  return rec;
}

Json record_json(const AbelianGroup& g, const DrgRecord& r, ReportOptions opt) {
  Json j;
  j["group"] = group_spec(g);
  j["connection"] = set_json(g, r.connection);
  j["canonical"] = set_json(g, r.canonical);
  j["array"] = array_json(r.array);
  j["spectrum"] = spectrum_json(r.spectrum, opt);
  j["flags"] = flags_json(true, r.array.diameter(), r.bipartite, r.antipodal, r.primitive);
  j["family"] = family_json(r.family);
  return j;
}

Json tensor_json(const Tensor3& t) {
  Json a = Json::array();
  for (int i = 0; i < t.n; ++i) {
    Json b = Json::array();
    for (int j = 0; j < t.n; ++j) {
      Json c = Json::array();
      for (int k = 0; k < t.n; ++k) c.push_back(t(i, j, k));
      b.push_back(c);
    }
    a.push_back(b);
  }
  return a;
}

Json schur_json(const SchurRing& sr) {
  Json j;
  j["group"] = group_spec(sr.group);
  Json cls = Json::array();
  for (const auto& c : sr.classes) cls.push_back(set_json(sr.group, c));
  j["classes"] = cls;
  j["p"] = tensor_json(sr.p);
  j["inverse"] = sr.inverse;
  j["symmetric"] = sr.symmetric();
  j["primitive"] = sr.primitive();
  return j;
}

Json catalog_json(const AbelianGroup& g, const std::vector<CatalogEntry>& c) {
  Json a = Json::array();
  for (const auto& e : c) {
    Json x;
    x["connection"] = set_json(g, e.connection);
    Json f = family_json(e.family);
    x["family"] = f["label"];
    x["parameters"] = f["parameters"];
    a.push_back(x);
  }
  return a;
}

Json classification_json(const ClassificationReport& r, ReportOptions opt) {
  Json j;
  j["group"] = group_spec(r.group);
  j["subsets"] = r.subsets;
  j["aut_reduced"] = r.aut_reduced;
  j["aut_order"] = r.aut_order;
  j["examined"] = r.examined;
  j["pruned"] = r.pruned;
  j["connected"] = r.connected;
  j["disconnected"] = r.disconnected;
  j["drg_count"] = r.drgs.size();
  Json fam = Json::object();
  for (const auto& [k, v] : r.family_counts) fam[k] = v;
  j["family_counts"] = fam;
  Json an = Json::array();
  for (int i : r.anomalies) an.push_back(set_json(r.group, r.drgs[i].connection));
  j["anomalies"] = an;
  Json recs = Json::array();
  for (const auto& d : r.drgs) {
    Json x = record_json(r.group, d, opt);
    x.erase("group");
    recs.push_back(x);
  }
  j["drgs"] = recs;
  return j;
}

Json theorem_json(const TheoremCheck& t, ReportOptions opt) {
  Json j;
  j["group"] = group_spec(t.report.group);
  j["verified"] = t.verified();
  j["expected_count"] = t.expected.size();
  j["found_count"] = t.report.drgs.size();
  j["missing"] = catalog_json(t.report.group, t.diff.missing);
  j["unexpected"] = catalog_json(t.report.group, t.diff.unexpected);
  j["crown_congruence"] = catalog_json(t.report.group, t.diff.crown_congruence);
  j["classification"] = classification_json(t.report, opt);
  return j;
}

Json error_json(const std::exception& e) {
  Json j;
  if (auto* de = dynamic_cast<const Error*>(&e)) {
    j["error"] = error_code_name(de->code());
    j["bug_trap"] = de->is_bug_trap();
  } else {
    j["error"] = "exception";
    j["bug_trap"] = false;
  }
  j["message"] = e.what();
  return j;
}

std::string graph_text(const CayleyGraph& g) {
  std::ostringstream os;
  const AbelianGroup& G = g.group();
  os << "group       " << G.to_string() << "\n";
  os << "connection  " << G.format_set(g.connection()) << "\n";
  os << "order       " << g.order() << ", valency " << g.valency() << "\n";
  if (!g.connected()) {
    os << "not connected\n";
    return os.str();
  }
  DrgCheck chk = check_distance_regular(g);
  if (!chk.distance_regular()) {
    os << "not distance-regular (layer " << chk.failed_layer << ": " << chk.witness << ")\n";
    return os.str();
  }
  DrgRecord r = make_record(g, std::nullopt);
  os << "array       " << r.array.to_string() << "\n";
  os << "diameter    " << r.array.diameter() << (r.bipartite ? ", bipartite" : "") << (r.antipodal ? ", antipodal" : "")
     << (r.primitive ? ", primitive" : "") << "\n";
  os << "family      " << r.family.label() << "\n";
  os << "spectrum\n";
  for (const auto& v : r.spectrum.values)
    os << "  " << std::setw(14) << std::fixed << std::setprecision(9) << static_cast<double>(v.numeric) << "  x"
       << std::setw(4) << std::left << v.multiplicity << std::right << "  " << v.exact.to_string() << "\n";
  return os.str();
}

std::string summary_table(const std::vector<ClassificationReport>& reports) {
  std::vector<std::vector<std::string>> rows{{"group", "#subsets", "#connected", "#DRG", "families", "anomalies", "wall"}};
  for (const auto& r : reports) {
    std::string fam;
    for (const auto& [k, v] : r.family_counts) fam += (fam.empty() ? "" : " ") + k + ":" + std::to_string(v);
    std::ostringstream wall;
    wall << std::fixed << std::setprecision(3) << r.wall_seconds << "s";
    rows.push_back({r.group.to_string(), std::to_string(r.subsets), std::to_string(r.connected),
                    std::to_string(r.drgs.size()), fam, std::to_string(r.anomalies.size()), wall.str()});
  }
  std::vector<size_t> w(rows[0].size(), 0);
  for (const auto& row : rows)
    for (size_t i = 0; i < row.size(); ++i) w[i] = std::max(w[i], row[i].size());
  std::ostringstream os;
  for (const auto& row : rows) {
    for (size_t i = 0; i < row.size(); ++i) {
      os << std::left << std::setw(static_cast<int>(w[i])) << row[i];
      if (i + 1 < row.size()) os << "  ";
    }
    os << "\n";
  }
  return os.str();
}

namespace {

void recheck_record(const AbelianGroup& g, const Json& rec, RecheckResult& out) {
  ++out.records;
  ElementSet s = set_from_json(g, rec.at("connection"));
  CayleyGraph graph(g, s);
  Json fresh = graph_report(graph);
  const std::string where = "S = " + g.format_set(s) + ": ";
  for (const char* key : {"array", "family"})
    if (rec.at(key) != fresh.at(key)) out.mismatches.push_back(where + key + " differs");
  for (const auto& [k, v] : rec.at("flags").items())
    if (!fresh.at("flags").contains(k) || fresh["flags"][k] != v) out.mismatches.push_back(where + "flag " + k + " differs");
  const Json& a = rec.at("spectrum");
  const Json& b = fresh.at("spectrum");
  if (a.is_null() != b.is_null() || (!a.is_null() && a.size() != b.size())) {
    out.mismatches.push_back(where + "spectrum differs");
    return;
  }
  for (size_t i = 0; !a.is_null() && i < a.size(); ++i)
    if (a[i].at("value_exact") != b[i].at("value_exact") || a[i].at("multiplicity") != b[i].at("multiplicity") ||
        std::abs(a[i].at("value_numeric").get<double>() - b[i].at("value_numeric").get<double>()) > 1e-6)
      out.mismatches.push_back(where + "eigenvalue " + std::to_string(i) + " differs");
}

}  // namespace

RecheckResult recheck(const Json& report) {
  RecheckResult out;
  if (!report.is_object() || !report.contains("group")) throw Error(ErrorCode::usage, "not a report: no group");
  if (report.contains("classification")) return recheck(report.at("classification"));
  AbelianGroup g = AbelianGroup::parse(report.at("group").get<std::string>());
  if (report.contains("drgs")) {
    for (const auto& rec : report.at("drgs")) {
      recheck_record(g, rec, out);
      if (!rec.at("flags").at("distance_regular").get<bool>()) out.mismatches.push_back("record is not marked distance-regular");
    }
    if (report.at("drg_count").get<size_t>() != report.at("drgs").size()) out.mismatches.push_back("drg_count differs");
  } else if (report.contains("connection")) {
    recheck_record(g, report, out);
  } else {
    throw Error(ErrorCode::usage, "report has neither drgs nor connection");
  }
  return out;
}

}  // namespace drg
