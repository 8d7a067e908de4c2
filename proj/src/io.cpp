#include "avslope/io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

#include "avslope/errors.hpp"

namespace avslope {

using json = nlohmann::ordered_json;

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  out.push_back(cur);
  return out;
}

std::string strip(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

long parse_long(const std::string& s) {
  Int z = parse_int(s);
  if (!z.fits_slong_p()) fail(errc::parse_error, "out of range: " + s);
  return z.get_si();
}

bool parse_bool(const std::string& s) {
  if (s == "true") return true;
  if (s == "false") return false;
  fail(errc::parse_error, "bad boolean '" + s + "'");
}

const char* bool_str(bool b) { return b ? "true" : "false"; }

json polygon_json_obj(const NewtonPolygon& np) {
  json pairs = json::array();
  for (const auto& [s, m] : np.pairs) pairs.push_back(json::array({rat_str(s), m}));
  return json{{"g", np.g}, {"pairs", pairs}};
}

NewtonPolygon polygon_from_json_obj(const json& j, bool strict) {
  if (!j.is_object() || !j.contains("g") || !j.contains("pairs"))
    fail(errc::parse_error, "polygon object needs g and pairs");
  std::vector<std::pair<Slope, long>> ps;
  for (const auto& e : j.at("pairs"))
    ps.emplace_back(parse_rat(e.at(0).get<std::string>()), e.at(1).get<long>());
  auto np = make_polygon(ps, strict);
  if (np.g != j.at("g").get<long>())
    fail(errc::parse_error, "stated g = " + j.at("g").dump() + " but mass gives " + std::to_string(np.g));
  return np;
}

json record_json_obj(const ScanRecord& rec) {
  json r{{"p", rec.p}, {"status", status_name(rec.status)}};
  if (rec.status != ReductionStatus::Good) return r;
  json coeffs = json::array();
  const auto& cs = rec.frobenius->coeffs;
  for (std::size_t j = cs.size(); j-- > 0;) coeffs.push_back(int_str(cs[j]));
  r["coeffs"] = coeffs;
  r["p_rank"] = p_rank(*rec.polygon);
  r["class"] = label_name(rec.cls->label);
  r["supersingular"] = rec.cls->supersingular;
  r["min_wedge_slope"] = rat_str(rec.min_wedge_slope);
  r["twist_integral"] = rec.twist_integral;
  r["trace"] = int_str(rec.wedge_trace);
  r["trace_div_p"] = rec.trace_div_p;
  if (rec.audit) {
    const auto& a = *rec.audit;
    r["audit"] = json{{"property_s", a.property_s},
                      {"property_e", a.property_e},
                      {"twisted_window", a.twisted_window},
                      {"wedge_trace", int_str(a.wedge_trace)},
                      {"trace_divisible", a.trace_divisible},
                      {"indiv_ok", a.indiv_ok}};
  }
  return r;
}

// rebuilds a Good record from p and leading-first coefficient strings, then
// cross-checks every stored derived column
ScanRecord rebuild_good_record(long p, const std::vector<std::string>& coeff_strs,
                               const std::string& p_rank_s, const std::string& class_s,
                               const std::string& ss_s, const std::string& min_slope_s,
                               const std::string& twist_s, const std::string& trace_s,
                               const std::string& div_s) {
  std::vector<Int> asc;
  for (std::size_t j = coeff_strs.size(); j-- > 0;) asc.push_back(parse_int(strip(coeff_strs[j])));
  long deg = static_cast<long>(asc.size()) - 1;
  if (deg < 2 || deg % 2 != 0) fail(errc::odd_degree, "degree " + std::to_string(deg));
  auto f = validate_weil(asc, p, 1, deg / 2);
  auto rec = record_from_frobenius(f);
  auto check = [&](const std::string& column, const std::string& stored, const std::string& derived) {
    if (stored != derived)
      fail(errc::parse_error,
           "column " + column + " at p = " + std::to_string(p) + ": stored '" + stored +
               "', derived '" + derived + "'");
  };
  check("p_rank", p_rank_s, std::to_string(p_rank(*rec.polygon)));
  check("class", class_s, label_name(rec.cls->label));
  check("supersingular", ss_s, bool_str(rec.cls->supersingular));
  check("min_wedge_slope", min_slope_s, rat_str(rec.min_wedge_slope));
  check("twist_integral", twist_s, bool_str(rec.twist_integral));
  check("trace", trace_s, int_str(rec.wedge_trace));
  check("trace_div_p", div_s, bool_str(rec.trace_div_p));
  return rec;
}

}  // namespace

std::string polygon_to_text(const NewtonPolygon& np) {
  std::string out;
  for (const auto& [s, m] : np.pairs) {
    if (!out.empty()) out += ",";
    out += rat_str(s) + ":" + std::to_string(m);
  }
  return out;
}

NewtonPolygon polygon_from_text(const std::string& s, bool strict) {
  std::vector<std::pair<Slope, long>> ps;
  for (const auto& entry : split(s, ',')) {
    auto e = strip(entry);
    auto colon = e.find(':');
    if (colon == std::string::npos) fail(errc::parse_error, "expected slope:multiplicity in '" + e + "'");
    ps.emplace_back(parse_rat(strip(e.substr(0, colon))), parse_long(strip(e.substr(colon + 1))));
  }
  return make_polygon(ps, strict);
}

std::string multiset_to_text(const SlopeMultiset& sm) {
  std::string out;
  for (const auto& [s, m] : sm.pairs) {
    if (!out.empty()) out += ",";
    out += rat_str(s) + ":" + int_str(m);
  }
  return out;
}

std::vector<Int> coeffs_from_text(const std::string& s) {
  auto parts = split(s, ',');
  std::vector<Int> asc;
  for (std::size_t j = parts.size(); j-- > 0;) asc.push_back(parse_int(strip(parts[j])));
  return asc;
}

std::string coeffs_to_text(const std::vector<Int>& ascending) {
  std::string out;
  for (std::size_t j = ascending.size(); j-- > 0;) {
    out += int_str(ascending[j]);
    if (j > 0) out += ",";
  }
  return out;
}

CurveSpec curve_from_text(const std::string& s) {
  auto t = strip(s);
  auto colon = t.find(':');
  if (colon == std::string::npos) fail(errc::parse_error, "expected kind:[coefficients] in '" + t + "'");
  std::string kind = strip(t.substr(0, colon));
  std::string rest = strip(t.substr(colon + 1));
  if (rest.size() < 2 || rest.front() != '[' || rest.back() != ']')
    fail(errc::parse_error, "expected bracketed coefficient list in '" + t + "'");
  auto parts = split(rest.substr(1, rest.size() - 2), ',');
  std::vector<Int> vals;
  for (const auto& prt : parts) vals.push_back(parse_int(strip(prt)));
  if (kind == "ec") return make_elliptic(vals, t);
  if (kind == "hyp2") {
    std::vector<Int> asc(vals.rbegin(), vals.rend());
    return make_hyperelliptic2(asc, t);
  }
  fail(errc::parse_error, "unknown curve kind '" + kind + "'");
}

std::string curve_to_text(const CurveSpec& c) {
  std::string out = c.kind == CurveSpec::Kind::Elliptic ? "ec:[" : "hyp2:[";
  if (c.kind == CurveSpec::Kind::Elliptic) {
    for (std::size_t j = 0; j < c.coeffs.size(); ++j) {
      if (j) out += ",";
      out += int_str(c.coeffs[j]);
    }
  } else {
    for (std::size_t j = c.coeffs.size(); j-- > 0;) {
      out += int_str(c.coeffs[j]);
      if (j > 0) out += ",";
    }
  }
  return out + "]";
}

std::string polygon_to_json(const NewtonPolygon& np) { return polygon_json_obj(np).dump(2); }

NewtonPolygon polygon_from_json(const std::string& s, bool strict) {
  try {
    return polygon_from_json_obj(json::parse(s), strict);
  } catch (const json::exception& e) {
    fail(errc::parse_error, e.what());
  }
}

static json multiset_pairs_json(const SlopeMultiset& sm) {
  json pairs = json::array();
  for (const auto& [s, m] : sm.pairs) pairs.push_back(json::array({rat_str(s), int_str(m)}));
  return pairs;
}

std::string wedge_to_json(const SlopeMultiset& sm) {
  return json{{"i", sm.wedge_degree},
              {"pairs", multiset_pairs_json(sm)},
              {"min_slope", rat_str(min_slope(sm))}}
      .dump(2);
}

std::string hull_to_json(const SlopeMultiset& sm, long p, long n) {
  return json{{"p", p},
              {"n", n},
              {"pairs", multiset_pairs_json(sm)},
              {"min_slope", rat_str(min_slope(sm))}}
      .dump(2);
}

std::string multiset_to_csv(const SlopeMultiset& sm) {
  std::string out = "slope,multiplicity\n";
  for (const auto& [s, m] : sm.pairs) out += rat_str(s) + "," + int_str(m) + "\n";
  return out;
}

static std::string csv_quote(const std::string& field) {
  if (field.find(',') == std::string::npos && field.find('"') == std::string::npos) return field;
  std::string out = "\"";
  for (char ch : field) {
    if (ch == '"') out += "\"\"";
    out += ch;
  }
  return out + "\"";
}

std::string polygons_to_json(long g, const std::vector<NewtonPolygon>& polys) {
  json arr = json::array();
  for (const auto& np : polys) arr.push_back(polygon_json_obj(np));
  return json{{"g", g}, {"count", polys.size()}, {"polygons", arr}}.dump(2);
}

std::string polygons_to_table(const std::vector<NewtonPolygon>& polys) {
  std::string out;
  for (const auto& np : polys) out += polygon_to_text(np) + "\n";
  return out;
}

std::string polygons_to_csv(const std::vector<NewtonPolygon>& polys) {
  std::string out = "polygon\n";
  for (const auto& np : polys) out += csv_quote(polygon_to_text(np)) + "\n";
  return out;
}

std::string estimates_to_json(const std::vector<EstimateReport>& reports) {
  json arr = json::array();
  for (const auto& r : reports) arr.push_back(json::parse(estimate_to_json(r)));
  return arr.dump(2);
}

std::string estimates_to_csv(const std::vector<EstimateReport>& reports) {
  std::string out = "g,polygons,non_hodge_witt,counterexamples,witnesses\n";
  for (const auto& r : reports)
    out += std::to_string(r.g) + "," + std::to_string(r.polygons_total) + "," +
           std::to_string(r.polygons_checked) + "," + std::to_string(r.counterexamples.size()) +
           "," + std::to_string(r.witnesses.size()) + "\n";
  return out;
}

std::string audit_to_csv(const std::vector<AuditRecord>& records) {
  std::string out =
      "p,class,supersingular,min_wedge_slope,property_s,property_e,twisted_window,wedge_trace,"
      "trace_divisible,indiv_ok\n";
  for (const auto& r : records) {
    out += std::to_string(r.p) + "," + label_name(r.class_label.label) + "," +
           bool_str(r.class_label.supersingular) + "," + rat_str(r.min_wedge_slope) + "," +
           bool_str(r.property_s) + "," + bool_str(r.property_e) + "," + bool_str(r.twisted_window) +
           "," + int_str(r.wedge_trace) + "," + bool_str(r.trace_divisible) + "," +
           bool_str(r.indiv_ok) + "\n";
  }
  return out;
}

std::string report_to_csv(const DensityReport& rep, const SelfProductReport& sp) {
  std::string out = "key,value\n";
  auto row = [&](const std::string& k, const std::string& v) { out += k + "," + v + "\n"; };
  row("label", csv_quote(rep.label));
  row("primes_scanned", std::to_string(rep.primes_scanned));
  row("good", std::to_string(rep.good));
  row("bad", std::to_string(rep.bad));
  row("skipped", std::to_string(rep.skipped));
  row("ordinary", std::to_string(rep.ordinary));
  row("hodge_witt_not_ordinary", std::to_string(rep.hw_not_ordinary));
  row("non_hodge_witt", std::to_string(rep.non_hodge_witt));
  row("supersingular", std::to_string(rep.supersingular));
  if (rep.good > 0) {
    row("freq_ordinary", rat_str(rep.freq(rep.ordinary)));
    row("freq_hodge_witt_not_ordinary", rat_str(rep.freq(rep.hw_not_ordinary)));
    row("freq_non_hodge_witt", rat_str(rep.freq(rep.non_hodge_witt)));
    row("freq_supersingular", rat_str(rep.freq(rep.supersingular)));
  }
  row("self_product_good", std::to_string(sp.good));
  row("self_product_ordinary", std::to_string(sp.ordinary));
  row("self_product_hodge_witt", std::to_string(sp.hodge_witt));
  row("self_product_non_hodge_witt", std::to_string(sp.non_hodge_witt));
  return out;
}

std::string poly_to_json(const WeilPolynomial& f) {
  json coeffs = json::array();
  for (std::size_t j = f.coeffs.size(); j-- > 0;) coeffs.push_back(int_str(f.coeffs[j]));
  return json{{"coeffs", coeffs}, {"p", f.p}, {"n", f.n}, {"g", f.degree() / 2}}.dump(2);
}

WeilPolynomial poly_from_json(const std::string& s) {
  try {
    json j = json::parse(s);
    std::vector<Int> asc;
    const auto& cs = j.at("coeffs");
    for (std::size_t k = cs.size(); k-- > 0;) asc.push_back(parse_int(cs.at(k).get<std::string>()));
    return validate_weil(asc, j.at("p").get<long>(), j.at("n").get<long>(), j.at("g").get<long>());
  } catch (const json::exception& e) {
    fail(errc::parse_error, e.what());
  }
}

std::string estimate_to_json(const EstimateReport& r) {
  json ces = json::array();
  for (const auto& [np, mn] : r.counterexamples)
    ces.push_back(json{{"polygon", polygon_json_obj(np)}, {"min_slope", rat_str(mn)}});
  json ws = json::array();
  for (const auto& np : r.witnesses) ws.push_back(polygon_json_obj(np));
  return json{{"g", r.g},
              {"polygons_total", r.polygons_total},
              {"polygons_checked", r.polygons_checked},
              {"counterexamples", ces},
              {"witnesses", ws}}
      .dump(2);
}

std::string estimate_to_table(const EstimateReport& r) {
  std::ostringstream os;
  os << "g=" << r.g << " polygons=" << r.polygons_total << " non_hodge_witt=" << r.polygons_checked
     << " counterexamples=" << r.counterexamples.size() << " witnesses=" << r.witnesses.size() << "\n";
  for (const auto& [np, mn] : r.counterexamples)
    os << "  counterexample " << polygon_to_text(np) << " min_slope=" << rat_str(mn) << "\n";
  for (const auto& np : r.witnesses) os << "  witness " << polygon_to_text(np) << "\n";
  return os.str();
}

std::string audit_to_json(const std::vector<AuditRecord>& records, const AuditSummary& summary,
                          const std::vector<long>& exclude, long g) {
  json recs = json::array();
  for (const auto& r : records) {
    recs.push_back(json{{"p", r.p},
                        {"n", r.n},
                        {"class", label_name(r.class_label.label)},
                        {"supersingular", r.class_label.supersingular},
                        {"min_wedge_slope", rat_str(r.min_wedge_slope)},
                        {"property_s", r.property_s},
                        {"property_e", r.property_e},
                        {"twisted_window", r.twisted_window},
                        {"wedge_trace", int_str(r.wedge_trace)},
                        {"trace_divisible", r.trace_divisible},
                        {"indiv_ok", r.indiv_ok}});
  }
  return json{{"g", g},
              {"exclude", exclude},
              {"records", recs},
              {"summary",
               json{{"entries", summary.entries},
                    {"excluded", summary.excluded},
                    {"s_failures", summary.s_failures},
                    {"indiv_failures", summary.indiv_failures},
                    {"consistent", summary.consistent}}}}
      .dump(2);
}

std::string audit_to_table(const std::vector<AuditRecord>& records, const AuditSummary& summary) {
  std::ostringstream os;
  for (const auto& r : records) {
    os << "p=" << r.p << " class=" << label_name(r.class_label.label)
       << " ss=" << bool_str(r.class_label.supersingular)
       << " min_wedge_slope=" << rat_str(r.min_wedge_slope) << " S=" << bool_str(r.property_s)
       << " E=" << bool_str(r.property_e) << " twisted_window=" << bool_str(r.twisted_window)
       << " wedge_trace=" << int_str(r.wedge_trace) << " trace_div_p=" << bool_str(r.trace_divisible)
       << " indiv_ok=" << bool_str(r.indiv_ok) << "\n";
  }
  os << "entries=" << summary.entries << " excluded=" << summary.excluded
     << " s_failures=" << summary.s_failures << " indiv_failures=" << summary.indiv_failures
     << " consistent=" << bool_str(summary.consistent) << "\n";
  return os.str();
}

const char* const kScanCsvHeader =
    "p,status,coeffs,p_rank,class,supersingular,min_wedge_slope,twist_integral,trace,trace_div_p";

static std::string record_csv_row(const ScanRecord& rec) {
  if (rec.status != ReductionStatus::Good)
    return std::to_string(rec.p) + "," + status_name(rec.status) + ",,,,,,,,";
  std::string coeffs;
  const auto& cs = rec.frobenius->coeffs;
  for (std::size_t j = cs.size(); j-- > 0;) {
    coeffs += int_str(cs[j]);
    if (j > 0) coeffs += ";";
  }
  std::ostringstream os;
  os << rec.p << ",Good," << coeffs << "," << p_rank(*rec.polygon) << ","
     << label_name(rec.cls->label) << "," << bool_str(rec.cls->supersingular) << ","
     << rat_str(rec.min_wedge_slope) << "," << bool_str(rec.twist_integral) << ","
     << int_str(rec.wedge_trace) << "," << bool_str(rec.trace_div_p);
  return os.str();
}

std::string records_to_csv(const std::vector<ScanRecord>& records) {
  std::string out = kScanCsvHeader;
  out += "\n";
  for (const auto& rec : records) {
    out += record_csv_row(rec);
    out += "\n";
  }
  return out;
}

std::string scan_to_csv(const ScanResult& r) { return records_to_csv(r.records); }

std::string scan_to_table(const ScanResult& r) {
  std::ostringstream os;
  os << "curve " << curve_to_text(r.curve) << "\n";
  for (const auto& rec : r.records) {
    os << rec.p << " " << status_name(rec.status);
    if (rec.status == ReductionStatus::Good) {
      std::string coeffs;
      const auto& cs = rec.frobenius->coeffs;
      for (std::size_t j = cs.size(); j-- > 0;) {
        coeffs += int_str(cs[j]);
        if (j > 0) coeffs += ";";
      }
      os << " coeffs=" << coeffs << " polygon=" << polygon_to_text(*rec.polygon)
         << " class=" << label_name(rec.cls->label) << " ss=" << bool_str(rec.cls->supersingular)
         << " min_wedge_slope=" << rat_str(rec.min_wedge_slope)
         << " twist_integral=" << bool_str(rec.twist_integral) << " trace=" << int_str(rec.wedge_trace)
         << " trace_div_p=" << bool_str(rec.trace_div_p);
    }
    os << "\n";
  }
  os << report_to_table(r.report, r.self_product);
  return os.str();
}

std::string report_to_json(const DensityReport& rep, const SelfProductReport& sp) {
  json j{{"label", rep.label},
         {"primes_scanned", rep.primes_scanned},
         {"good", rep.good},
         {"bad", rep.bad},
         {"skipped", rep.skipped},
         {"counts",
          json{{"ordinary", rep.ordinary},
               {"hodge_witt_not_ordinary", rep.hw_not_ordinary},
               {"non_hodge_witt", rep.non_hodge_witt},
               {"supersingular", rep.supersingular}}}};
  if (rep.good > 0) {
    j["frequencies"] = json{{"ordinary", rat_str(rep.freq(rep.ordinary))},
                            {"hodge_witt_not_ordinary", rat_str(rep.freq(rep.hw_not_ordinary))},
                            {"non_hodge_witt", rat_str(rep.freq(rep.non_hodge_witt))},
                            {"supersingular", rat_str(rep.freq(rep.supersingular))}};
  }
  j["self_product"] = json{{"good", sp.good},
                           {"ordinary", sp.ordinary},
                           {"hodge_witt", sp.hodge_witt},
                           {"non_hodge_witt", sp.non_hodge_witt}};
  return j.dump(2);
}

std::string report_to_table(const DensityReport& rep, const SelfProductReport& sp) {
  std::ostringstream os;
  os << "label=" << rep.label << " primes=" << rep.primes_scanned << " good=" << rep.good
     << " bad=" << rep.bad << " skipped=" << rep.skipped << "\n";
  os << "ordinary=" << rep.ordinary << " hodge_witt_not_ordinary=" << rep.hw_not_ordinary
     << " non_hodge_witt=" << rep.non_hodge_witt << " supersingular=" << rep.supersingular << "\n";
  if (rep.good > 0) {
    os << "freq ordinary=" << rat_str(rep.freq(rep.ordinary))
       << " hodge_witt_not_ordinary=" << rat_str(rep.freq(rep.hw_not_ordinary))
       << " non_hodge_witt=" << rat_str(rep.freq(rep.non_hodge_witt))
       << " supersingular=" << rat_str(rep.freq(rep.supersingular)) << "\n";
  }
  os << "self_product good=" << sp.good << " ordinary=" << sp.ordinary
     << " hodge_witt=" << sp.hodge_witt << " non_hodge_witt=" << sp.non_hodge_witt << "\n";
  return os.str();
}

std::string scan_to_json(const ScanResult& r) {
  json recs = json::array();
  for (const auto& rec : r.records) recs.push_back(record_json_obj(rec));
  json j{{"curve", curve_to_text(r.curve)},
         {"label", r.report.label},
         {"g", r.curve.genus()},
         {"records", recs}};
  j["report"] = json::parse(report_to_json(r.report, r.self_product));
  return j.dump(2);
}

static ParsedScan scan_from_csv_text(const std::string& content) {
  ParsedScan out;
  std::istringstream in(content);
  std::string line;
  if (!std::getline(in, line)) fail(errc::parse_error, "empty scan file");
  if (strip(line) != kScanCsvHeader) fail(errc::parse_error, "unexpected CSV header '" + strip(line) + "'");
  while (std::getline(in, line)) {
    auto t = strip(line);
    if (t.empty()) continue;
    auto cols = split(t, ',');
    if (cols.size() != 10) fail(errc::parse_error, "expected 10 columns, got " + std::to_string(cols.size()));
    long p = parse_long(cols[0]);
    const std::string& st = cols[1];
    ScanRecord rec;
    if (st == "Bad" || st == "Skipped") {
      rec.p = p;
      rec.status = st == "Bad" ? ReductionStatus::Bad : ReductionStatus::Skipped;
      for (std::size_t k = 2; k < 10; ++k)
        if (!cols[k].empty()) fail(errc::parse_error, "non-empty derived column on a " + st + " row");
    } else if (st == "Good") {
      rec = rebuild_good_record(p, split(cols[2], ';'), cols[3], cols[4], cols[5], cols[6], cols[7],
                                cols[8], cols[9]);
    } else {
      fail(errc::parse_error, "unknown status '" + st + "'");
    }
    out.records.push_back(std::move(rec));
  }
  return out;
}

static ParsedScan scan_from_json_text(const std::string& content) {
  try {
    json j = json::parse(content);
    ParsedScan out;
    if (j.contains("label")) out.label = j.at("label").get<std::string>();
    for (const auto& rj : j.at("records")) {
      long p = rj.at("p").get<long>();
      std::string st = rj.at("status").get<std::string>();
      ScanRecord rec;
      if (st == "Bad" || st == "Skipped") {
        rec.p = p;
        rec.status = st == "Bad" ? ReductionStatus::Bad : ReductionStatus::Skipped;
      } else if (st == "Good") {
        std::vector<std::string> coeffs;
        for (const auto& cjs : rj.at("coeffs")) coeffs.push_back(cjs.get<std::string>());
        auto num_str = [&](const char* key) {
          const auto& v = rj.at(key);
          return v.is_string() ? v.get<std::string>() : v.dump();
        };
        auto bstr = [&](const char* key) { return rj.at(key).get<bool>() ? "true" : "false"; };
        rec = rebuild_good_record(p, coeffs, num_str("p_rank"), rj.at("class").get<std::string>(),
                                  bstr("supersingular"), rj.at("min_wedge_slope").get<std::string>(),
                                  bstr("twist_integral"), rj.at("trace").get<std::string>(),
                                  bstr("trace_div_p"));
      } else {
        fail(errc::parse_error, "unknown status '" + st + "'");
      }
      out.records.push_back(std::move(rec));
    }
    return out;
  } catch (const json::exception& e) {
    fail(errc::parse_error, e.what());
  }
}

ParsedScan scan_from_text(const std::string& content) {
  auto t = strip(content);
  if (t.empty()) fail(errc::parse_error, "empty scan file");
  return t.front() == '{' ? scan_from_json_text(content) : scan_from_csv_text(content);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(errc::parse_error, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream outf(path, std::ios::binary);
  if (!outf) fail(errc::parse_error, "cannot open " + path + " for writing");
  outf << content;
}

}  // namespace avslope
