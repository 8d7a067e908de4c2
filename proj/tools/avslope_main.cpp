#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

#include "avslope/audit.hpp"
#include "avslope/enumerate.hpp"
#include "avslope/errors.hpp"
#include "avslope/io.hpp"
#include "avslope/scan.hpp"
#include "avslope/weil.hpp"

namespace {

struct Common {
  std::string format;  // empty = per-command default
  std::string out_path;
  unsigned jobs = 0;  // 0 = hardware default
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--format", c.format, "output format")
      ->check(CLI::IsMember({"table", "json", "csv"}));
  sub->add_option("--out", c.out_path, "write output to a file instead of stdout");
  sub->add_option("--jobs", c.jobs, "worker threads (0 = hardware)")->envname("AVSLOPE_JOBS");
}

std::string pick(const Common& c, const char* dflt) { return c.format.empty() ? dflt : c.format; }

void emit(const Common& c, const std::string& text) {
  std::string t = text;
  if (t.empty() || t.back() != '\n') t += "\n";
  if (c.out_path.empty())
    std::cout << t;
  else
    avslope::write_file(c.out_path, t);
}

}  // namespace

int main(int argc, char** argv) {
  using namespace avslope;

  CLI::App app{"exact slope calculus for abelian varieties"};
  app.require_subcommand(1);
  Common common;

  auto* cmd_enum = app.add_subcommand("enumerate", "list all admissible polygons of dimension g");
  long enum_g = 0;
  cmd_enum->add_option("--g", enum_g, "dimension")->required();
  add_common(cmd_enum, common);

  auto* cmd_verify =
      app.add_subcommand("verify-estimate", "check the wedge slope bound over non-Hodge-Witt polygons");
  long ver_g = 0;
  long ver_gmax = 0;
  cmd_verify->add_option("--g", ver_g, "dimension (or range start)")->required();
  cmd_verify->add_option("--g-max", ver_gmax, "range end (inclusive)");
  add_common(cmd_verify, common);

  auto* cmd_wedge = app.add_subcommand("wedge", "exterior power slope multiset of a polygon");
  std::string wedge_polygon;
  long wedge_i = 0;
  cmd_wedge->add_option("--polygon", wedge_polygon, "polygon as slope:mult,...")->required();
  cmd_wedge->add_option("--i", wedge_i, "wedge degree")->required();
  add_common(cmd_wedge, common);

  auto* cmd_polynp = app.add_subcommand("poly-np", "Newton polygon of an integer polynomial");
  std::string np_coeffs;
  long np_p = 0;
  long np_n = 1;
  cmd_polynp->add_option("--coeffs", np_coeffs, "coefficients, leading first")->required();
  cmd_polynp->add_option("--p", np_p, "prime")->required();
  cmd_polynp->add_option("--n", np_n, "q = p^n (default 1)");
  add_common(cmd_polynp, common);

  auto* cmd_scan = app.add_subcommand("scan", "reduction-type scan of a curve over a prime range");
  std::string scan_curve;
  std::string scan_label;
  long scan_pmin = 2;
  long scan_pmax = -1;
  cmd_scan->add_option("--curve", scan_curve, "ec:[a1,a2,a3,a4,a6] or hyp2:[c_d,...,c_0]")->required();
  cmd_scan->add_option("--label", scan_label, "report label (defaults to the curve string)");
  cmd_scan->add_option("--p-min", scan_pmin, "first prime (default 2)");
  cmd_scan->add_option("--p-max", scan_pmax, "last prime (default 10000 elliptic, 2000 genus 2)");
  add_common(cmd_scan, common);

  auto* cmd_audit = app.add_subcommand("audit", "twist-coupled audit of a scan artifact");
  std::string audit_in;
  long audit_g = 0;
  std::vector<long> audit_exclude;
  cmd_audit->add_option("--in", audit_in, "scan artifact (csv or json)")->required();
  cmd_audit->add_option("--g", audit_g, "dimension (>= 2)")->required();
  cmd_audit->add_option("--exclude", audit_exclude, "primes exempt from the verdict")->delimiter(',');
  add_common(cmd_audit, common);

  auto* cmd_report = app.add_subcommand("report", "re-derive the density report of a scan artifact");
  std::string report_in;
  cmd_report->add_option("--in", report_in, "scan artifact (csv or json)")->required();
  add_common(cmd_report, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    unsigned jobs = common.jobs == 0 ? default_jobs() : common.jobs;

    if (*cmd_enum) {
      auto polys = enumerate_admissible(enum_g);
      std::string fmt = pick(common, "table");
      if (fmt == "json")
        emit(common, polygons_to_json(enum_g, polys));
      else if (fmt == "csv")
        emit(common, polygons_to_csv(polys));
      else
        emit(common, polygons_to_table(polys));
      return 0;
    }

    if (*cmd_verify) {
      long hi = ver_gmax == 0 ? ver_g : ver_gmax;
      if (hi < ver_g) fail(errc::parse_error, "--g-max below --g");
      std::vector<EstimateReport> reports;
      for (long g = ver_g; g <= hi; ++g) reports.push_back(verify_slope_estimate(g, jobs));
      std::string fmt = pick(common, "table");
      if (fmt == "json") {
        emit(common, estimates_to_json(reports));
      } else if (fmt == "csv") {
        emit(common, estimates_to_csv(reports));
      } else {
        std::string t;
        for (const auto& r : reports) t += estimate_to_table(r);
        emit(common, t);
      }
      for (const auto& r : reports)
        if (!r.counterexamples.empty()) return 1;
      return 0;
    }

    if (*cmd_wedge) {
      auto np = polygon_from_text(wedge_polygon);
      auto sm = exterior_slopes(np, wedge_i);
      std::string fmt = pick(common, "table");
      if (fmt == "json")
        emit(common, wedge_to_json(sm));
      else if (fmt == "csv")
        emit(common, multiset_to_csv(sm));
      else
        emit(common, multiset_to_text(sm) + "\nmin_slope=" + rat_str(min_slope(sm)));
      return 0;
    }

    if (*cmd_polynp) {
      auto asc = coeffs_from_text(np_coeffs);
      auto sm = newton_polygon_of(asc, np_p, np_n);
      std::string fmt = pick(common, "table");
      if (fmt == "json")
        emit(common, hull_to_json(sm, np_p, np_n));
      else if (fmt == "csv")
        emit(common, multiset_to_csv(sm));
      else
        emit(common, multiset_to_text(sm));
      return 0;
    }

    if (*cmd_scan) {
      auto curve = curve_from_text(scan_curve);
      if (!scan_label.empty()) curve.label = scan_label;
      if (scan_pmax < 0) scan_pmax = curve.genus() == 1 ? 10000 : 2000;
      auto res = scan(curve, scan_pmin, scan_pmax, jobs);
      std::string fmt = pick(common, "csv");
      if (fmt == "json")
        emit(common, scan_to_json(res));
      else if (fmt == "table")
        emit(common, scan_to_table(res));
      else
        emit(common, scan_to_csv(res));
      return 0;
    }

    if (*cmd_audit) {
      auto parsed = scan_from_text(read_file(audit_in));
      std::vector<WeilPolynomial> polys;
      for (const auto& rec : parsed.records)
        if (rec.status == ReductionStatus::Good) polys.push_back(*rec.frobenius);
      for (const auto& f : polys)
        if (f.degree() != 2 * audit_g)
          fail(errc::degree_mismatch, "artifact degree " + std::to_string(f.degree()) +
                                          " does not match g = " + std::to_string(audit_g));
      auto [records, summary] = twist_coupled_audit(polys, audit_g, audit_exclude, jobs);
      std::string fmt = pick(common, "json");
      if (fmt == "table")
        emit(common, audit_to_table(records, summary));
      else if (fmt == "csv")
        emit(common, audit_to_csv(records));
      else
        emit(common, audit_to_json(records, summary, audit_exclude, audit_g));
      return summary.consistent ? 0 : 1;
    }

    if (*cmd_report) {
      auto parsed = scan_from_text(read_file(report_in));
      auto rep = report_from_records(parsed.label, parsed.records);
      auto sp = self_product_of_records(parsed.records);
      std::string fmt = pick(common, "json");
      if (fmt == "table")
        emit(common, report_to_table(rep, sp));
      else if (fmt == "csv")
        emit(common, report_to_csv(rep, sp));
      else
        emit(common, report_to_json(rep, sp));
      return 0;
    }

    return 2;
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
