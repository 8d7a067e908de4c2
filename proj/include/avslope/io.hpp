#pragma once
// Text, CSV and JSON forms of the library types. All exact payloads travel
// as decimal strings; every emitter is deterministic and round-trips
// byte-exactly through its parser.

#include <optional>
#include <string>
#include <vector>

#include "avslope/audit.hpp"
#include "avslope/curves.hpp"
#include "avslope/enumerate.hpp"
#include "avslope/scan.hpp"
#include "avslope/weil.hpp"

namespace avslope {

// "0:1,1/2:4,1:1"
std::string polygon_to_text(const NewtonPolygon& np);
NewtonPolygon polygon_from_text(const std::string& s, bool strict = true);

// same shape, Int multiplicities
std::string multiset_to_text(const SlopeMultiset& sm);

// "1,-1,5": leading coefficient first; parsed to ascending order
std::vector<Int> coeffs_from_text(const std::string& s);
std::string coeffs_to_text(const std::vector<Int>& ascending);

// "ec:[a1,a2,a3,a4,a6]" | "hyp2:[c_d,...,c_0]" (leading first, degree 5 or 6)
CurveSpec curve_from_text(const std::string& s);
std::string curve_to_text(const CurveSpec& c);

// {"g": 3, "pairs": [["0", 1], ["1/2", 4], ["1", 1]]}
std::string polygon_to_json(const NewtonPolygon& np);
NewtonPolygon polygon_from_json(const std::string& s, bool strict = true);

// {"i": 2, "pairs": [["1/2", "1"], ...], "min_slope": "1/2"}
std::string wedge_to_json(const SlopeMultiset& sm);
// {"p": 5, "n": 1, "pairs": [...], "min_slope": "0"}
std::string hull_to_json(const SlopeMultiset& sm, long p, long n);
// "slope,multiplicity" rows
std::string multiset_to_csv(const SlopeMultiset& sm);

std::string polygons_to_json(long g, const std::vector<NewtonPolygon>& polys);
std::string polygons_to_table(const std::vector<NewtonPolygon>& polys);
std::string polygons_to_csv(const std::vector<NewtonPolygon>& polys);

std::string estimates_to_json(const std::vector<EstimateReport>& reports);
std::string estimates_to_csv(const std::vector<EstimateReport>& reports);

std::string audit_to_csv(const std::vector<AuditRecord>& records);
std::string report_to_csv(const DensityReport& rep, const SelfProductReport& sp);

// {"coeffs": ["1", "-1", "5"], "p": 5, "n": 1, "g": 1}; coeffs leading first
std::string poly_to_json(const WeilPolynomial& f);
WeilPolynomial poly_from_json(const std::string& s);

std::string estimate_to_json(const EstimateReport& r);
std::string estimate_to_table(const EstimateReport& r);

std::string audit_to_json(const std::vector<AuditRecord>& records, const AuditSummary& summary,
                          const std::vector<long>& exclude, long g);
std::string audit_to_table(const std::vector<AuditRecord>& records, const AuditSummary& summary);

// CSV columns:
// p,status,coeffs,p_rank,class,supersingular,min_wedge_slope,twist_integral,trace,trace_div_p
extern const char* const kScanCsvHeader;
std::string records_to_csv(const std::vector<ScanRecord>& records);
std::string scan_to_csv(const ScanResult& r);
std::string scan_to_json(const ScanResult& r);
std::string scan_to_table(const ScanResult& r);

std::string report_to_json(const DensityReport& rep, const SelfProductReport& sp);
std::string report_to_table(const DensityReport& rep, const SelfProductReport& sp);

// Scan artifact reader (CSV or JSON, sniffed): every Good row is rebuilt
// from its coefficients through full validation and cross-checked against
// the stored derived columns; any disagreement is a parse error.
struct ParsedScan {
  std::string label;
  std::vector<ScanRecord> records;
};
ParsedScan scan_from_text(const std::string& content);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace avslope
