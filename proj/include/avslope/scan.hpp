#pragma once
// Point counting over prime fields, Frobenius polynomials, and reduction-type
// density scans over prime ranges.

#include <optional>
#include <string>
#include <vector>

#include "avslope/audit.hpp"
#include "avslope/curves.hpp"
#include "avslope/newton_polygon.hpp"
#include "avslope/weil.hpp"

namespace avslope {

// #E(F_p), point at infinity included; requires p >= 5 and good reduction.
long count_points_ec(const CurveSpec& c, long p);

// t^2 - a_p t + p with a_p = p + 1 - N; enforces a_p^2 <= 4p.
WeilPolynomial frobenius_poly_ec(long n_points, long p);

// (#C(F_p), #C(F_{p^2})) on the smooth model (so 1 point at infinity for
// deg f = 5, 2 or 0 for deg 6 by whether lc(f) is a square); requires odd p
// and good reduction.
std::pair<long, long> count_points_hyp2(const CurveSpec& c, long p);

// t^4 + a1 t^3 + a2 t^2 + p a1 t + p^2 from the power sums
// s1 = p + 1 - N1, s2 = p^2 + 1 - N2: a1 = -s1, a2 = (s1^2 - s2) / 2.
WeilPolynomial frobenius_poly_hyp2(long n1, long n2, long p);

enum class ReductionStatus { Good, Bad, Skipped };
const char* status_name(ReductionStatus s);

struct ScanRecord {
  long p = 0;
  ReductionStatus status = ReductionStatus::Skipped;
  // the rest is set only when status == Good
  std::optional<WeilPolynomial> frobenius;
  std::optional<NewtonPolygon> polygon;
  std::optional<ClassLabel> cls;
  // Lambda^g data; for g = 1 the wedge is the polynomial itself
  Slope min_wedge_slope;
  bool twist_integral = false;
  Int wedge_trace;
  bool trace_div_p = false;
  std::optional<AuditRecord> audit;  // g >= 2 only
};

struct DensityReport {
  std::string label;
  long primes_scanned = 0;
  long good = 0;
  long bad = 0;
  long skipped = 0;
  long ordinary = 0;
  long hw_not_ordinary = 0;
  long non_hodge_witt = 0;
  long supersingular = 0;

  // count / good, exact
  Rat freq(long count) const;
};

// Classification of X x X over the good primes, computed from the doubled
// polygon. A self-product is Hodge-Witt iff it is ordinary (the p-rank of
// X x X is 2 m0, never 2g(X x X) - 1), so hw_not_ordinary is structurally 0.
struct SelfProductReport {
  long good = 0;
  long ordinary = 0;
  long hodge_witt = 0;
  long non_hodge_witt = 0;
};

struct ScanResult {
  CurveSpec curve;
  std::vector<ScanRecord> records;
  DensityReport report;
  SelfProductReport self_product;
};

// Good record with all derived columns (polygon, class, Lambda^g data)
// recomputed from a validated Frobenius polynomial.
ScanRecord record_from_frobenius(const WeilPolynomial& f);

// Scans every prime in [p_min, p_max]. Status: Bad if p divides the
// bad-reduction product, else Skipped below the counting threshold
// (p in {2,3} elliptic, p = 2 genus 2), else Good with the full Frobenius,
// polygon, classification and wedge data. Deterministic for any jobs value.
ScanResult scan(const CurveSpec& c, long p_min, long p_max, unsigned jobs = 1);

DensityReport report_from_records(const std::string& label, const std::vector<ScanRecord>& records);

SelfProductReport self_product_of_records(const std::vector<ScanRecord>& records);

}  // namespace avslope
