#pragma once
// Twist-coupled audit: per prime, integrality of the twisted top wedge
// against the wedge slope window, plus the trace dichotomy at ordinary
// primes.

#include <utility>
#include <vector>

#include "avslope/newton_polygon.hpp"
#include "avslope/weil.hpp"

namespace avslope {

struct AuditRecord {
  long p = 0;
  long n = 1;
  long g = 0;
  ClassLabel class_label;
  Slope min_wedge_slope;
  // wedge slopes within [1, g-1]
  bool property_s = false;
  // tate_twist(wedge) has integer coefficients
  bool property_e = false;
  // twisted wedge slopes within [0, g-2]
  bool twisted_window = false;
  Int wedge_trace;
  // p | wedge_trace
  bool trace_divisible = false;
  // at ordinary primes the wedge trace must be prime to p; vacuous elsewhere
  bool indiv_ok = true;
};

struct AuditSummary {
  long entries = 0;
  long excluded = 0;
  long s_failures = 0;      // property_s false outside the exclusion list
  long indiv_failures = 0;  // indiv_ok false outside the exclusion list
  // property_s and the ordinary-trace dichotomy hold at every
  // non-excluded prime
  bool consistent = false;
};

// Audit of a single validated weight-1 polynomial of dimension g >= 2.
AuditRecord audit_entry(const WeilPolynomial& f, long g);

// exclude: primes audited but exempt from the consistency verdict (the
// finitely-many-exceptions carve-out); default none.
std::pair<std::vector<AuditRecord>, AuditSummary> twist_coupled_audit(
    const std::vector<WeilPolynomial>& entries, long g,
    const std::vector<long>& exclude = {}, unsigned jobs = 1);

}  // namespace avslope
