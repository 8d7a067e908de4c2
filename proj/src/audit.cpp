#include "avslope/audit.hpp"

#include <algorithm>

#include "avslope/errors.hpp"

namespace avslope {

AuditRecord audit_entry(const WeilPolynomial& f, long g) {
  if (g < 2)
    fail(errc::wedge_degree_out_of_range,
         "audit needs g >= 2, the window [1, g-1] degenerates at g = " + std::to_string(g));
  if (f.degree() != 2 * g)
    fail(errc::degree_mismatch,
         "degree " + std::to_string(f.degree()) + " for g = " + std::to_string(g));

  AuditRecord r;
  r.p = f.p;
  r.n = f.n;
  r.g = g;
  r.class_label = classify(h1_polygon(f));

  auto wedge = wedge_char_poly(f, g);
  auto wedge_np = newton_polygon_of(wedge);
  auto twisted = tate_twist(wedge);

  r.min_wedge_slope = min_slope(wedge_np);
  r.property_s = slope_window(wedge_np, Rat(1), Rat(g - 1));
  r.property_e = is_integral(twisted);
  r.twisted_window = slope_window(newton_polygon_of(twisted), Rat(0), Rat(g - 2));
  r.wedge_trace = wedge.trace();
  r.trace_divisible = mpz_divisible_ui_p(r.wedge_trace.get_mpz_t(), static_cast<unsigned long>(f.p)) != 0;
  r.indiv_ok = r.class_label.label == Label::Ordinary ? !r.trace_divisible : true;
  return r;
}

std::pair<std::vector<AuditRecord>, AuditSummary> twist_coupled_audit(
    const std::vector<WeilPolynomial>& entries, long g, const std::vector<long>& exclude,
    unsigned jobs) {
  if (g < 2)
    fail(errc::wedge_degree_out_of_range,
         "audit needs g >= 2, the window [1, g-1] degenerates at g = " + std::to_string(g));
  std::vector<AuditRecord> records(entries.size());
  parallel_for(entries.size(), jobs, [&](std::size_t k) { records[k] = audit_entry(entries[k], g); });

  AuditSummary sum;
  sum.entries = static_cast<long>(records.size());
  for (const auto& r : records) {
    bool excluded = std::find(exclude.begin(), exclude.end(), r.p) != exclude.end();
    if (excluded) {
      ++sum.excluded;
      continue;
    }
    if (!r.property_s) ++sum.s_failures;
    if (!r.indiv_ok) ++sum.indiv_failures;
  }
  sum.consistent = sum.s_failures == 0 && sum.indiv_failures == 0;
  return {std::move(records), sum};
}

}  // namespace avslope
