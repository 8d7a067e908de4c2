#include "avslope/enumerate.hpp"

#include <algorithm>
#include <numeric>

#include "avslope/errors.hpp"

namespace avslope {

// Symmetric polygons of dimension g decompose as
//   m0 x {0}  +  middles in (0, 1/2)  +  2h x {1/2}  +  mirrors  +  m0 x {1}
// with m0 + h + (middle mass) = g; the denominator condition caps middle
// denominators at g.
static void fill_middles(long g, long m0, long h, const std::vector<Slope>& cands, std::size_t idx,
                         long remaining, std::vector<std::pair<std::size_t, long>>& chosen,
                         std::vector<NewtonPolygon>& out) {
  if (remaining == 0) {
    std::vector<std::pair<Slope, long>> ps;
    if (m0 > 0) ps.emplace_back(Slope(0), m0);
    for (const auto& [ci, m] : chosen) ps.emplace_back(cands[ci], m);
    if (h > 0) ps.emplace_back(Slope(1, 2), 2 * h);
    for (auto it = chosen.rbegin(); it != chosen.rend(); ++it)
      ps.emplace_back(Slope(1) - cands[it->first], it->second);
    if (m0 > 0) ps.emplace_back(Slope(1), m0);
    out.push_back(make_polygon(ps, true));
    return;
  }
  for (std::size_t j = idx; j < cands.size(); ++j) {
    long b = cands[j].get_den().get_si();
    for (long m = b; m <= remaining; m += b) {
      chosen.emplace_back(j, m);
      fill_middles(g, m0, h, cands, j + 1, remaining - m, chosen, out);
      chosen.pop_back();
    }
  }
}

std::vector<NewtonPolygon> enumerate_admissible(long g) {
  if (g < 1 || g > kMaxEnumDimension)
    fail(errc::bound_exceeded, "dimension " + std::to_string(g) + " outside [1, " +
                                   std::to_string(kMaxEnumDimension) + "]");
  std::vector<Slope> cands;  // reduced a/b in (0, 1/2), b <= g
  for (long b = 3; b <= g; ++b)
    for (long a = 1; 2 * a < b; ++a)
      if (std::gcd(a, b) == 1) cands.push_back(make_rat(a, b));
  std::sort(cands.begin(), cands.end());

  std::vector<NewtonPolygon> out;
  std::vector<std::pair<std::size_t, long>> chosen;
  for (long m0 = 0; m0 <= g; ++m0)
    for (long h = 0; h <= g - m0; ++h) fill_middles(g, m0, h, cands, 0, g - m0 - h, chosen, out);
  std::sort(out.begin(), out.end(), polygon_less);
  return out;
}

EstimateReport verify_slope_estimate(long g, unsigned jobs) {
  if (g < 2) fail(errc::bound_exceeded, "dimension " + std::to_string(g) + " below 2");
  auto polys = enumerate_admissible(g);
  struct Slot {
    bool checked = false;
    Slope mn;
  };
  std::vector<Slot> slots(polys.size());
  parallel_for(polys.size(), jobs, [&](std::size_t k) {
    if (classify(polys[k]).label == Label::NonHodgeWitt) {
      slots[k].checked = true;
      slots[k].mn = min_slope(exterior_slopes(polys[k], g));
    }
  });
  EstimateReport rep;
  rep.g = g;
  rep.polygons_total = static_cast<long>(polys.size());
  for (std::size_t k = 0; k < polys.size(); ++k) {
    if (!slots[k].checked) continue;
    ++rep.polygons_checked;
    if (slots[k].mn < 1)
      rep.counterexamples.emplace_back(polys[k], slots[k].mn);
    else if (slots[k].mn == 1)
      rep.witnesses.push_back(polys[k]);
  }
  return rep;
}

}  // namespace avslope
