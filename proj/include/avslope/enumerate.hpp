#pragma once
// Exhaustive enumeration of admissible Newton polygons of a fixed dimension
// and the wedge-slope lower bound check over the non-Hodge-Witt ones.

#include <vector>

#include "avslope/newton_polygon.hpp"

namespace avslope {

inline constexpr long kMaxEnumDimension = 10;

// Every strict polygon of dimension g (symmetry + integral break points),
// in lexicographic order. 1 <= g <= kMaxEnumDimension.
std::vector<NewtonPolygon> enumerate_admissible(long g);

struct EstimateReport {
  long g = 0;
  long polygons_total = 0;
  long polygons_checked = 0;  // non-Hodge-Witt only
  // polygons whose minimal Lambda^g slope is < 1, with that slope
  std::vector<std::pair<NewtonPolygon, Slope>> counterexamples;
  // polygons attaining the bound exactly (min slope == 1)
  std::vector<NewtonPolygon> witnesses;
};

// Checks min(exterior_slopes(P, g)) >= 1 for every non-Hodge-Witt P of
// dimension g. g >= 2 (at g = 1 there are no non-Hodge-Witt polygons).
EstimateReport verify_slope_estimate(long g, unsigned jobs = 1);

}  // namespace avslope
