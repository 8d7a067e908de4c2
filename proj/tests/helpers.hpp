#pragma once

#include <doctest.h>

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "avslope/errors.hpp"
#include "avslope/newton_polygon.hpp"

#define CHECK_FAILS(expr, expected)                                  \
  do {                                                               \
    bool threw_ = false;                                             \
    try {                                                            \
      (void)(expr);                                                  \
    } catch (const avslope::error& e_) {                             \
      threw_ = true;                                                 \
      CHECK(e_.code() == avslope::errc::expected);                   \
    }                                                                \
    if (!threw_) FAIL_CHECK(#expr << " did not throw " << #expected); \
  } while (0)

namespace testutil {

inline avslope::Rat rat(long num, long den = 1) { return avslope::make_rat(avslope::Int(num), avslope::Int(den)); }

// polygon from (num, den, mult) triples
inline avslope::NewtonPolygon poly(const std::vector<std::array<long, 3>>& triples, bool strict = true) {
  std::vector<std::pair<avslope::Slope, long>> pairs;
  for (const auto& t : triples) pairs.emplace_back(rat(t[0], t[1]), t[2]);
  return avslope::make_polygon(pairs, strict);
}

inline std::vector<avslope::Int> ints(const std::vector<long>& v) {
  std::vector<avslope::Int> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

}  // namespace testutil
