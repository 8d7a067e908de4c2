#include "avslope/newton_polygon.hpp"

#include <algorithm>
#include <map>

#include "avslope/errors.hpp"

namespace avslope {

long NewtonPolygon::multiplicity(const Slope& s) const {
  for (const auto& [slope, m] : pairs)
    if (slope == s) return m;
  return 0;
}

bool polygon_less(const NewtonPolygon& a, const NewtonPolygon& b) {
  std::size_t n = std::min(a.pairs.size(), b.pairs.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a.pairs[i].first != b.pairs[i].first) return a.pairs[i].first < b.pairs[i].first;
    if (a.pairs[i].second != b.pairs[i].second) return a.pairs[i].second < b.pairs[i].second;
  }
  return a.pairs.size() < b.pairs.size();
}

static std::string slope_str_local(const Slope& s) {
  if (s.get_den() == 1) return s.get_num().get_str();
  return s.get_num().get_str() + "/" + s.get_den().get_str();
}

NewtonPolygon make_polygon(const std::vector<std::pair<Slope, long>>& pairs, bool strict) {
  std::map<Slope, long> acc;
  for (const auto& [s, m] : pairs) {
    if (m < 1) fail(errc::bad_multiplicity, "multiplicity " + std::to_string(m) + " at slope " + slope_str_local(s));
    if (s < 0 || s > 1) fail(errc::slope_out_of_range, "slope " + slope_str_local(s));
    acc[s] += m;
  }
  long mass = 0;
  for (const auto& [s, m] : acc) mass += m;
  if (mass == 0) fail(errc::bad_multiplicity, "no slopes");
  if (mass % 2 != 0) fail(errc::total_mass_odd, "total multiplicity " + std::to_string(mass));
  if (strict) {
    for (const auto& [s, m] : acc) {
      Slope mirror = Slope(1) - s;
      auto it = acc.find(mirror);
      long mm = it == acc.end() ? 0 : it->second;
      if (mm != m)
        fail(errc::symmetry_violation,
             "m(" + slope_str_local(s) + ") = " + std::to_string(m) + " but m(" + slope_str_local(mirror) +
                 ") = " + std::to_string(mm));
    }
    for (const auto& [s, m] : acc) {
      Int b = s.get_den();
      if (m % b != 0)
        fail(errc::denominator_violation,
             b.get_str() + " does not divide " + std::to_string(m) + " at slope " + slope_str_local(s));
    }
  }
  NewtonPolygon np;
  np.g = mass / 2;
  np.pairs.assign(acc.begin(), acc.end());
  return np;
}

long p_rank(const NewtonPolygon& np) { return np.m0(); }

const char* label_name(Label l) {
  switch (l) {
    case Label::Ordinary: return "Ordinary";
    case Label::HodgeWittNotOrdinary: return "HodgeWittNotOrdinary";
    case Label::NonHodgeWitt: return "NonHodgeWitt";
  }
  return "?";
}

ClassLabel classify(const NewtonPolygon& np) {
  long m0 = p_rank(np);
  ClassLabel c;
  if (m0 == np.g)
    c.label = Label::Ordinary;
  else if (m0 == np.g - 1)
    c.label = Label::HodgeWittNotOrdinary;
  else
    c.label = Label::NonHodgeWitt;
  c.supersingular = np.pairs.size() == 1 && np.pairs[0].first == Slope(1, 2);
  return c;
}

bool mult_identity_check(const NewtonPolygon& np) {
  long below_half = 0;
  for (const auto& [s, m] : np.pairs)
    if (s > 0 && s < Slope(1, 2)) below_half += m;
  return 2 * np.g == 2 * np.m0() + np.m_half() + 2 * below_half;
}

Int SlopeMultiset::total_multiplicity() const {
  Int t = 0;
  for (const auto& [s, m] : pairs) t += m;
  return t;
}

SlopeMultiset exterior_slopes(const NewtonPolygon& np, long i) {
  long mass = 2 * np.g;
  if (i < 1 || i > mass)
    fail(errc::wedge_degree_out_of_range, "i = " + std::to_string(i) + ", mass = " + std::to_string(mass));
  // dp[c][sum] = number of c-element sub-multisets with slope sum `sum`;
  // each slope class of multiplicity m contributes a C(m, k) factor.
  std::vector<std::map<Rat, Int>> dp(i + 1);
  dp[0][Rat(0)] = 1;
  for (const auto& [s, m] : np.pairs) {
    std::vector<std::map<Rat, Int>> next(i + 1);
    long kmax = std::min<long>(m, i);
    std::vector<Int> binom(kmax + 1);
    for (long k = 0; k <= kmax; ++k)
      binom[k] = binomial(static_cast<unsigned long>(m), static_cast<unsigned long>(k));
    for (long c = 0; c <= i; ++c)
      for (const auto& [sum, ways] : dp[c])
        for (long k = 0; k <= kmax && c + k <= i; ++k) next[c + k][sum + k * s] += ways * binom[k];
    dp = std::move(next);
  }
  SlopeMultiset out;
  out.wedge_degree = i;
  out.pairs.assign(dp[i].begin(), dp[i].end());
  return out;
}

Slope min_slope(const SlopeMultiset& sm) {
  if (sm.pairs.empty()) fail(errc::empty_multiset, "no slopes");
  return sm.pairs.front().first;
}

NewtonPolygon product_polygon(const NewtonPolygon& a, const NewtonPolygon& b) {
  std::vector<std::pair<Slope, long>> merged = a.pairs;
  merged.insert(merged.end(), b.pairs.begin(), b.pairs.end());
  return make_polygon(merged, true);
}

}  // namespace avslope
