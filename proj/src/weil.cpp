#include "avslope/weil.hpp"

#include <algorithm>
#include <map>

#include "avslope/errors.hpp"
#include "avslope/linalg.hpp"

namespace avslope {

Int WeilPolynomial::q() const { return int_pow(Int(p), static_cast<unsigned long>(n)); }

Int WeilPolynomial::trace() const {
  long N = degree();
  return N >= 1 ? Int(-coeffs[N - 1]) : Int(0);
}

Rat TwistedPolynomial::trace() const {
  long N = degree();
  return N >= 1 ? Rat(-coeffs[N - 1]) : Rat(0);
}

SlopeMultiset newton_polygon_of(const std::vector<Rat>& coeffs, long p, long n) {
  if (p < 2 || !is_prime_u64(static_cast<std::uint64_t>(p)))
    fail(errc::not_prime, "p = " + std::to_string(p));
  if (n < 1) fail(errc::parse_error, "n = " + std::to_string(n));
  if (coeffs.empty() || coeffs.back() == 0) fail(errc::parse_error, "empty or non-normalized coefficients");
  if (coeffs[0] == 0) fail(errc::zero_constant_term, "Newton polygon undefined");

  // finite points (j, v_p(a_j)); zero coefficients contribute nothing
  std::vector<std::pair<long, long>> pts;
  for (long j = 0; j < static_cast<long>(coeffs.size()); ++j)
    if (coeffs[j] != 0) pts.emplace_back(j, valuation(coeffs[j], p));

  // lower convex hull, left to right; collinear middle points dropped
  std::vector<std::pair<long, long>> hull;
  auto keeps_convex = [](const std::pair<long, long>& a, const std::pair<long, long>& b,
                         const std::pair<long, long>& c) {
    // true when b lies strictly below chord ac
    return static_cast<__int128>(b.first - a.first) * (c.second - a.second) -
               static_cast<__int128>(b.second - a.second) * (c.first - a.first) >
           0;
  };
  for (const auto& pt : pts) {
    while (hull.size() >= 2 && !keeps_convex(hull[hull.size() - 2], hull.back(), pt)) hull.pop_back();
    hull.push_back(pt);
  }

  SlopeMultiset out;
  out.wedge_degree = 1;
  // root valuations are the negated segment slopes, scaled so v(q) = 1;
  // reversed to make them increasing
  for (std::size_t k = hull.size() - 1; k >= 1; --k) {
    long dx = hull[k - 1].first - hull[k].first;   // negative
    long dy = hull[k - 1].second - hull[k].second;
    out.pairs.emplace_back(make_rat(Int(dy), Int(-dx) * n), Int(-dx));
  }
  return out;
}

SlopeMultiset newton_polygon_of(const std::vector<Int>& coeffs, long p, long n) {
  std::vector<Rat> rc(coeffs.begin(), coeffs.end());
  return newton_polygon_of(rc, p, n);
}

SlopeMultiset newton_polygon_of(const WeilPolynomial& f) {
  return newton_polygon_of(f.coeffs, f.p, f.n);
}

SlopeMultiset newton_polygon_of(const TwistedPolynomial& f) {
  return newton_polygon_of(f.coeffs, f.p, f.n);
}

WeilPolynomial validate_weil(const std::vector<Int>& coeffs, long p, long n, long g) {
  long N = static_cast<long>(coeffs.size()) - 1;
  if (N < 2 || N % 2 != 0) fail(errc::odd_degree, "degree " + std::to_string(N));
  if (g < 1 || N != 2 * g)
    fail(errc::degree_mismatch, "degree " + std::to_string(N) + " for g = " + std::to_string(g));
  if (coeffs[N] != 1) fail(errc::not_monic, "leading coefficient " + coeffs[N].get_str());

  WeilPolynomial f;
  f.coeffs = coeffs;
  f.p = p;
  f.n = n;
  f.weight = 1;

  // functional equation a_j = q^{g-j} a_{2g-j}, 0 <= j <= g
  Int q = int_pow(Int(p), static_cast<unsigned long>(n));
  for (long j = 0; j <= g; ++j) {
    Int expect = int_pow(q, static_cast<unsigned long>(g - j)) * coeffs[2 * g - j];
    if (coeffs[j] != expect)
      fail(errc::functional_equation_failed,
           "a_" + std::to_string(j) + " = " + coeffs[j].get_str() + ", expected " + expect.get_str());
  }

  // slope symmetry under s -> 1-s (follows from the functional equation;
  // checked literally on the hull)
  auto sm = newton_polygon_of(coeffs, p, n);
  std::map<Slope, Int> mult;
  for (const auto& [s, m] : sm.pairs) mult[s] = m;
  for (const auto& [s, m] : sm.pairs) {
    auto it = mult.find(Slope(1) - s);
    if (it == mult.end() || it->second != m) fail(errc::asymmetric_polygon, "slope " + rat_str(s));
  }
  return f;
}

NewtonPolygon h1_polygon(const WeilPolynomial& f) {
  auto sm = newton_polygon_of(f);
  std::vector<std::pair<Slope, long>> ps;
  for (const auto& [s, m] : sm.pairs) ps.emplace_back(s, static_cast<long>(m.get_si()));
  return make_polygon(ps, true);
}

bool all_slopes_ge_one(const WeilPolynomial& f) {
  // un-normalized valuations: normalized slope times n
  auto sm = newton_polygon_of(f);
  return min_slope(sm) * f.n >= 1;
}

TwistedPolynomial tate_twist(const WeilPolynomial& f) {
  long N = f.degree();
  TwistedPolynomial t;
  t.p = f.p;
  t.n = f.n;
  t.weight = f.weight - 2;
  t.coeffs.resize(N + 1);
  for (long j = 0; j <= N; ++j)
    t.coeffs[j] = make_rat(f.coeffs[j], int_pow(Int(f.p), static_cast<unsigned long>(N - j)));
  return t;
}

bool is_integral(const TwistedPolynomial& f) {
  return std::all_of(f.coeffs.begin(), f.coeffs.end(),
                     [](const Rat& c) { return c.get_den() == 1; });
}

bool slope_window(const SlopeMultiset& slopes, const Rat& lo, const Rat& hi) {
  if (slopes.pairs.empty()) fail(errc::empty_multiset, "no slopes");
  return slopes.pairs.front().first >= lo && slopes.pairs.back().first <= hi;
}

// i-subsets of {0..N-1} in lexicographic order
static std::vector<std::vector<int>> subsets(int N, int i) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(i);
  for (int k = 0; k < i; ++k) cur[k] = k;
  for (;;) {
    out.push_back(cur);
    int k = i - 1;
    while (k >= 0 && cur[k] == N - i + k) --k;
    if (k < 0) break;
    ++cur[k];
    for (int j = k + 1; j < i; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

WeilPolynomial wedge_char_poly(const WeilPolynomial& f, long i) {
  long N = f.degree();
  if (i < 1 || i > N)
    fail(errc::wedge_degree_out_of_range, "i = " + std::to_string(i) + ", degree = " + std::to_string(N));
  if (f.coeffs[N] != 1) fail(errc::not_monic, "leading coefficient " + f.coeffs[N].get_str());
  if (i == 1) return f;

  // companion matrix of f
  Mat comp(N, std::vector<Int>(N, Int(0)));
  for (long r = 1; r < N; ++r) comp[r][r - 1] = 1;
  for (long r = 0; r < N; ++r) comp[r][N - 1] = -f.coeffs[r];

  // Lambda^i: entries are i x i minors over lex-ordered row/column subsets
  auto subs = subsets(static_cast<int>(N), static_cast<int>(i));
  std::size_t D = subs.size();
  Mat wedge(D, std::vector<Int>(D));
  Mat minor(i, std::vector<Int>(i));
  for (std::size_t r = 0; r < D; ++r)
    for (std::size_t c = 0; c < D; ++c) {
      for (long rr = 0; rr < i; ++rr)
        for (long cc = 0; cc < i; ++cc) minor[rr][cc] = comp[subs[r][rr]][subs[c][cc]];
      wedge[r][c] = det_exact(minor);
    }

  auto desc = char_poly(wedge);
  WeilPolynomial out;
  out.p = f.p;
  out.n = f.n;
  out.weight = f.weight * i;
  out.coeffs.resize(D + 1);
  for (std::size_t k = 0; k < desc.size(); ++k) out.coeffs[D - k] = desc[k];
  return out;
}

}  // namespace avslope
