#include "avslope/curves.hpp"

#include <algorithm>

#include "avslope/errors.hpp"
#include "avslope/linalg.hpp"

namespace avslope {

WeierstrassData weierstrass_data(const CurveSpec& c) {
  const Int& a1 = c.coeffs[0];
  const Int& a2 = c.coeffs[1];
  const Int& a3 = c.coeffs[2];
  const Int& a4 = c.coeffs[3];
  const Int& a6 = c.coeffs[4];
  WeierstrassData w;
  w.b2 = a1 * a1 + 4 * a2;
  w.b4 = 2 * a4 + a1 * a3;
  w.b6 = a3 * a3 + 4 * a6;
  w.b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
  return w;
}

Int elliptic_discriminant(const CurveSpec& c) {
  auto w = weierstrass_data(c);
  return -w.b2 * w.b2 * w.b8 - 8 * w.b4 * w.b4 * w.b4 - 27 * w.b6 * w.b6 + 9 * w.b2 * w.b4 * w.b6;
}

static std::vector<Int> derivative(const std::vector<Int>& f) {
  std::vector<Int> d;
  for (std::size_t j = 1; j < f.size(); ++j) d.push_back(Int(j) * f[j]);
  return d;
}

// Res(f, g) as the Sylvester determinant; f, g ascending with nonzero
// leading coefficients.
static Int resultant(const std::vector<Int>& f, const std::vector<Int>& g) {
  long df = static_cast<long>(f.size()) - 1;
  long dg = static_cast<long>(g.size()) - 1;
  long n = df + dg;
  Mat s(n, std::vector<Int>(n, Int(0)));
  for (long r = 0; r < dg; ++r)
    for (long j = 0; j <= df; ++j) s[r][r + j] = f[df - j];
  for (long r = 0; r < df; ++r)
    for (long j = 0; j <= dg; ++j) s[dg + r][r + j] = g[dg - j];
  return det_exact(std::move(s));
}

Int hyperelliptic_discriminant(const CurveSpec& c) {
  const auto& f = c.coeffs;
  long d = static_cast<long>(f.size()) - 1;
  Int res = resultant(f, derivative(f));
  Int disc;
  mpz_divexact(disc.get_mpz_t(), res.get_mpz_t(), f[d].get_mpz_t());
  if ((d * (d - 1) / 2) % 2 != 0) disc = -disc;
  return disc;
}

// degree of gcd(f, f') over Q; positive iff f has a repeated root
static long repeated_root_degree(const std::vector<Int>& f) {
  auto trim = [](std::vector<Rat>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
  };
  std::vector<Rat> a(f.begin(), f.end());
  std::vector<Rat> b;
  for (std::size_t j = 1; j < f.size(); ++j) b.emplace_back(Int(j) * f[j]);
  trim(a);
  trim(b);
  while (!b.empty()) {
    // a mod b
    while (a.size() >= b.size()) {
      Rat c = a.back() / b.back();
      std::size_t off = a.size() - b.size();
      for (std::size_t j = 0; j < b.size(); ++j) a[off + j] -= c * b[j];
      a.pop_back();
      trim(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  return static_cast<long>(a.size()) - 1;
}

CurveSpec make_elliptic(const std::vector<Int>& a, std::string label) {
  if (a.size() != 5) fail(errc::parse_error, "elliptic model needs [a1,a2,a3,a4,a6]");
  CurveSpec c;
  c.kind = CurveSpec::Kind::Elliptic;
  c.coeffs = a;
  c.label = std::move(label);
  if (elliptic_discriminant(c) == 0) fail(errc::zero_discriminant, "singular Weierstrass model");
  return c;
}

CurveSpec make_hyperelliptic2(const std::vector<Int>& f_ascending, std::string label) {
  long d = static_cast<long>(f_ascending.size()) - 1;
  if (d != 5 && d != 6) fail(errc::parse_error, "genus-2 model needs deg f in {5, 6}");
  if (f_ascending.back() == 0) fail(errc::parse_error, "leading coefficient is zero");
  CurveSpec c;
  c.kind = CurveSpec::Kind::Hyperelliptic2;
  c.coeffs = f_ascending;
  c.label = std::move(label);
  if (repeated_root_degree(f_ascending) > 0) fail(errc::zero_discriminant, "f has a repeated root");
  return c;
}

Int bad_reduction_product(const CurveSpec& c) {
  if (c.kind == CurveSpec::Kind::Elliptic) return elliptic_discriminant(c);
  return 2 * hyperelliptic_discriminant(c) * c.coeffs.back();
}

std::vector<Int> bad_primes(const CurveSpec& c) { return distinct_prime_factors(bad_reduction_product(c)); }

}  // namespace avslope
