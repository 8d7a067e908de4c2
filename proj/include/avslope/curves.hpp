#pragma once
// Integral curve models and their primes of bad reduction.

#include <string>
#include <vector>

#include "avslope/arith.hpp"

namespace avslope {

struct CurveSpec {
  enum class Kind { Elliptic, Hyperelliptic2 };

  Kind kind = Kind::Elliptic;
  // Elliptic: [a1, a2, a3, a4, a6] of
  //   y^2 + a1 x y + a3 y = x^3 + a2 x^2 + a4 x + a6.
  // Hyperelliptic2: coefficients of f, constant term first, deg 5 or 6, of
  //   y^2 = f(x).
  std::vector<Int> coeffs;
  std::string label;

  long genus() const { return kind == Kind::Elliptic ? 1 : 2; }
};

// Constructors validate nondegeneracy (ZeroDiscriminant on failure; the
// genus-2 check is gcd(f, f') constant, equivalent to disc(f) != 0).
CurveSpec make_elliptic(const std::vector<Int>& a, std::string label = "");
CurveSpec make_hyperelliptic2(const std::vector<Int>& f_ascending, std::string label = "");

// b2 = a1^2 + 4 a2, b4 = 2 a4 + a1 a3, b6 = a3^2 + 4 a6,
// b8 = a1^2 a6 + 4 a2 a6 - a1 a3 a4 + a2 a3^2 - a4^2.
struct WeierstrassData {
  Int b2, b4, b6, b8;
};
WeierstrassData weierstrass_data(const CurveSpec& c);

// -b2^2 b8 - 8 b4^3 - 27 b6^2 + 9 b2 b4 b6
Int elliptic_discriminant(const CurveSpec& c);

// disc(f) = (-1)^{d(d-1)/2} Res(f, f') / lc(f), by Sylvester determinant.
Int hyperelliptic_discriminant(const CurveSpec& c);

// The product whose prime divisors are the bad primes: disc for elliptic,
// 2 * disc(f) * lc(f) for genus 2.
Int bad_reduction_product(const CurveSpec& c);

// Distinct primes dividing bad_reduction_product, ascending.
std::vector<Int> bad_primes(const CurveSpec& c);

}  // namespace avslope
