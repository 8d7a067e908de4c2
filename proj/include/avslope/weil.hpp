#pragma once
// Frobenius characteristic polynomials: purity validation, Newton polygons by
// lower convex hull, Tate twists, exterior powers.

#include <vector>

#include "avslope/arith.hpp"
#include "avslope/newton_polygon.hpp"

namespace avslope {

// Monic integer polynomial whose roots have absolute value q^{weight/2},
// q = p^n. coeffs[j] is the coefficient of t^j (so coeffs.back() == 1).
struct WeilPolynomial {
  std::vector<Int> coeffs;
  long p = 0;
  long n = 1;
  long weight = 1;

  long degree() const { return static_cast<long>(coeffs.size()) - 1; }
  Int q() const;
  // trace of Frobenius: -(coefficient of t^{N-1})
  Int trace() const;

  bool operator==(const WeilPolynomial& other) const = default;
};

// f(pt) / p^N, coefficients a_j p^{j-N}: exact rationals, weight drops by 2.
struct TwistedPolynomial {
  std::vector<Rat> coeffs;
  long p = 0;
  long n = 1;
  long weight = -1;

  long degree() const { return static_cast<long>(coeffs.size()) - 1; }
  Rat trace() const;
};

// Validates weight-1 data of dimension g: monic, degree 2g, functional
// equation a_j = q^{g-j} a_{2g-j}, and a slope multiset symmetric under
// s -> 1-s. coeffs ascending, p prime, n >= 1.
WeilPolynomial validate_weil(const std::vector<Int>& coeffs, long p, long n, long g);

// Lower convex hull of {(j, v_p(a_j)) : a_j != 0}; returns the root
// valuations (negated segment slopes) normalized so v(q) = 1, each with
// multiplicity = segment width. Rejects a_0 = 0 and non-prime p.
SlopeMultiset newton_polygon_of(const std::vector<Rat>& coeffs, long p, long n);
SlopeMultiset newton_polygon_of(const std::vector<Int>& coeffs, long p, long n);
SlopeMultiset newton_polygon_of(const WeilPolynomial& f);
SlopeMultiset newton_polygon_of(const TwistedPolynomial& f);

// The hull of weight-1 data as a strict polygon (mass 2g, slopes in [0,1]).
NewtonPolygon h1_polygon(const WeilPolynomial& f);

// Every root valuation >= 1 with v(p) = 1 (un-normalized), read off the hull.
// Equivalent to p^{N-j} | a_j for all j, i.e. integrality of the Tate twist;
// the equivalence is kept testable by computing this side from the hull only.
bool all_slopes_ge_one(const WeilPolynomial& f);

TwistedPolynomial tate_twist(const WeilPolynomial& f);

bool is_integral(const TwistedPolynomial& f);

// All slopes within [lo, hi].
bool slope_window(const SlopeMultiset& slopes, const Rat& lo, const Rat& hi);

// Characteristic polynomial of Lambda^i of the companion matrix of f:
// degree C(N, i), roots the i-fold products of the roots of f, weight
// scaled by i. Exact integer linear algebra throughout. 1 <= i <= N.
WeilPolynomial wedge_char_poly(const WeilPolynomial& f, long i);

}  // namespace avslope
