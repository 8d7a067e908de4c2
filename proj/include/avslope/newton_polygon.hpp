#pragma once
// Slope multisets of abelian varieties in characteristic p: construction,
// p-rank classification, exterior powers.

#include <utility>
#include <vector>

#include "avslope/arith.hpp"

namespace avslope {

using Slope = Rat;

// Newton polygon of H^1: slopes strictly increasing, multiplicities positive,
// total mass 2g, every slope in [0,1]. A strict polygon also satisfies
//   m(s) = m(1-s)                       (symmetry)
//   b | m(a/b) for a/b in lowest terms  (integral break points)
struct NewtonPolygon {
  long g = 0;
  std::vector<std::pair<Slope, long>> pairs;

  long multiplicity(const Slope& s) const;
  long m0() const { return multiplicity(Slope(0)); }
  long m_half() const { return multiplicity(Slope(1, 2)); }

  bool operator==(const NewtonPolygon& other) const { return g == other.g && pairs == other.pairs; }
};

// Lexicographic on the (slope, multiplicity) lists.
bool polygon_less(const NewtonPolygon& a, const NewtonPolygon& b);

// Sorts, merges duplicate slopes, validates. Non-strict mode skips the
// symmetry and denominator checks (general multisets, e.g. twisted data).
NewtonPolygon make_polygon(const std::vector<std::pair<Slope, long>>& pairs, bool strict = true);

// Multiplicity of slope 0.
long p_rank(const NewtonPolygon& np);

enum class Label { Ordinary, HodgeWittNotOrdinary, NonHodgeWitt };

const char* label_name(Label l);

struct ClassLabel {
  Label label = Label::Ordinary;
  bool supersingular = false;

  bool operator==(const ClassLabel& other) const = default;
};

// p-rank thresholds: m0 = g ordinary, m0 = g-1 Hodge-Witt but not ordinary,
// m0 <= g-2 not Hodge-Witt. Supersingular = all slopes 1/2.
ClassLabel classify(const NewtonPolygon& np);

// 2g = 2*m0 + m(1/2) + 2 * sum_{0 < s < 1/2} m(s); an identity for every
// strict polygon, verified literally.
bool mult_identity_check(const NewtonPolygon& np);

// General slope multiset (wedge powers, hull output); slopes strictly
// increasing, Int multiplicities.
struct SlopeMultiset {
  long wedge_degree = 1;
  std::vector<std::pair<Slope, Int>> pairs;

  Int total_multiplicity() const;

  bool operator==(const SlopeMultiset& other) const {
    return wedge_degree == other.wedge_degree && pairs == other.pairs;
  }
};

// All i-fold sub-multiset sums of the slopes of np, with multiplicity;
// total multiplicity C(2g, i). 1 <= i <= 2g.
SlopeMultiset exterior_slopes(const NewtonPolygon& np, long i);

Slope min_slope(const SlopeMultiset& sm);

// Slope multiset of H^1(A x B) = H^1(A) + H^1(B): multisets add.
NewtonPolygon product_polygon(const NewtonPolygon& a, const NewtonPolygon& b);

}  // namespace avslope
