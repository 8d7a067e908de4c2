#include <doctest.h>

#include <algorithm>
#include <vector>

#include "avslope/arith.hpp"
#include "avslope/enumerate.hpp"
#include "avslope/newton_polygon.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace avslope;
using testutil::poly;
using testutil::rat;

TEST_CASE("make_polygon sorts, merges and validates") {
  auto np = poly({{1, 1, 1}, {1, 2, 2}, {0, 1, 1}, {1, 2, 2}});
  CHECK(np.g == 3);
  CHECK(np.pairs == std::vector<std::pair<Slope, long>>{{rat(0), 1}, {rat(1, 2), 4}, {rat(1), 1}});
  CHECK(np.m0() == 1);
  CHECK(np.m_half() == 4);
  CHECK(np.multiplicity(rat(1, 3)) == 0);
  CHECK(p_rank(np) == 1);
}

TEST_CASE("make_polygon rejects malformed slope data") {
  CHECK_FAILS(poly({{0, 1, 1}, {1, 1, 2}}), total_mass_odd);
  CHECK_FAILS(poly({{0, 1, 3}, {1, 1, 1}}), symmetry_violation);
  CHECK_FAILS(poly({{0, 1, 1}, {1, 3, 1}, {2, 3, 1}, {1, 1, 1}}), denominator_violation);
  CHECK_FAILS(poly({{3, 2, 2}, {-1, 2, 2}}), slope_out_of_range);
  CHECK_FAILS(poly({{-1, 2, 4}}), slope_out_of_range);
  CHECK_FAILS(poly({{0, 1, 0}, {1, 1, 0}}), bad_multiplicity);
  CHECK_FAILS(poly({{1, 2, -2}}), bad_multiplicity);
  CHECK_FAILS(poly({}), bad_multiplicity);
}

TEST_CASE("non-strict polygons skip symmetry and denominator checks") {
  auto np = poly({{0, 1, 3}, {1, 1, 1}}, false);
  CHECK(np.g == 2);
  CHECK(np.m0() == 3);
  CHECK_FAILS(poly({{0, 1, 1}, {1, 1, 2}}, false), total_mass_odd);
  CHECK_FAILS(poly({{3, 2, 2}, {-1, 2, 2}}, false), slope_out_of_range);
}

TEST_CASE("classification follows the p-rank thresholds") {
  auto ordinary = poly({{0, 1, 3}, {1, 1, 3}});
  CHECK(classify(ordinary) == ClassLabel{Label::Ordinary, false});

  auto hwno = poly({{0, 1, 2}, {1, 2, 2}, {1, 1, 2}});
  CHECK(classify(hwno) == ClassLabel{Label::HodgeWittNotOrdinary, false});

  auto nhw = poly({{1, 3, 3}, {2, 3, 3}});
  CHECK(classify(nhw) == ClassLabel{Label::NonHodgeWitt, false});

  auto ss3 = poly({{1, 2, 6}});
  CHECK(classify(ss3) == ClassLabel{Label::NonHodgeWitt, true});

  // at g = 1 the supersingular polygon has p-rank g - 1
  auto ss1 = poly({{1, 2, 2}});
  CHECK(classify(ss1) == ClassLabel{Label::HodgeWittNotOrdinary, true});

  CHECK(std::string(label_name(Label::Ordinary)) == "Ordinary");
  CHECK(std::string(label_name(Label::HodgeWittNotOrdinary)) == "HodgeWittNotOrdinary");
  CHECK(std::string(label_name(Label::NonHodgeWitt)) == "NonHodgeWitt");
}

TEST_CASE("multiplicity identity holds across whole enumerations") {
  for (long g = 1; g <= 5; ++g)
    for (const auto& np : enumerate_admissible(g)) CHECK(mult_identity_check(np));
}

TEST_CASE("polygon_less is a strict total order compatible with equality") {
  auto polys = enumerate_admissible(4);
  for (std::size_t i = 0; i < polys.size(); ++i)
    for (std::size_t j = 0; j < polys.size(); ++j) {
      if (i == j) {
        CHECK_FALSE(polygon_less(polys[i], polys[j]));
        CHECK(polys[i] == polys[j]);
      } else {
        CHECK(polygon_less(polys[i], polys[j]) != polygon_less(polys[j], polys[i]));
      }
    }
}

TEST_CASE("exterior_slopes matches the hand-computed pinned example") {
  auto np = poly({{0, 1, 1}, {1, 2, 2}, {1, 1, 1}});
  auto w = exterior_slopes(np, 2);
  CHECK(w.wedge_degree == 2);
  CHECK(w.pairs == std::vector<std::pair<Slope, Int>>{{rat(1, 2), Int(2)}, {rat(1), Int(2)}, {rat(3, 2), Int(2)}});
  CHECK(w.total_multiplicity() == 6);
  CHECK(min_slope(w) == rat(1, 2));
}

TEST_CASE("the top wedge of the supersingular surface is one slope of mass six") {
  auto ss = poly({{1, 2, 4}});
  auto w = exterior_slopes(ss, 2);
  CHECK(w.pairs == std::vector<std::pair<Slope, Int>>{{rat(1), Int(6)}});
}

TEST_CASE("exterior_slopes edge degrees and bounds") {
  auto np = poly({{0, 1, 2}, {1, 1, 2}});
  auto top = exterior_slopes(np, 4);
  CHECK(top.pairs == std::vector<std::pair<Slope, Int>>{{rat(2), Int(1)}});
  auto first = exterior_slopes(np, 1);
  CHECK(first.pairs == std::vector<std::pair<Slope, Int>>{{rat(0), Int(2)}, {rat(1), Int(2)}});
  CHECK_FAILS(exterior_slopes(np, 0), wedge_degree_out_of_range);
  CHECK_FAILS(exterior_slopes(np, 5), wedge_degree_out_of_range);
  CHECK_FAILS(min_slope(SlopeMultiset{}), empty_multiset);
}

TEST_CASE("exterior_slopes agrees with explicit subset sums") {
  for (long g = 1; g <= 4; ++g)
    for (const auto& np : enumerate_admissible(g))
      for (long i = 1; i <= 2 * g; ++i) {
        auto fast = exterior_slopes(np, i);
        auto slow = oracle::wedge_by_subsets(np, i);
        CHECK(fast == slow);
        CHECK(fast.total_multiplicity() == binomial(static_cast<unsigned long>(2 * g), static_cast<unsigned long>(i)));
      }
}

TEST_CASE("product_polygon adds slope multisets") {
  auto ordinary = poly({{0, 1, 1}, {1, 1, 1}});
  auto ss = poly({{1, 2, 2}});
  auto prod = product_polygon(ordinary, ss);
  CHECK(prod.g == 2);
  CHECK(prod.pairs == std::vector<std::pair<Slope, long>>{{rat(0), 1}, {rat(1, 2), 2}, {rat(1), 1}});
  CHECK(classify(prod) == ClassLabel{Label::HodgeWittNotOrdinary, false});

  auto dbl = product_polygon(ss, ss);
  CHECK(dbl.pairs == std::vector<std::pair<Slope, long>>{{rat(1, 2), 4}});
  CHECK(classify(dbl) == ClassLabel{Label::NonHodgeWitt, true});
}
