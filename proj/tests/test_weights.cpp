#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <set>

#include "nsg/enumeration.hpp"
#include "nsg/hyperelliptic.hpp"
#include "nsg/verify.hpp"
#include "nsg/weights.hpp"
#include "oracles.hpp"

using nsg::Int;
using nsg::NumericalSemigroup;
using nsg::binom2;
using nsg::profile;
using nsg::weight;

namespace {
NumericalSemigroup make(std::vector<Int> gens) {
  return NumericalSemigroup::from_generators(std::move(gens));
}
}  // namespace

TEST_CASE("weight values against the gap-sum oracle") {
  struct Case {
    std::vector<Int> gens;
    Int expected;
  };
  const Case cases[] = {
      {{2, 21}, 45},          // C(10, 2)
      {{3, 11}, 30},          // g(g-1)/3 at g = 10
      {{4, 10, 13}, 23},      // C(6,2) + 2*2^2
      {{4, 10, 17, 19}, 17},  // C(6,2) + 2^2 - 2
      {{3, 13, 23}, 33},      // g(g-2)/3 at g = 11
  };
  for (const auto& c : cases) {
    const auto h = make(c.gens);
    const auto w = weight(h);
    CHECK(w.w == c.expected);
    CHECK(w.w == oracle::weight_from_gaps(oracle::gaps_of(c.gens)));
    CHECK(w.w == (3 * w.genus * w.genus + w.genus) / 2 - w.s_sum);
  }
}

TEST_CASE("weight bounds") {
  CHECK(nsg::weight_bounds(10, 2) == std::pair<Int, Int>{15, 23});
  CHECK(nsg::weight_bounds(9, 0) == std::pair<Int, Int>{36, 36});
  CHECK(nsg::weight_bounds(6, 4) == std::pair<Int, Int>{0, 3});
  CHECK_THROWS_AS(nsg::weight_bounds(4, 3), std::invalid_argument);  // 2g < 3*rho
  CHECK_THROWS_AS(nsg::weight_bounds(0, 0), std::invalid_argument);
}

TEST_CASE("binomial convention") {
  CHECK(binom2(-2) == 0);
  CHECK(binom2(0) == 0);
  CHECK(binom2(1) == 0);
  CHECK(binom2(2) == 1);
  CHECK(binom2(10) == 45);
}

TEST_CASE("dual-formula cross check hook") {
  CHECK(nsg::detail::checked_weight(45, 10, 110) == 45);
  CHECK_THROWS_AS(nsg::detail::checked_weight(44, 10, 110), nsg::invariant_violation);
}

TEST_CASE("quartic weight formula") {
  CHECK(nsg::weight_formula_quartic(10, 2, 1) == 23);
  CHECK(nsg::weight_formula_quartic(10, 2, 2) == 17);
  CHECK(nsg::weight_formula_quartic(10, 2, 3) == 19);
  const auto r = nsg::quartic_J_range(10, 2);
  CHECK(r.lo == 1);
  CHECK(r.hi == 3);
  CHECK_THROWS_AS(nsg::weight_formula_quartic(10, 2, 4), std::invalid_argument);
  CHECK_THROWS_AS(nsg::weight_formula_quartic(10, 2, 0), std::invalid_argument);
  CHECK_THROWS_AS(nsg::weight_formula_quartic(5, 3, 1), std::invalid_argument);  // g < 2*rho
}

TEST_CASE("quartic formula parametrizes exactly the f_1 = 4 weights") {
  // for each (g, rho), the weights of the f_1 = 4 semigroups equal the
  // formula values over the valid J interval, as multisets
  for (Int g = 4; g <= 15; ++g) {
    for (Int rho = 1; 2 * rho <= g; ++rho) {
      std::multiset<Int> seen;
      nsg::enumerate_genus(g, [&](const NumericalSemigroup& h) {
        const auto p = profile(h);
        if (p.rho == rho && p.f(1) == 4) seen.insert(weight(h, p).w);
      });
      std::multiset<Int> predicted;
      const auto r = nsg::quartic_J_range(g, rho);
      for (Int j = r.lo; j <= r.hi; ++j) predicted.insert(nsg::weight_formula_quartic(g, rho, j));
      CAPTURE(g);
      CAPTURE(rho);
      CHECK(seen == predicted);
    }
  }
}

TEST_CASE("quartic offsets are exactly the triangular ones") {
  // offsets 2C = w - C(g-2*rho,2) - rho^2 + rho over the f_1 = 4 family are
  // exactly those with 4 + 32C a perfect square
  for (const auto& [g, rho] : std::vector<std::pair<Int, Int>>{{10, 2}, {12, 3}}) {
    std::set<Int> achieved;
    const auto r = nsg::quartic_J_range(g, rho);
    for (Int j = r.lo; j <= r.hi; ++j)
      achieved.insert(nsg::weight_formula_quartic(g, rho, j) - binom2(g - 2 * rho) - rho * rho +
                      rho);
    std::set<Int> eligible;
    for (Int two_c = 0; two_c <= rho * rho + rho; two_c += 2) {
      const Int val = 4 + 16 * two_c;
      const Int root = static_cast<Int>(std::sqrt(static_cast<double>(val)));
      for (Int s = std::max<Int>(0, root - 2); s <= root + 2; ++s)
        if (s * s == val) eligible.insert(two_c);
    }
    CAPTURE(g);
    CAPTURE(rho);
    CHECK(achieved == eligible);
  }
}

TEST_CASE("triadic weight formula") {
  CHECK(nsg::weight_formula_triadic(10, 0) == 30);
  CHECK(nsg::weight_formula_triadic(11, 0) == 33);
  CHECK(nsg::weight_formula_triadic(10, 1) == 22);
  CHECK_THROWS_AS(nsg::weight_formula_triadic(10, 4), std::invalid_argument);
  CHECK_THROWS_AS(nsg::weight_formula_triadic(10, -1), std::invalid_argument);

  // the semigroups containing 3 at genus g realize exactly these weights
  for (Int g : {10, 11, 12}) {
    std::multiset<Int> seen;
    nsg::enumerate_genus(g, [&](const NumericalSemigroup& h) {
      if (h.contains(3)) seen.insert(weight(h).w);
    });
    std::multiset<Int> predicted;
    for (Int s = 0; s <= (g - g % 3) / 3; ++s) predicted.insert(nsg::weight_formula_triadic(g, s));
    CAPTURE(g);
    CHECK(seen == predicted);
  }
  // witness for (10, 1): a 3-containing genus-10 semigroup of weight 22 exists
  bool found = false;
  nsg::enumerate_genus(10, [&](const NumericalSemigroup& h) {
    if (h.contains(3) && weight(h).w == 22) found = true;
  });
  CHECK(found);
}

TEST_CASE("genus thresholds") {
  CHECK(nsg::bound_g_threshold(0) == 1);
  CHECK(nsg::bound_g_threshold(1) == 11);
  CHECK(nsg::bound_g_threshold(2) == 23);
  CHECK(nsg::bound_g_threshold(3) == 34);
  CHECK(nsg::bound_g_threshold(4) == 44);
  CHECK(nsg::bound_g_threshold(5) == 56);
  CHECK(nsg::bound_g_threshold(6) == 65);
  CHECK(nsg::bound_g_threshold(7) == 80);
  CHECK_THROWS_AS(nsg::bound_g_threshold(-1), std::invalid_argument);
}

TEST_CASE("classify_weight flags") {
  // <3,11>: weight 30 sits inside both windows for gamma = 1 yet the
  // semigroup is not 1-hyperelliptic (genus 10 is below the threshold 11)
  const auto r = nsg::classify_weight(make({3, 11}), 1);
  CHECK(r.w == 30);
  CHECK(r.char_weight->cw_ii);
  CHECK(r.char_weight->cw1_ii);
  CHECK(r.char_weight->cw1_iii);
  CHECK(!r.char_weight->gamma_hyperelliptic);
  CHECK(!r.char_weight->t_hyperelliptic_up_to_gamma);

  const auto h = nsg::classify_weight(make({2, 21}), 0);
  CHECK(h.char_weight->cw_ii);
  CHECK(h.char_weight->cw1_ii);
  CHECK(h.char_weight->cw1_iii);
  CHECK(h.char_weight->gamma_hyperelliptic);
  CHECK(h.hits_lower);
  CHECK(h.hits_upper);
}

TEST_CASE("sharp quartic family at the top of its window") {
  // gamma = 7: at g = gamma^2 + 4*gamma + 2 = 79 (one below the threshold 80)
  // the family satisfies both weight windows without being 7-hyperelliptic
  const auto fam = nsg::family({nsg::FamilyName::sharp_weight_quartic, 7, 79, std::nullopt});
  const auto p = profile(fam.semigroup);
  CHECK(fam.semigroup.genus() == 79);
  CHECK(p.rho == 8);
  const auto r = nsg::classify_weight(fam.semigroup, 7);
  CHECK(r.w == binom2(79 - 16) + 2 * 64);
  CHECK(r.char_weight->cw_ii);
  CHECK(r.char_weight->cw1_iii);
  CHECK(!r.char_weight->gamma_hyperelliptic);
  CHECK(!r.char_weight->t_hyperelliptic_up_to_gamma);
}

TEST_CASE("residue-dependent weight caps") {
  const auto c11 = nsg::opt_weight_cap(11);
  CHECK(c11.r6 == 5);
  CHECK(c11.c == 1);
  CHECK(c11.cap == 33);
  const auto c12 = nsg::opt_weight_cap(12);
  CHECK(c12.r6 == 6);
  CHECK(c12.c == 1);
  CHECK(c12.cap == 44);
  const auto c13 = nsg::opt_weight_cap(13);
  CHECK(c13.r6 == 1);
  CHECK(c13.c == 1);
  CHECK(c13.cap == 52);
  CHECK_THROWS_AS(nsg::opt_weight_cap(10), std::invalid_argument);
}

TEST_CASE("the r = 6 threshold cannot be lowered: genus-12 witnesses") {
  // with c = (g-r)/6 - 1 = 0 at g = 12, rho = 1 would be admitted, and both
  // rho = 1 semigroups exceed the cap 44
  const auto a = weight(make({4, 6, 21}));
  CHECK(a.genus == 12);
  CHECK(a.rho == 1);
  CHECK(a.w == 47);
  const auto b = weight(make({4, 6, 23, 25}));
  CHECK(b.genus == 12);
  CHECK(b.rho == 1);
  CHECK(b.w == 45);
  CHECK(a.w > 44);
  CHECK(b.w > 44);
  // both sit below the rho <= c aggregate cap (g^2 - 5g + 10)/2 = 47
  CHECK(a.w <= (12 * 12 - 5 * 12 + 10) / 2);
}

TEST_CASE("verify bo-weight, opt-weight and oliv at a fixed genus") {
  CHECK(nsg::verify_theorem(nsg::TheoremId::bo_weight, std::nullopt, 1, 12, {}).holds());
  CHECK(nsg::verify_theorem(nsg::TheoremId::opt_weight, std::nullopt, 11, 12, {}).holds());
  CHECK(nsg::verify_theorem(nsg::TheoremId::oliv, std::nullopt, 11, 12, {}).holds());
}

TEST_CASE("lower weight bound equality characterization, exhaustively to genus 12") {
  for (Int g = 1; g <= 12; ++g) {
    nsg::enumerate_genus(g, [&](const NumericalSemigroup& h) {
      const auto p = profile(h);
      if (p.rho < 1) return;
      const auto w = weight(h, p);
      const Int exact = nsg::weight_lower_exact(g, p.rho);
      REQUIRE(w.lower <= exact);
      REQUIRE(exact <= w.w);
      REQUIRE(w.w <= w.upper);
      const bool cond = p.f(1) == 2 * p.rho + 2 && p.u(p.rho) == 2 * g - 2 * p.rho + 1;
      REQUIRE((w.w == exact) == cond);
    });
  }
}

TEST_CASE("clamped versus exact lower bound") {
  // gap set {1,2,4}: the equality condition holds with w = 1; the clamped
  // bound is 0, the exact quadratic C(-1,2) = 1
  const auto h = NumericalSemigroup::from_gaps({1, 2, 4});
  const auto p = profile(h);
  CHECK(p.rho == 2);
  CHECK(weight(h, p).w == 1);
  CHECK(nsg::weight_lower_exact(3, 2) == 1);
  CHECK(nsg::weight_bounds(3, 2).first == 0);
  // <5,7,9,11,13>: w = 3 = the exact bound at (6, 4), where upper = 3 too
  const auto dense = make({5, 7, 9, 11, 13});
  CHECK(weight(dense).w == 3);
  CHECK(nsg::weight_lower_exact(6, 4) == 3);
}

TEST_CASE("upper weight bound equality is attained exactly by one semigroup") {
  for (const auto& [g, rho] : std::vector<std::pair<Int, Int>>{{10, 2}, {12, 2}, {12, 3}, {14, 3}}) {
    const Int target = binom2(g - 2 * rho) + 2 * rho * rho;
    std::vector<std::vector<Int>> attained;
    nsg::enumerate_genus(g, [&](const NumericalSemigroup& h) {
      const auto p = profile(h);
      if (p.rho == rho && weight(h, p).w == target) attained.push_back(h.min_generators());
    });
    std::vector<Int> expected{4, 4 * rho + 2, 2 * g - 4 * rho + 1};
    std::sort(expected.begin(), expected.end());
    CAPTURE(g);
    CAPTURE(rho);
    REQUIRE(attained.size() == 1);
    CHECK(attained[0] == expected);
  }
}
