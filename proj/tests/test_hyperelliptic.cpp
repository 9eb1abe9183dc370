#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "nsg/enumeration.hpp"
#include "nsg/hyperelliptic.hpp"
#include "nsg/verify.hpp"

using nsg::Int;
using nsg::NumericalSemigroup;
using nsg::profile;
using nsg::TheoremId;

namespace {
nsg::StructureProfile prof(std::vector<Int> gens) {
  return profile(NumericalSemigroup::from_generators(std::move(gens)));
}
}  // namespace

TEST_CASE("gamma-hyperellipticity predicate") {
  CHECK(nsg::is_gamma_hyperelliptic(prof({2, 21}), 0));
  CHECK(nsg::is_gamma_hyperelliptic(prof({4, 10, 13}), 2));
  // rho(<4,7>) = 3 but m_4 = 11 != 14
  CHECK(!nsg::is_gamma_hyperelliptic(prof({4, 7}), 3));
  CHECK(!nsg::is_gamma_hyperelliptic(prof({4, 7}), 1));
  CHECK(!nsg::is_gamma_hyperelliptic(prof({3, 11}), 1));
}

TEST_CASE("p2") {
  CHECK(nsg::p2_holds(prof({4, 7}), 1));   // m_3 = 8
  CHECK(nsg::p2_holds(prof({2, 21}), 0));  // m_1 = 2
  CHECK(!nsg::p2_holds(prof({3, 11}), 1));  // m_3 = 9
}

TEST_CASE("p3 index and predicates") {
  CHECK(nsg::p3_index(10, 2) == 2);
  CHECK(nsg::p3_index(10, 0) == 4);
  CHECK(nsg::p3_index(11, 1) == 4);

  CHECK(nsg::p3_holds(prof({4, 10, 13}), 2));  // g = 10 even, m_2 = 8 = g - 2
  CHECK(nsg::p3_holds(prof({2, 21}), 0));      // m_4 = 8
  CHECK(!nsg::p3_holds(prof({3, 11}), 1));     // r = 3, m_3 = 9 != 8

  CHECK(nsg::p3_weak_holds(prof({4, 10, 13}), 2));
  // r < 1 is flagged as false
  CHECK(nsg::p3_index(3, 2) < 1);
  CHECK(!nsg::p3_holds(prof({2, 7}), 2));
  CHECK(!nsg::p3_weak_holds(prof({2, 7}), 2));
}

TEST_CASE("unique gamma") {
  CHECK(nsg::hyperelliptic_gamma(prof({2, 21})) == 0);
  CHECK(nsg::hyperelliptic_gamma(prof({4, 10, 13})) == 2);
  CHECK(!nsg::hyperelliptic_gamma(prof({4, 7})).has_value());
  CHECK(!nsg::hyperelliptic_gamma(prof({3, 11})).has_value());
}

TEST_CASE("gamma-hyperelliptic implies rho = gamma; at most one gamma fits") {
  for (Int g = 1; g <= 15; ++g) {
    nsg::enumerate_genus(g, [&](const NumericalSemigroup& h) {
      const auto p = profile(h);
      Int hits = 0;
      for (Int gamma = 0; gamma <= g; ++gamma) {
        if (nsg::is_gamma_hyperelliptic(p, gamma)) {
          ++hits;
          REQUIRE(p.rho == gamma);
        }
      }
      REQUIRE(hits <= 1);
      // 0-hyperelliptic <=> rho = 0
      REQUIRE(nsg::is_gamma_hyperelliptic(p, 0) == (p.rho == 0));
      // the scan agrees with the shortcut
      REQUIRE((hits == 1) == nsg::hyperelliptic_gamma(p).has_value());
    });
  }
}

TEST_CASE("verify char1") {
  auto report = nsg::verify_theorem(TheoremId::char1, 1, 10, 14, {});
  CHECK(report.holds());
  CHECK(report.checked == 3833);  // 204 + 343 + 592 + 1001 + 1693

  // sharpness at g = 9: <4,7> satisfies the index condition but is not
  // 1-hyperelliptic
  nsg::VerifyOptions probe;
  probe.probe_outside = true;
  auto probed = nsg::verify_theorem(TheoremId::char1, 1, 9, 9, probe);
  CHECK(!probed.holds());
  bool found = false;
  for (const auto& cex : probed.counterexamples)
    if (cex.min_generators == std::vector<Int>{4, 7}) found = true;
  CHECK(found);
  // without probing, the out-of-hypothesis genus is skipped
  auto skipped = nsg::verify_theorem(TheoremId::char1, 1, 9, 9, {});
  CHECK(skipped.holds());
  CHECK(skipped.checked == 0);
  REQUIRE(skipped.per_genus.size() == 1);
  CHECK(!skipped.per_genus[0].in_hypothesis);
}

TEST_CASE("verify char2 for gamma = 0") {
  auto report = nsg::verify_theorem(TheoremId::char2, 0, 1, 12, {});
  CHECK(report.holds());
}

TEST_CASE("verify char3/char4 on their stated ranges") {
  for (Int gamma : {0, 1}) {
    auto r3 = nsg::verify_theorem(TheoremId::char3, gamma, 1, 14, {});
    CHECK(r3.holds());
    auto r4 = nsg::verify_theorem(TheoremId::char4, gamma, 1, 14, {});
    CHECK(r4.holds());
    for (const auto& gr : r3.per_genus) {
      const bool expect = gr.genus == 6 * gamma + 5 || gr.genus >= 6 * gamma + 7;
      CHECK(gr.in_hypothesis == expect);
      if (!expect) CHECK(gr.checked == 0);
    }
  }
}

TEST_CASE("char3 boundary probe at g = 6*gamma + 6") {
  // at the excluded genus the weak arm can hold while the others fail;
  // gamma = 0 sees <4,5> as a live witness
  nsg::VerifyOptions probe;
  probe.probe_outside = true;
  auto report = nsg::verify_theorem(TheoremId::char3, 0, 6, 6, probe);
  CHECK(!report.holds());
  bool found = false;
  for (const auto& cex : report.counterexamples)
    if (cex.min_generators == std::vector<Int>{4, 5}) found = true;
  CHECK(found);
}

TEST_CASE("verify rejects bad arguments") {
  CHECK_THROWS_AS(nsg::verify_theorem(TheoremId::char1, std::nullopt, 1, 5, {}),
                  std::invalid_argument);
  CHECK_THROWS_AS(nsg::verify_theorem(TheoremId::char1, 1, 5, 1, {}), std::invalid_argument);
  CHECK(!nsg::theorem_from_string("nope").has_value());
  CHECK(nsg::theorem_from_string("char-weight1") == TheoremId::char_weight1);
  CHECK(nsg::to_string(TheoremId::bounds_iv) == "bounds-iv");
}

TEST_CASE("reports are identical for any worker count") {
  for (TheoremId id : {TheoremId::char2, TheoremId::feto1}) {
    nsg::VerifyOptions seq;
    nsg::VerifyOptions par;
    par.jobs = 3;
    auto a = nsg::verify_theorem(id, 1, 1, 12, seq);
    auto b = nsg::verify_theorem(id, 1, 1, 12, par);
    CHECK(a.checked == b.checked);
    REQUIRE(a.per_genus.size() == b.per_genus.size());
    for (std::size_t i = 0; i < a.per_genus.size(); ++i)
      CHECK(a.per_genus[i].checked == b.per_genus[i].checked);
    CHECK(a.counterexamples.size() == b.counterexamples.size());
  }
}
