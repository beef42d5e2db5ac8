#include <gtest/gtest.h>

#include <random>

#include "sigbasis/buchberger.hpp"
#include "sigbasis/generators.hpp"
#include "test_support.hpp"

using namespace sigbasis;
using sigbasis::testing::P;

TEST(Buchberger, TwoGeneratorExample) {
  const Ring r = sigbasis::testing::ring3();
  auto res = buchberger_run(r, {P(r, "x^2-y"), P(r, "x*y-z")});
  std::vector<Polynomial> expect{P(r, "x*y-z"), P(r, "y^2-x*z"), P(r, "x^2-y")};
  EXPECT_EQ(reduce_basis(r, res.gb), reduce_basis(r, expect));
  EXPECT_EQ(res.gb.size(), 3u);
  EXPECT_TRUE(res.stats.accounting_holds());
  EXPECT_TRUE(is_groebner_basis(r, res.gb));
}

TEST(Buchberger, RelativelyPrimeLeads) {
  const Ring r = sigbasis::testing::ring3();
  auto res = buchberger_run(r, {P(r, "x"), P(r, "y")});
  EXPECT_EQ(res.gb, (std::vector<Polynomial>{P(r, "y"), P(r, "x")}));
  EXPECT_EQ(res.stats.spairs, 1u);
  EXPECT_EQ(res.stats.rel_prime, 1u);
  EXPECT_EQ(res.stats.reductions, 0u);
}

TEST(Buchberger, CriteriaExamples) {
  const Ring r = sigbasis::testing::ring3();
  Buchberger b(r, {.reducer = {}, .relprime = false, .lcm = false, .graph = false});
  // a = x^2, b = y, c = 1 style leads.
  const auto a = b.add_element(P(r, "x^2"));
  const auto c = b.add_element(P(r, "x*y"));
  const auto d = b.add_element(P(r, "y^2"));
  EXPECT_TRUE(b.relprime_check(a, d));
  EXPECT_FALSE(b.relprime_check(a, c));
  // lcm(x^2, y^2) = x^2 y^2; xy gives strictly smaller lcms with both.
  EXPECT_TRUE(b.lcm_criterion(a, d, c));
  EXPECT_FALSE(b.lcm_criterion(a, c, d));  // y^2 does not divide x^2 y
  EXPECT_TRUE(b.graph_criterion(a, d));
  EXPECT_FALSE(b.graph_criterion(a, c));
}

TEST(Buchberger, EqualLcmTriangleEliminatesExactlyOne) {
  // x y, y z, x z: all three lcms equal x y z.
  const Ring r = sigbasis::testing::ring3();
  Buchberger b(r, {.reducer = {}, .relprime = false, .lcm = false, .graph = false});
  const auto u = b.add_element(P(r, "x*y")), v = b.add_element(P(r, "y*z")), w = b.add_element(P(r, "x*z"));
  // Nothing decided: no pair can be eliminated by the third element.
  EXPECT_FALSE(b.lcm_criterion(u, v, w));
  EXPECT_FALSE(b.lcm_criterion(u, w, v));
  EXPECT_FALSE(b.lcm_criterion(v, w, u));

  // Run to completion with only the lcm criterion: of the three pairs
  // exactly one is eliminated, whichever order they are decided in.
  for (auto kind : {PairQueueKind::TriangleTourTree, PairQueueKind::Heap}) {
    BuchbergerConfig cfg{.reducer = {}, .spair_queue = kind, .relprime = false, .lcm = true, .graph = false};
    auto res = buchberger_run(r, {P(r, "x*y"), P(r, "y*z"), P(r, "x*z")}, cfg);
    EXPECT_EQ(res.stats.spairs, 3u);
    EXPECT_EQ(res.stats.lcm_cache_hits + res.stats.lcm_simple_hits, 1u);
    EXPECT_EQ(res.stats.reductions, 2u);
  }
}

// The criteria only change the work done, never the reduced basis.
TEST(Buchberger, CriteriaDoNotChangeResult) {
  for (const Ideal& id : {gen_katsura(4), gen_katsura(5), gen_cyclic(4), gen_cyclic(5)}) {
    const auto base = buchberger_run(id.ring, id.gens).gb;
    EXPECT_TRUE(is_groebner_basis(id.ring, base));
    EXPECT_TRUE(ideal_contained_in(id.ring, id.gens, base));
    for (int mask = 0; mask < 8; ++mask) {
      BuchbergerConfig cfg{.reducer = {}, .relprime = (mask & 1) != 0, .lcm = (mask & 2) != 0, .graph = (mask & 4) != 0};
      const auto res = buchberger_run(id.ring, id.gens, cfg);
      EXPECT_EQ(res.gb, base);
      EXPECT_TRUE(res.stats.accounting_holds());
    }
  }
}
