#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "sb_oracles.hpp"
#include "sigbasis/buchberger.hpp"
#include "sigbasis/generators.hpp"
#include "test_support.hpp"

using namespace sigbasis;
using sigbasis::testing::M;
using sigbasis::testing::P;

namespace {

int sgn(std::strong_ordering c) { return c < 0 ? -1 : (c > 0 ? 1 : 0); }

struct TwoGen {
  Ring r = sigbasis::testing::ring3();
  std::vector<Polynomial> gens{P(r, "x^2-y"), P(r, "x*y-z")};
};

ModuleOrder two_gen_order(const TwoGen& t, SchreyerTiebreak tb = SchreyerTiebreak::LowGreater,
                          ModuleOrderKind kind = ModuleOrderKind::Schreyer) {
  return ModuleOrder(t.r, {t.gens[0].lead_mono(), t.gens[1].lead_mono()}, kind, tb);
}

std::vector<std::pair<std::string, Polynomial>> entry_list(const SigBasisResult& res) {
  std::vector<std::pair<std::string, Polynomial>> out;
  for (const auto& e : res.entries) out.emplace_back(format_signature(e.sig), e.poly);
  return out;
}

std::vector<std::string> syzygy_list(const SigBasisResult& res) {
  std::vector<std::string> out;
  for (const auto& s : res.syzygies) out.push_back(format_signature(s));
  return out;
}

}  // namespace

TEST(ModuleOrder, SchreyerExamples) {
  TwoGen t;
  const ModuleOrder o = two_gen_order(t);
  // y e1 and x e2 both weigh x^2 y; the lower component is greater.
  EXPECT_GT(sgn(o.compare(o.make(M(t.r, "y"), 0), o.make(M(t.r, "x"), 1))), 0);
  EXPECT_EQ(sgn(o.compare(o.make(M(t.r, "1"), 0), o.make(M(t.r, "1"), 0))), 0);
  EXPECT_GT(sgn(o.compare(o.make(M(t.r, "x"), 0), o.make(M(t.r, "1"), 0))), 0);

  const ModuleOrder h = two_gen_order(t, SchreyerTiebreak::HighGreater);
  EXPECT_LT(sgn(h.compare(h.make(M(t.r, "y"), 0), h.make(M(t.r, "x"), 1))), 0);
}

TEST(ModuleOrder, PositionOverTerm) {
  TwoGen t;
  const ModuleOrder o = two_gen_order(t, SchreyerTiebreak::LowGreater, ModuleOrderKind::PositionOverTerm);
  EXPECT_GT(sgn(o.compare(o.make(M(t.r, "1"), 1), o.make(M(t.r, "x^5"), 0))), 0);
  EXPECT_GT(sgn(o.compare(o.make(M(t.r, "x^2"), 0), o.make(M(t.r, "y"), 0))), 0);
}

TEST(ModuleOrder, MultiplicationCompatible) {
  std::mt19937_64 rng(7);
  for (auto tb : {SchreyerTiebreak::LowGreater, SchreyerTiebreak::HighGreater})
    for (auto kind : {ModuleOrderKind::Schreyer, ModuleOrderKind::PositionOverTerm}) {
      const Ring r(101, 3);
      std::vector<Monomial> w;
      for (int k = 0; k < 3; ++k) w.push_back(sigbasis::testing::random_monomial(rng, 3, 2));
      const ModuleOrder o(r, w, kind, tb);
      for (int it = 0; it < 2000; ++it) {
        auto a = o.make(sigbasis::testing::random_monomial(rng, 3, 3), static_cast<std::uint32_t>(rng() % 3));
        auto b = o.make(sigbasis::testing::random_monomial(rng, 3, 3), static_cast<std::uint32_t>(rng() % 3));
        const Monomial m = sigbasis::testing::random_monomial(rng, 3, 2);
        EXPECT_EQ(o.compare(a, b), o.compare(o.times(m, a), o.times(m, b)));
        EXPECT_EQ(o.compare(a, b) == 0, a == b);
      }
    }
}

TEST(RatioIds, Examples) {
  TwoGen t;
  const ModuleOrder o = two_gen_order(t);
  RatioIds ids(o);
  const Ratio lo = o.ratio(o.make(M(t.r, "1"), 0), M(t.r, "x^2"));
  // grevlex: 1 < z < y, so z / x^2 lies between the other two ratios.
  const Ratio hi = o.ratio(o.make(M(t.r, "y"), 0), M(t.r, "x^2"));
  const Ratio mid = o.ratio(o.make(M(t.r, "z"), 0), M(t.r, "x^2"));
  EXPECT_EQ(ids.assign(lo), 0);
  EXPECT_EQ(ids.assign(hi), RatioIds::kSpacing);
  EXPECT_EQ(ids.assign(mid), RatioIds::kSpacing / 2);
  EXPECT_EQ(ids.assign(o.ratio(o.make(M(t.r, "x*z"), 0), M(t.r, "x^3"))), RatioIds::kSpacing / 2);
  EXPECT_EQ(ids.size(), 3u);
}

TEST(RatioIds, RebuildKeepsOrderEmbedding) {
  const Ring r(101, 2);
  const ModuleOrder o(r, {Monomial{0, 0}});
  RatioIds ids(o);
  // Ratios x1^k / x2^40 for k descending squeeze ever closer to the bottom
  // neighbour, forcing repeated halving and eventually a rebuild.
  std::vector<Ratio> all;
  all.push_back(o.ratio(o.make(Monomial{0, 0}, 0), Monomial{0, 41}));
  all.push_back(o.ratio(o.make(Monomial{40, 0}, 0), Monomial{0, 0}));
  for (auto& x : all) ids.assign(x);
  for (Exponent k = 39; k >= 1; --k) {
    all.push_back(o.ratio(o.make(Monomial{k, 0}, 0), Monomial{0, 0}));
    ids.assign(all.back());
    all.push_back(o.ratio(o.make(Monomial{0, 0}, 0), Monomial{0, 40 - k}));
    ids.assign(all.back());
  }
  EXPECT_GE(ids.rebuilds(), 1u);
  EXPECT_TRUE(ids.audit());
  for (auto& a : all)
    for (auto& b : all) EXPECT_EQ(ids.id_of(a) <=> ids.id_of(b), o.compare(a, b));
}

TEST(SpairSignature, TwoGeneratorExample) {
  TwoGen t;
  const ModuleOrder o = two_gen_order(t);
  auto g1 = sigbasis::testing::make_entry(o, M(t.r, "1"), 0, M(t.r, "x^2"));
  auto g2 = sigbasis::testing::make_entry(o, M(t.r, "1"), 1, M(t.r, "x*y"));
  sigbasis::testing::assign_ids(o, {&g1, &g2});
  const auto s = spair_signature(o, g1, g2);
  ASSERT_TRUE(s.has_value());
  EXPECT_EQ(*s, o.make(M(t.r, "y"), 0));
  EXPECT_EQ(koszul_signature(o, g1, g2), o.make(M(t.r, "x*y"), 0));
  EXPECT_FALSE(spair_signature(o, g1, g1).has_value());
}

TEST(SpairSignature, MatchesDirectComputationAndDividesKoszul) {
  for (auto tb : {SchreyerTiebreak::LowGreater, SchreyerTiebreak::HighGreater}) {
    sigbasis::testing::SigWorld w(11, tb);
    for (int it = 0; it < 5000; ++it) {
      auto a = sigbasis::testing::make_entry(w.order, w.mono(), w.comp(), w.mono());
      auto b = sigbasis::testing::make_entry(w.order, w.mono(), w.comp(), w.mono());
      sigbasis::testing::assign_ids(w.order, {&a, &b});
      const auto direct = sigbasis::testing::direct_spair_signature(w.order, a, b);
      EXPECT_EQ(spair_signature(w.order, a, b), direct);
      if (direct) {
        EXPECT_TRUE(sigbasis::testing::sig_divides(*direct, koszul_signature(w.order, a, b)));
      }
    }
  }
}

TEST(BaseDivisors, LowRatioBoundExamples) {
  const std::vector<Exponent> a{1, 0}, p{0, 2}, b{2, 1};
  const auto v = low_ratio_bound(a, p, b);
  EXPECT_EQ(v.v[0], 1u);
  EXPECT_EQ(v.v[1], LowRatioBound::kUnbounded);

  // ratio(a) | ratio(b): every entry unbounded.
  TwoGen t;
  const ModuleOrder o = two_gen_order(t);
  auto x = sigbasis::testing::make_entry(o, M(t.r, "1"), 0, M(t.r, "x"));
  auto y = sigbasis::testing::make_entry(o, M(t.r, "y"), 0, M(t.r, "x"));
  EXPECT_TRUE(low_base_divisor_bound(x, y).vacuous());
  EXPECT_THROW(low_base_divisor_bound(y, x), std::invalid_argument);
}

TEST(BaseDivisors, HighRatioCoreFact) {
  // a = (1,0), b = (2,0), c = (1,3): min(b,c) - min(a,c) <= b - a.
  const std::array<int, 2> a{1, 0}, b{2, 0}, c{1, 3};
  for (int i = 0; i < 2; ++i) EXPECT_LE(std::min(b[i], c[i]) - std::min(a[i], c[i]), b[i] - a[i]);
  TwoGen t;
  const ModuleOrder o = two_gen_order(t);
  auto e = sigbasis::testing::make_entry(o, M(t.r, "1"), 0, M(t.r, "x"));
  EXPECT_FALSE(high_base_divisor_eliminates(e, e, e, false));
}

TEST(BaseDivisors, RandomTheoremInstances) {
  for (std::uint64_t seed : {1u, 2u}) {
    const auto high = sigbasis::testing::check_high_ratio_theorem(seed, 4000);
    EXPECT_EQ(high.violations, 0u);
    const auto low = sigbasis::testing::check_low_ratio_theorem(seed, 4000);
    EXPECT_EQ(low.violations, 0u);
    EXPECT_GT(low.positive, 0u);
    EXPECT_LT(low.positive, low.instances);
  }
}

TEST(SyzygySet, MinimalAndMatchesBruteForce) {
  std::mt19937_64 rng(3);
  for (auto kind : {LookupKind::List, LookupKind::DivKdTree}) {
    const Ring r(101, 3);
    const ModuleOrder o(r, {Monomial{1, 0, 0}, Monomial{0, 1, 0}});
    SyzygySet syz(2, 3, kind);
    std::vector<Signature> all;
    for (int it = 0; it < 400; ++it) {
      const auto s = o.make(sigbasis::testing::random_monomial(rng, 3, 4), static_cast<std::uint32_t>(rng() % 2));
      const bool known = std::any_of(all.begin(), all.end(), [&](const Signature& t) {
        return sigbasis::testing::sig_divides(t, s);
      });
      EXPECT_EQ(syz.has_divisor(s), known);
      EXPECT_EQ(syz.insert(s), !known);
      all.push_back(s);
      ASSERT_TRUE(syz.is_minimal());
    }
    // Every inserted signature is a multiple of a member.
    const auto members = syz.members();
    EXPECT_EQ(members.size(), syz.size());
    for (const auto& s : all)
      EXPECT_TRUE(std::any_of(members.begin(), members.end(),
                              [&](const Signature& m) { return sigbasis::testing::sig_divides(m, s); }));
  }
}

TEST(KoszulQueue, AdvanceSemantics) {
  TwoGen t;
  const ModuleOrder o = two_gen_order(t);
  KoszulQueue q(o);
  q.push(o.make(M(t.r, "x*y"), 0));
  q.push(o.make(M(t.r, "z"), 0));
  q.push(o.make(M(t.r, "x*y"), 0));
  EXPECT_FALSE(q.advance_to(o.make(M(t.r, "y"), 0)));
  EXPECT_EQ(q.size(), 2u);  // z e1 < y e1 was dropped
  EXPECT_TRUE(q.advance_to(o.make(M(t.r, "x*y"), 0)));
  EXPECT_EQ(q.size(), 0u);
}

TEST(RegularReduce, TwoGeneratorExample) {
  TwoGen t;
  SignatureBasis sb(t.r, t.gens);
  sb.seed_inputs();
  const Signature T = sb.order().make(M(t.r, "y"), 0);
  EXPECT_EQ(sb.champion(T), 0u);
  EXPECT_TRUE(sb.regular_top_reducible(0, M(t.r, "y")));
  // y (x^2 - y) reduced by x (x y - z) gives -y^2 + x z, made monic.
  EXPECT_EQ(sb.regular_reduce(0, M(t.r, "y")), P(t.r, "y^2-x*z"));
  // Already regular reduced: x^2 - y itself.
  EXPECT_EQ(sb.regular_reduce(0, M(t.r, "1")), P(t.r, "x^2-y"));
}

TEST(SignatureBasis, TwoGeneratorRun) {
  TwoGen t;
  const auto res = sb_run(t.r, t.gens);
  EXPECT_EQ(res.gb, reduce_basis(t.r, {P(t.r, "x^2-y"), P(t.r, "x*y-z"), P(t.r, "y^2-x*z")}));
  EXPECT_TRUE(res.stats.identities_hold());
  EXPECT_EQ(res.stats.need_reduction, res.stats.to_sb + res.stats.to_syzygy);
  ASSERT_GE(res.entries.size(), 3u);
  const ModuleOrder o = two_gen_order(t);
  EXPECT_EQ(res.entries[2].sig, o.make(M(t.r, "y"), 0));
  EXPECT_EQ(res.entries[2].poly, P(t.r, "y^2-x*z"));
}

namespace {

struct Named {
  std::string name;
  Ideal ideal;
};

std::vector<Named> small_inputs() {
  return {{"katsura4", gen_katsura(4)}, {"katsura5", gen_katsura(5)}, {"cyclic4", gen_cyclic(4, false)},
          {"cyclic5", gen_cyclic(5, false)}, {"hcyclic5", gen_cyclic(5, true)}};
}

}  // namespace

TEST(SignatureBasis, AgreesWithBuchbergerAcrossModuleOrders) {
  for (const auto& in : small_inputs()) {
    const auto classic = buchberger_run(in.ideal.ring, in.ideal.gens);
    for (auto kind : {ModuleOrderKind::Schreyer, ModuleOrderKind::PositionOverTerm})
      for (auto tb : {SchreyerTiebreak::LowGreater, SchreyerTiebreak::HighGreater}) {
        SigBasisConfig cfg;
        cfg.module_order = kind;
        cfg.tiebreak = tb;
        const auto res = sb_run(in.ideal.ring, in.ideal.gens, cfg);
        EXPECT_EQ(res.gb, classic.gb) << in.name;
        EXPECT_TRUE(res.stats.identities_hold()) << in.name;
        EXPECT_TRUE(res.stats.monotonic) << in.name;
        EXPECT_EQ(res.stats.basis_size, res.entries.size());
        EXPECT_EQ(res.stats.syzygies, res.syzygies.size());
      }
    EXPECT_TRUE(is_groebner_basis(in.ideal.ring, classic.gb)) << in.name;
  }
}

TEST(SignatureBasis, EntriesAreRegularReducedAndMonic) {
  const Ideal in = gen_katsura(5);
  SignatureBasis sb(in.ring, in.gens);
  const auto res = sb.run();
  for (std::size_t k = 0; k < res.entries.size(); ++k) {
    const auto& e = res.entries[k];
    EXPECT_EQ(e.poly.lead_coeff(), 1u);
    EXPECT_EQ(e.ratio, sb.order().ratio(e.sig, e.lead()));
    if (k >= in.gens.size()) {
      EXPECT_EQ(sb.regular_reduce(static_cast<SignatureBasis::Index>(k), Monomial(5)), e.poly);
    }
  }
  for (std::size_t a = 0; a < res.entries.size(); ++a)
    for (std::size_t b = 0; b < res.entries.size(); ++b)
      EXPECT_EQ(res.entries[a].ratio_id <=> res.entries[b].ratio_id,
                sb.order().compare(res.entries[a].ratio, res.entries[b].ratio));
}

TEST(SignatureBasis, ChampionMinimizesLeadByExhaustiveScan) {
  const Ideal in = gen_katsura(4);
  SignatureBasis sb(in.ring, in.gens);
  const auto res = sb.run();
  std::mt19937_64 rng(5);
  for (int it = 0; it < 3000; ++it) {
    const auto comp = static_cast<std::uint32_t>(rng() % in.gens.size());
    const Signature T = sb.order().make(sigbasis::testing::random_monomial(rng, 4, 3), comp);
    std::optional<Monomial> best;
    for (const auto& e : res.entries) {
      if (!sigbasis::testing::sig_divides(e.sig, T)) continue;
      Monomial lead = mono_mul(mono_div(T.mono, e.sig.mono), e.lead());
      if (!best || in.ring.compare(lead, *best) < 0) best = lead;
    }
    const auto c = sb.champion(T);
    ASSERT_TRUE(best.has_value());  // e_comp always divides
    ASSERT_TRUE(c.has_value());
    const auto& e = res.entries[*c];
    EXPECT_EQ(mono_mul(mono_div(T.mono, e.sig.mono), e.lead()), *best);
  }
}

TEST(SignatureBasis, CriteriaCanBeDisabledWithoutChangingOutput) {
  for (const auto& in : {gen_katsura(5), gen_katsura(6), gen_cyclic(5, false)}) {
    const auto base = sb_run(in.ring, in.gens);
    std::vector<SigBasisConfig> variants(6);
    variants[0].base_divisors = 0;
    variants[1].koszul = false;
    variants[2].signature_criterion = false;
    variants[3].singular = false;
    variants[4].early_singular = true;
    variants[5].relprime = false;
    for (const auto& cfg : variants) {
      const auto res = sb_run(in.ring, in.gens, cfg);
      EXPECT_EQ(entry_list(res), entry_list(base));
      EXPECT_EQ(syzygy_list(res), syzygy_list(base));
      EXPECT_EQ(res.gb, base.gb);
      EXPECT_TRUE(res.stats.identities_hold());
    }
    EXPECT_LE(sb_run(in.ring, in.gens, variants[4]).stats.queued, base.stats.queued);
  }
}

TEST(SignatureBasis, ReductionCountLawAcrossConfigurations) {
  const Ideal in = gen_katsura(5);
  for (auto lookup : {LookupKind::List, LookupKind::KdTree, LookupKind::DivKdTree})
    for (auto pq : {PairQueueKind::TriangleTourTree, PairQueueKind::TriangleHeap, PairQueueKind::Heap,
                    PairQueueKind::TourTree})
      for (unsigned bd : {0u, 1u, 2u, 3u}) {
        SigBasisConfig cfg;
        cfg.lookup = lookup;
        cfg.spair_queue = pq;
        cfg.base_divisors = bd;
        const auto s = sb_run(in.ring, in.gens, cfg).stats;
        EXPECT_EQ(s.need_reduction, s.to_sb + s.to_syzygy);
        EXPECT_EQ(s.basis_size, s.inputs + s.to_sb);
        EXPECT_TRUE(s.identities_hold());
      }
}

TEST(SignatureBasis, BitTriangleMemoryFallback) {
  const Ideal in = gen_katsura(6);
  const auto base = sb_run(in.ring, in.gens);
  SigBasisConfig cfg;
  cfg.bit_triangle_cap = detail::BitTriangle::bytes_for(12);
  const auto res = sb_run(in.ring, in.gens, cfg);
  EXPECT_TRUE(res.stats.triangle_dropped);
  EXPECT_FALSE(base.stats.triangle_dropped);
  EXPECT_LT(res.stats.base_divisor, base.stats.base_divisor);
  EXPECT_EQ(entry_list(res), entry_list(base));
  EXPECT_TRUE(res.stats.identities_hold());
}

TEST(SignatureBasis, RemaindersIndependentOfReducerChoice) {
  const Ideal in = gen_katsura(4);
  SigBasisConfig cfg;
  cfg.record_reductions = true;
  const auto base = sb_run(in.ring, in.gens, cfg);
  ASSERT_FALSE(base.reductions.empty());
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    cfg.reducer_shuffle_seed = seed;
    const auto res = sb_run(in.ring, in.gens, cfg);
    ASSERT_EQ(res.reductions.size(), base.reductions.size());
    for (std::size_t k = 0; k < res.reductions.size(); ++k) {
      EXPECT_EQ(res.reductions[k].sig, base.reductions[k].sig);
      EXPECT_EQ(res.reductions[k].remainder, base.reductions[k].remainder);
    }
  }
}

TEST(SignatureBasis, TriangleAuditDuringRun) {
  const Ideal in = gen_katsura(5);
  SigBasisConfig cfg;
  cfg.audit_pairs = true;
  const auto s = sb_run(in.ring, in.gens, cfg).stats;
  EXPECT_EQ(s.audit_failures, 0u);
  EXPECT_GT(s.max_column_bytes, 0u);
}

TEST(SignatureBasis, RejectsEmptyInput) {
  const Ring r = sigbasis::testing::ring3();
  EXPECT_THROW(sb_run(r, {Polynomial{}}), std::invalid_argument);
}

TEST(Interreduce, SameIdealNoReducibleTerms) {
  const Ideal in = gen_katsura(5);
  const auto red = interreduce(in.ring, in.gens);
  const auto gb = buchberger_run(in.ring, in.gens).gb;
  EXPECT_EQ(buchberger_run(in.ring, red).gb, gb);
  for (std::size_t a = 0; a < red.size(); ++a)
    for (std::size_t b = 0; b < red.size(); ++b)
      if (a != b) {
        for (const auto& term : red[a]) EXPECT_FALSE(mono_divides(red[b].lead_mono(), term.mono));
      }
  const auto sorted = interreduce_sorted(in.ring, in.gens);
  for (std::size_t k = 1; k < sorted.size(); ++k)
    EXPECT_GT(sgn(in.ring.compare(sorted[k - 1].lead_mono(), sorted[k].lead_mono())), 0);
}
