#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "sigbasis/term_queue.hpp"

using namespace sigbasis;
using sigbasis::testing::P;

namespace {

class TermQueueConfigs : public ::testing::TestWithParam<QueueConfig> {};

std::string config_name(const ::testing::TestParamInfo<QueueConfig>& info) {
  std::string s = info.param.to_string();
  for (char& c : s)
    if (c == '+') c = '_';
  return s;
}

}  // namespace

TEST(QueueConfig, EighteenLegalCombinations) {
  EXPECT_EQ(QueueConfig::all().size(), 18u);
  EXPECT_THROW((QueueConfig{QueueBackend::Heap, true, true, false}.validate()), std::invalid_argument);
}

TEST_P(TermQueueConfigs, SpecExamples) {
  const Ring r = sigbasis::testing::ring3();
  auto q = make_term_queue(r, GetParam());
  const Polynomial g = P(r, "x^2-y");
  q->push_product({1, P(r, "x").lead_mono()}, g);
  EXPECT_EQ(q->pop_max(), (Term{1, P(r, "x^3").lead_mono()}));
  EXPECT_EQ(q->pop_max(), (Term{100, P(r, "x*y").lead_mono()}));
  EXPECT_EQ(q->pop_max(), std::nullopt);

  const Polynomial a = P(r, "3*x^2"), b = P(r, "98*x^2"), c = P(r, "y");
  q->push_product({1, r.one()}, a);
  q->push_product({1, r.one()}, b);
  q->push_product({1, r.one()}, c);
  EXPECT_EQ(q->pop_max(), (Term{1, P(r, "y").lead_mono()}));
  EXPECT_EQ(q->pop_max(), std::nullopt);
  EXPECT_TRUE(q->empty());
}

TEST_P(TermQueueConfigs, MatchesSortAndFoldOracle) {
  std::mt19937_64 rng(17);
  const Ring r(101, 3);
  auto q = make_term_queue(r, GetParam());
  for (int script = 0; script < 100; ++script)
    ASSERT_TRUE(sigbasis::testing::run_queue_script(r, *q, rng, 60)) << "script " << script;
}

// Many like terms over a tiny field exercise cancellation.
TEST_P(TermQueueConfigs, CancellationHeavyScripts) {
  std::mt19937_64 rng(5);
  const Ring r(3, 2);
  auto q = make_term_queue(r, GetParam());
  for (int script = 0; script < 100; ++script)
    ASSERT_TRUE(sigbasis::testing::run_queue_script(r, *q, rng, 80)) << "script " << script;
}

INSTANTIATE_TEST_SUITE_P(All, TermQueueConfigs, ::testing::ValuesIn(QueueConfig::all()), config_name);
