#include <gtest/gtest.h>

#include "earcolor/cycles.hpp"
#include "earcolor/error.hpp"
#include "earcolor/proper_coloring.hpp"
#include "fixtures.hpp"
#include "generators.hpp"
#include "oracles.hpp"

namespace earcolor {
namespace {

ProperColoringOptions audited() {
  ProperColoringOptions o;
  o.audit = true;
  return o;
}

TEST(ColorMod1, DirectedFiveCycle) {
  const auto run = color_mod1(testing::directed_cycle(5), 3, audited());
  EXPECT_EQ(run.result.colors, (std::vector<int>{0, 1, 2, 0, 1}));
  EXPECT_TRUE(run.steps.empty());
  EXPECT_EQ(run.seed_residue, 2);
  EXPECT_TRUE(run.result.verified);
}

TEST(ColorMod1, BidirectedCompleteUsesAllColors) {
  for (int k = 2; k <= 6; ++k) {
    const Digraph d = testing::bidirected_complete(k);
    const auto run = color_mod1(d, k, audited());
    EXPECT_TRUE(testing::naive_is_proper(d, run.result.colors));
    EXPECT_EQ(testing::color_count(run.result.colors), k);
  }
}

TEST(ColorMod1, BidirectedK3TraceChoosesResidueZeroFirst) {
  const Digraph d = testing::bidirected_complete(3);
  const auto run = color_mod1(d, 3);
  // Lengths 2 and 3 exist: class 0 (3-cycles) outranks class 2.
  EXPECT_EQ(run.seed_residue, 0);
  EXPECT_EQ(run.seed.length(), 3);
  ASSERT_EQ(run.steps.size(), 3u);
  for (const auto& step : run.steps) EXPECT_EQ(step.ear.length(), 1);
}

TEST(ColorMod1, Errors) {
  EXPECT_THROW(color_mod1(testing::directed_path(3), 3), InputError);
  EXPECT_THROW(color_mod1(Digraph(1), 3), InputError);
  EXPECT_THROW(color_mod1(testing::directed_cycle(3), 1), InputError);
  try {
    color_mod1(testing::directed_cycle(4), 3);
    FAIL() << "expected a hypothesis violation";
  } catch (const HypothesisViolated& e) {
    EXPECT_EQ(e.witness().size(), 4u);
  }
}

TEST(ColorMod1, SkipCheckNeverReturnsInvalidColoring) {
  testing::Rng rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    const Digraph d = testing::random_strong_digraph(2 + static_cast<int>(rng() % 5), 0.4, rng);
    ProperColoringOptions o;
    o.check_hypothesis = false;
    try {
      const auto run = color_mod1(d, 2 + static_cast<int>(rng() % 3), o);
      ASSERT_TRUE(testing::naive_is_proper(d, run.result.colors));
    } catch (const DefectError&) {
    } catch (const HypothesisViolated&) {
    }
  }
}

TEST(AssertAB, SeedTerminalAndMutation) {
  const Digraph d = testing::directed_cycle(5);
  const EarState seed = EarState::seed(d, 3, VertexCycle{{0, 1, 2, 3, 4}}, std::vector<int>{0, 1, 2, 0, 1});
  EXPECT_TRUE(assert_AB(seed).ok);
  const EarState bad = seed.with_f(1, 0);
  const Diagnostic diagnostic = assert_AB(bad);
  EXPECT_FALSE(diagnostic.ok);
  ASSERT_TRUE(diagnostic.arc.has_value());

  // (B) fails for a 2-cycle seed of bidirected K3 with f = 0, 1.
  const Digraph k3 = testing::bidirected_complete(3);
  const EarState s = EarState::seed(k3, 3, VertexCycle{{0, 1}}, std::vector<int>{0, 1});
  // Ear 0->2->1: 2 - (1 - 0) = 1.
  const Diagnostic b = assert_AB(s);
  EXPECT_FALSE(b.ok);
  ASSERT_TRUE(b.ear.has_value());
  EXPECT_EQ(residue_of_ear(s, *b.ear), 1);
}

TEST(ColorMod1, InvariantsAfterEveryStep) {
  testing::Rng rng(3);
  int states = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const int k = 2 + static_cast<int>(rng() % 3);
    const Digraph raw = testing::random_strong_digraph(2 + static_cast<int>(rng() % 5), 0.35, rng);
    const auto d = testing::prune_to_hypothesis(raw, k, 1, true, rng);
    if (!d) continue;
    ProperColoringOptions o = audited();
    o.on_state = [&](const EarState& s) {
      ++states;
      ASSERT_TRUE(assert_AB(s).ok);
    };
    const auto run = color_mod1(*d, k, o);
    ASSERT_TRUE(testing::naive_is_proper(*d, run.result.colors));
    ASSERT_LE(testing::color_count(run.result.colors), k);
  }
  EXPECT_GT(states, 300);
}

TEST(ColorMod1, StrongTournamentsUseAllColors) {
  testing::Rng rng(8);
  for (int n = 3; n <= 8; ++n) {
    const Digraph t = testing::random_strong_tournament(n, rng);
    const auto run = color_mod1(t, n);
    EXPECT_EQ(testing::color_count(run.result.colors), n);
    EXPECT_TRUE(testing::naive_is_proper(t, run.result.colors));
  }
}

}  // namespace
}  // namespace earcolor
