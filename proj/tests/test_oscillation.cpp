#include "baire/errors.hpp"
#include "baire/oscillation.hpp"
#include "baire/witness.hpp"

#include <gtest/gtest.h>

#include "fixtures.hpp"

using namespace baire;
using namespace fixtures;

namespace {
PatternFn chi_E2() { return PatternFn::indicator(build_E(2)); }
}  // namespace

TEST(Envelopes, ConstantHasNoOscillation) {
  PatternFn c(T2(), Rat(2, 3));
  OscReport r = envelopes(c, ClosedMark::full(T2()));
  EXPECT_EQ(r.upper, c);
  EXPECT_EQ(r.lower, c);
  EXPECT_TRUE(r.uosc.is_zero());
  EXPECT_TRUE(r.osc.is_zero());
  EXPECT_TRUE(r.oosc.is_zero());
}

TEST(Envelopes, IndicatorOfRoot) {
  OscReport r = envelopes(PatternFn::indicator(mark_of(T1(), {0})), ClosedMark::full(T1()));
  EXPECT_EQ(r.uosc, fn_of(T1(), {1, 0}));
  EXPECT_EQ(r.osc, fn_of(T1(), {1, 0}));
  EXPECT_EQ(r.oosc, fn_of(T1(), {1, 0}));
  EXPECT_EQ(r.upper, fn_of(T1(), {1, 0}));
  EXPECT_EQ(r.lower, fn_of(T1(), {0, 0}));
}

TEST(Envelopes, IndicatorOfEvenHeights) {
  OscReport r = envelopes(chi_E2(), ClosedMark::full(T2()));
  EXPECT_EQ(r.osc, fn_of(T2(), {1, 1, 0}));
}

TEST(Envelopes, EmptyDomainRejected) {
  EXPECT_THROW(envelopes(PatternFn(T1()), ClosedMark::none(T1())), EmptySubspaceError);
}

TEST(Envelopes, SandwichBounds) {
  PatternFn f = fn_of(homogeneous(3), {1, Rat(-1, 2), Rat(1, 3), 0});
  OscReport r = envelopes(f, ClosedMark::full(f.space()));
  for (NodeId id = 0; id < f.space().size(); ++id) {
    EXPECT_LE(r.oosc[id] / Rat(2), r.osc[id]);
    EXPECT_LE(r.osc[id], r.oosc[id]);
  }
  EXPECT_EQ(r.oosc, r.upper - r.lower);
}

TEST(Derivation, ConstantStopsImmediately) {
  DerivationTrail t = derivation(PatternFn(T2(), Rat(5)), Rat(1, 7));
  ASSERT_EQ(t.sets.size(), 2u);
  EXPECT_TRUE(t.sets[1].empty());
  EXPECT_TRUE(t.terminal);
  EXPECT_EQ(t.index(), 0);
}

TEST(Derivation, IndicatorOfRoot) {
  DerivationTrail t = derivation(PatternFn::indicator(mark_of(T1(), {0})), Rat(1, 2));
  ASSERT_EQ(t.sets.size(), 3u);
  EXPECT_EQ(t.sets[0], Mark(T1(), true));
  EXPECT_EQ(t.sets[1], mark_of(T1(), {0}));
  EXPECT_TRUE(t.sets[2].empty());
}

TEST(Derivation, EvenHeightIndicatorFollowsDerivedSets) {
  DerivationTrail t = derivation(chi_E2(), Rat(1));
  ASSERT_EQ(t.sets.size(), 4u);
  EXPECT_EQ(t.sets[1], derived_set(T2()).mark());
  EXPECT_EQ(t.sets[2], mark_of(T2(), {kRoot}));
  EXPECT_TRUE(t.sets[3].empty());
}

TEST(Derivation, RejectsNonPositiveEps) {
  EXPECT_THROW(derivation(PatternFn(T1()), Rat(0)), std::invalid_argument);
  EXPECT_THROW(index(PatternFn(T1()), Rat(-1)), std::invalid_argument);
}

TEST(Derivation, UpperFlavorNestsAroundOscFlavor) {
  PatternFn f = fn_of(homogeneous(3), {Rat(1, 2), -1, 1, 0});
  for (const Rat& eps : critical_set(f)) {
    DerivationTrail os = derivation(f, eps);
    DerivationTrail k_eps = derivation(f, eps, Flavor::UpperOsc);
    DerivationTrail k_2eps = derivation(f, eps * Rat(2), Flavor::UpperOsc);
    for (std::size_t j = 0; j < os.sets.size(); ++j) {
      if (j < k_2eps.sets.size()) EXPECT_TRUE(k_2eps.sets[j].subset_of(os.sets[j]));
      ASSERT_LT(j, k_eps.sets.size());
      EXPECT_TRUE(os.sets[j].subset_of(k_eps.sets[j]));
    }
  }
}

TEST(Index, Examples) {
  EXPECT_EQ(index(PatternFn(T2(), Rat(1)), Rat(1, 3)), 0);
  EXPECT_EQ(index(PatternFn::indicator(mark_of(T1(), {0})), Rat(1, 2)), 1);
  for (const Rat& eps : {Rat(1, 10), Rat(1, 2), Rat(1)}) EXPECT_EQ(index(chi_E2(), eps), 2);
  EXPECT_EQ(index(chi_E2(), Rat(3, 2)), 0);
}

TEST(FullIndex, EvenHeightIndicator) {
  IndexReport r = full_index(chi_E2());
  EXPECT_EQ(r.critical, std::vector<Rat>{Rat(1)});
  EXPECT_EQ(r.index, 2);
  EXPECT_EQ(r.beta, 3);
  EXPECT_EQ(r.quasinorm, Rat(2));
}

TEST(FullIndex, ConstantAndContinuous) {
  IndexReport c = full_index(PatternFn(T2(), Rat(4)));
  EXPECT_EQ(c.index, 0);
  EXPECT_EQ(c.beta, 1);
  EXPECT_EQ(c.quasinorm, Rat(0));
  // Each point spreads its value over its tail: continuous, though not constant.
  Space s = Space::limit({Space::leaf()}, {T1()});
  PatternFn f(s, std::vector<Rat>{1, 0, 1, 1});
  EXPECT_TRUE(is_continuous(f, ClosedMark::full(s)));
  EXPECT_EQ(full_index(f).index, 0);
}

TEST(FullIndex, QuasinormTakesLargestProduct) {
  // Jump of 1 at the root and of 1/3 at the level-1 points.
  PatternFn f = fn_of(T2(), {1, Rat(1, 3), 0});
  IndexReport r = full_index(f);
  EXPECT_EQ(r.index, 2);
  Rat best;
  for (const auto& [eps, i] : r.per_eps) best = std::max(best, eps * Rat(i));
  EXPECT_EQ(r.quasinorm, best);
}

TEST(LTheta, Examples) {
  PatternFn f = PatternFn::indicator(mark_of(T1(), {0}));
  PatternFn g(T1());
  EXPECT_EQ(ltheta_set(f, g, Rat(1), {0}).mark(), mark_of(T1(), {0}));
  EXPECT_EQ(ltheta_set(f, g, Rat(1), {}).mark(), Mark(T1(), true));
  EXPECT_TRUE(ltheta_set(f, g, Rat(1), {1}).empty());
}

TEST(LTheta, ZeroStringsMatchHalvedDerivation) {
  PatternFn f = PatternFn::indicator(build_E(3));
  PatternFn g(f.space());
  DerivationTrail t = derivation(f, Rat(1, 2));
  std::vector<int> theta;
  for (std::size_t j = 0; j + 1 < t.sets.size(); ++j) {
    ClosedMark L = ltheta_set(f, g, Rat(1), theta);
    EXPECT_EQ(L.mark(), t.sets[j]) << "j=" << j;
    ClosedMark longer = ltheta_set(f, g, Rat(1), [&] { auto th = theta; th.push_back(0); return th; }());
    EXPECT_TRUE(longer.mark().subset_of(L.mark()));
    theta.push_back(0);
  }
}
