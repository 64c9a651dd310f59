#include "baire/oscillation.hpp"
#include "baire/witness.hpp"

#include <gtest/gtest.h>

#include "fixtures.hpp"

using namespace baire;
using namespace fixtures;

TEST(Chain, SmallRanks) {
  Chain c1 = build_chain(1);
  EXPECT_EQ(c1.space, T1());
  ASSERT_EQ(c1.sets.size(), 2u);
  EXPECT_EQ(c1.sets[1].mark(), mark_of(T1(), {0}));

  Chain c2 = build_chain(2);
  ASSERT_EQ(c2.sets.size(), 3u);
  EXPECT_EQ(c2.sets[0].mark(), Mark(T2(), true));
  EXPECT_EQ(c2.sets[1], derived_set(T2()));
  EXPECT_EQ(c2.sets[2].mark(), mark_of(T2(), {kRoot}));
  EXPECT_THROW(build_chain(0), std::invalid_argument);
}

TEST(Chain, StepsAreNowhereDense) {
  for (int n = 1; n <= 6; ++n) {
    Chain c = build_chain(n);
    for (std::size_t j = 1; j < c.sets.size(); ++j) {
      EXPECT_TRUE(is_relatively_nowhere_dense(c.sets[j], c.sets[j - 1])) << "n=" << n << " j=" << j;
    }
  }
}

TEST(Chain, OnOtherSpaces) {
  Space s = Space::limit({T1()}, {T2(), Space::leaf()});
  Chain c = build_chain_on(s, 2);
  ASSERT_EQ(c.sets.size(), 3u);
  EXPECT_EQ(c.sets[1], derived_set(s));
  EXPECT_THROW(build_chain_on(T1(), 2), std::invalid_argument);
}

TEST(EvenSet, MarksEvenHeights) {
  EXPECT_EQ(build_E(1), mark_of(T1(), {1}));
  EXPECT_EQ(build_E(2), mark_of(T2(), {kRoot, kLeaf}));
  for (int n = 1; n <= 5; ++n) {
    Mark E = build_E(n);
    auto h = cb_heights(E.space());
    for (NodeId id = 0; id < E.space().size(); ++id) EXPECT_EQ(E[id], h[id] % 2 == 0);
  }
}

TEST(WitnessReportCheck, RankTwo) {
  WitnessReport w = verify_witness(2, {Rat(1, 2)});
  EXPECT_TRUE(w.ok());
  ASSERT_EQ(w.indices.size(), 1u);
  EXPECT_EQ(w.indices[0].second, 2);
  EXPECT_TRUE(w.trail_matches[0]);
  EXPECT_LE(w.upper, Rat(3));
}

TEST(WitnessReportCheck, RankOneAndFour) {
  WitnessReport w1 = verify_witness(1, {Rat(1)});
  EXPECT_TRUE(w1.ok());
  EXPECT_EQ(w1.indices[0].second, 1);
  EXPECT_LE(w1.upper, Rat(2));

  WitnessReport w4 = verify_witness(4, {Rat(1, 10), Rat(1, 2), Rat(1)});
  EXPECT_TRUE(w4.ok());
  for (const auto& [eps, i] : w4.indices) EXPECT_EQ(i, 4) << eps;
  EXPECT_LE(w4.upper, Rat(5));
  EXPECT_GE(w4.lower, Rat(1));
}

TEST(WitnessReportCheck, RejectsGridOutsideUnitInterval) {
  EXPECT_THROW(verify_witness(2, {Rat(3, 2)}), std::invalid_argument);
  EXPECT_THROW(verify_witness(2, {Rat(0)}), std::invalid_argument);
}

TEST(WitnessReportCheck, ScaledIndicatorKeepsIndex) {
  for (int n = 1; n <= 5; ++n) {
    PatternFn chi = PatternFn::indicator(build_E(n));
    EXPECT_EQ(index(scale(Rat(1, n), chi), Rat(1, n)), index(chi, Rat(1)));
  }
}

TEST(PerRankDemo, ThreeRows) {
  Prop15Report r = prop15_demo(3);
  ASSERT_EQ(r.rows.size(), 3u);
  for (int n = 1; n <= 3; ++n) {
    const Prop15Row& row = r.rows[n - 1];
    EXPECT_EQ(row.n, n);
    EXPECT_EQ(row.eps, Rat(1, n));
    EXPECT_EQ(row.index, n);
    EXPECT_EQ(row.product, Rat(1));
    EXPECT_LE(row.norm_bound, Rat(n + 1, n));
    EXPECT_TRUE(row.premise);
  }
  EXPECT_TRUE(r.conclusion);
  EXPECT_FALSE(r.note.empty());
}

TEST(PerRankDemo, SingleRow) {
  Prop15Report r = prop15_demo(1);
  ASSERT_EQ(r.rows.size(), 1u);
  EXPECT_EQ(r.rows[0].product, Rat(1));
  EXPECT_THROW(prop15_demo(0), std::invalid_argument);
}
