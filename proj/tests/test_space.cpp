#include "baire/errors.hpp"
#include "baire/expansion.hpp"
#include "baire/space.hpp"
#include "baire/witness.hpp"

#include <gtest/gtest.h>

#include "fixtures.hpp"

using namespace baire;
using namespace fixtures;

TEST(Space, HeightsOfSmallSpaces) {
  EXPECT_EQ(cb_heights(Space::leaf()), std::vector<int>{0});
  EXPECT_EQ(rank(Space::leaf()), 0);
  EXPECT_EQ(cb_heights(T1()), (std::vector<int>{1, 0}));
  EXPECT_EQ(rank(T1()), 1);
  EXPECT_EQ(cb_heights(T2()), (std::vector<int>{2, 1, 0}));
  EXPECT_EQ(rank(T2()), 2);
}

TEST(Space, LimitRequiresCycle) { EXPECT_THROW(Space::limit({Space::leaf()}, {}), std::invalid_argument); }

TEST(Space, RankTakesTheHighestTailPoint) {
  // The prefix part has rank 2 but the point itself is a limit of leaves only.
  Space s = Space::limit({T2()}, {Space::leaf()});
  EXPECT_EQ(rank(s), 2);
  EXPECT_EQ(cb_heights(s)[0], 1);
}

TEST(Space, DerivedSets) {
  EXPECT_EQ(derived_set(T1()).mark(), mark_of(T1(), {0}));
  EXPECT_EQ(derived_set(T2()).mark(), mark_of(T2(), {kRoot, kMid}));
  EXPECT_TRUE(derived_set(Space::leaf()).empty());
}

TEST(Space, IteratedDerivationEndsInFiniteSet) {
  for (int n = 1; n <= 4; ++n) {
    Space s = homogeneous(n);
    ClosedMark last = height_at_least(s, n);
    EXPECT_FALSE(last.empty());
    EXPECT_TRUE(height_at_least(s, n + 1).empty());
    EXPECT_TRUE(is_closed(derived_set(s).mark()));
  }
}

TEST(Space, Closedness) {
  EXPECT_TRUE(is_closed(mark_of(T1(), {0})));
  EXPECT_FALSE(is_closed(mark_of(T1(), {1})));
  EXPECT_TRUE(is_closed(Mark(T2(), true)));
  EXPECT_THROW(ClosedMark::validate(mark_of(T1(), {1})), NotClosed);
}

TEST(Space, ClosureAddsLimitPoints) {
  EXPECT_EQ(closure(mark_of(T1(), {1})), Mark(T1(), true));
  EXPECT_EQ(closure(mark_of(T2(), {kLeaf})), Mark(T2(), true));
}

TEST(Space, RestrictToDerivedSetDropsOneLevel) {
  auto r = restrict(T2(), derived_set(T2()));
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(rank(r->space), 1);
  EXPECT_EQ(r->space, T1());
  EXPECT_EQ(r->to_old, (std::vector<NodeId>{kRoot, kMid}));
}

TEST(Space, RestrictEdgeCases) {
  auto single = restrict(T1(), ClosedMark::validate(mark_of(T1(), {0})));
  ASSERT_TRUE(single.has_value());
  EXPECT_EQ(single->space, Space::leaf());

  auto same = restrict(T2(), ClosedMark::full(T2()));
  ASSERT_TRUE(same.has_value());
  EXPECT_EQ(same->space, T2());

  EXPECT_FALSE(restrict(T2(), ClosedMark::none(T2())).has_value());
}

TEST(Space, RestrictComposes) {
  Space s = homogeneous(3);
  ClosedMark outer = height_at_least(s, 1);
  ClosedMark inner = height_at_least(s, 2);
  auto once = restrict(s, inner);
  auto first = restrict(s, outer);
  ASSERT_TRUE(once && first);
  Mark inner_in_first(first->space);
  for (NodeId id = 0; id < first->space.size(); ++id) inner_in_first.set(id, inner[first->to_old[id]]);
  auto twice = restrict(first->space, ClosedMark::validate(inner_in_first));
  ASSERT_TRUE(twice.has_value());
  EXPECT_EQ(twice->space, once->space);
  for (NodeId id = 0; id < twice->space.size(); ++id) {
    EXPECT_EQ(first->to_old[twice->to_old[id]], once->to_old[id]);
  }
}

TEST(Space, NowhereDense) {
  ClosedMark full = ClosedMark::full(T2());
  EXPECT_TRUE(is_relatively_nowhere_dense(derived_set(T2()), full));
  EXPECT_FALSE(is_relatively_nowhere_dense(full, full));
  EXPECT_TRUE(is_relatively_nowhere_dense(ClosedMark::none(T2()), full));
  EXPECT_THROW(is_relatively_nowhere_dense(full, derived_set(T2())), PreconditionFailed);
}

TEST(Space, IsolatedNodeWithClopenParts) {
  Space s = Space::isolated({T1()});
  EXPECT_FALSE(s.has_tail(0));
  EXPECT_EQ(cb_heights(s), (std::vector<int>{0, 1, 0}));
  EXPECT_EQ(rank(s), 1);
  EXPECT_TRUE(is_closed(mark_of(s, {0})));
  EXPECT_TRUE(is_open_in(mark_of(s, {0}), Mark(s, true)));
}

TEST(Space, AddressesResolve) {
  Space s = Space::limit({Space::leaf()}, {T1()});
  for (NodeId id = 0; id < s.size(); ++id) EXPECT_EQ(s.resolve(s.address(id)), id);
  EXPECT_THROW(s.resolve({{Branch::Cycle, 5}}), InvalidAddress);
  EXPECT_THROW(s.resolve({{Branch::Prefix, 0}, {Branch::Cycle, 0}}), InvalidAddress);
}

TEST(Space, MarkShapeMismatchRejected) {
  EXPECT_THROW(Mark(T1(), true) | Mark(T2(), true), ShapeMismatch);
}

TEST(Expansion, UnrollsTails) {
  EXPECT_EQ(expand(Space::leaf(), 2).vertices.size(), 1u);
  Expansion e1 = expand(T1(), 2);
  ASSERT_EQ(e1.vertices.size(), 3u);
  EXPECT_EQ(e1.vertices[0].tail.size(), 2u);
  EXPECT_EQ(expand(T2(), 3).vertices.size(), 13u);
  EXPECT_THROW(expand(T1(), 1), std::invalid_argument);
}
