#include "baire/errors.hpp"
#include "baire/function.hpp"

#include <gtest/gtest.h>

#include "fixtures.hpp"

using namespace baire;
using namespace fixtures;

namespace {
PatternFn chi_root() { return PatternFn::indicator(mark_of(T1(), {0})); }
const NodeAddress kCycle0{{Branch::Cycle, 0}};
}  // namespace

TEST(Function, Evaluates) {
  EXPECT_EQ(PatternFn(T2()).eval({{Branch::Cycle, 0}, {Branch::Cycle, 0}}), Rat(0));
  EXPECT_EQ(chi_root().eval({}), Rat(1));
  EXPECT_EQ(chi_root().eval(kCycle0), Rat(0));
  EXPECT_THROW(chi_root().eval({{Branch::Prefix, 0}}), InvalidAddress);
}

TEST(Function, PointwiseAlgebra) {
  EXPECT_EQ(chi_root() + chi_root(), fn_of(T1(), {2, 0}));
  EXPECT_EQ(vmax(chi_root(), PatternFn(T1(), Rat(1, 2))), fn_of(T1(), {1, Rat(1, 2)}));
  EXPECT_TRUE((chi_root() * PatternFn::indicator(Mark(T1()))).is_zero());
  EXPECT_EQ(vmin(chi_root(), PatternFn(T1(), Rat(1, 2))), fn_of(T1(), {Rat(1, 2), 0}));
  EXPECT_EQ(scale(Rat(-3), chi_root()), fn_of(T1(), {-3, 0}));
  EXPECT_EQ(vabs(fn_of(T1(), {-1, Rat(1, 2)})), fn_of(T1(), {1, Rat(1, 2)}));
  EXPECT_THROW(chi_root() + PatternFn(T2()), ShapeMismatch);
}

TEST(Function, SupInf) {
  auto all = sup_inf(chi_root(), Mark(T1(), true));
  ASSERT_TRUE(all);
  EXPECT_EQ(*all, std::make_pair(Rat(1), Rat(0)));
  EXPECT_EQ(*sup_inf(chi_root(), mark_of(T1(), {0})), std::make_pair(Rat(1), Rat(1)));
  EXPECT_FALSE(sup_inf(chi_root(), Mark(T1())).has_value());
}

TEST(Function, SupInfUnderScaling) {
  PatternFn f = fn_of(T2(), {Rat(1, 3), -1, Rat(1, 2)});
  for (const Rat& c : {Rat(2), Rat(-1, 2)}) {
    auto base = *sup_inf(f, Mark(T2(), true));
    auto got = *sup_inf(scale(c, f), Mark(T2(), true));
    if (c.sign() > 0) {
      EXPECT_EQ(got, std::make_pair(c * base.first, c * base.second));
    } else {
      EXPECT_EQ(got, std::make_pair(c * base.second, c * base.first));
    }
  }
}

TEST(Function, Semicontinuity) {
  ClosedMark full = ClosedMark::full(T1());
  EXPECT_TRUE(is_usc(chi_root(), full));
  EXPECT_FALSE(is_lsc(chi_root(), full));
  EXPECT_FALSE(is_continuous(chi_root(), full));

  PatternFn leaves = PatternFn::indicator(mark_of(T1(), {1}));
  EXPECT_TRUE(is_lsc(leaves, full));
  EXPECT_FALSE(is_usc(leaves, full));

  PatternFn c(T1(), Rat(1, 3));
  EXPECT_TRUE(is_usc(c, full) && is_lsc(c, full) && is_continuous(c, full));
  EXPECT_THROW(is_usc(c, ClosedMark::none(T1())), EmptySubspaceError);
}

TEST(Function, SemicontinuityRelativeToSubspace) {
  // The level-1 point is isolated in K' but the root is still a limit of it.
  ClosedMark kp = ClosedMark::validate(mark_of(T2(), {kRoot, kMid}));
  PatternFn f = PatternFn::indicator(mark_of(T2(), {kMid}));
  EXPECT_FALSE(is_continuous(f, kp));
  EXPECT_TRUE(is_lsc(f, kp));
}

TEST(Function, IndicatorSemicontinuityMatchesClosedness) {
  Space s = Space::limit({Space::leaf()}, {T1(), Space::leaf()});
  const std::size_t n = s.size();
  for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
    Mark m(s);
    for (NodeId id = 0; id < n; ++id) m.set(id, (bits >> id) & 1u);
    PatternFn chi = PatternFn::indicator(m);
    ClosedMark full = ClosedMark::full(s);
    EXPECT_EQ(is_usc(chi, full), is_closed(m));
    EXPECT_EQ(is_lsc(chi, full), is_closed(~m));
    EXPECT_EQ(is_continuous(chi, full), is_usc(chi, full) && is_lsc(chi, full));
  }
}

TEST(Function, DiscontinuitySet) {
  EXPECT_EQ(discontinuity_set(chi_root(), Mark(T1(), true)), mark_of(T1(), {0}));
  EXPECT_TRUE(discontinuity_set(PatternFn(T2(), Rat(1)), Mark(T2(), true)).empty());
}
