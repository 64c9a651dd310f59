#include "baire/oracle.hpp"
#include "baire/oscillation.hpp"
#include "baire/witness.hpp"

#include <gtest/gtest.h>

#include "fixtures.hpp"

using namespace baire;
using namespace fixtures;

namespace {

template <class T>
std::vector<T> collapsed(const Expansion& e, const Space& s, const std::vector<T>& per_vertex, const T& fill) {
  auto out = oracle::collapse(e, s.size(), per_vertex, fill);
  EXPECT_TRUE(out.has_value()) << "unrolled copies disagree";
  return out.value_or(std::vector<T>{});
}

}  // namespace

TEST(Oracle, HeightsMatchSymbolic) {
  for (int n = 0; n <= 4; ++n) {
    Space s = homogeneous(n);
    for (unsigned copies : {2u, 3u}) {
      Expansion e = expand(s, copies);
      auto h = oracle::heights(e, oracle::lift(e, Mark(s, true)));
      EXPECT_EQ(collapsed(e, s, h, -1), cb_heights(s)) << "n=" << n << " copies=" << copies;
    }
  }
}

TEST(Oracle, ClosednessMatchesSymbolic) {
  Space s = Space::limit({T1()}, {T1()});
  Expansion e = expand(s, 3);
  for (std::uint32_t bits = 0; bits < (1u << s.size()); ++bits) {
    Mark m(s);
    for (NodeId id = 0; id < s.size(); ++id) m.set(id, (bits >> id) & 1u);
    EXPECT_EQ(oracle::is_closed(e, oracle::lift(e, m)), is_closed(m)) << bits;
  }
}

TEST(Oracle, EnvelopesOfIndicatorOfRoot) {
  PatternFn f = PatternFn::indicator(mark_of(T1(), {0}));
  Expansion e = expand(T1(), 3);
  auto env = oracle::envelopes(e, oracle::lift(e, f), oracle::lift(e, Mark(T1(), true)));
  EXPECT_EQ(collapsed(e, T1(), env.uosc, Rat(0)), (std::vector<Rat>{1, 0}));
  EXPECT_EQ(collapsed(e, T1(), env.osc, Rat(0)), (std::vector<Rat>{1, 0}));
  EXPECT_EQ(collapsed(e, T1(), env.oosc, Rat(0)), (std::vector<Rat>{1, 0}));
}

TEST(Oracle, IndexAndTrailMatchSymbolic) {
  Chain c = build_chain(3);
  PatternFn f = PatternFn::indicator(build_E(c));
  for (unsigned copies : {2u, 3u}) {
    Expansion e = expand(c.space, copies);
    auto lf = oracle::lift(e, f);
    auto full = oracle::lift(e, Mark(c.space, true));
    EXPECT_EQ(oracle::index(e, lf, full, Rat(1, 2)), 3);
    auto trail = oracle::derivation(e, lf, full, Rat(1, 2), false);
    DerivationTrail sym = derivation(f, Rat(1, 2));
    ASSERT_EQ(trail.size(), sym.sets.size());
    for (std::size_t j = 0; j < trail.size(); ++j) {
      EXPECT_EQ(collapsed(e, c.space, trail[j], char{0}), sym.sets[j].bits());
    }
  }
}
