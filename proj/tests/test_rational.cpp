#include "baire/rational.hpp"

#include <gtest/gtest.h>

#include <limits>

using baire::Rat;

TEST(Rational, KeepsLowestTerms) {
  Rat r(6, -4);
  EXPECT_EQ(r.num(), -3);
  EXPECT_EQ(r.den(), 2);
  EXPECT_EQ(r.str(), "-3/2");
  EXPECT_EQ(Rat(4, 2).str(), "2");
  EXPECT_EQ(Rat(0, 7).str(), "0");
}

TEST(Rational, Arithmetic) {
  EXPECT_EQ(Rat(1, 3) + Rat(1, 6), Rat(1, 2));
  EXPECT_EQ(Rat(1, 3) - Rat(1, 2), Rat(-1, 6));
  EXPECT_EQ(Rat(2, 3) * Rat(3, 4), Rat(1, 2));
  EXPECT_EQ(Rat(1, 2) / Rat(1, 4), Rat(2));
  EXPECT_LT(Rat(1, 3), Rat(1, 2));
  EXPECT_GT(Rat(-1, 3), Rat(-1, 2));
  EXPECT_THROW(Rat(1) / Rat(0), std::domain_error);
}

TEST(Rational, FloorAndCeil) {
  EXPECT_EQ(baire::floor(Rat(7, 2)), 3);
  EXPECT_EQ(baire::floor(Rat(-7, 2)), -4);
  EXPECT_EQ(baire::ceil(Rat(7, 2)), 4);
  EXPECT_EQ(baire::ceil(Rat(-7, 2)), -3);
  EXPECT_EQ(baire::floor(Rat(3)), 3);
}

TEST(Rational, ParsesCanonicalForms) {
  EXPECT_EQ(Rat::parse("3/4"), Rat(3, 4));
  EXPECT_EQ(Rat::parse("-1/2"), Rat(-1, 2));
  EXPECT_EQ(Rat::parse("5"), Rat(5));
  EXPECT_EQ(Rat::parse("0"), Rat(0));
}

TEST(Rational, RejectsNonCanonicalText) {
  for (const char* bad : {"2/4", "3/1", "-0", "+1", "01", "1/0", "1/-2", "0/5", "", "1.5", "1/", "/2", " 1"}) {
    EXPECT_THROW(Rat::parse(bad), std::invalid_argument) << bad;
  }
}

TEST(Rational, OverflowThrows) {
  const Rat big(std::numeric_limits<std::int64_t>::max());
  EXPECT_THROW(big + Rat(1), std::overflow_error);
  EXPECT_THROW(big * Rat(2), std::overflow_error);
}

TEST(Rational, RoundTripsThroughText) {
  for (const Rat& r : {Rat(1, 3), Rat(-22, 7), Rat(0), Rat(9)}) EXPECT_EQ(Rat::parse(r.str()), r);
}
