#include <gtest/gtest.h>

#include <cmath>

#include "nilschouten/surd.hpp"
#include "oracles.hpp"

using nilschouten::Rational;
using nilschouten::Surd;

TEST(Surd, SquareRootsAreReduced) {
  EXPECT_EQ(Surd::sqrt(Rational(8)).to_string(), "2*sqrt(2)");
  EXPECT_EQ(Surd::sqrt(Rational(9, 4)).to_string(), "3/2");
  EXPECT_EQ(Surd::sqrt(Rational(3, 4)).to_string(), "1/2*sqrt(3)");
  EXPECT_EQ(Surd::sqrt(Rational(1, 2)).to_string(), "1/2*sqrt(2)");
  EXPECT_TRUE(Surd::sqrt(Rational(0)).is_zero());
  EXPECT_THROW(Surd::sqrt(Rational(-1)), nilschouten::Error);
}

TEST(Surd, RingOperations) {
  Surd r2 = Surd::sqrt(Rational(2)), r3 = Surd::sqrt(Rational(3));
  EXPECT_EQ(r2 * r2, Surd(2));
  EXPECT_EQ(r2 * r3, Surd::sqrt(Rational(6)));
  EXPECT_EQ((r2 + r3) * (r2 - r3), Surd(-1));
  EXPECT_TRUE((r2 - r2).is_zero());
  EXPECT_FALSE((r2 + r3).is_rational());
  EXPECT_EQ(Surd(Rational(5, 3)).rational_value(), Rational(5, 3));
  EXPECT_THROW(r2.rational_value(), nilschouten::Error);
}

TEST(Surd, Inverse) {
  Surd x = Surd(1) + Surd::sqrt(Rational(2)) + Surd::sqrt(Rational(3));
  EXPECT_EQ(x * x.inverse(), Surd(1));
  EXPECT_THROW(Surd().inverse(), nilschouten::Error);
}

TEST(Surd, ExactSign) {
  // sqrt(2) + sqrt(3) - sqrt(10) is about -0.016.
  Surd x = Surd::sqrt(Rational(2)) + Surd::sqrt(Rational(3)) - Surd::sqrt(Rational(10));
  EXPECT_EQ(x.sign(), -1);
  EXPECT_EQ((-x).sign(), 1);
  EXPECT_EQ(Surd().sign(), 0);
  EXPECT_EQ(compare(Surd::sqrt(Rational(2)), Surd(Rational(141, 100))), 1);
}

TEST(Surd, ParseAndPrint) {
  EXPECT_EQ(Surd::parse("sqrt(2)"), Surd::sqrt(Rational(2)));
  EXPECT_EQ(Surd::parse("-sqrt(12)"), Surd(-2) * Surd::sqrt(Rational(3)));
  EXPECT_EQ(Surd::parse("-3/2*sqrt(3)"), Surd(Rational(-3, 2)) * Surd::sqrt(Rational(3)));
  EXPECT_EQ(Surd::parse("7/5"), Surd(Rational(7, 5)));
  EXPECT_THROW(Surd::parse("sqrt(-2)"), nilschouten::SyntaxError);
  EXPECT_THROW(Surd::parse("2sqrt(2)"), nilschouten::SyntaxError);
  EXPECT_THROW(Surd::parse(""), nilschouten::SyntaxError);
}

TEST(SurdProperty, PrintParseRoundTripAndDoubleAgreement) {
  oracle::Rng rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    Surd x;
    double approx = 0;
    for (int t = 0; t < 3; ++t) {
      Rational q = rng.rational(), m = rng.positive(12);
      x += Surd(q) * Surd::sqrt(m);
      approx += q.to_double() * std::sqrt(m.to_double());
    }
    EXPECT_EQ(Surd::parse(x.to_string()), x);
    EXPECT_NEAR(x.to_double(), approx, 1e-9);
    if (std::abs(approx) > 1e-6) EXPECT_EQ(x.sign(), approx > 0 ? 1 : -1);
  }
}
