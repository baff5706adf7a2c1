#include <gtest/gtest.h>

#include <limits>
#include <random>

#include "mnl/errors.hpp"
#include "mnl/rational.hpp"

using mnl::GaussRational;
using mnl::Rational;

TEST(Rational, NormalizesSignAndGcd) {
  Rational q(6, -4);
  EXPECT_EQ(q.num(), -3);
  EXPECT_EQ(q.den(), 2);
  EXPECT_EQ(Rational(0, -7), Rational(0));
  EXPECT_EQ(Rational(0, -7).den(), 1);
}

TEST(Rational, ZeroDenominatorThrows) { EXPECT_THROW(Rational(1, 0), std::domain_error); }

TEST(Rational, Arithmetic) {
  EXPECT_EQ(Rational(1, 3) + Rational(2, 3), Rational(1));
  EXPECT_EQ(Rational(1, 2) - Rational(1, 3), Rational(1, 6));
  EXPECT_EQ(Rational(2, 3) * Rational(9, 4), Rational(3, 2));
  EXPECT_EQ(Rational(2, 3) / Rational(4, 9), Rational(3, 2));
  EXPECT_TRUE(Rational(-1, 2) < Rational(1, 3));
  EXPECT_EQ(Rational(-7, 3).str(), "-7/3");
}

TEST(Rational, OverflowIsDetected) {
  const Rational big(std::numeric_limits<std::int64_t>::max());
  EXPECT_THROW(big + Rational(1), mnl::OverflowError);
  EXPECT_THROW(big * Rational(2), mnl::OverflowError);
  EXPECT_THROW(-Rational(std::numeric_limits<std::int64_t>::min()), mnl::OverflowError);
}

TEST(Rational, FieldAxiomsOnRandomValues) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> num(-50, 50), den(1, 30);
  for (int trial = 0; trial < 500; ++trial) {
    const Rational a(num(rng), den(rng)), b(num(rng), den(rng)), c(num(rng), den(rng));
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a - b + b, a);
    if (!b.is_zero()) EXPECT_EQ(a / b * b, a);
    EXPECT_GT(a.den(), 0);
  }
}

TEST(GaussRational, ImaginaryUnitSquaresToMinusOne) {
  const GaussRational i = GaussRational::i();
  EXPECT_EQ(i * i, GaussRational(-1));
  EXPECT_EQ(GaussRational(1) / i, -i);
  EXPECT_EQ((GaussRational(Rational(1), Rational(2)) * GaussRational(Rational(3), Rational(-1))),
            GaussRational(Rational(5), Rational(5)));
  EXPECT_EQ(GaussRational(Rational(1, 3), Rational(-2)).str(), "(1/3 - 2i)");
  EXPECT_EQ((-GaussRational::i()).str(), "-i");
  EXPECT_EQ(GaussRational(Rational(2), Rational(1)).str(), "(2 + i)");
  EXPECT_EQ(GaussRational(Rational(0), Rational(3, 2)).str(), "3/2i");
}
