#include <gtest/gtest.h>

#include <random>
#include <stdexcept>

#include "aspl/rational.hpp"

namespace aspl {
namespace {

TEST(Rational, StoredInLowestTerms) {
  const Rational r(6, -4);
  EXPECT_EQ(r.to_string(), "-3/2");
  EXPECT_EQ(r.denominator(), 2);
  EXPECT_EQ(Rational(0, 7).to_string(), "0/1");
  EXPECT_EQ(Rational(5).to_string(), "5/1");
}

TEST(Rational, ZeroDenominatorRejected) {
  EXPECT_THROW(Rational(1, 0), std::domain_error);
  EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
  EXPECT_THROW(Rational::fraction(3, 0), std::domain_error);
  EXPECT_THROW(Rational::parse("1/0"), std::domain_error);
}

TEST(Rational, ParseAcceptsCanonicalAndInteger) {
  EXPECT_EQ(Rational::parse("13/16"), Rational(13, 16));
  EXPECT_EQ(Rational::parse("-4/6"), Rational(-2, 3));
  EXPECT_EQ(Rational::parse("7"), Rational(7));
  EXPECT_THROW(Rational::parse("1/-2"), std::invalid_argument);
  EXPECT_THROW(Rational::parse("abc"), std::invalid_argument);
  EXPECT_THROW(Rational::parse(""), std::invalid_argument);
}

TEST(Rational, Ordering) {
  EXPECT_LT(Rational(13, 16), Rational(1));
  EXPECT_GT(Rational(-1, 3), Rational(-1, 2));
  EXPECT_EQ(Rational(2, 4), Rational(1, 2));
}

TEST(Rational, LargeValuesStayExact) {
  Rational r = Rational::fraction(~std::uint64_t{0}, 3);
  r = r * r;
  EXPECT_EQ(Rational::parse(r.to_string()), r);
  EXPECT_EQ((r - r).to_string(), "0/1");
}

// Field axioms and string round trip on random small fractions, compared
// against cross-multiplication in 64-bit integers.
TEST(Rational, RandomArithmeticMatchesIntegerCrossMultiplication) {
  std::mt19937_64 rng(12345);
  std::uniform_int_distribution<int> num(-50, 50);
  std::uniform_int_distribution<int> den(1, 50);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::int64_t a = num(rng), b = den(rng), c = num(rng), d = den(rng);
    const Rational x(a, b);
    const Rational y(c, d);
    EXPECT_EQ(x + y, Rational(a * d + c * b, b * d));
    EXPECT_EQ(x - y, Rational(a * d - c * b, b * d));
    EXPECT_EQ(x * y, Rational(a * c, b * d));
    if (c != 0) EXPECT_EQ(x / y, Rational(a * d, b * c));
    EXPECT_EQ(x < y, a * d < c * b);
    EXPECT_EQ(Rational::parse(x.to_string()), x);
    EXPECT_GT(x.denominator(), 0);
  }
}

}  // namespace
}  // namespace aspl
