#include <gtest/gtest.h>

#include "oracles.hpp"
#include "recurseq/errors.hpp"
#include "recurseq/numeric.hpp"

using namespace recurseq;

TEST(Numeric, RationalsAreCanonical) {
  Rational r = make_rational(6, -4);
  EXPECT_EQ(r.get_num(), -3);
  EXPECT_EQ(r.get_den(), 2);
  EXPECT_THROW(make_rational(1, 0), InvalidArgument);
}

TEST(Numeric, ParseRational) {
  EXPECT_EQ(parse_rational("3/2"), make_rational(3, 2));
  EXPECT_EQ(parse_rational(" -10/4 "), make_rational(-5, 2));
  EXPECT_EQ(parse_rational("+7"), Rational(7));
  EXPECT_EQ(parse_rational("123456789012345678901234567890"),
            Rational(Integer("123456789012345678901234567890")));
  EXPECT_THROW(parse_rational("1/0"), InvalidArgument);
  EXPECT_THROW(parse_rational("abc"), InvalidArgument);
  EXPECT_THROW(parse_rational("1/-2"), InvalidArgument);
  EXPECT_THROW(parse_rational(""), InvalidArgument);
}

TEST(Numeric, ToStringDropsUnitDenominator) {
  EXPECT_EQ(to_string(make_rational(55, 1)), "55");
  EXPECT_EQ(to_string(make_rational(-21, 13)), "-21/13");
}

TEST(Numeric, DecimalRoundsHalfToEven) {
  EXPECT_EQ(to_decimal(make_rational(1, 8), 2), "0.12");
  EXPECT_EQ(to_decimal(make_rational(3, 8), 2), "0.38");
  EXPECT_EQ(to_decimal(make_rational(5, 2), 0), "2");
  EXPECT_EQ(to_decimal(make_rational(7, 2), 0), "4");
  EXPECT_EQ(to_decimal(make_rational(-1, 8), 2), "-0.12");
  EXPECT_EQ(to_decimal(Rational(2), 5), "2.00000");
  EXPECT_EQ(to_decimal(make_rational(-1, 1000), 2), "0.00");
  EXPECT_EQ(to_decimal(make_rational(1, 3), 4), "0.3333");
}

TEST(Numeric, DecimalMatchesOracleOnRandomRationals) {
  std::mt19937_64 rng(20240601);
  for (int trial = 0; trial < 100; ++trial) {
    Rational x = oracle::random_rational(rng, 1'000'000);
    unsigned digits = static_cast<unsigned>(oracle::uniform(rng, 0, 12));
    std::string text = to_decimal(x, digits);
    EXPECT_TRUE(oracle::is_correct_rounding(x, digits, text)) << x << " @" << digits << " -> " << text;
  }
  // Exact ties at the rounding position.
  for (int num = -41; num <= 41; num += 2) {
    Rational x = make_rational(num, 20);  // x.x5
    std::string text = to_decimal(x, 1);
    EXPECT_TRUE(oracle::is_correct_rounding(x, 1, text)) << x << " -> " << text;
  }
}

TEST(Numeric, TextRoundTrip) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    Rational x = oracle::random_rational(rng, 1'000'000'000);
    EXPECT_EQ(parse_rational(to_string(x)), x);
  }
}

TEST(Numeric, RationalPower) {
  EXPECT_EQ(rational_pow(-2, 3), Rational(-8));
  EXPECT_EQ(rational_pow(-2, -3), make_rational(-1, 8));
  EXPECT_EQ(rational_pow(0, 0), Rational(1));
  EXPECT_THROW(rational_pow(0, -1), InverseUnavailable);
}

TEST(Numeric, IndexCap) {
  EXPECT_NO_THROW(check_index_cap(Index{100}, 100));
  EXPECT_THROW(check_index_cap(Index{101}, 100), ResourceLimit);
  EXPECT_THROW(check_index_cap(Index{-101}, 100), ResourceLimit);
  EXPECT_THROW(check_index_cap(Integer("100000000000000000000000"), kDefaultMaxIndex), ResourceLimit);
}
