#include <gtest/gtest.h>

#include "steintile/error.hpp"
#include "steintile/rational.hpp"
#include "test_support.hpp"

using namespace steintile;
using steintile::testing::Q;

TEST(Rational, ParsesAndReduces) {
  EXPECT_EQ(to_string(Q("6/8")), "3/4");
  EXPECT_EQ(to_string(Q("-4/2")), "-2");
  EXPECT_EQ(to_string(Q("0/5")), "0");
  EXPECT_EQ(to_string(Q("17")), "17");
  EXPECT_EQ(Q("1/3") + Q("1/6"), Q("1/2"));
}

TEST(Rational, RejectsMalformedLiterals) {
  for (const char* bad : {"", "1/", "/2", "1/0", "1.5", "a/b", "1/-2", "--1", "1 /2", "+3"}) {
    EXPECT_THROW(parse_rational(bad), ValidationError) << bad;
  }
}

TEST(Rational, FloorCeilAndIntegrality) {
  EXPECT_EQ(floor_of(Q("7/2")), 3);
  EXPECT_EQ(floor_of(Q("-7/2")), -4);
  EXPECT_EQ(ceil_of(Q("7/2")), 4);
  EXPECT_EQ(ceil_of(Q("-7/2")), -3);
  EXPECT_EQ(floor_of(Q("5")), 5);
  EXPECT_TRUE(is_integer(Q("10/5")));
  EXPECT_FALSE(is_integer(Q("10/4")));
}

TEST(Rational, Int64Conversion) {
  EXPECT_EQ(to_int64(Q("-12")), -12);
  EXPECT_THROW(to_int64(Q("1/2")), ValidationError);
  EXPECT_THROW(to_int64(Integer("100000000000000000000")), ValidationError);
}

TEST(Rational, GcdLcm) {
  EXPECT_EQ(gcd(Integer(12), Integer(18)), 6);
  EXPECT_EQ(lcm(Integer(4), Integer(6)), 12);
  EXPECT_EQ(lcm(Integer(0), Integer(6)), 0);
}

TEST(Rational, MakeRationalNormalizesSign) {
  EXPECT_EQ(to_string(make_rational(3, -6)), "-1/2");
  EXPECT_THROW(make_rational(1, 0), ValidationError);
}

TEST(RationalProperty, StringRoundTrip) {
  steintile::testing::Rng rng(5);
  for (int i = 0; i < 500; ++i) {
    const Rational q = steintile::testing::random_rational(rng, -1000, 1000, 97);
    EXPECT_EQ(parse_rational(to_string(q)), q);
  }
}
