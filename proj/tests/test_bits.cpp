#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dtlab/bits.hpp"

using namespace dtlab;

TEST_CASE("bit strings parse, print and index from coordinate 1") {
  auto x = BitString::parse("1100|0011");
  CHECK(x.size() == 8);
  CHECK(x[1]);
  CHECK(x[2]);
  CHECK_FALSE(x[3]);
  CHECK(x[8]);
  CHECK(x.str() == "11000011");
  CHECK(x.count() == 4);
  CHECK(x.ones() == std::vector<Coord>{1, 2, 7, 8});
  CHECK_THROWS_AS(x.at(9), std::out_of_range);
  CHECK_THROWS_AS(BitString::parse("10x"), std::invalid_argument);
}

TEST_CASE("mask round trip uses bit c-1 for coordinate c") {
  auto x = BitString::from_mask(0b101, 3);
  CHECK(x.str() == "101");
  CHECK(x.mask() == 0b101);
  CHECK(x.flipped(2).str() == "111");
  BitString wide(130);
  wide.set(130);
  wide.set(64);
  CHECK(wide.count() == 2);
  CHECK(wide.ones() == std::vector<Coord>{64, 130});
}

TEST_CASE("ordering compares the first differing coordinate") {
  CHECK(BitString::parse("01") < BitString::parse("10"));
  CHECK(BitString::parse("1") < BitString::parse("00"));
  CHECK(BitString::parse("0110") == BitString::parse("0110"));
}

TEST_CASE("rational parsing") {
  CHECK(parse_rational("1/4") == Rational(1, 4));
  CHECK(parse_rational("0.25") == Rational(1, 4));
  CHECK(parse_rational("-0.5") == Rational(-1, 2));
  CHECK(parse_rational("3") == Rational(3));
  CHECK(to_string(Rational(6, 8)) == "3/4");
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("abc"));
}
