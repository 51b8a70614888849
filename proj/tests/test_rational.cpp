#include <doctest.h>

#include "equicount/error.hpp"
#include "equicount/rational.hpp"

using namespace equicount;

TEST_CASE("rational arithmetic stays canonical") {
  Rational a(1, 2), b(1, 3);
  CHECK(a + b == Rational(5, 6));
  CHECK(a - b == Rational(1, 6));
  CHECK(a * b == Rational(1, 6));
  CHECK(a / b == Rational(3, 2));
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-2, -4) == Rational(1, 2));
  CHECK(Rational(2, -4).str() == "-1/2");
  CHECK((-a).str() == "-1/2");
  CHECK(Rational(7, 1).is_integer());
  CHECK(Rational(0).is_zero());
  CHECK(Rational(-3).sign() == -1);
}

TEST_CASE("construction from wide integers") {
  const long long big = 123456789012345678LL;
  CHECK(Rational(big).str() == "123456789012345678");
  CHECK(int_from_ll(-big).get_str() == "-123456789012345678");
}

TEST_CASE("division by zero is an error") {
  CHECK_THROWS_AS(Rational(1) / Rational(0), Error);
  CHECK_THROWS_AS(Rational(Int(1), Int(0)), Error);
  try {
    Rational(1) / Rational(0);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BadInput);
  }
}

TEST_CASE("parse round-trips str") {
  for (const char* s : {"0", "1", "-3", "7/2", "-5/6", "123456789/2"}) {
    CHECK(parse_rational(s).str() == s);
  }
  CHECK(parse_rational("+1/4") == Rational(1, 4));
  CHECK(parse_rational("4/8") == Rational(1, 2));
  for (const char* s : {"", "x", "1/", "/2", "1/0", "1.5", "2/-3", "--1"}) {
    CHECK_THROWS_AS(parse_rational(s), Error);
  }
}
