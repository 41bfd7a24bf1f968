#include <catch2/catch_amalgamated.hpp>

#include "breitrabi/half_integer.hpp"

using namespace breitrabi;

TEST_CASE("half integer arithmetic stays exact") {
  const auto three_halves = HalfInteger::from_twice(3);
  CHECK(three_halves.value() == 1.5);
  CHECK(three_halves.is_integer() == false);
  CHECK((three_halves + kSpinHalf).twice() == 4);
  CHECK((three_halves - kSpinHalf).value() == 1.0);
  CHECK((-three_halves).twice() == -3);
  CHECK(HalfInteger::from_int(-2).value() == -2.0);
  CHECK(three_halves > kSpinHalf);
}

TEST_CASE("projection validity") {
  const auto j = HalfInteger::from_twice(3);  // 3/2
  CHECK(is_valid_projection(j, HalfInteger::from_twice(3)));
  CHECK(is_valid_projection(j, HalfInteger::from_twice(-1)));
  CHECK_FALSE(is_valid_projection(j, HalfInteger::from_twice(5)));
  // integer m is not a projection of a half-integer j
  CHECK_FALSE(is_valid_projection(j, HalfInteger::from_int(1)));
  CHECK_FALSE(is_valid_projection(HalfInteger::from_twice(-1), kSpinHalf));
}

TEST_CASE("projections run from j down to -j") {
  const auto ms = projections(HalfInteger::from_twice(3));
  REQUIRE(ms.size() == 4);
  CHECK(ms.front().twice() == 3);
  CHECK(ms.back().twice() == -3);
  CHECK(ms[1].twice() == 1);
  CHECK_THROWS_AS(projections(HalfInteger::from_twice(-1)), std::invalid_argument);
}

TEST_CASE("rendering") {
  CHECK(to_string(HalfInteger::from_twice(3)) == "3/2");
  CHECK(to_string(HalfInteger::from_twice(-1)) == "-1/2");
  CHECK(to_string(HalfInteger::from_int(2)) == "2");
  CHECK(to_string(HalfInteger{}) == "0");
}
