#include "doctest.h"
#include "halinbox/interval.hpp"

using namespace halinbox;

TEST_CASE("half-integer decimal rendering") {
  CHECK(Half::whole(4).to_decimal() == "4");
  CHECK(Half::from_halves(3).to_decimal() == "1.5");
  CHECK(Half::from_halves(1).to_decimal() == "0.5");
  CHECK(Half::from_halves(-1).to_decimal() == "-0.5");
  CHECK(Half::from_halves(-3).to_decimal() == "-1.5");
  CHECK(Half::whole(0).to_decimal() == "0");
}

TEST_CASE("half-integer parsing") {
  for (std::int64_t h = -9; h <= 9; ++h) {
    auto text = Half::from_halves(h).to_decimal();
    REQUIRE(Half::parse_decimal(text).has_value());
    CHECK(Half::parse_decimal(text)->halves() == h);
  }
  CHECK(Half::parse_decimal("2.50")->halves() == 5);
  CHECK(Half::parse_decimal("3.0")->halves() == 6);
  CHECK_FALSE(Half::parse_decimal("0.25"));
  CHECK_FALSE(Half::parse_decimal("1.05"));
  CHECK_FALSE(Half::parse_decimal(""));
  CHECK_FALSE(Half::parse_decimal("-"));
  CHECK_FALSE(Half::parse_decimal(".5"));
  CHECK_FALSE(Half::parse_decimal("x"));
}

TEST_CASE("closed interval overlap") {
  CHECK(interval(0, 1).overlaps(interval(1, 2)));
  CHECK_FALSE(interval(0, 1).overlaps(interval(2, 3)));
  CHECK(interval(2, 2).overlaps(interval(1, 4)));
  CHECK_FALSE(interval(4, 4).overlaps(interval(0, 1)));
  Interval a{Half::from_halves(1), Half::from_halves(3)};
  Interval b{Half::from_halves(3), Half::from_halves(5)};
  CHECK(a.overlaps(b));
  CHECK(interval(0, 4).contains(a));
  CHECK(a.contains(Half::whole(1)));
}
