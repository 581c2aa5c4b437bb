#include "doctest.h"
#include "efsm/action_codec.hpp"
#include "efsm/error.hpp"

using efsm::ActionCodec;

TEST_CASE("interval encoding with width 0.5 on (-1, 1]") {
  const ActionCodec c(-1.0, 1.0, 0.5);
  CHECK(c.size() == 4);
  CHECK(c.encode(-0.7) == 1);
  CHECK(c.interval(1).first == -1.0);
  CHECK(c.interval(1).second == -0.5);
  // Interior boundaries belong to the lower interval.
  CHECK(c.encode(-0.5) == 1);
  CHECK(c.encode(-0.4999) == 2);
  CHECK(c.encode(1.0) == 4);
  CHECK(c.encode(-1.0) == 1);
}

TEST_CASE("experiment codec has 17 intervals") {
  const ActionCodec c(-2.5, 2.5, 0.3);
  CHECK(c.size() == 17);
  CHECK(c.encode(2.5) == 17);
  CHECK(c.encode(-2.5) == 1);
  CHECK(c.interval(17).second == 2.5);
  for (int r = 1; r <= c.size(); ++r) {
    CHECK(c.encode(c.midpoint(r)) == r);
    CHECK(c.contains(r, c.midpoint(r)));
  }
}

TEST_CASE("out-of-range actions are clamped") {
  const ActionCodec c(-2.5, 2.5, 0.3);
  CHECK(c.encode(-9.0) == 1);
  CHECK(c.encode(9.0) == 17);
}

TEST_CASE("intervals tile (lo, hi] without gaps") {
  const ActionCodec c(-2.5, 2.5, 0.3);
  for (int r = 1; r < c.size(); ++r) CHECK(c.interval(r).second == c.interval(r + 1).first);
}

TEST_CASE("exact multiple of the width does not add an empty interval") {
  const ActionCodec c(0.0, 1.0, 0.1);
  CHECK(c.size() == 10);
}

TEST_CASE("invalid codecs are rejected") {
  CHECK_THROWS_AS(ActionCodec(1.0, 1.0, 0.1), efsm::Error);
  CHECK_THROWS_AS(ActionCodec(0.0, 1.0, 0.0), efsm::Error);
  CHECK_THROWS_AS(ActionCodec(0.0, 1.0, -1.0), efsm::Error);
}
