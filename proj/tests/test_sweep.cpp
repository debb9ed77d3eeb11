#include "doctest.h"
#include "platfill/sweep.hpp"

using namespace platfill;

TEST_SUITE("sweep") {
  TEST_CASE("small sweep is clean") {
    const auto s = crosscheck(3);
    CHECK(s.ok());
    CHECK(s.tuples == 5);  // [1] [2] [3] [1,(1,0),1] [1,(0,1),1]
    CHECK(to_text(s).find("0 discrepancies") != std::string::npos);
  }

  TEST_CASE("result does not depend on the number of threads") {
    const auto serial = crosscheck_serial(8);
    CHECK(serial.ok());
    for (int threads : {1, 2, 4, 0}) CHECK(crosscheck(8, threads) == serial);
  }

  TEST_CASE("single tuple checks") {
    const auto c = check_tuple(parse_tuple("[3]"));
    CHECK(c.knot);
    CHECK(c.band_fillable);
    CHECK(c.battery_clear);
    CHECK(c.builder_ok);
    CHECK(c.problems.empty());
    const auto n = check_tuple(parse_tuple("[1,(1,0),1]"));
    CHECK_FALSE(n.band_fillable);
    CHECK_FALSE(n.battery_clear);
    CHECK_FALSE(n.builder_ok);
    CHECK(n.problems.empty());
  }
}
