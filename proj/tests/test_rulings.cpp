#include "doctest.h"
#include "oracles.hpp"
#include "platfill/enumerate.hpp"
#include "platfill/rulings.hpp"

using namespace platfill;

namespace {

std::vector<std::vector<int>> switch_sets(const std::vector<Ruling>& rs) {
  std::vector<std::vector<int>> out;
  for (const auto& r : rs) out.push_back(r.switches);
  return out;
}

}  // namespace

TEST_SUITE("rulings") {
  TEST_CASE("trefoil has three rulings") {
    const auto rs = enumerate_rulings(build_front(parse_tuple("[3]")));
    CHECK(switch_sets(rs) == std::vector<std::vector<int>>{{1}, {1, 2, 3}, {3}});
  }

  TEST_CASE("[1,(1,0),1] has no ruling") {
    CHECK(enumerate_rulings(build_front(parse_tuple("[1,(1,0),1]"))).empty());
    CHECK_FALSE(has_normal_ruling(build_front(parse_tuple("[1,(1,0),1]"))));
  }

  TEST_CASE("normality table on the cusp matching") {
    // 12|34: a switch at slot 2 joins disks [1,2] and [3,4], disjoint.
    CHECK(switch_is_normal(kCuspMatching, 2));
    // 14|23: slot 1 has disks [1,4] and [2,3], nested.
    CHECK(switch_is_normal({4, 3, 2, 1}, 1));
    // 13|24: slot 2 has disks [2,4] and [1,3], interlaced.
    CHECK_FALSE(switch_is_normal({3, 4, 1, 2}, 2));
  }

  TEST_CASE("enumeration agrees with the path oracle") {
    for (const auto& t : enumerate_tuples(9)) {
      const auto f = build_front(t);
      INFO(t.to_string());
      CHECK(switch_sets(enumerate_rulings(f)) == oracle::rulings(f));
    }
  }

  TEST_CASE("graded rulings switch only at positive crossings") {
    const std::vector<int> signs{1, -1, 1};
    CHECK(is_graded(Ruling{{1, 3}}, signs));
    CHECK_FALSE(is_graded(Ruling{{1, 2, 3}}, signs));
    CHECK(has_graded_ruling({Ruling{{2}}, Ruling{{3}}}, signs));
    CHECK_FALSE(has_graded_ruling({Ruling{{2}}}, signs));
  }
}
