#include "doctest.h"
#include "platfill/cobordism.hpp"
#include "platfill/enumerate.hpp"
#include "platfill/fillability.hpp"
#include "platfill/positivity.hpp"

using namespace platfill;

TEST_SUITE("positivity") {
  TEST_CASE("positive knot needs no steps") {
    const auto t = parse_tuple("[3]");
    const auto tr = reduce_to_positive(t);
    CHECK(tr.steps.empty());
    CHECK(tr.final_crossings().size() == 3);
    CHECK(validate_positivity(tr, t).ok);
  }

  TEST_CASE("[1,(2,1),1]: two R2 removals") {
    const auto t = parse_tuple("[1,(2,1),1]");
    const auto tr = reduce_to_positive(t);
    REQUIRE(tr.steps.size() == 2);
    for (const auto& s : tr.steps) {
      CHECK(s.kind == P4PStep::Kind::R2Removal);
      CHECK_FALSE(s.tag.has_value());
    }
    const auto fin = tr.final_crossings();
    CHECK(fin.size() == 3);
    for (const auto& c : fin) CHECK(c.sign > 0);
    CHECK(validate_positivity(tr, t).ok);
  }

  TEST_CASE("middle step case tags") {
    const std::pair<const char*, P4PCase> cases[] = {
        {"[1,(0,2),2]", P4PCase::SideDouble},
        {"[1,(1,1),2]", P4PCase::SplitDouble},
        {"[1,(0,2),2,(0,3),1]", P4PCase::CenterSameSide},
        {"[1,(0,2),2,(1,2),1]", P4PCase::CenterOppositeSide},
    };
    for (const auto& [text, tag] : cases) {
      const auto t = parse_tuple(text);
      const auto tr = reduce_to_positive(t);
      INFO(text);
      int middle = 0;
      for (const auto& s : tr.steps)
        if (s.kind == P4PStep::Kind::Middle) {
          ++middle;
          CHECK(s.removed.size() == 2);
          CHECK(s.tag == tag);
        }
      CHECK(middle == 1);
      CHECK(validate_positivity(tr, t).ok);
    }
  }

  TEST_CASE("rejects links and non-fillable knots") {
    CHECK_THROWS_AS(reduce_to_positive(parse_tuple("[2]")), NotAKnotError);
    CHECK_THROWS_AS(reduce_to_positive(parse_tuple("[1,(1,0),1]")), NotFillableError);
  }

  TEST_CASE("tampered steps are caught") {
    const auto t = parse_tuple("[1,(2,1),1]");
    auto tr = reduce_to_positive(t);
    auto bad = tr;
    bad.steps[0].after.push_back(bad.steps[0].removed[0]);
    CHECK_FALSE(validate_positivity(bad, t).ok);
    bad = tr;
    bad.steps.pop_back();
    CHECK_FALSE(validate_positivity(bad, t).ok);  // a negative remains
    bad = tr;
    bad.steps[0].kind = P4PStep::Kind::Middle;
    CHECK_FALSE(validate_positivity(bad, t).ok);
  }

  TEST_CASE("every fillable knot up to 10 crossings reduces to a positive diagram") {
    for (const auto& t : enumerate_tuples(10, true)) {
      if (!theorem1_verdict(t).fillable) continue;
      const auto tr = reduce_to_positive(t);
      INFO(t.to_string());
      CHECK(validate_positivity(tr, t).ok);
      CHECK(tr.steps.size() <= static_cast<std::size_t>(t.total_crossings()));
      int prev = tr.steps.empty() ? 0 : tr.steps.front().negatives_before();
      for (const auto& s : tr.steps) {
        CHECK(s.negatives_before() == prev);
        CHECK(s.negatives_after() < s.negatives_before());
        prev = s.negatives_after();
      }
      CHECK(prev == 0);
    }
  }
}
