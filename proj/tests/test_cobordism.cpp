#include "doctest.h"
#include "platfill/cobordism.hpp"
#include "platfill/enumerate.hpp"
#include "platfill/fillability.hpp"

using namespace platfill;

TEST_SUITE("cobordism") {
  TEST_CASE("trefoil: two 0-handles and three crossing 1-handles") {
    const auto t = parse_tuple("[3]");
    const auto tr = build_filling(t);
    CHECK(tr.accounting.zero_handles == 2);
    CHECK(tr.accounting.one_handles == 3);
    CHECK(tr.accounting.euler_characteristic == -1);
    CHECK(tr.moves.size() == 5);
    for (std::size_t i = 2; i < 5; ++i) CHECK(tr.moves[i].site == Move::Site::CrossingInsertion);
    CHECK(validate_transcript(tr, t).ok);
    CHECK(tr.frames().size() == 6);
  }

  TEST_CASE("[1,(2,1),1] is filled by a disk") {
    const auto t = parse_tuple("[1,(2,1),1]");
    const auto tr = build_filling(t);
    CHECK(tr.accounting.euler_characteristic == 1);
    CHECK(tr.accounting.one_handles - tr.accounting.zero_handles == -1);
    CHECK(validate_transcript(tr, t).ok);
  }

  TEST_CASE("two-piece construction merges cusps") {
    const auto t = parse_tuple("[1,(1,1),2,(0,2),1]");
    const auto tr = build_filling(t);
    int merges = 0;
    for (const auto& m : tr.moves) merges += m.site == Move::Site::CuspMerge;
    CHECK(merges == 2);
    CHECK(tr.accounting.zero_handles == 4);
    CHECK(validate_transcript(tr, t).ok);
  }

  TEST_CASE("non-fillable tuples are rejected") {
    CHECK_THROWS_AS(build_filling(parse_tuple("[3,(6,2),2,(2,0),4]")), NotFillableError);
    CHECK_THROWS_AS(build_filling(parse_tuple("[1,(1,0),1]")), NotFillableError);
    // A two-component link without alternating signs.
    CHECK_THROWS_AS(build_filling(parse_tuple("[2]")), NotFillableError);
  }

  TEST_CASE("orientation-incompatible 1-handle is invalid") {
    const auto t = parse_tuple("[3]");
    auto tr = build_filling(t);
    // Flip the second eye so the strands at slot 2 run opposite ways.
    auto& eye = tr.moves[1].after[0];
    eye.upper = flip(eye.upper);
    const auto c = validate_transcript(tr, t);
    CHECK_FALSE(c.ok);
    REQUIRE(c.failed_move.has_value());
    CHECK(*c.failed_move == 2);
    CHECK(c.message.find("incompatible") != std::string::npos);
  }

  TEST_CASE("accounting that contradicts tb is invalid") {
    const auto t = parse_tuple("[3]");
    auto tr = build_filling(t);
    tr.accounting.zero_handles += 1;
    tr.accounting.euler_characteristic += 1;
    CHECK_FALSE(validate_transcript(tr, t).ok);
  }

  TEST_CASE("a transcript for another front is invalid") {
    const auto tr = build_filling(parse_tuple("[3]"));
    const auto c = validate_transcript(tr, parse_tuple("[5]"));
    CHECK_FALSE(c.ok);
    CHECK_FALSE(c.failed_move.has_value());
  }

  TEST_CASE("a fake isotopy is caught") {
    const auto t = parse_tuple("[1,(2,1),1]");
    auto tr = build_filling(t);
    for (auto& m : tr.moves)
      if (m.kind == Move::Kind::Isotopy) {
        m.tag = IsotopyTag::R3;
        break;
      }
    CHECK_FALSE(validate_transcript(tr, t).ok);
  }

  TEST_CASE("builder succeeds exactly on fillable knots, with tb = 1-handles - 0-handles") {
    for (const auto& t : enumerate_tuples(10, true)) {
      const bool fillable = theorem1_verdict(t).fillable;
      INFO(t.to_string());
      if (!fillable) {
        CHECK_THROWS_AS(build_filling(t), NotFillableError);
        continue;
      }
      const auto tr = build_filling(t);
      CHECK(validate_transcript(tr, t).ok);
      const int tb = classical_invariants(build_front(t)).tb;
      CHECK(tr.accounting.one_handles - tr.accounting.zero_handles == tb);
      CHECK(tr.accounting.euler_characteristic == -tb);
    }
  }

  TEST_CASE("links meeting the band conditions are filled too") {
    int filled = 0;
    for (const auto& t : enumerate_tuples(8)) {
      if (component_count(build_front(t)) == 1) continue;
      try {
        const auto tr = build_filling(t);
        CHECK(validate_transcript(tr, t).ok);
        ++filled;
      } catch (const NotFillableError&) {
      }
    }
    CHECK(filled > 0);
  }

  TEST_CASE("move descriptions") {
    CHECK(Move::zero_handle(0, 1, Dir::R).describe() == "0-handle @0: - -> L1R R1");
    CHECK(Move::cusp_merge(7, 3, Dir::L).describe() == "1-handle (cusp-merge) @7: R3 L3L -> -");
  }
}
