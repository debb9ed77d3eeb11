#include "doctest.h"
#include "platfill/report.hpp"

using namespace platfill;

TEST_SUITE("report") {
  TEST_CASE("trefoil report") {
    const auto r = analyze(parse_tuple("[3]"));
    const auto j = to_json(r);
    CHECK(j["tuple"] == "[3]");
    CHECK(j["totals"]["crossings"] == 3);
    CHECK(j["classical"]["tb"] == 1);
    CHECK(j["classical"]["rotation"] == 0);
    CHECK(j["rulings"]["count"] == 3);
    CHECK(j["augmentations"]["count"] == 5);
    CHECK(j["augmentations"]["dims"] == Json::parse("[[2,1]]"));
    CHECK(j["fillability"]["band_criterion"]["fillable"] == true);
    CHECK(j["consistent"] == true);
    CHECK(j["transcripts"]["filling"]["accounting"]["zero_handles"] == 2);
    CHECK(j["transcripts"]["positivity"]["steps"].empty());
  }

  TEST_CASE("differential schema: words plus explicit constant") {
    const auto j = to_json(analyze(parse_tuple("[3]")));
    const auto& c1 = j["dga"]["differential"]["c1"];
    CHECK(c1["constant"] == true);
    CHECK(c1["words"] == Json::parse(R"([["a1"],["a3"],["a1","a2","a3"]])"));
    CHECK(j["dga"]["differential"]["a1"]["constant"] == false);
    CHECK(j["dga"]["differential"]["a1"]["words"].empty());
  }

  TEST_CASE("json output is deterministic") {
    const auto t = parse_tuple("[1,(2,1),1]");
    CHECK(to_json(analyze(t)).dump() == to_json(analyze(t)).dump());
  }

  TEST_CASE("no-transcripts drops transcripts but keeps the verdict") {
    const auto r = analyze(parse_tuple("[3]"), false);
    const auto j = to_json(r);
    CHECK(j["transcripts"].is_null());
    CHECK(j["consistent"] == true);
    CHECK_FALSE(r.filling.has_value());
  }

  TEST_CASE("figure tuple report") {
    const auto r = analyze(parse_tuple("[3,(6,2),2,(2,0),4]"));
    const auto j = to_json(r);
    CHECK(j["tuple"] == "[3,(6,2),2,(2,0),4]");
    CHECK(j["totals"]["crossings"] == 19);
    CHECK(j["fillability"]["band_criterion"]["fillable"] == false);
    CHECK(j["transcripts"]["filling"].is_null());
    CHECK(r.consistent);
  }

  TEST_CASE("links carry no classical invariants") {
    const auto j = to_json(analyze(parse_tuple("[2]")));
    CHECK(j["classical"].is_null());
    CHECK(j["fillability"]["band_criterion"].is_null());
    CHECK(j["totals"]["components"] == 2);
  }

  TEST_CASE("text view") {
    const auto s = to_text(analyze(parse_tuple("[3]")));
    CHECK(s.find("dc1 = 1 + a1 + a3 + a1a2a3") != std::string::npos);
    CHECK(s.find("augmentations 5 dims(2,1)") != std::string::npos);
    CHECK(s.find("fillable     yes") != std::string::npos);
  }
}
