#include <regex>

#include "doctest.h"
#include "platfill/render.hpp"

using namespace platfill;

namespace {

std::size_t count(const std::string& s, const std::string& needle) {
  std::size_t n = 0;
  for (auto p = s.find(needle); p != std::string::npos; p = s.find(needle, p + 1)) ++n;
  return n;
}

}  // namespace

TEST_SUITE("render") {
  TEST_CASE("trefoil front has four cusps and three crossings") {
    const auto svg = render_svg(parse_tuple("[3]"));
    CHECK(count(svg, "class=\"cusp") == 4);
    CHECK(count(svg, "class=\"crossing\"") == 3);
    CHECK(svg.find("<title>[3]</title>") != std::string::npos);
    CHECK(crossing_slots_from_svg(svg) == std::vector<int>{2, 2, 2});
  }

  TEST_CASE("transcript has one frame per move plus the empty front") {
    const auto tr = build_filling(parse_tuple("[3]"));
    const auto svg = render_transcript_svg(tr);
    CHECK(count(svg, "class=\"frame\"") == 6);
  }

  TEST_CASE("rendered slots rebuild the tuple") {
    for (const char* s : {"[3,(6,2),2,(2,0),4]", "[1,(2,1),1]", "[2,(0,3),1]"}) {
      const auto t = parse_tuple(s);
      FrontDiagram f;
      for (int slot : crossing_slots_from_svg(render_svg(t))) f.crossings.push_back({slot, 0, 0});
      CHECK(tuple_from_front(f).to_string() == s);
    }
  }

  TEST_CASE("titles are escaped") {
    const auto svg = render_svg(LegendrianFront{}, "a<b & c");
    CHECK(svg.find("a&lt;b &amp; c") != std::string::npos);
  }
}
