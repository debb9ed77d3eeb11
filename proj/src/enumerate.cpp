#include "platfill/enumerate.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "platfill/front.hpp"

namespace platfill {

std::vector<PlatTuple> enumerate_tuples(int max_crossings, bool knots_only) {
  if (max_crossings < 1) throw std::invalid_argument("max_crossings must be >= 1");
  std::vector<PlatTuple> out;
  std::vector<Band> cur;
  std::function<void(int)> extend = [&](int budget) {
    // cur has odd length here and ends with a center band.
    out.emplace_back(cur);
    // Append a side band and a center band: at least 2 more crossings.
    for (int side = 1; side + 1 <= budget; ++side) {
      for (int u = 0; u <= side; ++u) {
        cur.push_back(Band::make_side(u, side - u));
        for (int c = 1; side + c <= budget; ++c) {
          cur.push_back(Band::make_center(c));
          extend(budget - side - c);
          cur.pop_back();
        }
        cur.pop_back();
      }
    }
  };
  for (int c = 1; c <= max_crossings; ++c) {
    cur.assign(1, Band::make_center(c));
    extend(max_crossings - c);
  }
  if (knots_only) {
    std::erase_if(out, [](const PlatTuple& t) { return component_count(build_front(t)) != 1; });
  }
  std::sort(out.begin(), out.end(), [](const PlatTuple& a, const PlatTuple& b) {
    if (a.total_crossings() != b.total_crossings()) return a.total_crossings() < b.total_crossings();
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

}  // namespace platfill
