#include "platfill/rulings.hpp"

#include <algorithm>

namespace platfill {

bool switch_is_normal(const Matching& m, int slot) {
  const int a = slot, b = slot + 1;
  const int a_lo = std::min(a, m[a - 1]), a_hi = std::max(a, m[a - 1]);
  const int b_lo = std::min(b, m[b - 1]), b_hi = std::max(b, m[b - 1]);
  const bool disjoint = a_hi < b_lo || b_hi < a_lo;
  const bool nested = (a_lo < b_lo && b_hi < a_hi) || (b_lo < a_lo && a_hi < b_hi);
  return disjoint || nested;
}

namespace {

Matching conjugate(Matching m, int slot) {
  // Relabel slots k <-> k+1 on both sides of the pairing.
  auto swap_label = [slot](int s) { return s == slot ? slot + 1 : (s == slot + 1 ? slot : s); };
  Matching out{};
  for (int s = 1; s <= 4; ++s) out[swap_label(s) - 1] = swap_label(m[s - 1]);
  return out;
}

void sweep(const FrontDiagram& f, std::size_t i, const Matching& m, std::vector<int>& switches,
           std::vector<Ruling>& out) {
  if (i == f.crossings.size()) {
    if (m == kCuspMatching) out.push_back(Ruling{switches});
    return;
  }
  const int k = f.crossings[i].slot;
  if (m[k - 1] == k + 1) return;  // two paths of one disk would meet
  sweep(f, i + 1, conjugate(m, k), switches, out);
  if (switch_is_normal(m, k)) {
    switches.push_back(static_cast<int>(i) + 1);
    sweep(f, i + 1, m, switches, out);
    switches.pop_back();
  }
}

}  // namespace

std::vector<Ruling> enumerate_rulings(const FrontDiagram& f) {
  std::vector<Ruling> out;
  std::vector<int> switches;
  sweep(f, 0, kCuspMatching, switches, out);
  std::sort(out.begin(), out.end());
  return out;
}

bool has_normal_ruling(const FrontDiagram& f) { return !enumerate_rulings(f).empty(); }

bool is_graded(const Ruling& r, const std::vector<int>& signs) {
  return std::all_of(r.switches.begin(), r.switches.end(), [&](int x) { return signs.at(x - 1) > 0; });
}

bool has_graded_ruling(const std::vector<Ruling>& rulings, const std::vector<int>& signs) {
  return std::any_of(rulings.begin(), rulings.end(), [&](const Ruling& r) { return is_graded(r, signs); });
}

}  // namespace platfill
