#pragma once

// Brute-force reimplementations used as independent references in tests.

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <vector>

#include "platfill/dga.hpp"
#include "platfill/front.hpp"

namespace oracle {

/// Components by union-find over strand ends: left cusps join slots (1,2),
/// (3,4) at the left end, right cusps join them at the right end.
inline int components(const platfill::FrontDiagram& f) {
  std::array<int, 8> parent;
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int a) {
    while (parent[a] != a) a = parent[a];
    return a;
  };
  auto join = [&](int a, int b) { parent[find(a)] = find(b); };
  std::array<int, 4> at{0, 1, 2, 3};  // strand id at each slot
  for (const auto& c : f.crossings) std::swap(at[c.slot - 1], at[c.slot]);
  join(0, 1);
  join(2, 3);
  // right end k of strand s is node 4+k; every strand joins its ends.
  for (int k = 0; k < 4; ++k) join(at[k], 4 + k);
  join(4, 5);
  join(6, 7);
  int n = 0;
  for (int i = 0; i < 8; ++i) n += find(i) == i;
  return n;
}

/// Normal rulings by trying every switch subset and following the four
/// ruling paths from the left cusps. Returns 1-based switch sets.
inline std::vector<std::vector<int>> rulings(const platfill::FrontDiagram& f) {
  const std::size_t n = f.size();
  std::vector<std::vector<int>> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    // path p sits at slot pos[p]; companions are p^1.
    std::array<int, 4> pos{1, 2, 3, 4};
    auto path_at = [&](int slot) {
      return static_cast<int>(std::find(pos.begin(), pos.end(), slot) - pos.begin());
    };
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      const int k = f.crossings[i].slot;
      const int p = path_at(k), q = path_at(k + 1);
      if ((p ^ 1) == q) {
        ok = false;  // companion paths only meet at cusps
        break;
      }
      if (mask >> i & 1) {
        // Paths stay on their slots. Normality: the two disks are disjoint
        // or nested in the slice.
        const int a0 = std::min(k, pos[p ^ 1]), a1 = std::max(k, pos[p ^ 1]);
        const int b0 = std::min(k + 1, pos[q ^ 1]), b1 = std::max(k + 1, pos[q ^ 1]);
        const bool disjoint = a1 < b0 || b1 < a0;
        const bool nested = (a0 < b0 && b1 < a1) || (b0 < a0 && a1 < b1);
        ok = disjoint || nested;
      } else {
        std::swap(pos[p], pos[q]);
      }
    }
    if (!ok) continue;
    // Right cusps close slots (1,2) and (3,4).
    if ((path_at(1) ^ 1) != path_at(2) || (path_at(3) ^ 1) != path_at(4)) continue;
    std::vector<int> s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) s.push_back(static_cast<int>(i) + 1);
    out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Augmentations by trying every 0/1 assignment on all generators and
/// keeping the graded ones that kill every differential.
inline std::vector<std::string> augmentations(const platfill::Differential& d) {
  const std::size_t n = d.gens.size();
  std::vector<std::string> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    bool ok = true;
    for (std::size_t g = 0; g < n && ok; ++g)
      if ((mask >> g & 1) && d.gens[g].degree != 0) ok = false;
    for (std::size_t g = 0; g < n && ok; ++g) {
      int sum = 0;
      for (const auto& w : d.d[g].terms()) {
        int prod = 1;
        for (int x : w) prod &= static_cast<int>(mask >> x & 1);
        sum ^= prod;
      }
      ok = sum == 0;
    }
    if (!ok) continue;
    std::string bits;
    for (std::size_t g = 0; g < n; ++g) bits.push_back((mask >> g & 1) ? '1' : '0');
    out.push_back(bits);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Rank over GF(2) of a small matrix given as rows of 0/1.
inline int rank(std::vector<std::vector<int>> m) {
  int r = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols; ++c) {
    std::size_t piv = static_cast<std::size_t>(r);
    while (piv < m.size() && !m[piv][c]) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[static_cast<std::size_t>(r)]);
    for (std::size_t i = 0; i < m.size(); ++i)
      if (i != static_cast<std::size_t>(r) && m[i][c])
        for (std::size_t j = 0; j < cols; ++j) m[i][j] ^= m[static_cast<std::size_t>(r)][j];
    ++r;
  }
  return r;
}

/// Number of canonical tuples with exactly n crossings, from the recurrence
/// over the last center band (center weight w: 1 way; side weight w: w+1).
inline std::vector<long long> tuple_counts(int max_n) {
  std::vector<long long> ends_center(static_cast<std::size_t>(max_n) + 1, 0);
  for (int n = 1; n <= max_n; ++n) {
    long long v = 1;  // a single center band
    for (int c = 1; c < n; ++c)
      for (int s = 1; c + s < n; ++s) v += ends_center[static_cast<std::size_t>(n - c - s)] * (s + 1);
    ends_center[static_cast<std::size_t>(n)] = v;
  }
  return ends_center;
}

}  // namespace oracle
