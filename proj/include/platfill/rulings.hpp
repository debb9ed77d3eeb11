#pragma once

#include <array>
#include <vector>

#include "platfill/front.hpp"

namespace platfill {

/// Companion slot (1-based) of each slot; {2,1,4,3} is the cusp pairing 12|34.
using Matching = std::array<int, 4>;

inline constexpr Matching kCuspMatching{2, 1, 4, 3};

/// A normal ruling, identified by its switched crossings (1-based x-order,
/// ascending).
struct Ruling {
  std::vector<int> switches;
  friend bool operator==(const Ruling&, const Ruling&) = default;
  friend auto operator<=>(const Ruling&, const Ruling&) = default;
};

/// A switch at a crossing on slots (k,k+1) is normal iff the companion
/// intervals {k,c(k)} and {k+1,c(k+1)} are disjoint or nested.
bool switch_is_normal(const Matching& m, int slot);

/// All normal rulings, sorted by switch set.
std::vector<Ruling> enumerate_rulings(const FrontDiagram& f);

bool has_normal_ruling(const FrontDiagram& f);

/// Mod-2 graded: every switch sits at a degree-0 (positive) crossing.
bool is_graded(const Ruling& r, const std::vector<int>& signs);
bool has_graded_ruling(const std::vector<Ruling>& rulings, const std::vector<int>& signs);

}  // namespace platfill
