#pragma once

#include <vector>

#include "platfill/plat_tuple.hpp"

namespace platfill {

/// Every canonical tuple with at most `max_crossings` crossings, each once,
/// ordered by total crossings, then band count, then lexicographically.
std::vector<PlatTuple> enumerate_tuples(int max_crossings, bool knots_only = false);

}  // namespace platfill
