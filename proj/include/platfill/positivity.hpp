#pragma once

#include <optional>
#include <string>
#include <vector>

#include "platfill/plat_tuple.hpp"

namespace platfill {

/// A crossing of the plat front, tracked by its x-order position in the input.
struct SignedCrossing {
  int id = 0;
  int slot = 0;
  int sign = 0;
  friend auto operator<=>(const SignedCrossing&, const SignedCrossing&) = default;
};

enum class P4PCase { SideDouble, SplitDouble, CenterSameSide, CenterOppositeSide };
std::string to_string(P4PCase c);

/// One reduction step. An R2 removal deletes an external negative single; a
/// middle step deletes the two crossings of an internal negative band.
struct P4PStep {
  enum class Kind { R2Removal, Middle };
  Kind kind = Kind::R2Removal;
  std::optional<P4PCase> tag;  // middle steps only
  int band = 0;                // 1-based
  std::vector<SignedCrossing> before, removed, after;

  int negatives_before() const;
  int negatives_after() const;
};

std::string to_string(P4PStep::Kind k);

struct P4PTranscript {
  std::vector<SignedCrossing> initial;
  std::vector<P4PStep> steps;
  std::vector<SignedCrossing> final_crossings() const;
};

/// Throws NotAKnotError for links and NotFillableError when the band criterion
/// fails.
P4PTranscript reduce_to_positive(const PlatTuple& t);

struct P4PCheck {
  bool ok = false;
  std::string message;
};

/// Bookkeeping replay: the initial list is the signed front of `t`, each step
/// removes the stated crossings (one negative for R2, two negatives for a
/// middle step) from the previous list, the negative count strictly drops,
/// there are at most as many steps as crossings, and none remain negative.
P4PCheck validate_positivity(const P4PTranscript& tr, const PlatTuple& t);

}  // namespace platfill
