#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "platfill/legendrian_front.hpp"
#include "platfill/plat_tuple.hpp"

namespace platfill {

/// Raised by build_filling when the tuple fails the band criterion or the
/// structural conditions the construction relies on.
class NotFillableError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// One step of a decomposable cobordism, read upward from the empty set. Each
/// move replaces `before` by `after` starting at event `index` of the current
/// front.
struct Move {
  enum class Kind { ZeroHandle, OneHandle, Isotopy };
  /// Where a 1-handle acts: a positive crossing appears (inverse of its
  /// oriented resolution), or a right cusp and the next left cusp merge.
  enum class Site { None, CrossingInsertion, CuspMerge };

  Kind kind = Kind::Isotopy;
  Site site = Site::None;
  IsotopyTag tag = IsotopyTag::Commute;  // isotopies only
  std::size_t index = 0;
  EventWord before, after;

  static Move zero_handle(std::size_t index, int slot, Dir upper);
  static Move crossing(std::size_t index, int slot);
  static Move cusp_merge(std::size_t index, int slot, Dir upper);
  static Move isotopy(IsotopyTag tag, std::size_t index, EventWord before, EventWord after);

  std::string describe() const;
};

std::string to_string(Move::Kind k);
std::string to_string(Move::Site s);

struct Accounting {
  int zero_handles = 0;
  int one_handles = 0;
  int euler_characteristic = 0;  // zero_handles - one_handles
};

struct CobordismTranscript {
  std::vector<Move> moves;
  Accounting accounting;

  /// Front before move 0 (empty), after move 0, ..., after the last move.
  std::vector<LegendrianFront> frames() const;
};

Accounting count_handles(const std::vector<Move>& moves);

/// Applies one move, or returns why it is not a valid instance.
std::optional<std::string> apply_move(LegendrianFront& front, const Move& m);

/// Filling of a fillable 4-plat (knot, or link meeting the same band
/// conditions). Throws NotFillableError otherwise.
CobordismTranscript build_filling(const PlatTuple& t);

struct TranscriptCheck {
  bool ok = false;
  std::optional<std::size_t> failed_move;
  std::string message;
};

/// Replays the moves from the empty front, checks each is a valid instance,
/// that the result is the plat front of `t` (either orientation), that the
/// stored accounting matches the moves, and tb = one_handles - zero_handles
/// for knots.
TranscriptCheck validate_transcript(const CobordismTranscript& tr, const PlatTuple& t);

}  // namespace platfill
