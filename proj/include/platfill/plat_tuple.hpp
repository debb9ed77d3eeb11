#pragma once

#include <algorithm>
#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace platfill {

/// Malformed tuple text.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Well-formed text that violates a tuple invariant.
class ValidityError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// One band of a 4-plat. Center bands (odd positions) cross the middle two
/// strands; side bands (even positions) split into an upper sub-band on slots
/// 1-2 and a lower sub-band on slots 3-4.
struct Band {
  bool side = false;
  int center = 0;  // center bands only
  int upper = 0;   // side bands only
  int lower = 0;

  static Band make_center(int n) { return Band{false, n, 0, 0}; }
  static Band make_side(int u, int l) { return Band{true, 0, u, l}; }

  int crossings() const { return side ? upper + lower : center; }
  bool split() const { return side && upper > 0 && lower > 0; }
  int longest_sub_band() const { return side ? std::max(upper, lower) : center; }

  friend bool operator==(const Band&, const Band&) = default;
  friend auto operator<=>(const Band&, const Band&) = default;
};

/// Band tuple encoding a plat-form 4-plat front, e.g. [3,(6,2),2,(2,0),4].
class PlatTuple {
 public:
  PlatTuple() = default;
  /// Throws ValidityError unless the band list is canonical.
  explicit PlatTuple(std::vector<Band> bands);

  const std::vector<Band>& bands() const { return bands_; }
  std::size_t size() const { return bands_.size(); }
  const Band& operator[](std::size_t i) const { return bands_[i]; }

  int total_crossings() const;
  /// 0-based band index i is internal iff 0 < i < size-1.
  bool internal(std::size_t i) const { return i > 0 && i + 1 < bands_.size(); }

  std::string to_string() const;

  friend bool operator==(const PlatTuple&, const PlatTuple&) = default;
  friend auto operator<=>(const PlatTuple&, const PlatTuple&) = default;

 private:
  std::vector<Band> bands_;
};

/// Parses `[t1,(u,l),t3,...]`; whitespace is insignificant.
PlatTuple parse_tuple(std::string_view text);

}  // namespace platfill
