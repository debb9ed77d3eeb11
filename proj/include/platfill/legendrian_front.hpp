#pragma once

#include <optional>
#include <string>
#include <vector>

#include "platfill/front.hpp"

namespace platfill {

/// One x-event of a general front. Slots are 1-based in the slice just before
/// the event for crossings and right cusps; a left cusp at slot k creates the
/// strands at slots k and k+1 of the slice after it.
struct Event {
  enum class Type { LeftCusp, Crossing, RightCusp };
  Type type = Type::Crossing;
  int slot = 1;
  /// Left cusps only: direction of the upper branch (the lower one runs the
  /// other way).
  Dir upper = Dir::R;

  static Event left(int k, Dir upper) { return {Type::LeftCusp, k, upper}; }
  static Event cross(int k) { return {Type::Crossing, k, Dir::R}; }
  static Event right(int k) { return {Type::RightCusp, k, Dir::R}; }

  int strand_delta() const { return type == Type::LeftCusp ? 2 : type == Type::RightCusp ? -2 : 0; }
  std::string to_string() const;
  friend bool operator==(const Event& a, const Event& b) {
    return a.type == b.type && a.slot == b.slot && (a.type != Type::LeftCusp || a.upper == b.upper);
  }
};

using EventWord = std::vector<Event>;

std::string to_string(const EventWord& w);

/// An oriented front given as an event word. Orientation travels with the
/// left cusps; it is coherent iff every right cusp joins opposite directions.
class LegendrianFront {
 public:
  LegendrianFront() = default;
  explicit LegendrianFront(EventWord events) : events_(std::move(events)) {}

  /// L(1) L(3) crossings R(3) R(1) with cusp directions from `s`.
  static LegendrianFront from_plat(const FrontDiagram& f, const OrientationState& s);

  const EventWord& events() const { return events_; }
  EventWord& events() { return events_; }
  std::size_t size() const { return events_.size(); }
  bool empty() const { return events_.empty(); }

  /// Strand count of the slice before event i (i == size() gives the end).
  int strands_before(std::size_t i) const;

  /// Empty if well formed and coherently oriented; otherwise the first problem.
  std::optional<std::string> check() const;

  /// Directions of the strands in the slice before event i.
  std::vector<Dir> slice(std::size_t i) const;

  int crossing_count() const;
  int right_cusp_count() const;
  int writhe() const;
  int tb() const { return writhe() - right_cusp_count(); }
  int component_count() const;

  LegendrianFront reversed() const;

  friend bool operator==(const LegendrianFront&, const LegendrianFront&) = default;

 private:
  EventWord events_;
};

/// Legendrian Reidemeister moves in the front, plus reordering of adjacent
/// events that touch disjoint strands.
enum class IsotopyTag { Commute, R1, R2, R3 };
std::string to_string(IsotopyTag t);

/// True iff replacing `before` by `after` (in either direction) is an instance
/// of the tagged local move. Commute is checked against `commute()`.
bool is_isotopy_instance(IsotopyTag tag, const EventWord& before, const EventWord& after,
                         int strands);

/// The two events in swapped order with slots adjusted, or empty if they
/// touch a common strand. `strands` is the count before the pair.
std::optional<EventWord> commute(const Event& first, const Event& second, int strands);

}  // namespace platfill
