#include "platfill/legendrian_front.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace platfill {

std::string Event::to_string() const {
  switch (type) {
    case Type::LeftCusp:
      return "L" + std::to_string(slot) + static_cast<char>(upper);
    case Type::Crossing:
      return "X" + std::to_string(slot);
    case Type::RightCusp:
      return "R" + std::to_string(slot);
  }
  return "?";
}

std::string to_string(const EventWord& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? " " : "") + w[i].to_string();
  return s;
}

LegendrianFront LegendrianFront::from_plat(const FrontDiagram& f, const OrientationState& s) {
  EventWord w;
  const auto& first = s.words.front();
  w.push_back(Event::left(1, first[0]));
  w.push_back(Event::left(3, first[2]));
  for (const auto& c : f.crossings) w.push_back(Event::cross(c.slot));
  w.push_back(Event::right(3));
  w.push_back(Event::right(1));
  return LegendrianFront(std::move(w));
}

int LegendrianFront::strands_before(std::size_t i) const {
  int n = 0;
  for (std::size_t k = 0; k < i && k < events_.size(); ++k) n += events_[k].strand_delta();
  return n;
}

namespace {

bool slot_in_range(const Event& e, int strands) {
  if (e.type == Event::Type::LeftCusp) return e.slot >= 1 && e.slot <= strands + 1;
  return e.slot >= 1 && e.slot + 1 <= strands;
}

void advance(std::vector<Dir>& dirs, const Event& e) {
  const auto k = static_cast<std::size_t>(e.slot - 1);
  switch (e.type) {
    case Event::Type::LeftCusp:
      dirs.insert(dirs.begin() + static_cast<std::ptrdiff_t>(k), {e.upper, flip(e.upper)});
      break;
    case Event::Type::Crossing:
      std::swap(dirs[k], dirs[k + 1]);
      break;
    case Event::Type::RightCusp:
      dirs.erase(dirs.begin() + static_cast<std::ptrdiff_t>(k),
                 dirs.begin() + static_cast<std::ptrdiff_t>(k) + 2);
      break;
  }
}

/// Strand-label simulation used for component counting and for checking
/// that two short event words act identically on the strands.
struct LabelSim {
  std::vector<int> at;
  std::vector<std::pair<int, int>> joins;      // right cusps
  std::vector<std::pair<int, int>> crossings;  // unordered label pairs
  std::vector<std::pair<int, int>> births;     // left cusps

  explicit LabelSim(int strands) : at(static_cast<std::size_t>(strands)) {
    std::iota(at.begin(), at.end(), 0);
  }

  /// Returns the labels the event touches, or empty optional if out of range.
  std::optional<std::vector<int>> apply(const Event& e, int new_label) {
    if (!slot_in_range(e, static_cast<int>(at.size()))) return std::nullopt;
    const auto k = static_cast<std::size_t>(e.slot - 1);
    switch (e.type) {
      case Event::Type::LeftCusp:
        at.insert(at.begin() + static_cast<std::ptrdiff_t>(k), {new_label, new_label + 1});
        births.emplace_back(new_label, new_label + 1);
        return std::vector<int>{new_label, new_label + 1};
      case Event::Type::Crossing: {
        auto p = std::minmax(at[k], at[k + 1]);
        crossings.emplace_back(p.first, p.second);
        std::swap(at[k], at[k + 1]);
        return std::vector<int>{at[k], at[k + 1]};
      }
      case Event::Type::RightCusp: {
        auto p = std::minmax(at[k], at[k + 1]);
        joins.emplace_back(p.first, p.second);
        at.erase(at.begin() + static_cast<std::ptrdiff_t>(k), at.begin() + static_cast<std::ptrdiff_t>(k) + 2);
        return std::vector<int>{p.first, p.second};
      }
    }
    return std::nullopt;
  }

  bool same_outcome(LabelSim other) const {
    LabelSim me = *this;
    for (auto* s : {&me, &other}) {
      std::sort(s->joins.begin(), s->joins.end());
      std::sort(s->crossings.begin(), s->crossings.end());
    }
    return me.at == other.at && me.joins == other.joins && me.crossings == other.crossings;
  }
};

}  // namespace

std::optional<std::string> LegendrianFront::check() const {
  std::vector<Dir> dirs;
  for (std::size_t i = 0; i < events_.size(); ++i) {
    const Event& e = events_[i];
    if (!slot_in_range(e, static_cast<int>(dirs.size())))
      return "event " + std::to_string(i) + " (" + e.to_string() + ") has slot out of range for " +
             std::to_string(dirs.size()) + " strands";
    if (e.type == Event::Type::RightCusp) {
      const auto k = static_cast<std::size_t>(e.slot - 1);
      if (dirs[k] == dirs[k + 1])
        return "right cusp at event " + std::to_string(i) + " joins strands with the same direction";
    }
    advance(dirs, e);
  }
  if (!dirs.empty()) return "front does not close: " + std::to_string(dirs.size()) + " strands remain";
  return std::nullopt;
}

std::vector<Dir> LegendrianFront::slice(std::size_t i) const {
  std::vector<Dir> dirs;
  for (std::size_t k = 0; k < i && k < events_.size(); ++k) advance(dirs, events_[k]);
  return dirs;
}

int LegendrianFront::crossing_count() const {
  return static_cast<int>(std::count_if(events_.begin(), events_.end(),
                                        [](const Event& e) { return e.type == Event::Type::Crossing; }));
}

int LegendrianFront::right_cusp_count() const {
  return static_cast<int>(std::count_if(events_.begin(), events_.end(),
                                        [](const Event& e) { return e.type == Event::Type::RightCusp; }));
}

int LegendrianFront::writhe() const {
  int w = 0;
  std::vector<Dir> dirs;
  for (const auto& e : events_) {
    if (e.type == Event::Type::Crossing) {
      const auto k = static_cast<std::size_t>(e.slot - 1);
      w += dirs[k] == dirs[k + 1] ? 1 : -1;
    }
    advance(dirs, e);
  }
  return w;
}

int LegendrianFront::component_count() const {
  LabelSim sim(0);
  int label = 0;
  for (const auto& e : events_) {
    sim.apply(e, label);
    label += 2;
  }
  std::vector<int> parent(static_cast<std::size_t>(label));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (auto [a, b] : sim.births) parent[find(a)] = find(b);
  for (auto [a, b] : sim.joins) parent[find(a)] = find(b);
  std::vector<int> roots;
  for (auto [a, b] : sim.births) roots.push_back(find(a));
  std::sort(roots.begin(), roots.end());
  return static_cast<int>(std::unique(roots.begin(), roots.end()) - roots.begin());
}

LegendrianFront LegendrianFront::reversed() const {
  LegendrianFront r = *this;
  for (auto& e : r.events_)
    if (e.type == Event::Type::LeftCusp) e.upper = flip(e.upper);
  return r;
}

std::string to_string(IsotopyTag t) {
  switch (t) {
    case IsotopyTag::Commute: return "commute";
    case IsotopyTag::R1: return "R1";
    case IsotopyTag::R2: return "R2";
    case IsotopyTag::R3: return "R3";
  }
  return "?";
}

namespace {

bool same_labels(std::vector<int> a, std::vector<int> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

}  // namespace

std::optional<EventWord> commute(const Event& first, const Event& second, int strands) {
  constexpr int kFirst = 1000000, kSecond = 2000000;
  LabelSim base(strands);
  auto t1 = base.apply(first, kFirst);
  if (!t1) return std::nullopt;
  auto t2 = base.apply(second, kSecond);
  if (!t2) return std::nullopt;
  for (int a : *t1)
    if (std::find(t2->begin(), t2->end(), a) != t2->end()) return std::nullopt;

  const int max_slot = strands + 4;  // the first event may add two strands
  for (int s2 = 1; s2 <= max_slot; ++s2) {
    Event e2 = second;
    e2.slot = s2;
    LabelSim probe(strands);
    auto u2 = probe.apply(e2, kSecond);
    if (!u2 || !same_labels(*u2, *t2)) continue;
    for (int s1 = 1; s1 <= max_slot; ++s1) {
      Event e1 = first;
      e1.slot = s1;
      LabelSim trial = probe;
      auto u1 = trial.apply(e1, kFirst);
      if (u1 && same_labels(*u1, *t1) && trial.same_outcome(base)) return EventWord{e2, e1};
    }
  }
  return std::nullopt;
}

namespace {

struct Template {
  EventWord longer, shorter;
};

std::vector<Template> templates(IsotopyTag tag, int j, Dir bit) {
  using E = Event;
  switch (tag) {
    case IsotopyTag::R1:
      return {{{E::left(j, bit), E::cross(j + 1), E::right(j)}, {}},
              {{E::left(j + 1, bit), E::cross(j), E::right(j + 1)}, {}}};
    case IsotopyTag::R2:
      return {{{E::left(j, bit), E::cross(j + 1), E::cross(j)}, {E::left(j + 1, bit)}},
              {{E::left(j + 1, bit), E::cross(j), E::cross(j + 1)}, {E::left(j, bit)}},
              {{E::cross(j + 1), E::cross(j), E::right(j + 1)}, {E::right(j)}},
              {{E::cross(j), E::cross(j + 1), E::right(j)}, {E::right(j + 1)}}};
    case IsotopyTag::R3:
      return {{{E::cross(j), E::cross(j + 1), E::cross(j)}, {E::cross(j + 1), E::cross(j), E::cross(j + 1)}}};
    case IsotopyTag::Commute:
      return {};
  }
  return {};
}

}  // namespace

bool is_isotopy_instance(IsotopyTag tag, const EventWord& before, const EventWord& after, int strands) {
  if (tag == IsotopyTag::Commute) {
    if (before.size() != 2 || after.size() != 2) return false;
    auto swapped = commute(before[0], before[1], strands);
    return swapped && *swapped == after;
  }
  for (int j = 1; j <= strands + 2; ++j)
    for (Dir bit : {Dir::L, Dir::R})
      for (const auto& t : templates(tag, j, bit))
        if ((before == t.longer && after == t.shorter) || (before == t.shorter && after == t.longer))
          return true;
  return false;
}

}  // namespace platfill
