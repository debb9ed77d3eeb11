#include "platfill/dga.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace platfill {

std::string Generator::name() const {
  return (kind == GeneratorKind::Crossing ? "a" : "c") + std::to_string(label);
}

std::vector<Generator> generators(const FrontDiagram& f, const OrientationState& s) {
  std::vector<Generator> g;
  const int n = static_cast<int>(f.size());
  for (int i = 0; i < n; ++i)
    g.push_back({GeneratorKind::Crossing, i, s.signs.at(i) > 0 ? 0 : 1, i + 1});
  g.push_back({GeneratorKind::RightCusp, n, 1, 1});
  g.push_back({GeneratorKind::RightCusp, n + 1, 1, 2});
  return g;
}

void Poly::toggle(const Word& w) {
  auto [it, inserted] = terms_.insert(w);
  if (!inserted) terms_.erase(it);
}

void Poly::add(const Poly& p) {
  for (const auto& w : p.terms_) toggle(w);
}

const CornerRule& corner_rule(BoundarySide side, CrossingPosition pos) {
  for (const auto& r : kCornerTable)
    if (r.side == side && r.position == pos) return r;
  throw std::logic_error("no corner rule for this boundary/crossing position");
}

Word DiskWord::word() const {
  Word w;
  w.reserve(corners.size());
  for (const auto& c : corners) w.push_back(c.generator);
  return w;
}

namespace {

struct SweepCorner {
  int x;
  BoundarySide side;
};

struct Sweep {
  const FrontDiagram& f;
  int origin;
  CornerOrder order;
  std::vector<DiskWord>& out;
  std::vector<SweepCorner> corners;

  void emit(int cusp) {
    std::vector<SweepCorner> upper, lower;
    for (const auto& c : corners) (c.side == BoundarySide::Upper ? upper : lower).push_back(c);
    // corners were collected right-to-left
    std::vector<SweepCorner> lower_ltr(lower.rbegin(), lower.rend());
    DiskWord d;
    d.origin = origin;
    d.left_cusp = cusp;
    auto put = [&](const std::vector<SweepCorner>& v) {
      for (const auto& c : v) d.corners.push_back({c.x, c.side});
    };
    if (order == CornerOrder::CounterclockwiseFromOrigin) {
      put(upper);
      put(lower_ltr);
    } else {
      put(lower_ltr);
      put(upper);
    }
    out.push_back(std::move(d));
  }

  void step(int i, int u, int l) {
    if (i < 0) {
      if (u == 1 && l == 2) emit(0);
      if (u == 3 && l == 4) emit(1);
      return;
    }
    const int k = f.crossings[i].slot;
    if (k == u && k + 1 == l) return;  // the two boundaries would meet
    auto take = [&](BoundarySide side, CrossingPosition pos, int pass_u, int pass_l) {
      const CornerRule& rule = corner_rule(side, pos);
      if (rule.pass_through) step(i - 1, pass_u, pass_l);
      if (rule.negative_corner) {
        corners.push_back({i, side});
        step(i - 1, u, l);
        corners.pop_back();
      }
    };
    if (k == u - 1) {
      take(BoundarySide::Upper, CrossingPosition::Above, u - 1, l);
    } else if (k == u) {
      take(BoundarySide::Upper, CrossingPosition::Inside, u + 1, l);
    } else if (k == l) {
      take(BoundarySide::Lower, CrossingPosition::Below, u, l + 1);
    } else if (k + 1 == l) {
      take(BoundarySide::Lower, CrossingPosition::Inside, u, l - 1);
    } else {
      step(i - 1, u, l);  // crossing away from both boundaries
    }
  }
};

}  // namespace

std::vector<DiskWord> enumerate_disks(const FrontDiagram& f, int origin, CornerOrder order) {
  const int n = static_cast<int>(f.size());
  if (origin < 0 || origin >= n + 2) throw std::out_of_range("no such generator");
  std::vector<DiskWord> out;
  Sweep sw{f, origin, order, out, {}};
  if (origin >= n) {
    out.push_back(DiskWord{origin, {}, std::nullopt});
    const int top = origin == n ? 1 : 3;
    sw.step(n - 1, top, top + 1);
  } else {
    const int k = f.crossings[origin].slot;
    sw.step(origin - 1, k, k + 1);
  }
  return out;
}

std::size_t Differential::crossing_count() const { return gens.size() - 2; }

std::string Differential::word_string(const Word& w) const {
  if (w.empty()) return "1";
  std::string s;
  for (int g : w) s += gens[g].name();
  return s;
}

std::string Differential::to_string(int g) const {
  if (d[g].empty()) return "0";
  std::vector<std::string> parts;
  for (const auto& w : d[g].terms()) parts.push_back(word_string(w));
  // constant first, then by length, then lexicographic on the printed form
  std::sort(parts.begin(), parts.end(), [](const std::string& a, const std::string& b) {
    if ((a == "1") != (b == "1")) return a == "1";
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  std::ostringstream os;
  for (std::size_t i = 0; i < parts.size(); ++i) os << (i ? " + " : "") << parts[i];
  return os.str();
}

Differential differential(const FrontDiagram& f, const OrientationState& s, CornerOrder order) {
  Differential d;
  d.gens = generators(f, s);
  const int n = static_cast<int>(f.size());
  d.d.resize(d.gens.size());
  for (int g = 0; g < n + 2; ++g) {
    for (const auto& disk : enumerate_disks(f, g, order)) d.d[g].toggle(disk.word());
  }
  return d;
}

Poly apply(const Differential& d, const Word& w) {
  Poly out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (const auto& term : d.d[w[i]].terms()) {
      Word r(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
      r.insert(r.end(), term.begin(), term.end());
      r.insert(r.end(), w.begin() + static_cast<std::ptrdiff_t>(i) + 1, w.end());
      out.toggle(r);
    }
  }
  return out;
}

std::vector<int> d_squared_violations(const Differential& d) {
  std::vector<int> bad;
  for (std::size_t g = 0; g < d.gens.size(); ++g) {
    Poly dd;
    for (const auto& w : d.d[g].terms()) dd.add(apply(d, w));
    if (!dd.empty()) bad.push_back(static_cast<int>(g));
  }
  return bad;
}

int word_degree(const Differential& d, const Word& w) {
  int deg = 0;
  for (int g : w) deg += d.gens[g].degree;
  return deg % 2;
}

std::vector<std::pair<int, Word>> degree_violations(const Differential& d) {
  std::vector<std::pair<int, Word>> bad;
  for (std::size_t g = 0; g < d.gens.size(); ++g) {
    const int want = (d.gens[g].degree + 1) % 2;
    for (const auto& w : d.d[g].terms())
      if (word_degree(d, w) != want) bad.emplace_back(static_cast<int>(g), w);
  }
  return bad;
}

}  // namespace platfill
