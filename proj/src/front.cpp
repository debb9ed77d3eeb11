#include "platfill/front.hpp"

#include <numeric>

namespace platfill {

FrontDiagram build_front(const PlatTuple& t) {
  FrontDiagram f;
  f.band_count = t.size();
  int x = 0;
  auto emit = [&](int slot, int band, int count) {
    for (int k = 0; k < count; ++k) f.crossings.push_back(Crossing{slot, band, x++});
  };
  for (std::size_t i = 0; i < t.size(); ++i) {
    const Band& b = t[i];
    const int bi = static_cast<int>(i);
    if (b.side) {
      emit(1, bi, b.upper);
      emit(3, bi, b.lower);
    } else {
      emit(2, bi, b.center);
    }
  }
  return f;
}

PlatTuple tuple_from_front(const FrontDiagram& f) {
  std::vector<Band> bands;
  std::size_t i = 0;
  const auto& cs = f.crossings;
  while (i < cs.size()) {
    if (cs[i].slot == 2) {
      int n = 0;
      while (i < cs.size() && cs[i].slot == 2) ++n, ++i;
      bands.push_back(Band::make_center(n));
    } else {
      int u = 0, l = 0;
      while (i < cs.size() && cs[i].slot == 1) ++u, ++i;
      while (i < cs.size() && cs[i].slot == 3) ++l, ++i;
      if (i < cs.size() && cs[i].slot != 2) {
        throw ValidityError("front side band is not in canonical upper-then-lower order");
      }
      bands.push_back(Band::make_side(u, l));
    }
  }
  return PlatTuple(std::move(bands));
}

FrontDiagram reflect(const FrontDiagram& f) {
  FrontDiagram r = f;
  for (auto& c : r.crossings) c.slot = 4 - c.slot;
  return r;
}

std::array<int, 4> strand_permutation(const FrontDiagram& f) {
  std::array<int, 4> at{0, 1, 2, 3};  // strand occupying each slot
  for (const auto& c : f.crossings) std::swap(at[c.slot - 1], at[c.slot]);
  return at;
}

int component_count(const FrontDiagram& f) {
  const auto right = strand_permutation(f);
  std::array<int, 4> parent{0, 1, 2, 3};
  auto find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
  unite(0, 1);
  unite(2, 3);
  unite(right[0], right[1]);
  unite(right[2], right[3]);
  int n = 0;
  for (int s = 0; s < 4; ++s) n += find(s) == s;
  return n;
}

WordClass word_class(const OrientationWord& w) {
  if (w[0] == w[1]) return WordClass::O1;
  if (w[0] == w[3]) return WordClass::O2;
  return WordClass::O3;
}

std::string to_string(const OrientationWord& w) {
  std::string s;
  for (Dir d : w) s.push_back(static_cast<char>(d));
  return s;
}

std::string to_string(WordClass c) {
  switch (c) {
    case WordClass::O1: return "O1";
    case WordClass::O2: return "O2";
    case WordClass::O3: return "O3";
  }
  return "?";
}

std::string to_string(Taxonomy t) {
  switch (t) {
    case Taxonomy::Single: return "single";
    case Taxonomy::Double: return "double";
    case Taxonomy::SplitDouble: return "split-double";
    case Taxonomy::SplitTriple: return "split-triple";
    case Taxonomy::SplitQuadruple: return "split-quadruple";
    case Taxonomy::Long: return "long";
    case Taxonomy::Other: return "other";
  }
  return "?";
}

Taxonomy classify_band(const Band& b) {
  if (b.longest_sub_band() >= 3) return Taxonomy::Long;
  const int n = b.crossings();
  if (n == 1) return Taxonomy::Single;
  if (b.split()) {
    if (n == 2) return Taxonomy::SplitDouble;
    if (n == 3) return Taxonomy::SplitTriple;
    if (n == 4) return Taxonomy::SplitQuadruple;
  }
  if (n == 2) return Taxonomy::Double;
  return Taxonomy::Other;
}

std::vector<WordClass> OrientationState::classes() const {
  std::vector<WordClass> out;
  out.reserve(words.size());
  for (const auto& w : words) out.push_back(word_class(w));
  return out;
}

OrientationState orient(const FrontDiagram& f) {
  const auto right = strand_permutation(f);
  std::array<int, 4> right_slot{};
  for (int r = 0; r < 4; ++r) right_slot[right[r]] = r;

  // Strands are named by their left slot; a component alternates rightward
  // and leftward strands through right and left cusps.
  std::array<std::optional<Dir>, 4> dir;
  for (int start = 0; start < 4; ++start) {
    if (dir[start]) continue;
    int cur = start;
    Dir d = Dir::R;
    while (!dir[cur]) {
      dir[cur] = d;
      if (d == Dir::R) {
        cur = right[right_slot[cur] ^ 1];
      } else {
        cur = cur ^ 1;
      }
      d = flip(d);
    }
  }

  OrientationState s;
  OrientationWord w{*dir[0], *dir[1], *dir[2], *dir[3]};
  s.words.push_back(w);
  for (const auto& c : f.crossings) {
    const int k = c.slot - 1;
    s.signs.push_back(w[k] == w[k + 1] ? +1 : -1);
    std::swap(w[k], w[k + 1]);
    s.words.push_back(w);
  }
  return s;
}

OrientationState reversed(const OrientationState& s) {
  OrientationState r = s;
  for (auto& w : r.words)
    for (auto& d : w) d = flip(d);
  return r;
}

std::vector<BandInfo> band_report(const PlatTuple& t, const OrientationState& s) {
  std::vector<BandInfo> out;
  std::size_t x = 0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    const Band& b = t[i];
    BandInfo info;
    info.side = b.side;
    info.internal = t.internal(i);
    info.taxonomy = classify_band(b);
    info.crossings = b.crossings();
    info.upper = b.upper;
    info.lower = b.lower;
    for (int k = 0; k < b.crossings(); ++k, ++x) {
      const int sg = s.signs.at(x);
      if (info.sign == 0) {
        info.sign = sg;
      } else if (info.sign != sg) {
        throw std::logic_error("band " + std::to_string(i + 1) + " of " + t.to_string() +
                               " mixes crossing signs");
      }
    }
    out.push_back(info);
  }
  return out;
}

OrientedBands orient_and_sign(const PlatTuple& t, const FrontDiagram& f) {
  OrientedBands ob;
  ob.orientation = orient(f);
  ob.bands = band_report(t, ob.orientation);
  return ob;
}

ClassicalInvariants classical_invariants(const FrontDiagram&, const OrientationState& s) {
  ClassicalInvariants ci;
  ci.writhe = std::accumulate(s.signs.begin(), s.signs.end(), 0);
  ci.tb = ci.writhe - 2;
  // Left cusp is traversed downward iff its upper branch runs leftward; a
  // right cusp iff its upper branch runs rightward.
  int down = 0, up = 0;
  const auto& lw = s.words.front();
  const auto& rw = s.words.back();
  for (int k : {0, 2}) {
    (lw[k] == Dir::L ? down : up)++;
    (rw[k] == Dir::R ? down : up)++;
  }
  ci.rotation = (down - up) / 2;
  return ci;
}

ClassicalInvariants classical_invariants(const FrontDiagram& f) {
  if (int n = component_count(f); n != 1) {
    throw NotAKnotError("front has " + std::to_string(n) + " components; tb and rotation need a knot");
  }
  return classical_invariants(f, orient(f));
}

}  // namespace platfill
