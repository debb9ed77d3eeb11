#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "platfill/plat_tuple.hpp"

namespace platfill {

/// Raised by knot-only invariants when the front has more than one component.
class NotAKnotError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A crossing between the strands at slots `slot` and `slot+1` (slots run
/// 1..4 from the top). `x` is the event order; `band` the 0-based band index.
struct Crossing {
  int slot = 0;
  int band = 0;
  int x = 0;
  friend bool operator==(const Crossing&, const Crossing&) = default;
};

/// Plat-form front with two left cusps pairing slots (1,2),(3,4) at the far
/// left, the crossings in x-order, and two right cusps with the same pairing.
struct FrontDiagram {
  std::vector<Crossing> crossings;
  std::size_t band_count = 0;

  std::size_t size() const { return crossings.size(); }
};

FrontDiagram build_front(const PlatTuple& t);

/// Inverse of build_front for fronts in canonical band order.
PlatTuple tuple_from_front(const FrontDiagram& f);

/// Top-bottom mirror: slot k becomes slot 4-k. Not canonical as a tuple when
/// a side band is split, but a valid front.
FrontDiagram reflect(const FrontDiagram& f);

/// Strand at each right-end slot, indexed by left-end slot (0-based).
std::array<int, 4> strand_permutation(const FrontDiagram& f);

int component_count(const FrontDiagram& f);

enum class Dir : char { L = 'L', R = 'R' };
inline Dir flip(Dir d) { return d == Dir::L ? Dir::R : Dir::L; }

using OrientationWord = std::array<Dir, 4>;

enum class WordClass { O1, O2, O3 };
WordClass word_class(const OrientationWord& w);
std::string to_string(const OrientationWord& w);
std::string to_string(WordClass c);

enum class Taxonomy { Single, Double, SplitDouble, SplitTriple, SplitQuadruple, Long, Other };
std::string to_string(Taxonomy t);
Taxonomy classify_band(const Band& b);

struct BandInfo {
  int sign = 0;  // +1 or -1
  bool side = false;
  bool internal = false;
  Taxonomy taxonomy = Taxonomy::Other;
  int crossings = 0;
  int upper = 0;
  int lower = 0;
};

/// Orientation words for every gap between events: words[0] sits just right
/// of the left cusps, words[i] just right of crossing i-1, so words.back() is
/// the word at the right cusps.
struct OrientationState {
  std::vector<OrientationWord> words;
  std::vector<int> signs;  // per crossing in x-order
  std::vector<WordClass> classes() const;
};

/// Orients every component and signs every crossing. Component order follows
/// the smallest left slot it occupies; each is directed so that its strand at
/// that slot runs rightward. For knots this is the upper-left cusp convention.
OrientationState orient(const FrontDiagram& f);

/// Reverses every component.
OrientationState reversed(const OrientationState& s);

std::vector<BandInfo> band_report(const PlatTuple& t, const OrientationState& s);

struct OrientedBands {
  OrientationState orientation;
  std::vector<BandInfo> bands;
};

/// Throws std::logic_error if a band mixes crossing signs.
OrientedBands orient_and_sign(const PlatTuple& t, const FrontDiagram& f);

struct ClassicalInvariants {
  int tb = 0;
  int rotation = 0;
  int writhe = 0;
};

ClassicalInvariants classical_invariants(const FrontDiagram& f, const OrientationState& s);
/// Throws NotAKnotError for links.
ClassicalInvariants classical_invariants(const FrontDiagram& f);

}  // namespace platfill
