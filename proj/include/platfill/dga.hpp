#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "platfill/front.hpp"

namespace platfill {

enum class GeneratorKind { Crossing, RightCusp };

/// Crossings come first in x-order (a1..an), then the right cusps: c1 joins
/// slots 1-2 and c2 joins slots 3-4.
struct Generator {
  GeneratorKind kind = GeneratorKind::Crossing;
  int index = 0;   // position in the generator list
  int degree = 0;  // mod 2
  int label = 1;   // 1-based within its kind: a<label> or c<label>
  std::string name() const;
};

std::vector<Generator> generators(const FrontDiagram& f, const OrientationState& s);

/// A word in the generators; the empty word is the unit 1.
using Word = std::vector<int>;

/// Mod-2 formal sum of words.
class Poly {
 public:
  void toggle(const Word& w);
  void add(const Poly& p);
  bool empty() const { return terms_.empty(); }
  bool contains(const Word& w) const { return terms_.count(w) != 0; }
  bool has_constant() const { return contains(Word{}); }
  const std::set<Word>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  std::set<Word> terms_;
};

/// Which strand a negative corner sits on.
enum class BoundarySide { Upper, Lower };

/// Local rule at a crossing met by a disk boundary during the leftward sweep.
/// `Above`/`Below` mean the crossing lies outside the disk next to the
/// boundary; `Inside` that it lies within the disk next to the boundary.
enum class CrossingPosition { Above, Inside, Below };

struct CornerRule {
  BoundarySide side;
  CrossingPosition position;
  bool pass_through;     // boundary follows its strand across the crossing
  bool negative_corner;  // boundary turns onto the other strand (convex corner)
};

/// Convex-corner table: a boundary may take a negative corner only at a
/// crossing outside the disk; inside crossings are always passed through.
inline constexpr CornerRule kCornerTable[] = {
    {BoundarySide::Upper, CrossingPosition::Above, true, true},
    {BoundarySide::Upper, CrossingPosition::Inside, true, false},
    {BoundarySide::Lower, CrossingPosition::Below, true, true},
    {BoundarySide::Lower, CrossingPosition::Inside, true, false},
};

const CornerRule& corner_rule(BoundarySide side, CrossingPosition pos);

struct DiskCorner {
  int generator = 0;
  BoundarySide side = BoundarySide::Upper;
};

struct DiskWord {
  int origin = 0;
  std::vector<DiskCorner> corners;  // counterclockwise from the origin
  /// 0 for the upper left cusp, 1 for the lower; empty for the trivial disk
  /// at a right cusp.
  std::optional<int> left_cusp;
  Word word() const;
};

/// Order in which corners are read around a disk.
enum class CornerOrder {
  /// Upper boundary right-to-left, then lower boundary left-to-right.
  CounterclockwiseFromOrigin,
  /// Lower boundary left-to-right, then upper boundary right-to-left.
  LowerThenUpper,
};

inline constexpr CornerOrder kDefaultCornerOrder = CornerOrder::CounterclockwiseFromOrigin;

/// Admissible disks with positive corner at generator `origin`. For a right
/// cusp the list starts with the trivial disk carrying the constant 1.
std::vector<DiskWord> enumerate_disks(const FrontDiagram& f, int origin,
                                      CornerOrder order = kDefaultCornerOrder);

struct Differential {
  std::vector<Generator> gens;
  std::vector<Poly> d;  // indexed like gens

  std::size_t crossing_count() const;
  bool constant_term(int g) const { return d[g].has_constant(); }
  std::string word_string(const Word& w) const;
  std::string to_string(int g) const;
};

Differential differential(const FrontDiagram& f, const OrientationState& s,
                          CornerOrder order = kDefaultCornerOrder);

/// Leibniz extension of d to a word.
Poly apply(const Differential& d, const Word& w);

/// Generators a with d(d(a)) != 0.
std::vector<int> d_squared_violations(const Differential& d);

/// (generator, word) pairs whose degree is not |a|-1 mod 2.
std::vector<std::pair<int, Word>> degree_violations(const Differential& d);

int word_degree(const Differential& d, const Word& w);

}  // namespace platfill
