#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "platfill/dga.hpp"
#include "platfill/gf2.hpp"

namespace platfill {

/// Graded augmentation: a 0/1 value per generator, zero in degree 1.
struct Augmentation {
  std::vector<std::uint8_t> values;  // indexed like Differential::gens
  /// Values over all generators in list order, e.g. "11000" for [3].
  std::string bits() const;
  friend bool operator==(const Augmentation&, const Augmentation&) = default;
  friend auto operator<=>(const Augmentation&, const Augmentation&) = default;
};

/// epsilon(word), extended multiplicatively with epsilon(1) = 1.
bool evaluate(const Augmentation& e, const Word& w);
bool is_augmentation(const Differential& d, const Augmentation& e);

/// Brute force over the degree-0 generators; OpenMP-parallel over the
/// assignment space. Result sorted by bits().
std::vector<Augmentation> enumerate_augmentations(const Differential& d);
/// Single-threaded reference with the same contract.
std::vector<Augmentation> enumerate_augmentations_serial(const Differential& d);

/// Largest number of degree-0 generators the brute force accepts.
inline constexpr std::size_t kMaxAugmentationUnknowns = 30;

/// Linearized differential d1 split by degree. `degree0`/`degree1` list the
/// generator indices spanning each graded piece.
struct LinearizedComplex {
  std::vector<int> degree0, degree1;
  gf2::Matrix from1_to0;  // rows: degree0, cols: degree1
  gf2::Matrix from0_to1;  // rows: degree1, cols: degree0
  int dim_lch0 = 0;
  int dim_lch1 = 0;

  /// d1(generator) as the set of generators it hits.
  std::vector<int> image_of(int generator) const;
  bool squares_to_zero() const;
};

/// Throws std::invalid_argument if `e` is not an augmentation of `d`.
LinearizedComplex linearize(const Differential& d, const Augmentation& e);

/// dim LCH_1 = 1, dim LCH_0 even and equal to tb + 1.
bool seidel_dimension_check(const LinearizedComplex& c, int tb);

/// Negative-crossing generators that are cycles but not boundaries.
std::vector<int> nonbounding_negative_cycles(const Differential& d, const LinearizedComplex& c);

/// True iff every augmentation admits a negative crossing that is a cycle
/// but not a boundary (vacuously true with no augmentations).
bool fundamental_class_obstruction(const Differential& d, const std::vector<Augmentation>& augs);

}  // namespace platfill
