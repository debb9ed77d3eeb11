#include "platfill/linearization.hpp"

#include <algorithm>
#include <stdexcept>

#include <omp.h>

namespace platfill {

std::string Augmentation::bits() const {
  std::string s;
  for (auto v : values) s.push_back(v ? '1' : '0');
  return s;
}

bool evaluate(const Augmentation& e, const Word& w) {
  for (int g : w)
    if (!e.values[g]) return false;
  return true;
}

bool is_augmentation(const Differential& d, const Augmentation& e) {
  for (std::size_t g = 0; g < d.gens.size(); ++g) {
    if (d.gens[g].degree == 1 && e.values[g]) return false;
    bool sum = false;
    for (const auto& w : d.d[g].terms()) sum ^= evaluate(e, w);
    if (sum) return false;
  }
  return true;
}

namespace {

/// The augmentation equations with every word reduced to the bitmask of its
/// degree-0 letters; words with a degree-1 letter always vanish.
struct Equations {
  std::vector<int> unknowns;                      // degree-0 generator indices
  std::vector<std::vector<std::uint64_t>> rows;   // per generator, word masks

  explicit Equations(const Differential& d) {
    std::vector<int> bit(d.gens.size(), -1);
    for (std::size_t g = 0; g < d.gens.size(); ++g)
      if (d.gens[g].degree == 0) {
        bit[g] = static_cast<int>(unknowns.size());
        unknowns.push_back(static_cast<int>(g));
      }
    if (unknowns.size() > kMaxAugmentationUnknowns)
      throw std::length_error("too many degree-0 generators for brute-force augmentation search (" +
                              std::to_string(unknowns.size()) + ")");
    for (std::size_t g = 0; g < d.gens.size(); ++g) {
      std::vector<std::uint64_t> masks;
      for (const auto& w : d.d[g].terms()) {
        std::uint64_t m = 0;
        bool vanishes = false;
        for (int letter : w) {
          if (bit[letter] < 0) {
            vanishes = true;
            break;
          }
          m |= std::uint64_t{1} << bit[letter];
        }
        if (!vanishes) masks.push_back(m);
      }
      if (!masks.empty()) rows.push_back(std::move(masks));
    }
  }

  bool satisfied(std::uint64_t assignment) const {
    for (const auto& masks : rows) {
      bool sum = false;
      for (auto m : masks) sum ^= (m & assignment) == m;
      if (sum) return false;
    }
    return true;
  }

  Augmentation expand(const Differential& d, std::uint64_t assignment) const {
    Augmentation e;
    e.values.assign(d.gens.size(), 0);
    for (std::size_t b = 0; b < unknowns.size(); ++b)
      e.values[unknowns[b]] = (assignment >> b) & 1;
    return e;
  }
};

void sort_augmentations(std::vector<Augmentation>& v) {
  std::sort(v.begin(), v.end(), [](const Augmentation& a, const Augmentation& b) {
    return a.bits() < b.bits();
  });
}

}  // namespace

std::vector<Augmentation> enumerate_augmentations_serial(const Differential& d) {
  const Equations eq(d);
  const std::uint64_t count = std::uint64_t{1} << eq.unknowns.size();
  std::vector<Augmentation> out;
  for (std::uint64_t a = 0; a < count; ++a)
    if (eq.satisfied(a)) out.push_back(eq.expand(d, a));
  sort_augmentations(out);
  return out;
}

std::vector<Augmentation> enumerate_augmentations(const Differential& d) {
  const Equations eq(d);
  const auto count = static_cast<std::int64_t>(std::uint64_t{1} << eq.unknowns.size());
  std::vector<std::uint64_t> hits;
#pragma omp parallel
  {
    std::vector<std::uint64_t> local;
#pragma omp for schedule(static) nowait
    for (std::int64_t a = 0; a < count; ++a)
      if (eq.satisfied(static_cast<std::uint64_t>(a))) local.push_back(static_cast<std::uint64_t>(a));
#pragma omp critical
    hits.insert(hits.end(), local.begin(), local.end());
  }
  std::vector<Augmentation> out;
  out.reserve(hits.size());
  for (auto a : hits) out.push_back(eq.expand(d, a));
  sort_augmentations(out);
  return out;
}

std::vector<int> LinearizedComplex::image_of(int generator) const {
  std::vector<int> out;
  auto pos0 = std::find(degree0.begin(), degree0.end(), generator);
  if (pos0 != degree0.end()) {
    const auto c = static_cast<std::size_t>(pos0 - degree0.begin());
    for (std::size_t r = 0; r < degree1.size(); ++r)
      if (from0_to1(r, c)) out.push_back(degree1[r]);
    return out;
  }
  auto pos1 = std::find(degree1.begin(), degree1.end(), generator);
  if (pos1 == degree1.end()) throw std::out_of_range("generator not in complex");
  const auto c = static_cast<std::size_t>(pos1 - degree1.begin());
  for (std::size_t r = 0; r < degree0.size(); ++r)
    if (from1_to0(r, c)) out.push_back(degree0[r]);
  return out;
}

bool LinearizedComplex::squares_to_zero() const {
  return (from1_to0 * from0_to1).is_zero() && (from0_to1 * from1_to0).is_zero();
}

LinearizedComplex linearize(const Differential& d, const Augmentation& e) {
  if (!is_augmentation(d, e)) throw std::invalid_argument("not a graded augmentation: " + e.bits());
  LinearizedComplex c;
  std::vector<int> row(d.gens.size(), -1);
  for (std::size_t g = 0; g < d.gens.size(); ++g) {
    auto& list = d.gens[g].degree == 0 ? c.degree0 : c.degree1;
    row[g] = static_cast<int>(list.size());
    list.push_back(static_cast<int>(g));
  }
  c.from1_to0 = gf2::Matrix(c.degree0.size(), c.degree1.size());
  c.from0_to1 = gf2::Matrix(c.degree1.size(), c.degree0.size());
  for (std::size_t g = 0; g < d.gens.size(); ++g) {
    const bool from_deg0 = d.gens[g].degree == 0;
    for (const auto& w : d.d[g].terms()) {
      for (std::size_t i = 0; i < w.size(); ++i) {
        bool augmented = true;
        for (std::size_t j = 0; j < w.size() && augmented; ++j)
          if (j != i && !e.values[w[j]]) augmented = false;
        if (!augmented) continue;
        const auto r = static_cast<std::size_t>(row[w[i]]);
        const auto col = static_cast<std::size_t>(row[g]);
        if (from_deg0)
          c.from0_to1.flip(r, col);
        else
          c.from1_to0.flip(r, col);
      }
    }
  }
  const auto r10 = static_cast<int>(gf2::rank(c.from1_to0));
  const auto r01 = static_cast<int>(gf2::rank(c.from0_to1));
  c.dim_lch0 = static_cast<int>(c.degree0.size()) - r01 - r10;
  c.dim_lch1 = static_cast<int>(c.degree1.size()) - r10 - r01;
  return c;
}

bool seidel_dimension_check(const LinearizedComplex& c, int tb) {
  return c.dim_lch1 == 1 && c.dim_lch0 % 2 == 0 && c.dim_lch0 == tb + 1;
}

std::vector<int> nonbounding_negative_cycles(const Differential& d, const LinearizedComplex& c) {
  std::vector<int> out;
  for (std::size_t col = 0; col < c.degree1.size(); ++col) {
    const int g = c.degree1[col];
    if (d.gens[g].kind != GeneratorKind::Crossing) continue;
    if (!c.from1_to0.column_is_zero(col)) continue;
    std::vector<std::uint8_t> unit(c.degree1.size(), 0);
    unit[col] = 1;
    if (!gf2::in_column_space(c.from0_to1, unit)) out.push_back(g);
  }
  return out;
}

bool fundamental_class_obstruction(const Differential& d, const std::vector<Augmentation>& augs) {
  for (const auto& e : augs)
    if (nonbounding_negative_cycles(d, linearize(d, e)).empty()) return false;
  return true;
}

}  // namespace platfill
