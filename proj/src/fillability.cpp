#include "platfill/fillability.hpp"

namespace platfill {

PlatInvariants compute_invariants(const PlatTuple& t) {
  PlatInvariants inv;
  inv.tuple = t;
  inv.front = build_front(t);
  inv.components = component_count(inv.front);
  inv.oriented = orient_and_sign(t, inv.front);
  if (inv.is_knot()) inv.classical = classical_invariants(inv.front, inv.oriented.orientation);
  inv.rulings = enumerate_rulings(inv.front);
  inv.differential = differential(inv.front, inv.oriented.orientation);
  inv.augmentations = enumerate_augmentations(inv.differential);
  for (const auto& e : inv.augmentations) inv.complexes.push_back(linearize(inv.differential, e));
  return inv;
}

std::string to_string(ViolationRule r) {
  return r == ViolationRule::NegativeBandOverTwo ? "negative-band>2" : "internal-band<2";
}

Theorem1Verdict band_criterion(const std::vector<BandInfo>& bands) {
  Theorem1Verdict v;
  for (std::size_t i = 0; i < bands.size(); ++i) {
    const auto& b = bands[i];
    const int idx = static_cast<int>(i) + 1;
    if (b.sign < 0 && b.crossings > 2) v.violations.push_back({idx, ViolationRule::NegativeBandOverTwo});
    if (b.internal && b.crossings < 2) v.violations.push_back({idx, ViolationRule::InternalBandUnderTwo});
  }
  v.fillable = v.violations.empty();
  return v;
}

Theorem1Verdict theorem1_verdict(const PlatTuple& t) {
  const auto f = build_front(t);
  if (int n = component_count(f); n != 1)
    throw NotAKnotError(t.to_string() + " has " + std::to_string(n) + " components");
  return band_criterion(orient_and_sign(t, f).bands);
}

StructureChecks structural_checks(const std::vector<BandInfo>& bands) {
  StructureChecks s;
  s.alternating_signs = true;
  for (std::size_t i = 1; i < bands.size(); ++i)
    if (bands[i].sign == bands[i - 1].sign) s.alternating_signs = false;
  s.external_negative_singles = true;
  for (const BandInfo* b : {&bands.front(), &bands.back()})
    if (b->sign < 0 && b->crossings != 1) s.external_negative_singles = false;
  return s;
}

StructureChecks structural_checks(const PlatTuple& t) {
  return structural_checks(orient_and_sign(t, build_front(t)).bands);
}

std::vector<std::string> ObstructionBattery::fired() const {
  std::vector<std::string> out;
  if (not_a_knot) out.push_back("not-a-knot");
  if (rotation_nonzero) out.push_back("rotation-nonzero");
  if (no_normal_ruling) out.push_back("no-normal-ruling");
  if (no_augmentation) out.push_back("no-augmentation");
  if (seidel_dimension_fails_for_all) out.push_back("seidel-dimension-fails-for-all");
  if (fundamental_class_fires) out.push_back("fundamental-class-fires");
  return out;
}

ObstructionBattery obstruction_battery(const PlatInvariants& inv) {
  ObstructionBattery b;
  b.not_a_knot = !inv.is_knot();
  b.no_normal_ruling = inv.rulings.empty();
  b.no_augmentation = inv.augmentations.empty();
  if (!inv.is_knot()) return b;  // the remaining obstructions are stated for knots
  b.rotation_nonzero = inv.classical->rotation != 0;
  b.seidel_dimension_fails_for_all = true;
  for (const auto& c : inv.complexes)
    if (seidel_dimension_check(c, inv.classical->tb)) b.seidel_dimension_fails_for_all = false;
  b.fundamental_class_fires = fundamental_class_obstruction(inv.differential, inv.augmentations);
  return b;
}

ObstructionBattery obstruction_battery(const PlatTuple& t) {
  return obstruction_battery(compute_invariants(t));
}

FillabilityReport classify(const PlatInvariants& inv) {
  FillabilityReport r;
  r.battery = obstruction_battery(inv);
  r.structure = structural_checks(inv.oriented.bands);
  if (!inv.is_knot()) return r;
  r.theorem1 = band_criterion(inv.oriented.bands);
  if (r.theorem1->fillable && r.battery.any()) {
    r.consistent = false;
    r.inconsistency = "band criterion says fillable but obstructions fire:";
    for (const auto& n : r.battery.fired()) r.inconsistency += " " + n;
  } else if (!r.theorem1->fillable && !r.battery.any()) {
    r.consistent = false;
    r.inconsistency = "band criterion says not fillable but no obstruction fires";
  }
  return r;
}

FillabilityReport classify(const PlatTuple& t) { return classify(compute_invariants(t)); }

}  // namespace platfill
