#pragma once

#include <optional>
#include <string>
#include <vector>

#include "platfill/dga.hpp"
#include "platfill/front.hpp"
#include "platfill/linearization.hpp"
#include "platfill/rulings.hpp"

namespace platfill {

/// Everything computed from a tuple once, shared by the battery and reports.
struct PlatInvariants {
  PlatTuple tuple;
  FrontDiagram front;
  int components = 0;
  OrientedBands oriented;
  std::optional<ClassicalInvariants> classical;  // knots only
  std::vector<Ruling> rulings;
  Differential differential;
  std::vector<Augmentation> augmentations;
  std::vector<LinearizedComplex> complexes;  // one per augmentation

  bool is_knot() const { return components == 1; }
};

PlatInvariants compute_invariants(const PlatTuple& t);

enum class ViolationRule { NegativeBandOverTwo, InternalBandUnderTwo };
std::string to_string(ViolationRule r);

struct Violation {
  int band = 0;  // 1-based
  ViolationRule rule;
  friend bool operator==(const Violation&, const Violation&) = default;
};

struct Theorem1Verdict {
  bool fillable = false;
  std::vector<Violation> violations;
};

/// Band criterion. Throws NotAKnotError for links.
Theorem1Verdict theorem1_verdict(const PlatTuple& t);
/// Band criterion on an already-signed band report (any component count).
Theorem1Verdict band_criterion(const std::vector<BandInfo>& bands);

struct StructureChecks {
  bool alternating_signs = false;
  /// No external band is negative with more than one crossing.
  bool external_negative_singles = false;
};

StructureChecks structural_checks(const std::vector<BandInfo>& bands);
StructureChecks structural_checks(const PlatTuple& t);

struct ObstructionBattery {
  bool not_a_knot = false;
  bool rotation_nonzero = false;
  bool no_normal_ruling = false;
  bool no_augmentation = false;
  bool seidel_dimension_fails_for_all = false;
  bool fundamental_class_fires = false;

  bool any() const {
    return not_a_knot || rotation_nonzero || no_normal_ruling || no_augmentation ||
           seidel_dimension_fails_for_all || fundamental_class_fires;
  }
  /// Names of the obstructions that fire.
  std::vector<std::string> fired() const;
};

ObstructionBattery obstruction_battery(const PlatInvariants& inv);
ObstructionBattery obstruction_battery(const PlatTuple& t);

struct FillabilityReport {
  std::optional<Theorem1Verdict> theorem1;  // empty for links
  ObstructionBattery battery;
  StructureChecks structure;
  /// False when the band criterion and the battery disagree.
  bool consistent = true;
  std::string inconsistency;
};

FillabilityReport classify(const PlatInvariants& inv);
FillabilityReport classify(const PlatTuple& t);

}  // namespace platfill
