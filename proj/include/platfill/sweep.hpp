#pragma once

#include <string>
#include <vector>

#include "platfill/plat_tuple.hpp"

namespace platfill {

/// Outcome of every cross-module check on one tuple.
struct TupleCheck {
  PlatTuple tuple;
  bool knot = false;
  bool band_fillable = false;  // knots only
  bool battery_clear = false;
  bool builder_ok = false;     // transcript built and validated
  int d_squared_violations = 0;
  int degree_violations = 0;
  bool equivalence_ok = true;     // band criterion <=> battery clear and builder
  bool genus_ok = true;           // 1-handles - 0-handles = tb
  bool corollary_ok = true;       // alternating, external singles, positivity
  bool single_chekanov_ok = true; // at most one (LCH0, LCH1) pair
  bool ruling_augmentation_ok = true;
  std::vector<std::string> problems;
};

TupleCheck check_tuple(const PlatTuple& t);

struct SweepSummary {
  int max_crossings = 0;
  int tuples = 0;
  int knots = 0;
  int fillable = 0;
  int unfillable = 0;
  int links_filled = 0;
  int d_squared_violations = 0;
  int degree_violations = 0;
  int equivalence_discrepancies = 0;
  int genus_failures = 0;
  int corollary_failures = 0;
  int chekanov_failures = 0;
  int ruling_augmentation_failures = 0;
  /// Tuples with at least one problem, in enumeration order.
  std::vector<TupleCheck> discrepancies;

  bool ok() const { return discrepancies.empty(); }
  friend bool operator==(const SweepSummary& a, const SweepSummary& b);
};

/// Runs check_tuple over every canonical tuple (knots and links) with at most
/// `max_crossings` crossings. `threads` <= 0 uses the OpenMP default.
SweepSummary crosscheck(int max_crossings, int threads = 0);
/// Single-threaded reference with identical output.
SweepSummary crosscheck_serial(int max_crossings);

std::string to_text(const SweepSummary& s);

}  // namespace platfill
