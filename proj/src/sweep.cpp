#include "platfill/sweep.hpp"

#include <omp.h>

#include <set>
#include <sstream>

#include "platfill/cobordism.hpp"
#include "platfill/enumerate.hpp"
#include "platfill/fillability.hpp"
#include "platfill/positivity.hpp"

namespace platfill {

bool operator==(const SweepSummary& a, const SweepSummary& b) {
  auto key = [](const SweepSummary& s) {
    return std::tuple(s.max_crossings, s.tuples, s.knots, s.fillable, s.unfillable, s.links_filled,
                      s.d_squared_violations, s.degree_violations, s.equivalence_discrepancies, s.genus_failures,
                      s.corollary_failures, s.chekanov_failures, s.ruling_augmentation_failures);
  };
  if (key(a) != key(b) || a.discrepancies.size() != b.discrepancies.size()) return false;
  for (std::size_t i = 0; i < a.discrepancies.size(); ++i)
    if (a.discrepancies[i].tuple != b.discrepancies[i].tuple ||
        a.discrepancies[i].problems != b.discrepancies[i].problems)
      return false;
  return true;
}

TupleCheck check_tuple(const PlatTuple& t) {
  TupleCheck c;
  c.tuple = t;
  const PlatInvariants inv = compute_invariants(t);
  c.knot = inv.is_knot();

  c.d_squared_violations = static_cast<int>(d_squared_violations(inv.differential).size());
  c.degree_violations = static_cast<int>(degree_violations(inv.differential).size());
  if (c.d_squared_violations) c.problems.push_back("d^2 != 0");
  if (c.degree_violations) c.problems.push_back("differential does not lower degree by one");

  const bool graded = has_graded_ruling(inv.rulings, inv.oriented.orientation.signs);
  c.ruling_augmentation_ok = graded == !inv.augmentations.empty();
  if (!c.ruling_augmentation_ok) c.problems.push_back("graded ruling and augmentation existence disagree");

  std::optional<CobordismTranscript> filling;
  try {
    filling = build_filling(t);
    auto v = validate_transcript(*filling, t);
    c.builder_ok = v.ok;
    if (!v.ok) c.problems.push_back("filling transcript invalid: " + v.message);
  } catch (const NotFillableError&) {
    c.builder_ok = false;
  } catch (const std::exception& e) {
    c.problems.push_back(std::string("builder failed: ") + e.what());
  }

  const FillabilityReport rep = classify(inv);
  c.battery_clear = !rep.battery.any();
  if (!c.knot) return c;

  c.band_fillable = rep.theorem1->fillable;
  c.equivalence_ok = c.band_fillable == (c.battery_clear && c.builder_ok);
  if (!c.equivalence_ok)
    c.problems.push_back(std::string("band criterion ") + (c.band_fillable ? "fillable" : "not fillable") +
                         ", battery " + (c.battery_clear ? "clear" : "fires") + ", builder " +
                         (c.builder_ok ? "succeeds" : "declines"));

  if (filling && c.builder_ok) {
    const int tb = inv.classical->tb;
    c.genus_ok = filling->accounting.one_handles - filling->accounting.zero_handles == tb &&
                 filling->accounting.euler_characteristic == -tb;
    if (!c.genus_ok) c.problems.push_back("genus accounting fails");
  }

  if (c.band_fillable) {
    const auto& s = rep.structure;
    bool positive = false;
    try {
      positive = validate_positivity(reduce_to_positive(t), t).ok;
    } catch (const std::exception&) {
    }
    c.corollary_ok = s.alternating_signs && s.external_negative_singles && positive;
    if (!c.corollary_ok) c.problems.push_back("corollary checks fail");
  }

  std::set<std::pair<int, int>> dims;
  for (const auto& cx : inv.complexes) dims.insert({cx.dim_lch0, cx.dim_lch1});
  c.single_chekanov_ok = dims.size() <= 1;
  if (!c.single_chekanov_ok) c.problems.push_back("more than one linearized homology");
  return c;
}

namespace {

SweepSummary summarize(int max_crossings, const std::vector<TupleCheck>& checks) {
  SweepSummary s;
  s.max_crossings = max_crossings;
  for (const auto& c : checks) {
    ++s.tuples;
    s.d_squared_violations += c.d_squared_violations;
    s.degree_violations += c.degree_violations;
    s.ruling_augmentation_failures += !c.ruling_augmentation_ok;
    if (c.knot) {
      ++s.knots;
      ++(c.band_fillable ? s.fillable : s.unfillable);
      s.equivalence_discrepancies += !c.equivalence_ok;
      s.genus_failures += !c.genus_ok;
      s.corollary_failures += !c.corollary_ok;
      s.chekanov_failures += !c.single_chekanov_ok;
    } else if (c.builder_ok) {
      ++s.links_filled;
    }
    if (!c.problems.empty()) s.discrepancies.push_back(c);
  }
  return s;
}

}  // namespace

SweepSummary crosscheck(int max_crossings, int threads) {
  const auto tuples = enumerate_tuples(max_crossings);
  std::vector<TupleCheck> checks(tuples.size());
  const int n = static_cast<int>(tuples.size());
  const int team = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 8) num_threads(team)
  for (int i = 0; i < n; ++i) checks[static_cast<std::size_t>(i)] = check_tuple(tuples[static_cast<std::size_t>(i)]);
  return summarize(max_crossings, checks);
}

SweepSummary crosscheck_serial(int max_crossings) {
  std::vector<TupleCheck> checks;
  for (const auto& t : enumerate_tuples(max_crossings)) checks.push_back(check_tuple(t));
  return summarize(max_crossings, checks);
}

std::string to_text(const SweepSummary& s) {
  std::ostringstream os;
  os << "tuples " << s.tuples << " (knots " << s.knots << ", links " << s.tuples - s.knots << ") up to "
     << s.max_crossings << " crossings\n";
  os << "knots fillable " << s.fillable << ", not fillable " << s.unfillable << "; links filled "
     << s.links_filled << "\n";
  os << "d^2 violations " << s.d_squared_violations << ", degree violations " << s.degree_violations << "\n";
  os << "equivalence discrepancies " << s.equivalence_discrepancies << ", genus failures " << s.genus_failures
     << ", corollary failures " << s.corollary_failures << ", chekanov failures " << s.chekanov_failures
     << ", ruling/augmentation failures " << s.ruling_augmentation_failures << "\n";
  for (const auto& c : s.discrepancies) {
    os << "INCONSISTENT " << c.tuple.to_string() << ":";
    for (const auto& p : c.problems) os << " " << p << ";";
    os << "\n";
  }
  os << (s.ok() ? "0 discrepancies\n" : std::to_string(s.discrepancies.size()) + " discrepancies\n");
  return os.str();
}

}  // namespace platfill
