// One PASS/FAIL line per acceptance criterion; exit status is nonzero if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <set>
#include <string>

#include "oracles.hpp"
#include "platfill/enumerate.hpp"
#include "platfill/fillability.hpp"
#include "platfill/render.hpp"
#include "platfill/sweep.hpp"

using namespace platfill;

namespace {

int failures = 0;

void report(int id, const char* name, bool pass, const std::string& detail) {
  std::printf("[%s] criterion %d: %s -- %s\n", pass ? "PASS" : "FAIL", id, name, detail.c_str());
  failures += !pass;
}

constexpr int kBound = 10;

void trefoil_oracle() {
  const auto t = parse_tuple("[3]");
  const auto inv = compute_invariants(t);
  std::vector<std::vector<int>> sets;
  for (const auto& r : inv.rulings) sets.push_back(r.switches);
  const std::vector<std::vector<int>> want_rulings{{1}, {1, 2, 3}, {3}};
  const bool rulings_ok = sets == want_rulings && oracle::rulings(inv.front) == want_rulings;

  const auto& d = inv.differential;
  const bool diff_ok =
      d.to_string(3) == "1 + a1 + a3 + a1a2a3" && d.to_string(4) == "1 + a1 + a3 + a3a2a1";

  std::vector<std::string> bits;
  for (const auto& e : inv.augmentations) bits.push_back(e.bits());
  const bool augs_ok = bits.size() == 5 && bits == oracle::augmentations(d);

  bool dims_ok = !inv.complexes.empty();
  for (const auto& c : inv.complexes) dims_ok = dims_ok && c.dim_lch0 == 2 && c.dim_lch1 == 1;

  report(4, "trefoil oracle", rulings_ok && diff_ok && augs_ok && dims_ok,
         std::string("rulings ") + (rulings_ok ? "ok" : "differ") + ", differential " + (diff_ok ? "ok" : "differs") +
             ", augmentations " + std::to_string(bits.size()) + (augs_ok ? " (oracle agrees)" : " (oracle differs)") +
             ", dims " + (dims_ok ? "(2,1) for all" : "wrong"));
}

void figure_round_trip() {
  const std::string text = "[3,(6,2),2,(2,0),4]";
  const auto t = parse_tuple(text);
  const auto rebuilt = tuple_from_front(build_front(t));
  FrontDiagram drawn;
  for (int slot : crossing_slots_from_svg(render_svg(t))) drawn.crossings.push_back({slot, 0, 0});
  const auto redrawn = tuple_from_front(drawn);
  const bool ok = t.to_string() == text && rebuilt.to_string() == text && redrawn.to_string() == text;
  report(2, "figure tuple round trip", ok,
         "parse " + t.to_string() + ", rebuild " + rebuilt.to_string() + ", re-render " + redrawn.to_string());
}

/// With `augmented`, skip knots without augmentations (where the
/// obstruction holds vacuously).
std::optional<PlatTuple> smallest_with_negative(Taxonomy kind, bool augmented) {
  for (const auto& t : enumerate_tuples(kBound, true)) {
    const auto ob = orient_and_sign(t, build_front(t));
    for (const auto& b : ob.bands)
      if (b.sign < 0 && b.taxonomy == kind) {
        if (!augmented || !compute_invariants(t).augmentations.empty()) return t;
        break;
      }
  }
  return std::nullopt;
}

void obstruction_spot_checks() {
  const auto single = compute_invariants(parse_tuple("[1,(1,0),1]"));
  bool ok = single.rulings.empty();
  std::string detail = "[1,(1,0),1] rulings " + std::to_string(single.rulings.size());
  for (Taxonomy kind : {Taxonomy::Long, Taxonomy::SplitQuadruple}) {
    const auto first = smallest_with_negative(kind, false);
    const auto augmented = smallest_with_negative(kind, true);
    if (!first) {
      ok = false;
      detail += "; no knot with a negative " + to_string(kind) + " band";
      continue;
    }
    std::vector<PlatTuple> picks{*first};
    if (augmented && augmented != first) picks.push_back(*augmented);
    for (const auto& t : picks) {
      const auto inv = compute_invariants(t);
      const bool fires = fundamental_class_obstruction(inv.differential, inv.augmentations);
      ok = ok && fires;
      detail += "; negative " + to_string(kind) + " " + t.to_string() + ": " +
                std::to_string(inv.augmentations.size()) + " augmentations, fundamental class " +
                (fires ? (inv.augmentations.empty() ? "holds vacuously" : "fires for every one") : "does not fire");
    }
  }
  report(8, "obstruction spot checks", ok, detail);
}

}  // namespace

int main() {
  const auto start = std::chrono::steady_clock::now();
  const SweepSummary s = crosscheck(kBound);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const std::string scope = std::to_string(s.knots) + " knots, " + std::to_string(s.tuples) + " tuples <= " +
                            std::to_string(kBound) + " crossings";

  report(1, "band criterion <=> battery clear and builder succeeds", s.equivalence_discrepancies == 0,
         std::to_string(s.equivalence_discrepancies) + " discrepancies over " + scope + " (" +
             std::to_string(s.fillable) + " fillable, " + std::to_string(secs).substr(0, 5) + " s)");
  figure_round_trip();
  report(3, "d^2 = 0 and degree drop", s.d_squared_violations == 0 && s.degree_violations == 0,
         std::to_string(s.d_squared_violations) + " d^2 and " + std::to_string(s.degree_violations) +
             " degree violations over " + scope);
  trefoil_oracle();
  report(5, "genus accounting", s.genus_failures == 0,
         std::to_string(s.genus_failures) + " failures over " + std::to_string(s.fillable) + " filling transcripts");
  report(6, "corollary checks", s.corollary_failures == 0,
         std::to_string(s.corollary_failures) + " failures over " + std::to_string(s.fillable) + " fillable knots");
  report(7, "single linearized homology per knot", s.chekanov_failures == 0,
         std::to_string(s.chekanov_failures) + " knots with several (LCH0, LCH1) pairs");
  obstruction_spot_checks();

  std::printf("%s: %d of 8 criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
