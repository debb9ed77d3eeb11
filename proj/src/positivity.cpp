#include "platfill/positivity.hpp"

#include <algorithm>

#include "platfill/cobordism.hpp"
#include "platfill/fillability.hpp"
#include "platfill/front.hpp"

namespace platfill {

std::string to_string(P4PCase c) {
  switch (c) {
    case P4PCase::SideDouble: return "side-double";
    case P4PCase::SplitDouble: return "split-double";
    case P4PCase::CenterSameSide: return "center-same-side";
    case P4PCase::CenterOppositeSide: return "center-opposite-side";
  }
  return "?";
}

std::string to_string(P4PStep::Kind k) { return k == P4PStep::Kind::R2Removal ? "R2-removal" : "middle"; }

namespace {

int negatives(const std::vector<SignedCrossing>& v) {
  return static_cast<int>(std::count_if(v.begin(), v.end(), [](const auto& c) { return c.sign < 0; }));
}

std::vector<SignedCrossing> signed_front(const FrontDiagram& f, const OrientationState& s) {
  std::vector<SignedCrossing> out;
  for (std::size_t i = 0; i < f.size(); ++i)
    out.push_back({static_cast<int>(i), f.crossings[i].slot, s.signs[i]});
  return out;
}

}  // namespace

int P4PStep::negatives_before() const { return negatives(before); }
int P4PStep::negatives_after() const { return negatives(after); }

std::vector<SignedCrossing> P4PTranscript::final_crossings() const {
  return steps.empty() ? initial : steps.back().after;
}

P4PTranscript reduce_to_positive(const PlatTuple& t) {
  const FrontDiagram f = build_front(t);
  if (component_count(f) != 1) throw NotAKnotError("reduce_to_positive needs a knot");
  const auto verdict = theorem1_verdict(t);
  if (!verdict.fillable) throw NotFillableError("band criterion fails for " + t.to_string());
  const OrientedBands ob = orient_and_sign(t, f);

  P4PTranscript tr;
  tr.initial = signed_front(f, ob.orientation);
  std::vector<SignedCrossing> current = tr.initial;

  auto in_band = [&](std::size_t b) {
    std::vector<SignedCrossing> out;
    for (const auto& c : current)
      if (f.crossings[static_cast<std::size_t>(c.id)].band == static_cast<int>(b)) out.push_back(c);
    return out;
  };
  auto step = [&](P4PStep::Kind kind, std::optional<P4PCase> tag, std::size_t b) {
    P4PStep s;
    s.kind = kind;
    s.tag = tag;
    s.band = static_cast<int>(b) + 1;
    s.before = current;
    s.removed = in_band(b);
    std::erase_if(current, [&](const SignedCrossing& c) {
      return std::find(s.removed.begin(), s.removed.end(), c) != s.removed.end();
    });
    s.after = current;
    tr.steps.push_back(std::move(s));
  };

  const std::size_t n = t.size();
  for (std::size_t b : {std::size_t{0}, n - 1})
    if (ob.bands[b].sign < 0 && (b == 0 || n > 1)) step(P4PStep::Kind::R2Removal, std::nullopt, b);

  for (std::size_t b = 1; b + 1 < n; ++b) {
    if (ob.bands[b].sign > 0) continue;
    P4PCase tag;
    if (t[b].side) {
      tag = t[b].split() ? P4PCase::SplitDouble : P4PCase::SideDouble;
    } else {
      // Adjacent crossings: the last of the side band before, the first after.
      const auto prev = in_band(b - 1), next = in_band(b + 1);
      tag = prev.back().slot == next.front().slot ? P4PCase::CenterSameSide : P4PCase::CenterOppositeSide;
    }
    step(P4PStep::Kind::Middle, tag, b);
  }
  return tr;
}

P4PCheck validate_positivity(const P4PTranscript& tr, const PlatTuple& t) {
  P4PCheck out;
  const FrontDiagram f = build_front(t);
  if (tr.initial != signed_front(f, orient(f))) {
    out.message = "initial crossing list is not the signed front of " + t.to_string();
    return out;
  }
  if (tr.steps.size() > f.size()) {
    out.message = "more steps than crossings";
    return out;
  }
  auto current = tr.initial;
  for (std::size_t i = 0; i < tr.steps.size(); ++i) {
    const P4PStep& s = tr.steps[i];
    const std::string where = "step " + std::to_string(i) + ": ";
    if (s.before != current) {
      out.message = where + "does not start from the previous list";
      return out;
    }
    const std::size_t expect = s.kind == P4PStep::Kind::R2Removal ? 1 : 2;
    if (s.removed.size() != expect || negatives(s.removed) != static_cast<int>(expect)) {
      out.message = where + "must remove exactly " + std::to_string(expect) + " negative crossing(s)";
      return out;
    }
    if ((s.kind == P4PStep::Kind::Middle) != s.tag.has_value()) {
      out.message = where + "case tag present iff middle step";
      return out;
    }
    auto b = s.before, r = s.removed;
    std::sort(b.begin(), b.end());
    std::sort(r.begin(), r.end());
    std::vector<SignedCrossing> diff;
    std::set_difference(b.begin(), b.end(), r.begin(), r.end(), std::back_inserter(diff));
    auto a = s.after;
    std::sort(a.begin(), a.end());
    if (diff.size() + r.size() != b.size() || diff != a) {
      out.message = where + "after != before - removed";
      return out;
    }
    if (s.negatives_after() >= s.negatives_before()) {
      out.message = where + "negative count does not drop";
      return out;
    }
    current = s.after;
  }
  if (negatives(current) != 0) {
    out.message = std::to_string(negatives(current)) + " negative crossing(s) remain";
    return out;
  }
  out.ok = true;
  return out;
}

}  // namespace platfill
