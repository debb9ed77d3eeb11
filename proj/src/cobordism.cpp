#include "platfill/cobordism.hpp"

#include <algorithm>
#include <array>

#include "platfill/fillability.hpp"
#include "platfill/front.hpp"

namespace platfill {

Move Move::zero_handle(std::size_t index, int slot, Dir upper) {
  Move m;
  m.kind = Kind::ZeroHandle;
  m.index = index;
  m.after = {Event::left(slot, upper), Event::right(slot)};
  return m;
}

Move Move::crossing(std::size_t index, int slot) {
  Move m;
  m.kind = Kind::OneHandle;
  m.site = Site::CrossingInsertion;
  m.index = index;
  m.after = {Event::cross(slot)};
  return m;
}

Move Move::cusp_merge(std::size_t index, int slot, Dir upper) {
  Move m;
  m.kind = Kind::OneHandle;
  m.site = Site::CuspMerge;
  m.index = index;
  m.before = {Event::right(slot), Event::left(slot, upper)};
  return m;
}

Move Move::isotopy(IsotopyTag tag, std::size_t index, EventWord before, EventWord after) {
  Move m;
  m.kind = Kind::Isotopy;
  m.tag = tag;
  m.index = index;
  m.before = std::move(before);
  m.after = std::move(after);
  return m;
}

std::string to_string(Move::Kind k) {
  switch (k) {
    case Move::Kind::ZeroHandle: return "0-handle";
    case Move::Kind::OneHandle: return "1-handle";
    case Move::Kind::Isotopy: return "isotopy";
  }
  return "?";
}

std::string to_string(Move::Site s) {
  switch (s) {
    case Move::Site::None: return "none";
    case Move::Site::CrossingInsertion: return "crossing";
    case Move::Site::CuspMerge: return "cusp-merge";
  }
  return "?";
}

std::string Move::describe() const {
  std::string head = to_string(kind);
  if (kind == Kind::OneHandle) head += " (" + to_string(site) + ")";
  if (kind == Kind::Isotopy) head += " " + to_string(tag);
  auto word = [](const EventWord& w) { return w.empty() ? std::string("-") : to_string(w); };
  return head + " @" + std::to_string(index) + ": " + word(before) + " -> " + word(after);
}

Accounting count_handles(const std::vector<Move>& moves) {
  Accounting a;
  for (const auto& m : moves) {
    if (m.kind == Move::Kind::ZeroHandle) ++a.zero_handles;
    if (m.kind == Move::Kind::OneHandle) ++a.one_handles;
  }
  a.euler_characteristic = a.zero_handles - a.one_handles;
  return a;
}

namespace {

bool word_at(const EventWord& w, std::size_t index, const EventWord& sub) {
  if (index > w.size() || w.size() - index < sub.size()) return false;
  return std::equal(sub.begin(), sub.end(), w.begin() + static_cast<std::ptrdiff_t>(index));
}

std::optional<std::string> local_check(const LegendrianFront& front, const Move& m) {
  const int strands = front.strands_before(m.index);
  switch (m.kind) {
    case Move::Kind::ZeroHandle:
      if (!m.before.empty() || m.after.size() != 2 || m.after[0].type != Event::Type::LeftCusp ||
          m.after[1] != Event::right(m.after[0].slot))
        return "0-handle must insert an adjacent left/right cusp pair";
      if (m.after[0].slot > strands + 1) return "0-handle slot out of range";
      return std::nullopt;
    case Move::Kind::OneHandle:
      if (m.site == Move::Site::CrossingInsertion) {
        if (!m.before.empty() || m.after.size() != 1 || m.after[0].type != Event::Type::Crossing)
          return "crossing 1-handle must insert a single crossing";
        const auto dirs = front.slice(m.index);
        const auto k = static_cast<std::size_t>(m.after[0].slot - 1);
        if (m.after[0].slot < 1 || k + 1 >= dirs.size()) return "crossing 1-handle slot out of range";
        if (dirs[k] != dirs[k + 1]) return "crossing 1-handle joins strands with incompatible orientations";
        return std::nullopt;
      }
      if (m.site == Move::Site::CuspMerge) {
        if (!m.after.empty() || m.before.size() != 2 || m.before[0].type != Event::Type::RightCusp ||
            m.before[1].type != Event::Type::LeftCusp || m.before[0].slot != m.before[1].slot)
          return "cusp-merge 1-handle must remove R(k) L(k)";
        const auto dirs = front.slice(m.index);
        if (m.before[0].slot < 1 || static_cast<std::size_t>(m.before[0].slot) >= dirs.size())
          return "cusp-merge 1-handle slot out of range";
        if (dirs[static_cast<std::size_t>(m.before[0].slot - 1)] != m.before[1].upper)
          return "cusp-merge 1-handle joins strands with incompatible orientations";
        return std::nullopt;
      }
      return "1-handle without a site";
    case Move::Kind::Isotopy:
      if (!is_isotopy_instance(m.tag, m.before, m.after, strands))
        return "not an instance of " + to_string(m.tag);
      return std::nullopt;
  }
  return "unknown move";
}

}  // namespace

std::optional<std::string> apply_move(LegendrianFront& front, const Move& m) {
  auto& w = front.events();
  if (!word_at(w, m.index, m.before)) return "move does not match the front at event " + std::to_string(m.index);
  if (auto err = local_check(front, m)) return err;
  LegendrianFront next = front;
  auto& nw = next.events();
  const auto at = nw.begin() + static_cast<std::ptrdiff_t>(m.index);
  nw.erase(at, at + static_cast<std::ptrdiff_t>(m.before.size()));
  nw.insert(nw.begin() + static_cast<std::ptrdiff_t>(m.index), m.after.begin(), m.after.end());
  // Every intermediate front is closed and coherently oriented.
  if (auto err = next.check()) return "result is not a valid front: " + *err;
  front = std::move(next);
  return std::nullopt;
}

std::vector<LegendrianFront> CobordismTranscript::frames() const {
  std::vector<LegendrianFront> out{LegendrianFront{}};
  LegendrianFront f;
  for (const auto& m : moves) {
    if (apply_move(f, m)) break;
    out.push_back(f);
  }
  return out;
}

namespace {

/// Side band of a two-crossing piece [1, D, 1].
enum class PieceSide { Upper, Lower, Split };

/// Two eyes at `offset`, then the isotopies that turn them into the plat
/// front L1 L3 X2 D X2 R3 R1 of the piece. Indices are absolute.
std::vector<Move> piece_moves(std::optional<PieceSide> side, std::size_t offset, Dir a, Dir b) {
  using E = Event;
  std::vector<Move> mv;
  mv.push_back(Move::zero_handle(offset, 1, a));
  mv.push_back(Move::zero_handle(offset + 1, 3, b));
  if (!side) return mv;
  const std::size_t i = offset + 1;
  switch (*side) {
    case PieceSide::Upper:
      mv.push_back(Move::isotopy(IsotopyTag::Commute, offset, {E::left(1, a), E::left(3, b)},
                                 {E::left(1, b), E::left(1, a)}));
      mv.push_back(Move::isotopy(IsotopyTag::R2, i, {E::left(1, a)},
                                 {E::left(2, a), E::cross(1), E::cross(2)}));
      mv.push_back(Move::isotopy(IsotopyTag::R2, i, {E::left(2, a)},
                                 {E::left(1, a), E::cross(2), E::cross(1)}));
      mv.push_back(Move::isotopy(IsotopyTag::Commute, offset, {E::left(1, b), E::left(1, a)},
                                 {E::left(1, a), E::left(3, b)}));
      break;
    case PieceSide::Lower:
      mv.push_back(Move::isotopy(IsotopyTag::R2, i, {E::left(3, b)},
                                 {E::left(2, b), E::cross(3), E::cross(2)}));
      mv.push_back(Move::isotopy(IsotopyTag::R2, i, {E::left(2, b)},
                                 {E::left(3, b), E::cross(2), E::cross(3)}));
      break;
    case PieceSide::Split:
      mv.push_back(Move::isotopy(IsotopyTag::R2, i, {E::left(3, b)},
                                 {E::left(2, b), E::cross(3), E::cross(2)}));
      mv.push_back(Move::isotopy(IsotopyTag::R2, i, {E::left(2, b)},
                                 {E::left(1, b), E::cross(2), E::cross(1)}));
      mv.push_back(Move::isotopy(IsotopyTag::Commute, offset, {E::left(1, a), E::left(1, b)},
                                 {E::left(1, b), E::left(3, a)}));
      break;
  }
  return mv;
}

constexpr std::size_t kPieceLength = 8;  // L1 L3 X2 D D X2 R3 R1

struct Reduction {
  std::vector<bool> kept;  // per crossing of the full front
  std::vector<PieceSide> pieces;
};

Reduction reduce(const PlatTuple& t, const FrontDiagram& f, const std::vector<BandInfo>& bands) {
  Reduction r;
  r.kept.assign(f.size(), false);
  const std::size_t n = t.size();
  std::vector<std::vector<std::size_t>> by_band(n);
  for (std::size_t i = 0; i < f.size(); ++i) by_band[static_cast<std::size_t>(f.crossings[i].band)].push_back(i);
  for (std::size_t b = 0; b < n; ++b) {
    const auto& idx = by_band[b];
    if (bands[b].sign < 0) {
      for (auto i : idx) r.kept[i] = true;
      continue;
    }
    if (n == 1) continue;
    if (!t[b].side) {
      const std::size_t keep = bands[b].internal ? 2 : 1;
      for (std::size_t k = 0; k < keep; ++k) r.kept[idx[k]] = true;
    } else if (t[b].split()) {
      r.kept[idx.front()] = true;                             // first upper
      r.kept[idx[static_cast<std::size_t>(t[b].upper)]] = true;  // first lower
    } else {
      r.kept[idx[0]] = r.kept[idx[1]] = true;
    }
  }
  for (std::size_t b = 1; b < n; b += 2) {
    int up = 0, lo = 0;
    for (auto i : by_band[b])
      if (r.kept[i]) (f.crossings[i].slot == 1 ? up : lo)++;
    r.pieces.push_back(up == 2 ? PieceSide::Upper : lo == 2 ? PieceSide::Lower : PieceSide::Split);
  }
  return r;
}

/// Final L1/L3 directions of a piece built with eye directions (a, b).
std::array<Dir, 2> piece_cusps(std::optional<PieceSide> side, Dir a, Dir b) {
  LegendrianFront f;
  for (const auto& m : piece_moves(side, 0, a, b)) apply_move(f, m);
  return {f.events()[0].upper, f.events()[1].upper};
}

std::optional<CobordismTranscript> assemble(const Reduction& red, const FrontDiagram& f, Dir a0, Dir b0) {
  constexpr std::array<Dir, 2> kDirs{Dir::R, Dir::L};
  CobordismTranscript tr;
  LegendrianFront front;
  auto emit = [&](const Move& m) {
    if (apply_move(front, m)) return false;
    tr.moves.push_back(m);
    return true;
  };

  std::vector<std::optional<PieceSide>> sides;
  if (red.pieces.empty()) sides.push_back(std::nullopt);
  for (auto s : red.pieces) sides.push_back(s);

  for (std::size_t p = 0; p < sides.size(); ++p) {
    Dir a = a0, b = b0;
    if (p > 0) {
      // The next piece's cusps must continue the strands leaving this one.
      const auto dirs = front.slice(front.size() - 2);
      bool found = false;
      for (Dir x : kDirs)
        for (Dir y : kDirs)
          if (!found && piece_cusps(sides[p], x, y) == std::array<Dir, 2>{dirs[0], dirs[2]}) {
            a = x, b = y, found = true;
          }
      if (!found) return std::nullopt;
    }
    for (const auto& m : piece_moves(sides[p], p * kPieceLength, a, b))
      if (!emit(m)) return std::nullopt;
  }

  for (std::size_t p = sides.size() - 1; p > 0; --p) {
    const std::size_t r1 = p * kPieceLength - 1;
    const auto& w = front.events();
    if (!emit(Move::cusp_merge(r1, 1, w[r1 + 1].upper))) return std::nullopt;
    if (!emit(Move::cusp_merge(r1 - 1, 3, front.events()[r1].upper))) return std::nullopt;
  }

  for (std::size_t i = 0; i < f.size(); ++i)
    if (!red.kept[i] && !emit(Move::crossing(2 + i, f.crossings[i].slot))) return std::nullopt;

  tr.accounting = count_handles(tr.moves);
  return tr;
}

}  // namespace

CobordismTranscript build_filling(const PlatTuple& t) {
  const FrontDiagram f = build_front(t);
  OrientedBands ob;
  try {
    ob = orient_and_sign(t, f);
  } catch (const std::logic_error&) {
    throw NotFillableError("band with mixed crossing signs");
  }
  const auto verdict = band_criterion(ob.bands);
  if (!verdict.fillable) {
    std::string why = "not fillable:";
    for (const auto& v : verdict.violations)
      why += " band " + std::to_string(v.band) + " " + to_string(v.rule);
    throw NotFillableError(why);
  }
  const auto s = structural_checks(ob.bands);
  if (!s.alternating_signs) throw NotFillableError("band signs do not alternate");
  if (!s.external_negative_singles) throw NotFillableError("external negative band has more than one crossing");

  const Reduction red = reduce(t, f, ob.bands);
  for (Dir a : {Dir::R, Dir::L})
    for (Dir b : {Dir::R, Dir::L})
      if (auto tr = assemble(red, f, a, b); tr && validate_transcript(*tr, t).ok) return *tr;
  throw std::logic_error("filling construction failed on " + t.to_string());
}

TranscriptCheck validate_transcript(const CobordismTranscript& tr, const PlatTuple& t) {
  TranscriptCheck out;
  LegendrianFront front;
  for (std::size_t i = 0; i < tr.moves.size(); ++i) {
    if (auto err = apply_move(front, tr.moves[i])) {
      out.failed_move = i;
      out.message = "move " + std::to_string(i) + " (" + tr.moves[i].describe() + "): " + *err;
      return out;
    }
  }
  const FrontDiagram f = build_front(t);
  const OrientationState s = orient(f);
  const LegendrianFront target = LegendrianFront::from_plat(f, s);
  if (front != target && front != target.reversed()) {
    out.message = "final front " + to_string(front.events()) + " differs from target " +
                  to_string(target.events());
    return out;
  }
  const Accounting a = count_handles(tr.moves);
  if (a.zero_handles != tr.accounting.zero_handles || a.one_handles != tr.accounting.one_handles ||
      tr.accounting.euler_characteristic != a.zero_handles - a.one_handles) {
    out.message = "accounting does not match the moves";
    return out;
  }
  if (component_count(f) == 1) {
    const int tb = classical_invariants(f, s).tb;
    if (tb != a.one_handles - a.zero_handles) {
      out.message = "tb = " + std::to_string(tb) + " but one_handles - zero_handles = " +
                    std::to_string(a.one_handles - a.zero_handles);
      return out;
    }
  }
  out.ok = true;
  return out;
}

}  // namespace platfill
