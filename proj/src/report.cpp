#include "platfill/report.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace platfill {

AnalysisReport analyze(const PlatTuple& t, bool with_transcripts) {
  AnalysisReport r;
  r.invariants = compute_invariants(t);
  r.fillability = classify(r.invariants);
  r.transcripts_requested = with_transcripts;
  r.consistent = r.fillability.consistent;
  r.inconsistency = r.fillability.inconsistency;

  auto fail = [&](const std::string& why) {
    if (r.consistent) r.inconsistency = why;
    r.consistent = false;
  };

  // The builder runs whenever the battery verdict matters, so the
  // consistency flag does not depend on --no-transcripts.
  std::optional<CobordismTranscript> filling;
  try {
    filling = build_filling(t);
    if (auto c = validate_transcript(*filling, t); !c.ok) fail("filling transcript invalid: " + c.message);
  } catch (const NotFillableError& e) {
    r.filling_note = e.what();
  }
  const bool knot_fillable = r.fillability.theorem1 && r.fillability.theorem1->fillable;
  if (r.invariants.is_knot() && knot_fillable != filling.has_value())
    fail(knot_fillable ? "band criterion says fillable but the builder declined"
                       : "builder produced a filling for a tuple the band criterion rejects");

  std::optional<P4PTranscript> positivity;
  if (r.invariants.is_knot() && knot_fillable) {
    positivity = reduce_to_positive(t);
    if (auto c = validate_positivity(*positivity, t); !c.ok) fail("positivity transcript invalid: " + c.message);
  }
  if (with_transcripts) {
    r.filling = std::move(filling);
    r.positivity = std::move(positivity);
  }
  return r;
}

namespace {

std::string sign_char(int s) { return s > 0 ? "+" : "-"; }

std::vector<std::string> matrix_rows(const gf2::Matrix& m) {
  std::vector<std::string> rows;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::string row;
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j) ? '1' : '0');
    rows.push_back(row);
  }
  return rows;
}

Json event_word(const EventWord& w) {
  Json out = Json::array();
  for (const auto& e : w) out.push_back(e.to_string());
  return out;
}

Json crossing_list(const std::vector<SignedCrossing>& v) {
  Json out = Json::array();
  for (const auto& c : v) out.push_back({{"id", c.id + 1}, {"slot", c.slot}, {"sign", sign_char(c.sign)}});
  return out;
}

Json names(const Differential& d, const std::vector<int>& gens) {
  Json out = Json::array();
  for (int g : gens) out.push_back(d.gens[static_cast<std::size_t>(g)].name());
  return out;
}

}  // namespace

Json to_json(const Differential& d) {
  Json gens = Json::array();
  for (const auto& g : d.gens)
    gens.push_back({{"name", g.name()},
                    {"kind", g.kind == GeneratorKind::Crossing ? "crossing" : "right-cusp"},
                    {"degree", g.degree}});
  Json diff = Json::object();
  for (std::size_t i = 0; i < d.gens.size(); ++i) {
    std::vector<Word> words;
    for (const auto& w : d.d[i].terms())
      if (!w.empty()) words.push_back(w);
    std::sort(words.begin(), words.end(), [&](const Word& a, const Word& b) {
      if (a.size() != b.size()) return a.size() < b.size();
      return d.word_string(a) < d.word_string(b);
    });
    Json ws = Json::array();
    for (const auto& w : words) ws.push_back(names(d, w));
    diff[d.gens[i].name()] = {{"constant", d.d[i].has_constant()}, {"words", ws}};
  }
  return {{"generators", gens}, {"differential", diff}};
}

Json to_json(const CobordismTranscript& tr) {
  Json moves = Json::array();
  for (const auto& m : tr.moves) {
    Json j = {{"kind", to_string(m.kind)}};
    if (m.kind == Move::Kind::OneHandle) j["site"] = to_string(m.site);
    if (m.kind == Move::Kind::Isotopy) j["tag"] = to_string(m.tag);
    j["index"] = m.index;
    j["before"] = event_word(m.before);
    j["after"] = event_word(m.after);
    moves.push_back(j);
  }
  Json frames = Json::array();
  for (const auto& f : tr.frames()) frames.push_back(event_word(f.events()));
  return {{"moves", moves},
          {"frames", frames},
          {"accounting",
           {{"zero_handles", tr.accounting.zero_handles},
            {"one_handles", tr.accounting.one_handles},
            {"euler_characteristic", tr.accounting.euler_characteristic}}}};
}

Json to_json(const P4PTranscript& tr) {
  Json steps = Json::array();
  for (const auto& s : tr.steps) {
    Json j = {{"kind", to_string(s.kind)}, {"band", s.band}};
    j["case"] = s.tag ? Json(to_string(*s.tag)) : Json(nullptr);
    j["removed"] = crossing_list(s.removed);
    j["negatives_before"] = s.negatives_before();
    j["negatives_after"] = s.negatives_after();
    steps.push_back(j);
  }
  return {{"initial", crossing_list(tr.initial)},
          {"steps", steps},
          {"final", crossing_list(tr.final_crossings())}};
}

Json to_json(const AnalysisReport& r) {
  const PlatInvariants& inv = r.invariants;
  Json j;
  j["tuple"] = inv.tuple.to_string();
  j["totals"] = {{"crossings", inv.tuple.total_crossings()},
                 {"bands", inv.tuple.size()},
                 {"components", inv.components}};
  if (inv.classical)
    j["classical"] = {{"tb", inv.classical->tb}, {"rotation", inv.classical->rotation}, {"writhe", inv.classical->writhe}};
  else
    j["classical"] = nullptr;

  const auto& left = inv.oriented.orientation.words.front();
  j["orientation"] = {{"left_word", to_string(left)}, {"class", to_string(word_class(left))}};

  Json bands = Json::array();
  for (std::size_t i = 0; i < inv.tuple.size(); ++i) {
    const Band& b = inv.tuple[i];
    const BandInfo& info = inv.oriented.bands[i];
    Json e = {{"index", i + 1}, {"kind", b.side ? "side" : "center"}, {"crossings", b.crossings()}};
    if (b.side) e["sub_bands"] = {b.upper, b.lower};
    e["sign"] = sign_char(info.sign);
    e["internal"] = info.internal;
    e["taxonomy"] = to_string(info.taxonomy);
    bands.push_back(e);
  }
  j["bands"] = bands;

  const auto& signs = inv.oriented.orientation.signs;
  Json sets = Json::array();
  int graded = 0;
  for (const auto& rl : inv.rulings) {
    sets.push_back(rl.switches);
    graded += is_graded(rl, signs) ? 1 : 0;
  }
  j["rulings"] = {{"exists", !inv.rulings.empty()},
                  {"count", inv.rulings.size()},
                  {"graded_count", graded},
                  {"switch_sets", sets}};

  j["dga"] = to_json(inv.differential);

  Json augs = Json::array();
  std::set<std::pair<int, int>> dims;
  for (std::size_t i = 0; i < inv.augmentations.size(); ++i) {
    const auto& c = inv.complexes[i];
    dims.insert({c.dim_lch0, c.dim_lch1});
    Json e = {{"bits", inv.augmentations[i].bits()}, {"dim_lch0", c.dim_lch0}, {"dim_lch1", c.dim_lch1}};
    if (inv.classical) e["seidel_check"] = seidel_dimension_check(c, inv.classical->tb);
    e["complex"] = {{"degree0", names(inv.differential, c.degree0)},
                    {"degree1", names(inv.differential, c.degree1)},
                    {"from1_to0", matrix_rows(c.from1_to0)},
                    {"from0_to1", matrix_rows(c.from0_to1)}};
    augs.push_back(e);
  }
  Json dim_pairs = Json::array();
  for (auto [a, b] : dims) dim_pairs.push_back({a, b});
  j["augmentations"] = {{"count", inv.augmentations.size()}, {"dims", dim_pairs}, {"list", augs}};

  Json fill;
  if (const auto& v = r.fillability.theorem1) {
    Json viol = Json::array();
    for (const auto& x : v->violations) viol.push_back({{"band", x.band}, {"rule", to_string(x.rule)}});
    fill["band_criterion"] = {{"fillable", v->fillable}, {"violations", viol}};
  } else {
    fill["band_criterion"] = nullptr;
  }
  const auto& b = r.fillability.battery;
  fill["obstructions"] = {{"not_a_knot", b.not_a_knot},
                          {"rotation_nonzero", b.rotation_nonzero},
                          {"no_normal_ruling", b.no_normal_ruling},
                          {"no_augmentation", b.no_augmentation},
                          {"seidel_dimension_fails_for_all", b.seidel_dimension_fails_for_all},
                          {"fundamental_class_fires", b.fundamental_class_fires},
                          {"fired", b.fired()}};
  fill["structure"] = {{"alternating_signs", r.fillability.structure.alternating_signs},
                       {"external_negative_singles", r.fillability.structure.external_negative_singles}};
  j["fillability"] = fill;

  if (r.transcripts_requested) {
    j["transcripts"] = {{"filling", r.filling ? to_json(*r.filling) : Json(nullptr)},
                        {"filling_note", r.filling_note},
                        {"positivity", r.positivity ? to_json(*r.positivity) : Json(nullptr)}};
  } else {
    j["transcripts"] = nullptr;
  }
  j["consistent"] = r.consistent;
  j["inconsistency"] = r.inconsistency;
  return j;
}

std::string to_text(const AnalysisReport& r) {
  constexpr std::size_t kTextItems = 12;
  const PlatInvariants& inv = r.invariants;
  std::ostringstream os;
  os << "tuple        " << inv.tuple.to_string() << "\n";
  os << "crossings    " << inv.tuple.total_crossings() << ", components " << inv.components << "\n";
  if (inv.classical)
    os << "classical    tb " << inv.classical->tb << ", rotation " << inv.classical->rotation << "\n";
  os << "orientation  " << to_string(inv.oriented.orientation.words.front()) << "\n";
  os << "bands        ";
  for (std::size_t i = 0; i < inv.tuple.size(); ++i) {
    const auto& info = inv.oriented.bands[i];
    os << (i ? "  " : "") << sign_char(info.sign) << info.crossings << " " << to_string(info.taxonomy);
  }
  os << "\nrulings      " << inv.rulings.size();
  for (std::size_t i = 0; i < inv.rulings.size(); ++i) {
    if (i == kTextItems) {
      os << " ...";
      break;
    }
    const auto& rl = inv.rulings[i];
    os << " {";
    for (std::size_t k = 0; k < rl.switches.size(); ++k) os << (k ? "," : "") << rl.switches[k];
    os << "}";
  }
  os << "\ndifferential\n";
  for (std::size_t g = 0; g < inv.differential.gens.size(); ++g) {
    std::string poly = inv.differential.to_string(static_cast<int>(g));
    const auto terms = inv.differential.d[g].size();
    if (terms > kTextItems) {
      std::size_t cut = 0;
      for (std::size_t k = 0; k < kTextItems; ++k) cut = poly.find(" + ", cut) + 3;
      poly = poly.substr(0, cut) + "... (" + std::to_string(terms) + " terms)";
    }
    os << "  d" << inv.differential.gens[g].name() << " = " << poly << "\n";
  }
  os << "augmentations " << inv.augmentations.size();
  std::set<std::pair<int, int>> dims;
  for (const auto& c : inv.complexes) dims.insert({c.dim_lch0, c.dim_lch1});
  for (auto [a, b] : dims) os << " dims(" << a << "," << b << ")";
  os << "\n";
  if (const auto& v = r.fillability.theorem1) {
    os << "fillable     " << (v->fillable ? "yes" : "no");
    for (const auto& x : v->violations) os << " [band " << x.band << " " << to_string(x.rule) << "]";
    os << "\n";
  }
  const auto fired = r.fillability.battery.fired();
  os << "obstructions ";
  if (fired.empty()) os << "none";
  for (std::size_t i = 0; i < fired.size(); ++i) os << (i ? ", " : "") << fired[i];
  os << "\n";
  if (r.filling)
    os << "filling      " << r.filling->moves.size() << " moves, " << r.filling->accounting.zero_handles
       << " 0-handles, " << r.filling->accounting.one_handles << " 1-handles, chi "
       << r.filling->accounting.euler_characteristic << "\n";
  if (r.positivity)
    os << "positivity   " << r.positivity->steps.size() << " steps, " << r.positivity->final_crossings().size()
       << " crossings remain\n";
  os << "consistent   " << (r.consistent ? "yes" : "no: " + r.inconsistency) << "\n";
  return os.str();
}

}  // namespace platfill
