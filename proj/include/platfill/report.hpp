#pragma once

#include <optional>
#include <string>

#include "json.hpp"
#include "platfill/cobordism.hpp"
#include "platfill/fillability.hpp"
#include "platfill/positivity.hpp"

namespace platfill {

/// Full pipeline output for one tuple.
struct AnalysisReport {
  PlatInvariants invariants;
  FillabilityReport fillability;
  bool transcripts_requested = true;
  std::optional<CobordismTranscript> filling;
  std::optional<P4PTranscript> positivity;
  /// Why no filling transcript was produced, when the builder declined.
  std::string filling_note;
  /// Band criterion, battery, builder and positivity reduction all agree.
  bool consistent = true;
  std::string inconsistency;
};

AnalysisReport analyze(const PlatTuple& t, bool with_transcripts = true);

using Json = nlohmann::ordered_json;

Json to_json(const Differential& d);
Json to_json(const CobordismTranscript& tr);
Json to_json(const P4PTranscript& tr);
Json to_json(const AnalysisReport& r);

/// Human-readable summary; drops the matrices and transcript details.
std::string to_text(const AnalysisReport& r);

}  // namespace platfill
