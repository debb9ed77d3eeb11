#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "platfill/cobordism.hpp"
#include "platfill/legendrian_front.hpp"
#include "platfill/plat_tuple.hpp"

namespace platfill {

/// SVG drawing of a front with one column per event. Crossings are
/// `<g class="crossing" data-slot="k">`, cusps `<path class="cusp ...">`.
std::string render_svg(const LegendrianFront& f, std::string_view title = {});

/// Plat front of the tuple, titled with its text.
std::string render_svg(const PlatTuple& t);

/// One `<g class="frame">` per transcript frame, empty front first, stacked
/// vertically and captioned with the move that produced it.
std::string render_transcript_svg(const CobordismTranscript& tr, std::string_view title = {});

/// Slots of the crossings in a rendered front, in drawing order.
std::vector<int> crossing_slots_from_svg(std::string_view svg);

}  // namespace platfill
