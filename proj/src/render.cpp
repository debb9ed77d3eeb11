#include "platfill/render.hpp"

#include <algorithm>
#include <regex>
#include <sstream>

#include "platfill/front.hpp"

namespace platfill {

namespace {

constexpr double kColumn = 40.0;
constexpr double kGap = 24.0;
constexpr double kMargin = 20.0;
constexpr double kCaption = 22.0;

std::string escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

int max_strands(const LegendrianFront& f) {
  int m = 0;
  for (std::size_t i = 0; i <= f.size(); ++i) m = std::max(m, f.strands_before(i));
  return m;
}

struct Canvas {
  std::ostringstream body;
  double y0 = 0;

  double y(int slot) const { return y0 + (slot - 1) * kGap; }

  void line(double x1, double y1, double x2, double y2) {
    body << "<line x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2 << "\" y2=\"" << y2 << "\"/>";
  }
};

/// Draws the event columns of `f` with the top strand at `y0`.
void draw_front(Canvas& c, const LegendrianFront& f) {
  int strands = 0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const Event& e = f.events()[i];
    const double x = kMargin + static_cast<double>(i) * kColumn, x2 = x + kColumn;
    const int k = e.slot;
    switch (e.type) {
      case Event::Type::LeftCusp: {
        for (int j = 1; j <= strands; ++j) c.line(x, c.y(j), x2, c.y(j < k ? j : j + 2));
        const double mid = (c.y(k) + c.y(k + 1)) / 2, tip = x + kColumn / 3;
        c.body << "<path class=\"cusp left\" d=\"M" << x2 << "," << c.y(k) << " Q" << tip + 6 << "," << mid << " "
               << tip << "," << mid << " Q" << tip + 6 << "," << mid << " " << x2 << "," << c.y(k + 1) << "\"/>";
        strands += 2;
        break;
      }
      case Event::Type::Crossing:
        for (int j = 1; j <= strands; ++j)
          if (j != k && j != k + 1) c.line(x, c.y(j), x2, c.y(j));
        c.body << "<g class=\"crossing\" data-slot=\"" << k << "\">";
        c.line(x, c.y(k), x2, c.y(k + 1));
        c.line(x, c.y(k + 1), x2, c.y(k));
        c.body << "</g>";
        break;
      case Event::Type::RightCusp: {
        for (int j = 1; j <= strands; ++j)
          if (j != k && j != k + 1) c.line(x, c.y(j), x2, c.y(j < k ? j : j - 2));
        const double mid = (c.y(k) + c.y(k + 1)) / 2, tip = x2 - kColumn / 3;
        c.body << "<path class=\"cusp right\" d=\"M" << x << "," << c.y(k) << " Q" << tip - 6 << "," << mid << " "
               << tip << "," << mid << " Q" << tip - 6 << "," << mid << " " << x << "," << c.y(k + 1) << "\"/>";
        strands -= 2;
        break;
      }
    }
  }
}

std::string document(double width, double height, std::string_view title, const std::string& body) {
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
     << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
  if (!title.empty()) os << "<title>" << escape(title) << "</title>\n";
  os << "<g fill=\"none\" stroke=\"black\" stroke-width=\"1.5\">\n" << body << "\n</g>\n</svg>\n";
  return os.str();
}

}  // namespace

std::string render_svg(const LegendrianFront& f, std::string_view title) {
  Canvas c;
  c.y0 = kMargin;
  draw_front(c, f);
  const double width = 2 * kMargin + std::max<double>(1, static_cast<double>(f.size())) * kColumn;
  const double height = 2 * kMargin + std::max(0, max_strands(f) - 1) * kGap;
  return document(width, height, title, c.body.str());
}

std::string render_svg(const PlatTuple& t) {
  const FrontDiagram f = build_front(t);
  return render_svg(LegendrianFront::from_plat(f, orient(f)), t.to_string());
}

std::string render_transcript_svg(const CobordismTranscript& tr, std::string_view title) {
  const auto frames = tr.frames();
  std::size_t longest = 1;
  int tallest = 1;
  for (const auto& f : frames) {
    longest = std::max(longest, f.size());
    tallest = std::max(tallest, max_strands(f));
  }
  const double frame_height = kCaption + (tallest - 1) * kGap + kMargin;
  Canvas c;
  for (std::size_t i = 0; i < frames.size(); ++i) {
    const double top = kMargin + static_cast<double>(i) * frame_height;
    const std::string caption = i == 0 ? "empty" : tr.moves[i - 1].describe();
    c.body << "<g class=\"frame\" data-index=\"" << i << "\">";
    c.body << "<text x=\"" << kMargin << "\" y=\"" << top + 12
           << "\" font-family=\"monospace\" font-size=\"11\" stroke=\"none\" fill=\"black\">" << escape(caption)
           << "</text>";
    c.y0 = top + kCaption;
    draw_front(c, frames[i]);
    c.body << "</g>\n";
  }
  const double width = 2 * kMargin + static_cast<double>(longest) * kColumn;
  const double height = 2 * kMargin + static_cast<double>(frames.size()) * frame_height;
  return document(std::max(width, 420.0), height, title, c.body.str());
}

std::vector<int> crossing_slots_from_svg(std::string_view svg) {
  static const std::regex re("class=\"crossing\" data-slot=\"(\\d+)\"");
  std::vector<int> out;
  const std::string s(svg);
  for (auto it = std::sregex_iterator(s.begin(), s.end(), re); it != std::sregex_iterator(); ++it)
    out.push_back(std::stoi((*it)[1].str()));
  return out;
}

}  // namespace platfill
