// Command-line front end: analyze one tuple, cross-check a whole range, or
// draw a front.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "platfill/cobordism.hpp"
#include "platfill/plat_tuple.hpp"
#include "platfill/render.hpp"
#include "platfill/report.hpp"
#include "platfill/sweep.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kInconsistent = 2;

int threads_from_env() {
  if (const char* v = std::getenv("PLATFILL_THREADS")) {
    try {
      return std::stoi(v);
    } catch (const std::exception&) {
      std::cerr << "ignoring PLATFILL_THREADS=" << v << "\n";
    }
  }
  return 0;
}

bool write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  out.close();
  if (!out) {
    std::cerr << "error: cannot write " << path << "\n";
    return false;
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariants and fillability of Legendrian 4-plat fronts"};
  app.require_subcommand(1);

  std::string tuple_text;
  bool as_text = false, as_json = false, no_transcripts = false;
  auto* analyze = app.add_subcommand("analyze", "Full report for one tuple such as [3,(6,2),2,(2,0),4]");
  analyze->add_option("tuple", tuple_text, "Band tuple")->required();
  auto* json_flag = analyze->add_flag("--json", as_json, "JSON report (default)");
  analyze->add_flag("--text", as_text, "Human-readable summary")->excludes(json_flag);
  analyze->add_flag("--no-transcripts", no_transcripts, "Omit filling and positivity transcripts");

  int max_crossings = 0;
  int threads = threads_from_env();
  auto* cross = app.add_subcommand("crosscheck", "Check every tuple up to a crossing bound");
  cross->add_option("max_crossings", max_crossings, "Crossing bound (>= 1)")->required();
  cross->add_option("--parallel", threads, "Worker threads (default: PLATFILL_THREADS or all cores)");

  std::string svg_path;
  bool transcript = false;
  auto* render = app.add_subcommand("render", "Draw a front as SVG");
  render->add_option("tuple", tuple_text, "Band tuple")->required();
  render->add_option("--svg", svg_path, "Output path")->required();
  render->add_flag("--transcript", transcript, "Draw every frame of the filling transcript");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*analyze) {
      const auto report = platfill::analyze(platfill::parse_tuple(tuple_text), !no_transcripts);
      if (as_text)
        std::cout << platfill::to_text(report);
      else
        std::cout << platfill::to_json(report).dump(2) << "\n";
      return report.consistent ? kOk : kInconsistent;
    }
    if (*cross) {
      if (max_crossings < 1) {
        std::cerr << "error: max_crossings must be at least 1\n";
        return kUsage;
      }
      const auto summary = platfill::crosscheck(max_crossings, threads);
      std::cout << platfill::to_text(summary);
      return summary.ok() ? kOk : kInconsistent;
    }
    if (*render) {
      const auto t = platfill::parse_tuple(tuple_text);
      const std::string svg = transcript
                                  ? platfill::render_transcript_svg(platfill::build_filling(t), t.to_string())
                                  : platfill::render_svg(t);
      return write_file(svg_path, svg) ? kOk : kUsage;
    }
  } catch (const platfill::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const platfill::ValidityError& e) {
    std::cerr << "invalid tuple: " << e.what() << "\n";
    return kUsage;
  } catch (const platfill::NotFillableError& e) {
    std::cerr << "no filling: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
