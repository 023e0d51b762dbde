#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "polydetect/io.hpp"
#include "polydetect/pipeline.hpp"

namespace {

int line_of(const polydetect::ParsedSegments& parsed, size_t segment) {
  return segment < parsed.line_numbers.size() ? parsed.line_numbers[segment]
                                              : static_cast<int>(segment) + 1;
}

void print_stats(const polydetect::RunStats& st) {
  std::cerr << "lines          " << st.lines << "\n"
            << "intersections  " << st.intersections << "\n"
            << "nodes          " << st.nodes << "\n"
            << "edges          " << st.edges << "\n"
            << "components     " << st.components << "\n"
            << "cyclomatic     " << st.cyclomatic << "\n"
            << "polygons       " << st.polygons << "\n"
            << "graph ms       " << polydetect::format_number(st.times.graph_ms) << "\n"
            << "mcb ms         " << polydetect::format_number(st.times.mcb_ms) << "\n"
            << "polygons ms    " << polydetect::format_number(st.times.polygons_ms) << "\n"
            << "total ms       " << polydetect::format_number(st.times.total_ms) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"polydetect: detect minimal polygons in a set of 2D line segments"};
  std::string input_path;
  std::string output_path = "-";
  std::string svg_path;
  std::string metric_name = "euclidean";
  double epsilon = 1e-9;
  bool stats_flag = false;

  app.add_option("--input,-i", input_path, "segment file, one \"x1 y1 x2 y2\" per line")
      ->required();
  app.add_option("--output,-o", output_path, "JSON output path ('-' for stdout)");
  app.add_option("--epsilon", epsilon, "point snapping tolerance")->check(CLI::NonNegativeNumber);
  app.add_option("--metric", metric_name, "cycle length metric: euclidean or hops")
      ->check(CLI::IsMember({"euclidean", "hops"}));
  app.add_option("--svg", svg_path, "also render input/graph/polygons as SVG");
  app.add_flag("--stats", stats_flag, "print run statistics and include timings in the JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  std::ifstream in(input_path);
  if (!in) {
    std::cerr << "error: cannot open " << input_path << "\n";
    return 1;
  }

  polydetect::ParsedSegments parsed;
  try {
    parsed = polydetect::read_segment_file(in);
  } catch (const polydetect::ParseError& e) {
    std::cerr << "error: " << input_path << ": " << e.what() << "\n";
    return 2;
  }

  polydetect::DetectConfig cfg;
  cfg.tolerance.eps = epsilon;
  cfg.metric = metric_name == "hops" ? polydetect::LengthMetric::HopCount
                                     : polydetect::LengthMetric::Euclidean;
  cfg.emit_stats = stats_flag;

  polydetect::DetectResult result;
  try {
    result = polydetect::detect_polygons(parsed.set, cfg);
  } catch (const polydetect::ValidationError& e) {
    for (const auto& issue : e.issues())
      std::cerr << "error: " << issue.reason << " at line " << line_of(parsed, issue.segment)
                << "\n";
    return 2;
  } catch (const polydetect::OverlapError& e) {
    std::cerr << "error: collinear overlapping segments at lines "
              << line_of(parsed, e.first_segment()) << " and "
              << line_of(parsed, e.second_segment()) << "\n";
    return 2;
  }

  const std::string json = polydetect::to_json(result, stats_flag);
  if (output_path == "-") {
    std::cout << json;
    if (!std::cout) {
      std::cerr << "error: cannot write to stdout\n";
      return 1;
    }
  } else {
    std::ofstream out(output_path);
    out << json;
    if (!out) {
      std::cerr << "error: cannot write " << output_path << "\n";
      return 1;
    }
  }

  if (!svg_path.empty()) {
    std::ofstream svg(svg_path);
    if (svg) polydetect::write_svg(svg, parsed.set, result.graph, result.polygons);
    if (!svg) {
      std::cerr << "error: cannot write " << svg_path << "\n";
      return 1;
    }
  }

  if (stats_flag) print_stats(result.stats);
  return 0;
}
