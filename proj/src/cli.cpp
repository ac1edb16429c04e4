// SPDX-License-Identifier: Apache-2.0

#include "origami/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <numbers>
#include <sstream>

#include "origami/json_io.hpp"
#include "origami/svg.hpp"

namespace origami::cli {

namespace {

using io::Json;

struct Options {
  std::string svg_path;
  std::string json_path;
  double tol = 0.0;
  std::uint64_t seed = 0;
  int starts = 32;

  std::string axiom_id;
  std::string input;
  std::vector<double> numbers;
  double scalar = 0.0;
  std::string demo;
};

// A positional document is inline JSON, "-" for standard input, or a path.
Json read_document(const std::string& source) {
  std::string text;
  const auto first = source.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (source[first] == '{' || source[first] == '[')) {
    text = source;
  } else if (source == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  } else {
    std::ifstream in(source);
    if (!in) throw Error(ErrorCode::InvalidInput, "cannot read '" + source + "'");
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::InvalidInput, std::string("malformed JSON: ") + e.what());
  }
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::InvalidInput, "cannot write '" + path + "'");
  f << text;
}

svg::Scene vertex_scene(const CreaseVertex& v) {
  svg::Scene scene;
  scene.view = {-1.2, -1.2, 2.4, 2.4};
  double dir = 0.0;
  for (std::size_t i = 0; i < v.crease_count(); ++i) {
    const Point tip{std::cos(dir), std::sin(dir)};
    const bool mountain = v.assignment() && (*v.assignment())[i] == FoldKind::Mountain;
    scene.elements.push_back(svg::Segment{Point{0.0, 0.0}, tip, mountain ? svg::Style::Fold : svg::Style::Crease});
    if (v.assignment()) scene.elements.push_back(svg::Label{1.05 * tip, mountain ? "M" : "V"});
    dir += v.angles()[i];
  }
  return scene;
}

struct Outcome {
  Json doc;
  std::optional<svg::Scene> scene;
  int code = kSuccess;
};

Outcome run_axiom(const Options& o) {
  const AxiomId id = parse_axiom_id(o.axiom_id);
  const AxiomInput in = io::axiom_input_from_json(id, read_document(o.input));
  const FoldSet folds = apply_axiom(id, in);
  return {io::to_json(id, folds), svg::axiom_scene(in, folds), folds.empty() ? kNoSolution : kSuccess};
}

Outcome run_equation(const CubicSolution& sol) {
  return {io::to_json(sol), svg::equation_scene(sol), sol.roots.empty() ? kNoSolution : kSuccess};
}

Outcome run_trace(const ConstructionTrace& trace) {
  return {io::to_json(trace), svg::trace_scene(trace), trace.passed() ? kSuccess : kNoSolution};
}

Outcome run_demo(const Options& o) {
  const auto& n = o.numbers;
  if (o.demo == "angle-sum") {
    if (!n.empty() && n.size() != 6) throw Error(ErrorCode::InvalidInput, "angle-sum takes 0 or 6 coordinates");
    const Triangle t = n.empty() ? Triangle({0.0, 0.0}, {3.0, 0.0}, {1.0, 2.0})
                                 : Triangle({n[0], n[1]}, {n[2], n[3]}, {n[4], n[5]});
    return run_trace(angle_sum_demo(t));
  }
  if (o.demo == "pythagoras") {
    if (!n.empty() && n.size() != 2) throw Error(ErrorCode::InvalidInput, "pythagoras takes 0 or 2 lengths");
    return run_trace(n.empty() ? pythagoras_demo(4.0, 3.0) : pythagoras_demo(n[0], n[1]));
  }
  throw Error(ErrorCode::InvalidInput, "unknown demo '" + o.demo + "' (angle-sum | pythagoras)");
}

Outcome run_flatfold(const Options& o) {
  const CreaseVertex v = io::vertex_from_json(read_document(o.input));
  const FlatFoldVerdict verdict = single_vertex_flat_foldable(v);
  return {io::to_json(verdict), vertex_scene(v), verdict.pass ? kSuccess : kNoSolution};
}

Outcome run_layout(const Options& o) {
  const WeightedTree tree = io::tree_from_json(read_document(o.input));
  OptimizerOptions opt;
  opt.starts = o.starts;
  opt.seed = o.seed;
  const Layout layout = optimize_scale(tree, opt);
  const ActivePathSet paths = mark_active_paths(tree, layout);
  const auto polygons = identify_polygons(layout, paths);
  return {io::to_json(layout, paths, polygons), svg::layout_scene(layout, paths, polygons), kSuccess};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Computational origami toolkit", "origami"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  app.add_option("--svg", o.svg_path, "Write an SVG drawing to PATH");
  app.add_option("--json", o.json_path, "Write the JSON result to PATH instead of stdout");
  auto* tol_opt = app.add_option("--tol", o.tol, "Absolute geometric tolerance");
  app.add_option("--seed", o.seed, "Optimizer seed");
  app.add_option("--starts", o.starts, "Optimizer starts")->check(CLI::PositiveNumber);

  auto* axiom = app.add_subcommand("axiom", "Solve one fold axiom O1..O7");
  axiom->add_option("id", o.axiom_id, "O1..O7")->required();
  axiom->add_option("input", o.input, "JSON object, file path, or - for stdin")->required();

  auto* quadratic = app.add_subcommand("quadratic", "Solve t^2 + p t + q = 0 by folding");
  quadratic->add_option("coefficients", o.numbers, "p q")->required()->expected(2);

  auto* cubic = app.add_subcommand("cubic", "Solve t^3 + a t^2 + b t + c = 0 by folding");
  cubic->add_option("coefficients", o.numbers, "a b c")->required()->expected(3);

  auto* tseg = app.add_subcommand("trisect-segment", "Trisect a segment of length L");
  tseg->add_option("length", o.scalar, "L")->required();

  auto* tang = app.add_subcommand("trisect-angle", "Trisect an angle given in degrees");
  tang->add_option("degrees", o.scalar, "DEG")->required();

  auto* demo = app.add_subcommand("demo", "Verified fold demonstrations");
  demo->add_option("name", o.demo, "angle-sum | pythagoras")->required();
  demo->add_option("values", o.numbers, "optional triangle coordinates or leg lengths");

  auto* flat = app.add_subcommand("flatfold", "Single-vertex flat-foldability check");
  flat->add_option("vertex", o.input, "vertex JSON (file, inline, or -)")->required();

  auto* layout = app.add_subcommand("layout", "Scale-optimal layout of a weighted tree");
  layout->add_option("tree", o.input, "tree JSON (file, inline, or -)")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return kInvalidInput;
  }

  try {
    set_default_tolerance(Tolerance{});
    if (const char* env = std::getenv("ORIGAMI_TOL")) {
      char* end = nullptr;
      const double v = std::strtod(env, &end);
      if (end == env || *end != '\0') throw Error(ErrorCode::InvalidInput, "ORIGAMI_TOL is not a number");
      set_default_tolerance(Tolerance::checked(v));
    }
    if (*tol_opt) set_default_tolerance(Tolerance::checked(o.tol));

    Outcome result;
    if (*axiom) {
      result = run_axiom(o);
    } else if (*quadratic) {
      result = run_equation(solve_quadratic(o.numbers[0], o.numbers[1]));
    } else if (*cubic) {
      result = run_equation(solve_cubic(o.numbers[0], o.numbers[1], o.numbers[2]));
    } else if (*tseg) {
      result = run_trace(trisect_segment(o.scalar));
    } else if (*tang) {
      result = run_trace(trisect_angle(o.scalar * std::numbers::pi / 180.0));
    } else if (*demo) {
      result = run_demo(o);
    } else if (*flat) {
      result = run_flatfold(o);
    } else {
      result = run_layout(o);
    }

    const std::string text = result.doc.dump(2) + "\n";
    if (o.json_path.empty()) {
      out << text;
    } else {
      write_text(o.json_path, text);
    }
    if (!o.svg_path.empty() && result.scene) write_text(o.svg_path, svg::render(*result.scene));
    return result.code;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    const bool numerical = e.code() == ErrorCode::NumericalFailure || e.code() == ErrorCode::OptimizationFailed;
    return numerical ? kNumericalFailure : kInvalidInput;
  }
}

}  // namespace origami::cli
