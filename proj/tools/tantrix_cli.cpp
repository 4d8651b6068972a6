#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "tantrix/driver.hpp"
#include "tantrix/error.hpp"
#include "tantrix/lp_io.hpp"
#include "tantrix/oracle.hpp"
#include "tantrix/render.hpp"
#include "tantrix/solution_io.hpp"

using namespace tantrix;

namespace {

constexpr int kExitSolved = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitExhausted = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitUsage = 64;
constexpr int kExitParse = 65;

struct UsageError : Error {
  using Error::Error;
};

TileSet load_tiles(const std::string& path) {
  if (!path.empty()) return load_tileset_file(path);
  if (const char* env = std::getenv("TANTRIX_TILESET"); env && *env) return load_tileset_file(env);
  return default_tileset();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

Board board_arg(const std::string& spec) {
  try {
    return parse_board_spec(spec);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

struct ModelArgs {
  int n = 0;
  std::string board;
  std::string c6 = "none";
  std::vector<int> cuts;
  std::string objective = "virtual";
  std::string tileset;

  void attach(CLI::App* app) {
    app->add_option("-n,--challenge", n, "challenge number")->required()->check(CLI::Range(3, 1000));
    app->add_option("--board", board, "board as KIND:SIZE, e.g. A:19 or B:12")->required();
    app->add_option("--c6", c6, "neighbour-count family")->check(CLI::IsMember({"none", "a", "b", "c"}));
    app->add_option("--cuts", cuts, "pattern cut lengths")->delimiter(',')->check(CLI::IsMember({3, 4, 5}));
    app->add_option("--objective", objective, "objective")->check(CLI::IsMember({"virtual", "weighted"}));
    app->add_option("--tileset", tileset, "tileset file (default: $TANTRIX_TILESET or the built-in set)");
  }

  ModelOptions options() const {
    ModelOptions o;
    o.c6 = c6 == "a" ? C6Variant::kA : c6 == "b" ? C6Variant::kB : c6 == "c" ? C6Variant::kC : C6Variant::kNone;
    o.cuts = {cuts.begin(), cuts.end()};
    o.objective = objective == "weighted" ? ObjectiveKind::kWeighted : ObjectiveKind::kVirtual;
    return o;
  }
};

ExportFormat format_arg(const std::string& f) { return f == "mps" ? ExportFormat::kMps : ExportFormat::kLp; }

int run(int argc, char** argv) {
  CLI::App app{"Tantrix Discovery solver"};
  app.require_subcommand(1);

  // solve
  ModelArgs solve_args;
  int max_iterations = 200;
  double time_limit = 600;
  std::int64_t node_limit = 50'000'000;
  bool optimize = false;
  std::string holes = "nogood";
  std::string out_path, render_path, progress_path;
  std::vector<std::string> export_spec;
  bool no_solve = false;
  auto* solve_cmd = app.add_subcommand("solve", "build, solve, validate and cut until a valid solution appears");
  solve_args.attach(solve_cmd);
  solve_cmd->add_option("--max-iterations", max_iterations)->check(CLI::PositiveNumber);
  solve_cmd->add_option("--time-limit", time_limit, "seconds per solve")->check(CLI::PositiveNumber);
  solve_cmd->add_option("--node-limit", node_limit, "nodes per solve")->check(CLI::PositiveNumber);
  solve_cmd->add_flag("--optimize", optimize, "search on for better objective values");
  solve_cmd->add_option("--holes", holes, "hole handling")->check(CLI::IsMember({"nogood", "c6"}));
  solve_cmd->add_option("--out", out_path, "solution JSON (default stdout)");
  solve_cmd->add_option("--render", render_path, "also write an SVG of the final arrangement");
  solve_cmd->add_option("--progress", progress_path, "JSON-lines progress log ('-' for stderr)");
  solve_cmd->add_option("--export", export_spec, "FORMAT FILE: write the initial model (lp or mps)")->expected(2);
  solve_cmd->add_flag("--no-solve", no_solve, "stop after --export");

  // validate
  std::string validate_file, validate_tiles, roundness_rows = "occupied";
  auto* validate_cmd = app.add_subcommand("validate", "check a solution file; exit 0 iff it is a Tantrix solution");
  validate_cmd->add_option("file", validate_file)->required();
  validate_cmd->add_option("--tileset", validate_tiles);
  validate_cmd->add_option("--roundness-rows", roundness_rows)->check(CLI::IsMember({"occupied", "spanned"}));

  // render
  std::string render_file, render_tiles, render_format = "svg", render_out;
  RenderOptions ropts;
  bool no_numbers = false, no_highlight = false;
  auto* render_cmd = app.add_subcommand("render", "draw a solution file as SVG or text");
  render_cmd->add_option("file", render_file)->required();
  render_cmd->add_option("--format", render_format)->check(CLI::IsMember({"svg", "ascii"}));
  render_cmd->add_option("--out", render_out);
  render_cmd->add_option("--hex-size", ropts.hex_size)->check(CLI::PositiveNumber);
  render_cmd->add_flag("--no-numbers", no_numbers);
  render_cmd->add_flag("--no-highlight", no_highlight);
  render_cmd->add_option("--tileset", render_tiles);

  // export
  ModelArgs export_args;
  std::string export_format = "lp", export_out;
  auto* export_cmd = app.add_subcommand("export", "write the integer program as LP or MPS text");
  export_args.attach(export_cmd);
  export_cmd->add_option("--format", export_format)->check(CLI::IsMember({"lp", "mps"}));
  export_cmd->add_option("--out", export_out);

  // oracle
  int oracle_n = 0;
  std::string oracle_board, oracle_out, oracle_tiles;
  auto* oracle_cmd = app.add_subcommand("oracle", "enumerate every solution of a tiny instance");
  oracle_cmd->add_option("-n,--challenge", oracle_n)->required()->check(CLI::Range(3, kOracleMaxTiles));
  oracle_cmd->add_option("--board", oracle_board)->required();
  oracle_cmd->add_option("--out", oracle_out);
  oracle_cmd->add_option("--tileset", oracle_tiles);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  if (*solve_cmd) {
    const Board board = board_arg(solve_args.board);
    const TileSet tiles = load_tiles(solve_args.tileset);
    if (board.size() <= solve_args.n) {
      throw UsageError("board " + board.label() + " must have more than " + std::to_string(solve_args.n) + " places");
    }
    if (no_solve && export_spec.empty()) throw UsageError("--no-solve needs --export");
    DriveConfig cfg;
    cfg.options = solve_args.options();
    cfg.max_iterations = max_iterations;
    cfg.solver.time_limit_seconds = time_limit;
    cfg.solver.node_limit = node_limit;
    cfg.solver.optimize = optimize;
    cfg.holes = holes == "c6" ? HoleHandling::kRelyOnC6 : HoleHandling::kNogood;
    if (!export_spec.empty()) {
      if (export_spec[0] != "lp" && export_spec[0] != "mps") throw UsageError("--export format must be lp or mps");
      ModelOptions o = cfg.options;
      o.cuts = guard_cut_lengths(solve_args.n, o.cuts);
      const auto model = build_model(solve_args.n, board, tiles, o);
      write_output(export_spec[1], export_program(model.program(), format_arg(export_spec[0])));
      if (no_solve) return kExitSolved;
    }
    std::ofstream progress_file;
    if (progress_path == "-") {
      cfg.progress = [](const std::string& line) { std::cerr << line << '\n'; };
    } else if (!progress_path.empty()) {
      progress_file.open(progress_path);
      if (!progress_file) throw UsageError("cannot write " + progress_path);
      cfg.progress = [&](const std::string& line) { progress_file << line << '\n' << std::flush; };
    }
    const DriveResult result = solve_tantrix(solve_args.n, board, tiles, cfg);
    if (result.status == DriveStatus::kSolved) {
      write_output(out_path, write_solution_json(*result.arrangement, tiles));
      if (!render_path.empty()) write_output(render_path, render_svg(*result.arrangement, tiles));
      return kExitSolved;
    }
    std::cerr << "no solution: " << drive_status_name(result.status) << " after " << result.iterations
              << " iteration(s)\n";
    return result.status == DriveStatus::kExhausted ? kExitExhausted : kExitInfeasible;
  }

  if (*validate_cmd) {
    const TileSet tiles = load_tiles(validate_tiles);
    const Arrangement arr = read_solution_json(read_file(validate_file));
    const auto rep =
        report(arr, tiles, roundness_rows == "spanned" ? RoundnessRowBasis::kSpanned : RoundnessRowBasis::kOccupied);
    std::cout << report_json(rep) << '\n';
    return rep.is_tantrix_solution ? kExitSolved : kExitInvalid;
  }

  if (*render_cmd) {
    const TileSet tiles = load_tiles(render_tiles);
    const Arrangement arr = read_solution_json(read_file(render_file));
    ropts.format = render_format == "ascii" ? RenderFormat::kAscii : RenderFormat::kSvg;
    ropts.show_place_numbers = !no_numbers;
    ropts.highlight_designated = !no_highlight;
    write_output(render_out, render(arr, tiles, ropts));
    return kExitSolved;
  }

  if (*export_cmd) {
    const Board board = board_arg(export_args.board);
    const TileSet tiles = load_tiles(export_args.tileset);
    if (board.size() < export_args.n) {
      throw UsageError("board " + board.label() + " cannot hold " + std::to_string(export_args.n) + " tiles");
    }
    const auto model = build_model(export_args.n, board, tiles, export_args.options());
    write_output(export_out, export_program(model.program(), format_arg(export_format)));
    return kExitSolved;
  }

  if (*oracle_cmd) {
    const Board board = board_arg(oracle_board);
    const TileSet tiles = load_tiles(oracle_tiles);
    try {
      write_output(oracle_out, golden_text(enumerate_all(oracle_n, board, tiles)));
    } catch (const InstanceTooLarge& e) {
      throw UsageError(e.what());
    }
    return kExitSolved;
  }
  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const FactViolation& e) {
    std::cerr << "tileset rejected: " << e.what() << '\n';
    return kExitParse;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
