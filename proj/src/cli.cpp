#include "symca/cli.hpp"

#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "symca/errors.hpp"
#include "symca/interval_table.hpp"
#include "symca/io.hpp"
#include "symca/svg.hpp"
#include "symca/symca_projection.hpp"
#include "symca/verification.hpp"

namespace symca::cli {

namespace {

struct RunConfig {
  std::string survey_path;
  std::string table_path;
  std::string result_path;
  std::string output_path;
  int n_axes = 0;  // 0: all
  std::string plot_axes = "0,1";
  int width = 800;
  int height = 800;
  bool drop_empty = false;
  verify::Options verify;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ValidationError("cannot write '" + path + "'");
  out << bytes;
  if (!out) throw ValidationError("failed writing '" + path + "'");
}

std::pair<std::size_t, std::size_t> parse_axis_pair(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw ValidationError("--axes expects two indices like 0,1");
  try {
    std::size_t used = 0;
    const auto a = std::stoul(text.substr(0, comma), &used);
    if (used != comma) throw std::invalid_argument(text);
    const auto rest = text.substr(comma + 1);
    const auto b = std::stoul(rest, &used);
    if (used != rest.size()) throw std::invalid_argument(text);
    return {a, b};
  } catch (const std::logic_error&) {
    throw ValidationError("--axes expects two non-negative indices like 0,1, got '" + text + "'");
  }
}

int build_table(const RunConfig& cfg, std::ostream& out) {
  const auto [x, y] = io::read_survey_csv(read_file(cfg.survey_path));
  const auto table = interval_contingency(x, y);
  write_file(cfg.output_path, io::write_interval_table(table, io::format_for_path(cfg.output_path)));
  out << "interval table " << table.rows() << "x" << table.cols() << " from " << x.num_individuals()
      << " individuals written to " << cfg.output_path << "\n";
  return kExitOk;
}

int analyze(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  auto table = io::read_interval_table(read_file(cfg.table_path), io::format_for_path(cfg.table_path));
  if (cfg.drop_empty) {
    auto [reduced, warnings] = drop_empty_margins(table);
    for (const auto& w : warnings) err << "warning: " << w << "\n";
    table = std::move(reduced);
  }
  const auto diagnostics = validate_for_analysis(centers(table));
  if (!diagnostics.analyzable()) {
    std::string msg = "table cannot be analyzed:";
    for (const auto& issue : diagnostics.issues) msg += " " + issue + ";";
    if (!diagnostics.zero_rows.empty() || !diagnostics.zero_cols.empty()) msg += " (try --drop-empty)";
    throw ValidationError(msg);
  }
  const auto result = symca::symca(table, cfg.n_axes == 0 ? kAllAxes : cfg.n_axes);
  write_file(cfg.output_path, io::write_result_json(result));
  out << result.ca.n_axes << " axes retained, written to " << cfg.output_path << "\n";
  return kExitOk;
}

int plot(const RunConfig& cfg, std::ostream& out) {
  const auto doc = io::read_result_json(read_file(cfg.result_path));
  io::PlotSpec spec;
  std::tie(spec.axis_x, spec.axis_y) = parse_axis_pair(cfg.plot_axes);
  spec.width = cfg.width;
  spec.height = cfg.height;
  write_file(cfg.output_path, io::render_principal_plane_svg(doc, spec));
  out << "principal plane written to " << cfg.output_path << "\n";
  return kExitOk;
}

int run_verify(const RunConfig& cfg, std::ostream& out) {
  const auto report = verify::run_all(cfg.verify);
  report.print(out);
  return report.passed() ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Correspondence analysis for multi-valued categorical data", "symca"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* build = app.add_subcommand("build-table", "Build the interval contingency table of a two-column survey");
  build->add_option("--survey", cfg.survey_path, "Survey CSV, modalities joined by '|'")->required();
  build->add_option("-o,--output", cfg.output_path, "Output table (.json or .csv)")->required();

  auto* analyze_cmd = app.add_subcommand("analyze", "Run the interval correspondence analysis");
  analyze_cmd->add_option("--table", cfg.table_path, "Interval table (.json or .csv)")->required();
  analyze_cmd->add_option("--axes", cfg.n_axes, "Number of axes to retain (default: all)")
      ->check(CLI::PositiveNumber);
  analyze_cmd->add_flag("--drop-empty", cfg.drop_empty, "Remove rows/columns with zero margins");
  analyze_cmd->add_option("-o,--output", cfg.output_path, "Output result JSON")->required();

  auto* plot_cmd = app.add_subcommand("plot", "Draw the principal plane as SVG");
  plot_cmd->add_option("--result", cfg.result_path, "Result JSON from analyze")->required();
  plot_cmd->add_option("--axes", cfg.plot_axes, "Axis pair, zero-based (default 0,1)");
  plot_cmd->add_option("--width", cfg.width, "Canvas width in pixels")->check(CLI::PositiveNumber);
  plot_cmd->add_option("--height", cfg.height, "Canvas height in pixels")->check(CLI::PositiveNumber);
  plot_cmd->add_option("-o,--output", cfg.output_path, "Output SVG")->required();

  auto* verify_cmd = app.add_subcommand("verify", "Check the fast paths against brute-force oracles");
  verify_cmd->add_option("--seed", cfg.verify.seed, "Base seed for random instances");
  verify_cmd->add_option("--instances", cfg.verify.instances, "Random survey instances")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--max-individuals", cfg.verify.max_individuals, "Individuals per random survey")
      ->check(CLI::Range(1, 12));
  verify_cmd->add_option("--limit", cfg.verify.limit, "Enumeration guard")->check(CLI::PositiveNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitInvalid;
  }

  try {
    if (*build) return build_table(cfg, out);
    if (*analyze_cmd) return analyze(cfg, out, err);
    if (*plot_cmd) return plot(cfg, out);
    return run_verify(cfg, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
}

}  // namespace symca::cli
