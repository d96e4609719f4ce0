#include <fstream>
#include <iostream>
#include <utility>

#include <CLI11.hpp>

#include "zonotopal/report.hpp"

using namespace zonotopal;

int main(int argc, char** argv) {
  CLI::App app{"zalg: exact external zonotopal algebra"};
  app.require_subcommand(1);

  std::string input = "-";
  std::string report_path;
  std::string format = "json";
  std::uint64_t seed = 0;
  unsigned degree_cap = 0;
  std::size_t transversal_cap = 0;
  bool timings = false;

  const std::pair<const char*, const char*> commands[] = {
      {"validate", "check the assignment and build the configuration X u Y"},
      {"enumerate", "external bases B_k, their count and the split tree"},
      {"pspace", "P_k, its Hilbert table and the B_k bases of it"},
      {"dspace", "vertices V_k, Pi(V_k), ideal generators and the coherence check"},
      {"certify", "everything above plus duality and Lagrange bases"}};
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("problem", input, "problem file (JSON), or - for stdin")->required();
    sub->add_option("--seed", seed, "override the problem's seed");
    sub->add_option("--degree-cap", degree_cap, "degree cap for P_k generators");
    sub->add_option("--transversal-cap", transversal_cap, "largest ideal generator searched");
    sub->add_option("--report", report_path, "write the report here instead of stdout");
    sub->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
    sub->add_flag("--timings", timings, "include per-stage timings (not reproducible)");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_ok : exit_input;
  }

  auto* sub = app.get_subcommands().front();
  RunOptions options;
  if (sub->count("--seed")) options.seed = seed;
  if (sub->count("--degree-cap")) options.degree_cap = degree_cap;
  if (sub->count("--transversal-cap")) options.transversal_cap = transversal_cap;
  options.timings = timings;

  RunResult result;
  try {
    result = run_command(*parse_command(sub->get_name()), load_problem(input), options);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return exit_input;
  } catch (const ValidationError& e) {
    std::cerr << "validation failure: " << e.what() << "\n";
    return exit_validation;
  } catch (const ConsistencyError& e) {
    std::cerr << "internal consistency failure: " << e.what() << "\n";
    return exit_consistency;
  }

  const std::string text = format == "text" ? render_text(result.report) : result.report.dump(2) + "\n";
  if (report_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(report_path);
    if (!out) {
      std::cerr << "cannot write " << report_path << "\n";
      return exit_input;
    }
    out << text;
  }
  if (result.exit_code != exit_ok) std::cerr << "status: " << result.report["status"].get<std::string>() << "\n";
  return result.exit_code;
}
