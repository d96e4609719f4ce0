#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "zonotopal/problem.hpp"

namespace zonotopal {

enum class Command { validate, enumerate, pspace, dspace, certify };

std::optional<Command> parse_command(const std::string& name);
std::string command_name(Command c);

struct RunOptions {
  std::optional<std::uint64_t> seed;            // overrides the file's seed
  std::optional<unsigned> degree_cap;
  std::optional<std::size_t> transversal_cap;
  bool timings = false;
};

enum ExitCode : int { exit_ok = 0, exit_input = 1, exit_validation = 2, exit_consistency = 3 };

struct RunResult {
  nlohmann::ordered_json report;
  int exit_code = exit_ok;
};

// Builds the report for one command. Exceptions propagate: InputError,
// ValidationError and ConsistencyError map to exit codes 1, 2 and 3. A
// completed run exits 2 when the assignment is not solid and 3 when a
// certificate guaranteed by the theory fails.
RunResult run_command(Command command, Problem problem, const RunOptions& options);

// Indented key/value rendering of a report.
std::string render_text(const nlohmann::ordered_json& report);

}  // namespace zonotopal
