#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zonotopal/groundset.hpp"
#include "zonotopal/matroid.hpp"

namespace zonotopal {

// Problem file contents. Rationals are JSON strings ("p", "p/q") or integers;
// subsets are 0-based index lists into X.
struct Problem {
  std::size_t n = 0;
  std::vector<VecQ> x;
  std::vector<RawAssignmentValue> assignment;
  AssignmentMode mode = AssignmentMode::flats;
  std::optional<std::vector<VecQ>> y;
  std::optional<std::vector<Rat>> lambda;
  std::optional<std::vector<std::size_t>> order;
  std::uint64_t seed = 0;
};

// InputError messages carry the JSON pointer of the offending value, or the
// byte offset for syntax errors.
Problem parse_problem(const std::string& text);
Problem load_problem(const std::string& path);  // "-" reads stdin

// Validated assignment and certified configuration with Y of length
// max(required Y size, supplied Y length).
struct Instance {
  Problem problem;
  VectorMatroid x;
  Assignment assignment;
  Configuration config;
};

Instance make_instance(Problem problem);

}  // namespace zonotopal
