#pragma once

#include <stdexcept>
#include <string>

namespace zonotopal {

// Malformed or out-of-range user input (problem files, explicit Y/lambda).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The input is well-formed but fails a mathematical precondition
// (non-solid assignment where solidity is required, missing flat, ...).
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Rejection sampling for Y or lambda ran out of attempts.
class GenerationExhausted : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// A runtime certificate of a proven statement failed. Never expected.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace zonotopal
