#pragma once

#include <stdexcept>
#include <string>

namespace rem {

// Shape or argument mismatch in tensor/tape operations.
struct ShapeError : std::invalid_argument {
  explicit ShapeError(const std::string& msg) : std::invalid_argument(msg) {}
};

// All importance weights collapsed (K = 0 or every log-weight is -inf).
struct DegenerateWeights : std::runtime_error {
  explicit DegenerateWeights(const std::string& msg) : std::runtime_error(msg) {}
};

// Non-finite value where a finite one is required (logits, parameters, ...).
struct NumericError : std::runtime_error {
  explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input file; message carries path and row/offset coordinates.
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace rem
