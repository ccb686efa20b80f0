#pragma once

#include <stdexcept>

namespace graphlie {

/// Invalid user input: malformed graphs, bad parameters, exceeded caps.
struct InputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// File could not be read or written.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A mathematical cross-check failed (dual-path mismatch, broken closure).
struct CheckError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace graphlie
