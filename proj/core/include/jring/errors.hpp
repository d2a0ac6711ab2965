#pragma once

#include <stdexcept>

namespace jring {

// A mathematical invariant failed to hold; indicates a bug in a table
// computation or corrupt input, never a user mistake.
struct structural_error : std::logic_error {
  using std::logic_error::logic_error;
};

// Bad Cartan/Coxeter datum or malformed input description.
struct datum_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Group order exceeds the configured cap.
struct size_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An iterative numerical routine failed to reach its tolerance.
struct convergence_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace jring
