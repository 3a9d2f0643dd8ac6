#pragma once
#include <stdexcept>
#include <string>

namespace latbar {

// Bad user input: malformed files, violated preconditions.
struct input_error : std::runtime_error {
  explicit input_error(const std::string& w) : std::runtime_error(w) {}
};

// A verification step failed: a claimed certificate or identity does not hold.
struct verify_error : std::runtime_error {
  explicit verify_error(const std::string& w) : std::runtime_error(w) {}
};

// A configured work ceiling was hit before the computation finished.
struct resource_error : std::runtime_error {
  explicit resource_error(const std::string& w) : std::runtime_error(w) {}
};

// Internal cross-check failed; indicates a bug, not bad input.
struct inconsistency_error : std::logic_error {
  explicit inconsistency_error(const std::string& w) : std::logic_error(w) {}
};

}  // namespace latbar
