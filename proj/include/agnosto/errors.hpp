#pragma once

#include <stdexcept>
#include <string>

namespace agnosto {

/// Bad configuration: invalid dimensions, incompatible loss/network
/// combinations, malformed hyperparameters. Reported before any work starts.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed external input (IDX, CSV, model files). The message names the
/// byte offset or line number where parsing failed.
struct FormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace agnosto
