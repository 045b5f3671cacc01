#pragma once

#include <stdexcept>
#include <string>

namespace bilink {

// Invalid configuration, schema mismatch, or malformed input file.
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Filesystem-level failure (unreadable or unwritable path).
struct IoError : std::runtime_error {
  explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace bilink
