#pragma once

#include <stdexcept>
#include <string>

namespace drip {

/// Bad or inconsistent configuration input (parse failures, invariant
/// violations, unknown keys). Maps to CLI exit code 1.
class ConfigError : public std::invalid_argument {
 public:
  explicit ConfigError(const std::string& what) : std::invalid_argument(what) {}
};

/// Filesystem/stream failure. Maps to CLI exit code 2.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace drip
