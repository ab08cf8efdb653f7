#pragma once

#include <stdexcept>
#include <string>

namespace balt {

/// Bad arguments: unknown command, malformed literal, out-of-domain parameter.
class UsageError : public std::runtime_error {
 public:
  explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

/// A size guard tripped (enumeration or DP would blow up). Maps to CLI exit 2.
class GuardError : public std::runtime_error {
 public:
  explicit GuardError(const std::string& what) : std::runtime_error(what) {}
};

/// Cache or seed file could not be read, parsed, or validated.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace balt
