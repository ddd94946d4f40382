#pragma once

#include <stdexcept>
#include <string>

namespace pathabs {

// Bad input: malformed files, out-of-range vertices, violated preconditions.
// The CLI maps this to exit status 1.
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

// A result failed an internal consistency check. The CLI maps this to exit status 2.
class InvariantError : public std::logic_error {
 public:
  explicit InvariantError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace pathabs
