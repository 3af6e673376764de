#pragma once

#include <stdexcept>
#include <string>

namespace cascade {

// Malformed input data, invalid configuration, or a violated precondition.
// The CLI maps this to exit code 2.
class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

// Transport or protocol failure of an inference backend. Exit code 3.
class BackendError : public std::runtime_error {
 public:
  explicit BackendError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace cascade
