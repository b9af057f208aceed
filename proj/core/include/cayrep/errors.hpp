#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cayrep {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed group specs or connection-set tokens.
class ParseError : public Error {
public:
  using Error::Error;
};

/// Structurally invalid input: bad connection sets, wrong group kind,
/// mismatched degrees, failed witness conditions.
class ValidationError : public Error {
public:
  using Error::Error;
};

/// A configured cap was exceeded. Carries how far the computation got.
class ResourceLimitError : public Error {
public:
  explicit ResourceLimitError(const std::string& what, std::size_t partial_count = 0)
      : Error(what), partial_count_(partial_count) {}

  std::size_t partial_count() const { return partial_count_; }

private:
  std::size_t partial_count_;
};

} // namespace cayrep
