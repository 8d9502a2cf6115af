#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace orbicurve {

// Base class for all errors thrown by the library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Invalid mathematical input: out-of-domain arguments, arity mismatches,
// malformed values.
class DomainError : public Error {
public:
  explicit DomainError(const std::string& what) : Error(what) {}
};

// A configured resource cap was exceeded before the computation finished.
class ResourceError : public Error {
public:
  ResourceError(const std::string& what, std::uint64_t progress)
      : Error(what), progress_(progress) {}

  // Units depend on the operation: elements enumerated, degrees searched, ...
  std::uint64_t progress() const noexcept { return progress_; }

private:
  std::uint64_t progress_ = 0;
};

// A bounded search ran out of room without finding a result.
class SearchExhaustedError : public ResourceError {
public:
  SearchExhaustedError(const std::string& what, std::uint64_t degrees_tried)
      : ResourceError(what, degrees_tried) {}
};

// Malformed textual input; `position` is a 0-based offset into the input.
class ParseError : public Error {
public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_ = 0;
};

} // namespace orbicurve
