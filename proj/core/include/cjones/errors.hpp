#pragma once

#include <stdexcept>
#include <string>

namespace cjones {

// Malformed textual input (braid strings, CSV rows).
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Input outside an operation's domain (non-knot closure, bad color, ...).
struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// A configured work limit was exceeded.
struct ResourceError : std::runtime_error {
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace cjones
