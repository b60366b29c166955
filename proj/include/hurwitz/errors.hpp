#pragma once

#include <stdexcept>
#include <string>

namespace hurwitz {

// Malformed textual input (partitions, cycle notation, datum strings, JSON).
class ParseError : public std::runtime_error {
public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Structurally valid input that fails the compatibility rules, or a request
// outside the supported envelope (degree cap, wrong number of partitions).
class IncompatibleDatum : public std::runtime_error {
public:
  explicit IncompatibleDatum(const std::string& what) : std::runtime_error(what) {}
};

// A violated internal invariant. Reaching this is a bug, not a user error.
class InternalError : public std::logic_error {
public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace hurwitz
